#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rotor/bloch.hpp"
#include "rotor/dsl.hpp"

namespace rotor::dsl {

namespace {

std::string located(std::size_t index, SourcePos pos, const std::string& what) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": EvalError at statement index " << index << ": " << what;
  return os.str();
}

// Program-level misuse that no library operation reports.
class MissingDevice : public std::runtime_error {
 public:
  MissingDevice() : std::runtime_error("NoDevice: collapse without a preceding measure") {}
};

Spinor named_spinor(NamedState n) {
  switch (n) {
    case NamedState::Up: return spin_up();
    case NamedState::Down: return spin_down();
    case NamedState::XPlus: return eigenspinors(Axis::unit_x()).plus;
    case NamedState::XMinus: return eigenspinors(Axis::unit_x()).minus;
    case NamedState::YPlus: return eigenspinors(Axis::unit_y()).plus;
    case NamedState::YMinus: return eigenspinors(Axis::unit_y()).minus;
  }
  return spin_up();
}

class Evaluator {
 public:
  explicit Evaluator(const EvalOptions& options) : convention_(options.convention) {}

  EvalTrace run(const Program& p) {
    EvalTrace trace;
    trace.initial_convention = convention_;
    trace.initial = snapshot();
    trace.steps.reserve(p.statements.size());
    for (std::size_t i = 0; i < p.statements.size(); ++i) {
      const Statement& st = p.statements[i];
      StepRecord rec;
      rec.index = i;
      rec.pos = st.pos;
      rec.source = to_source(st);
      try {
        std::visit([&](const auto& body) { exec(body, rec); }, st.body);
      } catch (const rotor::Error& e) {
        throw EvalError(i, st.pos, e.what());
      } catch (const MissingDevice& e) {
        throw EvalError(i, st.pos, e.what());
      }
      check_invariants(i, st.pos);
      rec.snapshot = snapshot();
      trace.steps.push_back(std::move(rec));
    }
    return trace;
  }

 private:
  Snapshot snapshot() const {
    return {state_.canonical(), bloch_point(state_).s.vec(), op_, convention_};
  }

  void check_invariants(std::size_t i, SourcePos pos) const {
    std::ostringstream os;
    if (std::abs(state_.norm() - 1.0) > kTolAlg) {
      os << "state norm drifted to " << state_.norm();
    } else if (!is_special_unitary(op_)) {
      os << "accumulated operator left SU(2) (det " << det(op_).real() << std::showpos
         << det(op_).imag() << "i)";
    } else {
      return;
    }
    throw InvariantViolation(located(i, pos, os.str()));
  }

  void rotate(const Matrix2& w) {
    state_ = w * state_;
    op_ = w * op_;
  }

  void exec(const SetConvention& s, StepRecord& rec) {
    convention_ = s.convention;
    rec.convention_set = s.convention;
  }

  void exec(const SetState& s, StepRecord&) {
    switch (s.form) {
      case SetState::Form::Named: state_ = named_spinor(s.named); break;
      case SetState::Form::Amplitudes: state_ = Spinor{s.up, s.down}.normalized(); break;
      case SetState::Form::Bloch: state_ = spinor_from_bloch({to_axis({s.theta, s.phi})}); break;
    }
  }

  void exec(const Rot& r, StepRecord&) { rotate(rotation_operator({r.axis.axis, r.angle}, convention_)); }

  void exec(const Euler& e, StepRecord&) { rotate(compose_euler(e.angles, e.mode, convention_)); }

  void exec(const Measure& m, StepRecord& rec) {
    device_ = DeviceOrientation{m.axis.axis};
    rec.device = m.axis.axis;
    rec.measurement = project(state_, *device_);
  }

  void exec(const Collapse& c, StepRecord& rec) {
    if (!device_) {
      throw MissingDevice();
    }
    state_ = collapse(state_, *device_, c.branch);
    rec.device = device_->axis;
  }

  void exec(const Audit&, StepRecord& rec) { rec.audit = audit_convention(op_); }

  void exec(const Emit& e, StepRecord& rec) { rec.emit = e.what; }

  Convention convention_;
  Spinor state_ = spin_up();
  Matrix2 op_ = identity2();
  std::optional<DeviceOrientation> device_;
};

}  // namespace

EvalError::EvalError(std::size_t statement, SourcePos pos, const std::string& what)
    : std::runtime_error(located(statement, pos, what)), statement_(statement), pos_(pos) {}

EvalTrace evaluate(const Program& p, const EvalOptions& options) { return Evaluator(options).run(p); }

}  // namespace rotor::dsl
