#include "rotor/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "rotor/bloch.hpp"
#include "rotor/dsl.hpp"

namespace rotor {

namespace {

using dsl::EvalTrace;
using dsl::StepRecord;

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

std::vector<const StepRecord*> emitted(const EvalTrace& t) {
  std::vector<const StepRecord*> out;
  for (const auto& s : t.steps)
    if (s.emit) out.push_back(&s);
  return out;
}

const StepRecord* audited(const EvalTrace& t) {
  for (const auto& s : t.steps)
    if (s.audit) return &s;
  return nullptr;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

using Check = std::function<std::string(const EvalTrace&)>;

// Empty string on success, otherwise the reason.
std::string check_sigma_y_conjugation(const EvalTrace& t) {
  const Matrix2& w = t.final_snapshot().op;
  const double d = max_abs_diff(w * pauli_y() * adjoint(w), pauli_x());
  if (d > 1e-12) return "W sigma_y W+ differs from sigma_x by " + fmt(d);
  const Matrix2 expected = scale({1.0, 0.0, 0.0, -kI}, Complex(1.0, 1.0) / std::sqrt(2.0));
  const double e = max_abs_diff(w, expected);
  if (e > 1e-12) return "operator differs from ((1+i)/sqrt2) diag(1,-i) by " + fmt(e);
  return {};
}

std::string check_sigma_y_quarter_turn(const EvalTrace& t) {
  const dsl::Snapshot& s = t.final_snapshot();
  const Spinor chi_x = eigenspinors(Axis::unit_x()).plus;
  if (!state_equal(s.state, chi_x)) return "final state is not x+";
  const double d = max_abs_diff(s.bloch, {1.0, 0.0, 0.0});
  if (d > 1e-10) return "bloch point off (1,0,0) by " + fmt(d);
  return {};
}

std::string check_frame_overlap(const EvalTrace& t) {
  const auto em = emitted(t);
  if (em.size() != 2) return "expected two emits";
  const Matrix2& transported = em[0]->snapshot.op;  // U+_t
  const Matrix2 lab_rotation = em[1]->snapshot.op * adjoint(transported);  // R+_q
  const Spinor chi_lab = transported * spin_up();
  const Complex lab_side = inner(chi_lab, lab_rotation * chi_lab);

  const Frame f = make_frame(to_axis({60 * kDeg, 30 * kDeg}), 80 * kDeg);
  const Axis q = to_axis({110 * kDeg, 250 * kDeg});
  const double h = 0.5 * 130 * kDeg;
  const Matrix2 frame_rotation =
      Complex(std::cos(h)) * identity2() + kI * std::sin(h) * frame_sigma_dot(f, q);
  const Complex frame_side = inner(spin_up(), frame_rotation * spin_up());
  const double d = std::abs(lab_side - frame_side);
  if (d > 1e-12) return "frame and laboratory overlaps differ by " + fmt(d);
  if (!lemma3_check(f, q, 130 * kDeg)) return "lemma3_check rejected the scenario";
  return {};
}

std::string check_audit(const EvalTrace& t, Handedness expected) {
  const StepRecord* r = audited(t);
  if (!r) return "no audit output";
  const AuditReport& a = *r->audit;
  if (a.handedness != expected) return std::string("handedness ") + std::string(to_string(a.handedness));
  if (max_abs_diff(a.axis.vec(), {0.0, 0.0, 1.0}) > 1e-12) return "axis is not +z";
  if (std::abs(a.angle - kPi / 2) > 1e-12) return "angle is not pi/2";
  return {};
}

std::string check_stern_gerlach(const EvalTrace& t) {
  std::vector<const StepRecord*> measured;
  for (const auto& s : t.steps)
    if (s.measurement) measured.push_back(&s);
  if (measured.size() != 2) return "expected two measurements";
  const double first = measured[0]->measurement->p_plus;
  const double expected = std::pow(std::cos(30 * kDeg), 2);
  if (std::abs(first - expected) > 1e-12) return "p+ = " + fmt(first) + ", expected 0.75";
  if (std::abs(measured[1]->measurement->p_plus - 1.0) > 1e-12) return "repeat measurement p+ != 1";
  return {};
}

const std::map<std::string_view, Check>& single_checks() {
  static const std::map<std::string_view, Check> checks = {
      {"sigma_y_conjugation", check_sigma_y_conjugation},
      {"sigma_y_quarter_turn", check_sigma_y_quarter_turn},
      {"frame_overlap", check_frame_overlap},
      {"audit_right", [](const EvalTrace& t) { return check_audit(t, Handedness::RightScrew); }},
      {"audit_left", [](const EvalTrace& t) { return check_audit(t, Handedness::LeftScrew); }},
      {"stern_gerlach", check_stern_gerlach},
  };
  return checks;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult> results;
  std::map<std::string_view, EvalTrace> traces;

  for (const FixtureProgram& fx : fixture_corpus()) {
    SelftestResult r{std::string(fx.name), false, {}};
    try {
      const dsl::Program p = dsl::parse_source(fx.source);
      if (dsl::parse_source(dsl::to_source(p)) != p) {
        r.detail = "print/parse round trip changed the program";
        results.push_back(r);
        continue;
      }
      EvalTrace trace = dsl::evaluate(p);
      const auto it = single_checks().find(fx.name);
      r.detail = it != single_checks().end() ? it->second(trace) : std::string();
      r.passed = r.detail.empty();
      traces.emplace(fx.name, std::move(trace));
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(r);
  }

  for (const auto& [name, check] : single_checks()) {
    if (!traces.contains(name) &&
        std::none_of(results.begin(), results.end(), [&](const SelftestResult& r) { return r.name == name; }))
      results.push_back({std::string(name), false, "fixture missing from the corpus"});
  }

  // Pairwise: body-axis sequence vs fixed-axis sequence in reversed order.
  SelftestResult euler{"euler_ordering", false, {}};
  const auto a = traces.find("euler_intrinsic");
  const auto b = traces.find("euler_extrinsic");
  if (a == traces.end() || b == traces.end()) {
    euler.detail = "euler fixtures missing or failed";
  } else {
    const double d = max_abs_diff_up_to_sign(a->second.final_snapshot().op, b->second.final_snapshot().op);
    euler.passed = d <= 1e-12;
    if (!euler.passed) euler.detail = "operators differ by " + fmt(d);
  }
  results.push_back(euler);
  return results;
}

}  // namespace rotor
