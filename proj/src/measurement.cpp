#include "rotor/measurement.hpp"

#include <cmath>

namespace rotor {

MeasurementResult project(const Spinor& s, const DeviceOrientation& d) {
  if (s.norm() < 0.5) {
    throw Error(ErrorKind::ZeroSpinor, "cannot measure a (near) zero spinor");
  }
  const EigenPair ev = eigenspinors(d.axis);
  MeasurementResult r;
  r.amp_plus = inner(ev.plus, s);
  r.amp_minus = inner(ev.minus, s);
  r.p_plus = std::norm(r.amp_plus);
  r.p_minus = std::norm(r.amp_minus);
  return r;
}

Spinor collapse(const Spinor& s, const DeviceOrientation& d, Branch branch) {
  const MeasurementResult r = project(s, d);
  const double p = branch == Branch::Plus ? r.p_plus : r.p_minus;
  if (p < kImpossibleBranch) {
    throw Error(ErrorKind::ImpossibleBranch,
                branch == Branch::Plus ? "branch + has zero probability"
                                       : "branch - has zero probability");
  }
  const EigenPair ev = eigenspinors(d.axis);
  return (branch == Branch::Plus ? ev.plus : ev.minus).canonical();
}

PhaseLossOutcome phase_loss_demo(double theta, double phi1, double phi2) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Spinor a{c, std::polar(s, phi1)};
  const Spinor b{c, std::polar(s, phi2)};

  PhaseLossOutcome out;
  out.first = project(a, {});
  out.second = project(b, {});
  out.degenerate = state_equal(a, b);
  const bool same_probabilities = std::abs(out.first.p_plus - out.second.p_plus) <= kTolAlg &&
                                  std::abs(out.first.p_minus - out.second.p_minus) <= kTolAlg;
  out.holds = same_probabilities;
  return out;
}

}  // namespace rotor
