#include "rotor/bloch.hpp"

#include <cmath>

namespace rotor {

Spinor bloch_sphere_spinor(double inverse_zenith, double azimuth) {
  return {std::cos(0.5 * inverse_zenith), -std::polar(1.0, azimuth) * std::sin(0.5 * inverse_zenith)};
}

Spinor spinor_from_bloch(const BlochPoint& p) {
  const SphericalDirection d = to_spherical(p.s);
  return bloch_sphere_spinor(-d.theta, d.phi);
}

BlochPoint bloch_point(const Spinor& s) {
  if (s.norm() < 0.5) {
    throw Error(ErrorKind::ZeroSpinor, "bloch_point of a (near) zero spinor");
  }
  const Spinor n = s.normalized();
  // <n|sigma_x|n> = 2 Re(conj(up) down), <n|sigma_y|n> = 2 Im(conj(up) down)
  const Complex cross_term = std::conj(n.up) * n.down;
  const Vec3 v{2.0 * cross_term.real(), 2.0 * cross_term.imag(), std::norm(n.up) - std::norm(n.down)};
  return {Axis::normalized(v)};
}

Matrix2 Frame::sigma(int k) const { return transport * pauli(k) * adjoint(transport); }

Frame make_frame(const Axis& t_axis, double theta) {
  return {rotation_operator({t_axis, theta}, Convention::TextbookLeft)};
}

Matrix2 frame_sigma_dot(const Frame& f, const Axis& q) {
  return f.transport * sigma_along(q) * adjoint(f.transport);
}

bool lemma3_check(const Frame& f, const Axis& q, double theta) {
  const double c = std::cos(0.5 * theta);
  const Complex is = kI * std::sin(0.5 * theta);
  const Matrix2 frame_rotation = Complex(c) * identity2() + is * frame_sigma_dot(f, q);
  const Matrix2 lab_rotation = Complex(c) * identity2() + is * sigma_along(q);

  const Spinor chi_frame = spin_up();
  const Spinor chi_lab = adjoint(f.transport) * chi_frame;

  const Complex frame_side = inner(chi_frame, frame_rotation * chi_frame);
  const Complex lab_side = inner(chi_lab, lab_rotation * chi_lab);
  return std::abs(frame_side - lab_side) <= kTolAlg;
}

bool frames_equal(const Frame& a, const Frame& b, double tol) {
  return max_abs_diff_up_to_sign(a.transport, b.transport) <= tol;
}

}  // namespace rotor
