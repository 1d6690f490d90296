#include "rotor/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rotor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// [0, 2*pi)
double wrap_positive(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Axis orient(const Vec3& raw, const Vec3& reference) {
  return Axis::normalized(dot(raw, reference) < 0.0 ? -raw : raw);
}

Axis orient_canonical(const Vec3& raw) {
  bool flip = false;
  if (raw.z != 0.0) {
    flip = raw.z < 0.0;
  } else if (raw.y != 0.0) {
    flip = raw.y < 0.0;
  } else {
    flip = raw.x < 0.0;
  }
  return Axis::normalized(flip ? -raw : raw);
}

AuditReport audit_impl(const Matrix2& w, const Vec3* reference, double tol) {
  if (!is_special_unitary(w, tol)) {
    throw Error(ErrorKind::NotSpecialUnitary, "audit requires an SU(2) element");
  }

  // w = c E + i (a . sigma); pick the sign of w with c >= 0.
  double c = 0.5 * trace(w).real();
  Vec3 a{0.5 * trace(pauli_x() * w).imag(), 0.5 * trace(pauli_y() * w).imag(),
         0.5 * trace(pauli_z() * w).imag()};
  if (c < 0.0) {
    c = -c;
    a = -a;
  }
  const double s = a.norm();

  AuditReport report;
  report.angle = 2.0 * std::atan2(s, c);
  if (report.angle < kAuditIdentityAngle) {
    report.handedness = Handedness::Identity;
    report.axis = Axis::unit_z();
    report.ambiguous_axis = true;
    report.so3_residual = max_abs_diff(adjoint_so3(w, tol), Rotation3::identity());
    return report;
  }

  report.axis = reference ? orient(a, *reference) : orient_canonical(a);

  const Rotation3 actual = adjoint_so3(w, tol);
  const double right = max_abs_diff(actual, rodrigues({report.axis, report.angle}));
  const double left = max_abs_diff(actual, rodrigues({report.axis, -report.angle}));

  if (std::abs(kPi - report.angle) < kAuditIdentityAngle) {
    // Both screw senses give the same half turn; RightScrew by convention.
    report.half_turn_tie = true;
    report.handedness = Handedness::RightScrew;
    report.so3_residual = right;
  } else if (right <= left) {
    report.handedness = Handedness::RightScrew;
    report.so3_residual = right;
  } else {
    report.handedness = Handedness::LeftScrew;
    report.so3_residual = left;
  }

  if (report.so3_residual > 1e-8) {
    std::ostringstream os;
    os << "audit: no rotation oracle matches the adjoint image (residual "
       << report.so3_residual << ")";
    throw std::logic_error(os.str());
  }
  return report;
}

}  // namespace

std::string_view to_string(Convention c) {
  return c == Convention::PaperRight ? "right" : "left";
}

std::string_view to_string(Handedness h) {
  switch (h) {
    case Handedness::RightScrew: return "RightScrew";
    case Handedness::LeftScrew: return "LeftScrew";
    case Handedness::Identity: return "Identity";
  }
  return "Unknown";
}

double reduce_angle(double angle) {
  // (-2pi, 2pi]
  double r = std::fmod(angle, 2.0 * kTwoPi);
  if (r > kTwoPi) r -= 2.0 * kTwoPi;
  if (r <= -kTwoPi) r += 2.0 * kTwoPi;
  return r;
}

Rotation3 Rotation3::transpose() const {
  Rotation3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

double Rotation3::determinant() const {
  const auto& m = m_;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Vec3 Rotation3::apply(const Vec3& v) const {
  const auto& m = m_;
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
  Rotation3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

double max_abs_diff(const Rotation3& a, const Rotation3& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 9; ++i) d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

bool is_special_orthogonal(const Rotation3& r, double tol) {
  return max_abs_diff(r.transpose() * r, Rotation3::identity()) <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

EulerZYZ EulerZYZ::canonical() const {
  EulerZYZ e{alpha, beta, gamma};
  e.beta = wrap_positive(e.beta);
  if (e.beta > kPi) {
    e.beta = kTwoPi - e.beta;
    e.alpha += kPi;
    e.gamma += kPi;
  }
  constexpr double kGimbal = 1e-12;
  if (e.beta < kGimbal) {
    e.beta = 0.0;
    e.alpha += e.gamma;
    e.gamma = 0.0;
  } else if (kPi - e.beta < kGimbal) {
    e.beta = kPi;
    e.alpha -= e.gamma;
    e.gamma = 0.0;
  }
  e.alpha = wrap_positive(e.alpha);
  e.gamma = wrap_positive(e.gamma);
  return e;
}

Matrix2 u_z(double phi) {
  const double h = 0.5 * phi;
  return {std::polar(1.0, -h), 0.0, 0.0, std::polar(1.0, h)};
}

Matrix2 rotation_operator(const AxisAngle& aa, Convention conv) {
  const double h = 0.5 * reduce_angle(aa.angle);
  const double c = std::cos(h);
  const double s = conv == Convention::PaperRight ? std::sin(h) : -std::sin(h);
  // E c + i s (sigma . n)
  const Axis& n = aa.axis;
  return {Complex(c, s * n.z()), Complex(s * n.y(), s * n.x()), Complex(-s * n.y(), s * n.x()),
          Complex(c, -s * n.z())};
}

Spinor rotate_spinor(const Spinor& s, const AxisAngle& aa, Convention conv) {
  return rotation_operator(aa, conv) * s;
}

Matrix2 conjugate_pauli(const Matrix2& m, const AxisAngle& aa, Convention conv) {
  const Matrix2 w = rotation_operator(aa, conv);
  return w * m * adjoint(w);
}

Rotation3 adjoint_so3(const Matrix2& w, double tol) {
  if (!is_special_unitary(w, tol)) {
    throw Error(ErrorKind::NotSpecialUnitary, "adjoint_so3 requires an SU(2) element");
  }
  const Matrix2 wd = adjoint(w);
  Rotation3 r;
  for (int k = 0; k < 3; ++k) {
    const Matrix2 image = w * pauli(k) * wd;
    for (int j = 0; j < 3; ++j) r(j, k) = 0.5 * trace(pauli(j) * image).real();
  }
  return r;
}

Rotation3 passive_z(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Rotation3({c, s, 0.0, -s, c, 0.0, 0.0, 0.0, 1.0});
}

Rotation3 rodrigues(const AxisAngle& aa) {
  const double c = std::cos(aa.angle);
  const double s = std::sin(aa.angle);
  const double t = 1.0 - c;
  const double x = aa.axis.x();
  const double y = aa.axis.y();
  const double z = aa.axis.z();
  return Rotation3({c + t * x * x, t * x * y + s * z, t * x * z - s * y,
                    t * y * x - s * z, c + t * y * y, t * y * z + s * x,
                    t * z * x + s * y, t * z * y - s * x, c + t * z * z});
}

AuditReport audit_convention(const Matrix2& w, double tol) { return audit_impl(w, nullptr, tol); }

AuditReport audit_convention(const Matrix2& w, const Axis& reference, double tol) {
  return audit_impl(w, &reference.vec(), tol);
}

Matrix2 compose_euler(const EulerZYZ& e, EulerMode mode, Convention conv) {
  if (mode == EulerMode::Extrinsic) {
    return rotation_operator({Axis::unit_z(), e.gamma}, conv) *
           rotation_operator({Axis::unit_y(), e.beta}, conv) *
           rotation_operator({Axis::unit_z(), e.alpha}, conv);
  }
  // Body axes: each later rotation is about the image of the fixed axis under
  // everything applied so far.
  const Matrix2 first = rotation_operator({Axis::unit_z(), e.alpha}, conv);
  const Axis y_carried = Axis::normalized(adjoint_so3(first).apply({0.0, 1.0, 0.0}));
  const Matrix2 second = rotation_operator({y_carried, e.beta}, conv) * first;
  const Axis z_carried = Axis::normalized(adjoint_so3(second).apply({0.0, 0.0, 1.0}));
  return rotation_operator({z_carried, e.gamma}, conv) * second;
}

bool lemma2_check(const Matrix2& u, const Axis& r) {
  if (!is_unitary(u)) {
    throw Error(ErrorKind::NotUnitary, "lemma2_check requires a unitary operator");
  }
  const EigenPair ev = eigenspinors(r);
  const Spinor plus = u * ev.plus;
  const Spinor minus = u * ev.minus;
  const Matrix2 via_operator = u * sigma_along(r) * adjoint(u);
  const Matrix2 via_states = outer(plus, plus) - outer(minus, minus);
  return max_abs_diff(via_operator, via_states) <= kTolAlg;
}

bool pauli_transport_duality(const Rotation3& a, const Axis& r) {
  // Left side: the rotated Pauli vector (A sigma)_j = sum_k A_jk sigma_k,
  // dotted with r.
  Matrix2 lhs{};
  const double rv[3] = {r.x(), r.y(), r.z()};
  for (int j = 0; j < 3; ++j) {
    Matrix2 component{};
    for (int k = 0; k < 3; ++k) component = component + Complex(a(j, k)) * pauli(k);
    lhs = lhs + Complex(rv[j]) * component;
  }
  const Axis transported(a.transpose().apply(r.vec()));
  return max_abs_diff(lhs, sigma_along(transported)) <= kTolAlg;
}

}  // namespace rotor
