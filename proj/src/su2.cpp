#include "rotor/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rotor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitAxis: return "NonUnitAxis";
    case ErrorKind::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::ZeroSpinor: return "ZeroSpinor";
    case ErrorKind::ImpossibleBranch: return "ImpossibleBranch";
  }
  return "Unknown";
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

Axis::Axis(double x, double y, double z) : v_{x, y, z} {
  const double n = v_.norm();
  if (!(std::abs(n - 1.0) <= kTolAxis)) {
    std::ostringstream os;
    os << "axis (" << x << ", " << y << ", " << z << ") has length " << n;
    throw Error(ErrorKind::NonUnitAxis, os.str());
  }
}

Axis Axis::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw Error(ErrorKind::NonUnitAxis, "cannot normalize a zero or non-finite vector");
  }
  return Axis(v.x / n, v.y / n, v.z / n);
}

Axis to_axis(const SphericalDirection& d) {
  const double st = std::sin(d.theta);
  return Axis(st * std::cos(d.phi), st * std::sin(d.phi), std::cos(d.theta));
}

SphericalDirection to_spherical(const Axis& a) {
  const double rho = std::hypot(a.x(), a.y());
  SphericalDirection d;
  d.theta = std::atan2(rho, a.z());
  if (rho == 0.0) {
    d.phi = 0.0;
    return d;
  }
  d.phi = std::atan2(a.y(), a.x());
  if (d.phi < 0.0) d.phi += 2.0 * std::numbers::pi;
  if (d.phi >= 2.0 * std::numbers::pi) d.phi = 0.0;
  return d;
}

double Spinor::norm() const { return std::sqrt(norm_squared()); }

Spinor Spinor::normalized() const {
  const double n = norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw Error(ErrorKind::ZeroSpinor, "cannot normalize a zero spinor");
  }
  return {up / n, down / n};
}

Spinor Spinor::canonical() const {
  const double mu = std::abs(up);
  const double md = std::abs(down);
  const double half_max = 0.5 * std::max(mu, md);
  const Complex lead = (mu > half_max) ? up : down;
  const double m = std::abs(lead);
  if (m == 0.0) return *this;
  const Complex phase = std::conj(lead) / m;
  Spinor s{phase * up, phase * down};
  // The leading component is real by construction; drop rounding residue.
  if (mu > half_max) {
    s.up = s.up.real();
  } else {
    s.down = s.down.real();
  }
  return s;
}

Spinor operator*(Complex c, const Spinor& s) { return {c * s.up, c * s.down}; }
Spinor operator+(const Spinor& a, const Spinor& b) { return {a.up + b.up, a.down + b.down}; }
Spinor operator-(const Spinor& a, const Spinor& b) { return {a.up - b.up, a.down - b.down}; }

Complex inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

bool state_equal(const Spinor& a, const Spinor& b, double tol) {
  return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

double max_abs_diff(const Spinor& a, const Spinor& b) {
  return std::max(std::abs(a.up - b.up), std::abs(a.down - b.down));
}

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m.a11), std::conj(m.a21), std::conj(m.a12), std::conj(m.a22)};
}

Spinor apply(const Matrix2& m, const Spinor& s) {
  return {m.a11 * s.up + m.a12 * s.down, m.a21 * s.up + m.a22 * s.down};
}

Complex trace(const Matrix2& m) { return m.a11 + m.a22; }

Complex det(const Matrix2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

Matrix2 scale(const Matrix2& m, Complex c) { return {c * m.a11, c * m.a12, c * m.a21, c * m.a22}; }

Matrix2 add(const Matrix2& a, const Matrix2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

Matrix2 operator-(const Matrix2& m) { return {-m.a11, -m.a12, -m.a21, -m.a22}; }

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                   std::abs(a.a22 - b.a22)});
}

double max_abs_diff_up_to_sign(const Matrix2& a, const Matrix2& b) {
  return std::min(max_abs_diff(a, b), max_abs_diff(a, -b));
}

bool is_hermitian(const Matrix2& m, double tol) { return max_abs_diff(m, adjoint(m)) <= tol; }

bool is_unitary(const Matrix2& m, double tol) {
  return max_abs_diff(m * adjoint(m), identity2()) <= tol;
}

bool is_special_unitary(const Matrix2& m, double tol) {
  return is_unitary(m, tol) && std::abs(det(m) - 1.0) <= tol;
}

Matrix2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }
Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Matrix2 pauli(int k) {
  switch (k) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    default: return pauli_z();
  }
}

Matrix2 outer(const Spinor& a, const Spinor& b) {
  return {a.up * std::conj(b.up), a.up * std::conj(b.down), a.down * std::conj(b.up),
          a.down * std::conj(b.down)};
}

Matrix2 sigma_along(const Axis& r) {
  // Entries written out directly; same as the sum of scaled Pauli matrices.
  return {r.z(), Complex(r.x(), -r.y()), Complex(r.x(), r.y()), -r.z()};
}

EigenPair eigenspinors(const Axis& r) {
  const SphericalDirection d = to_spherical(r);
  const double c = std::cos(0.5 * d.theta);
  const double s = std::sin(0.5 * d.theta);
  const Complex e = std::polar(1.0, d.phi);
  return {{c, e * s}, {-s, e * c}};
}

ProjectorPair projector_decomposition(const Axis& r) {
  const EigenPair ev = eigenspinors(r);
  return {outer(ev.plus, ev.plus), outer(ev.minus, ev.minus)};
}

TensorPauliBasis tensor_pauli_basis() {
  const Spinor u = spin_up();
  const Spinor d = spin_down();
  return {outer(u, d) + outer(d, u), outer(u, d) - outer(d, u), outer(u, u) - outer(d, d),
          outer(u, u) + outer(d, d)};
}

}  // namespace rotor
