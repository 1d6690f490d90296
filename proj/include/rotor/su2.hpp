#pragma once

// Complex 2x2 algebra for spin-1/2: spinors, matrices, Pauli projections and
// their eigenspinors.

#include <complex>
#include <utility>

#include "rotor/errors.hpp"

namespace rotor {

using Complex = std::complex<double>;

inline constexpr double kTolAlg = 1e-12;   // algebraic identities
inline constexpr double kTolAxis = 1e-9;   // unit-axis validation

inline constexpr Complex kI{0.0, 1.0};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double max_abs_diff(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& v);

// Unit direction in real space. Construction validates the length.
class Axis {
 public:
  // Throws NonUnitAxis when |(x,y,z)| deviates from 1 by more than kTolAxis.
  Axis(double x, double y, double z);
  explicit Axis(const Vec3& v) : Axis(v.x, v.y, v.z) {}

  // Rescales v to unit length; throws NonUnitAxis for a (near) zero vector.
  static Axis normalized(const Vec3& v);

  static Axis unit_x() { return Axis(1.0, 0.0, 0.0); }
  static Axis unit_y() { return Axis(0.0, 1.0, 0.0); }
  static Axis unit_z() { return Axis(0.0, 0.0, 1.0); }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

  Axis operator-() const { return Axis(-v_.x, -v_.y, -v_.z); }
  friend bool operator==(const Axis&, const Axis&) = default;

 private:
  Vec3 v_;
};

// Zenith theta in [0, pi] measured from +z, azimuth phi in [0, 2*pi).
struct SphericalDirection {
  double theta = 0.0;
  double phi = 0.0;
};

Axis to_axis(const SphericalDirection& d);
// phi is canonicalized to 0 at the poles.
SphericalDirection to_spherical(const Axis& a);

struct Spinor {
  Complex up;
  Complex down;

  double norm_squared() const { return std::norm(up) + std::norm(down); }
  double norm() const;

  // Throws ZeroSpinor when the norm is below 1e-300.
  Spinor normalized() const;

  // Global phase chosen so that the first component whose modulus exceeds
  // half the larger modulus is real and nonnegative.
  Spinor canonical() const;

  friend bool operator==(const Spinor&, const Spinor&) = default;
};

Spinor operator*(Complex c, const Spinor& s);
Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);

// <a|b>, antilinear in the first argument.
Complex inner(const Spinor& a, const Spinor& b);

// Equality as physical states: |<a|b>| = 1 for normalized a, b.
bool state_equal(const Spinor& a, const Spinor& b, double tol = kTolAlg);
double max_abs_diff(const Spinor& a, const Spinor& b);

inline Spinor spin_up() { return {1.0, 0.0}; }
inline Spinor spin_down() { return {0.0, 1.0}; }

struct Matrix2 {
  Complex a11;
  Complex a12;
  Complex a21;
  Complex a22;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 matmul(const Matrix2& a, const Matrix2& b);
Matrix2 adjoint(const Matrix2& m);
Spinor apply(const Matrix2& m, const Spinor& s);
Complex trace(const Matrix2& m);
Complex det(const Matrix2& m);
Matrix2 scale(const Matrix2& m, Complex c);
Matrix2 add(const Matrix2& a, const Matrix2& b);

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) { return matmul(a, b); }
inline Spinor operator*(const Matrix2& m, const Spinor& s) { return apply(m, s); }
inline Matrix2 operator*(Complex c, const Matrix2& m) { return scale(m, c); }
inline Matrix2 operator+(const Matrix2& a, const Matrix2& b) { return add(a, b); }
Matrix2 operator-(const Matrix2& a, const Matrix2& b);
Matrix2 operator-(const Matrix2& m);

double max_abs_diff(const Matrix2& a, const Matrix2& b);
// min over the sign of b; the comparison used for rotations (double cover).
double max_abs_diff_up_to_sign(const Matrix2& a, const Matrix2& b);

bool is_hermitian(const Matrix2& m, double tol = kTolAlg);
bool is_unitary(const Matrix2& m, double tol = kTolAlg);
bool is_special_unitary(const Matrix2& m, double tol = kTolAlg);

Matrix2 identity2();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
// k = 0, 1, 2 for x, y, z.
Matrix2 pauli(int k);

// Rank-1 matrix a * b^+.
Matrix2 outer(const Spinor& a, const Spinor& b);

// sigma_x r_x + sigma_y r_y + sigma_z r_z.
Matrix2 sigma_along(const Axis& r);

struct EigenPair {
  Spinor plus;
  Spinor minus;
};

// plus = (cos t/2, e^{ip} sin t/2), minus = (-sin t/2, e^{ip} cos t/2) with
// (t, p) the spherical angles of r.
EigenPair eigenspinors(const Axis& r);

struct ProjectorPair {
  Matrix2 plus;
  Matrix2 minus;
};

ProjectorPair projector_decomposition(const Axis& r);

// sigma_z, sigma_x, i*sigma_y and E assembled from outer products of the
// z-basis spinors.
struct TensorPauliBasis {
  Matrix2 sx;
  Matrix2 isy;
  Matrix2 sz;
  Matrix2 e;
};

TensorPauliBasis tensor_pauli_basis();

}  // namespace rotor
