#pragma once

// Spin rotation operators under both sign conventions, the adjoint map onto
// SO(3), Euler-sequence composition and the handedness auditor.

#include <array>
#include <string_view>

#include "rotor/su2.hpp"

namespace rotor {

// Which SU(2) element is taken as the active rotation of a spinor.
//   TextbookLeft: U_n(phi)  = E cos(phi/2) - i (sigma.n) sin(phi/2)
//   PaperRight:   U+_n(phi) = E cos(phi/2) + i (sigma.n) sin(phi/2)
enum class Convention { TextbookLeft, PaperRight };

std::string_view to_string(Convention c);

struct AxisAngle {
  Axis axis;
  double angle;  // radians, signed
};

// Reduces an angle into (-2*pi, 2*pi]. The operators have period 4*pi in the
// angle, so the reduction leaves every matrix unchanged.
double reduce_angle(double angle);

class Rotation3 {
 public:
  Rotation3() = default;
  explicit Rotation3(const std::array<double, 9>& row_major) : m_(row_major) {}

  static Rotation3 identity() { return Rotation3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

  double operator()(int row, int col) const { return m_[3 * row + col]; }
  double& operator()(int row, int col) { return m_[3 * row + col]; }
  const std::array<double, 9>& entries() const { return m_; }

  Rotation3 transpose() const;
  double determinant() const;
  Vec3 apply(const Vec3& v) const;

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b);
  friend bool operator==(const Rotation3&, const Rotation3&) = default;

 private:
  std::array<double, 9> m_{};
};

double max_abs_diff(const Rotation3& a, const Rotation3& b);
bool is_special_orthogonal(const Rotation3& r, double tol = kTolAlg);

struct EulerZYZ {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // beta in [0, pi], alpha and gamma in [0, 2*pi). At beta in {0, pi} gamma is
  // folded into alpha. The canonical triple describes the same SO(3)
  // element; as an SU(2) element it may differ by an overall sign.
  EulerZYZ canonical() const;

  friend bool operator==(const EulerZYZ&, const EulerZYZ&) = default;
};

enum class EulerMode { Intrinsic, Extrinsic };

// diag(e^{-i phi/2}, e^{+i phi/2}) = E cos(phi/2) - i sigma_z sin(phi/2).
Matrix2 u_z(double phi);

Matrix2 rotation_operator(const AxisAngle& aa, Convention conv);
Spinor rotate_spinor(const Spinor& s, const AxisAngle& aa, Convention conv);

// W m W^+ with W = rotation_operator(aa, conv).
Matrix2 conjugate_pauli(const Matrix2& m, const AxisAngle& aa, Convention conv);

// R with W sigma_k W^+ = sum_j R_jk sigma_j, R_jk = tr(sigma_j W sigma_k W^+)/2.
// Throws NotSpecialUnitary unless w is special unitary within tol.
Rotation3 adjoint_so3(const Matrix2& w, double tol = kTolAlg);

// Coordinate-system rotation about z: rows are the new basis vectors
// i' = cos*i + sin*j, j' = -sin*i + cos*j.
Rotation3 passive_z(double phi);

// Closed-form screw rotation about aa.axis:
//   R = cos(a) I + (1 - cos(a)) n n^T - sin(a) [n]x
// For n = z this is passive_z(a) itself, sending e_y to e_x at a = pi/2,
// which is the screw sense carried by the PaperRight operator.
Rotation3 rodrigues(const AxisAngle& aa);

enum class Handedness { RightScrew, LeftScrew, Identity };

std::string_view to_string(Handedness h);

struct AuditReport {
  Handedness handedness = Handedness::Identity;
  Axis axis = Axis::unit_z();
  double angle = 0.0;              // [0, pi]
  bool ambiguous_axis = false;     // angle < 1e-9, axis set to +z
  bool half_turn_tie = false;      // angle == pi, both senses coincide
  double so3_residual = 0.0;       // deviation from the matching oracle
};

inline constexpr double kAuditIdentityAngle = 1e-9;

// The recovered axis is a line; its orientation is chosen by the canonical
// hemisphere (z > 0, then y > 0, then x > 0). Handedness is relative to that
// orientation.
AuditReport audit_convention(const Matrix2& w, double tol = kTolAlg);

// Same, with the axis oriented to have nonnegative overlap with reference.
AuditReport audit_convention(const Matrix2& w, const Axis& reference, double tol = kTolAlg);

// Intrinsic: about z, then the carried y', then the carried z''.
// Extrinsic: about the fixed z, y, z in that order.
Matrix2 compose_euler(const EulerZYZ& e, EulerMode mode, Convention conv);

// u sigma_r u^+ == (u chi+)(u chi+)^+ - (u chi-)(u chi-)^+ within kTolAlg.
// Throws NotUnitary when u is not unitary.
bool lemma2_check(const Matrix2& u, const Axis& r);

// sum_k (A sigma)_k r_k == sigma_along(A^T r) within kTolAlg.
bool pauli_transport_duality(const Rotation3& a, const Axis& r);

}  // namespace rotor
