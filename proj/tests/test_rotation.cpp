#include <gtest/gtest.h>

#include <cmath>

#include "rotor/bloch.hpp"
#include "rotor/rotation.hpp"
#include "test_support.hpp"

using namespace rotor;
using rotor::oracle::kPi;
using rotor::oracle::Sampler;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

constexpr Convention kBoth[] = {Convention::TextbookLeft, Convention::PaperRight};

}  // namespace

TEST(UZ, IdentityAndFullTurn) {
  EXPECT_EQ(u_z(0.0), identity2());
  // diag(e^{-i pi}, e^{i pi}) = -E.
  EXPECT_LE(max_abs_diff(u_z(2 * kPi), -identity2()), kTolAlg);
}

TEST(UZ, RotatesSigmaXInThePlane) {
  Sampler rng(21);
  for (int i = 0; i < 50; ++i) {
    const double phi = rng.uniform(-2 * kPi, 2 * kPi);
    const Matrix2 u = u_z(phi);
    const Matrix2 expected_x{0.0, std::polar(1.0, -phi), std::polar(1.0, phi), 0.0};
    const Matrix2 expected_y{0.0, -kI * std::polar(1.0, -phi), kI * std::polar(1.0, phi), 0.0};
    EXPECT_LE(max_abs_diff(u * pauli_x() * adjoint(u), expected_x), kTolAlg);
    EXPECT_LE(max_abs_diff(u * pauli_y() * adjoint(u), expected_y), kTolAlg);
    EXPECT_LE(max_abs_diff(u * pauli_z() * adjoint(u), pauli_z()), kTolAlg);
    EXPECT_LE(max_abs_diff(u, rotation_operator({Axis::unit_z(), phi}, Convention::TextbookLeft)), kTolAlg);
  }
}

TEST(RotationOperator, QuarterTurnAboutZ) {
  const Matrix2 expected = scale({1.0, 0.0, 0.0, -kI}, Complex(1.0, 1.0) * kInvSqrt2);
  EXPECT_LE(max_abs_diff(rotation_operator({Axis::unit_z(), kPi / 2}, Convention::PaperRight), expected),
            kTolAlg);
}

TEST(RotationOperator, HalfTurnAboutYTextbook) {
  // cos(pi/2) = 0, sin(pi/2) = 1 leaves -i sigma_y.
  EXPECT_LE(max_abs_diff(rotation_operator({Axis::unit_y(), kPi}, Convention::TextbookLeft),
                         -(kI * pauli_y())),
            kTolAlg);
}

TEST(RotationOperator, ZeroAngleIsIdentity) {
  Sampler rng(22);
  for (int i = 0; i < 20; ++i)
    for (Convention c : kBoth) EXPECT_EQ(rotation_operator({rng.axis(), 0.0}, c), identity2());
}

TEST(RotationOperator, ConventionsAreAdjoints) {
  Sampler rng(23);
  for (int i = 0; i < 100; ++i) {
    const AxisAngle aa{rng.axis(), rng.uniform(-3 * kPi, 3 * kPi)};
    EXPECT_EQ(rotation_operator(aa, Convention::TextbookLeft),
              adjoint(rotation_operator(aa, Convention::PaperRight)));
  }
}

TEST(RotationOperator, SpecialUnitaryAndGroupLaw) {
  Sampler rng(24);
  for (int i = 0; i < 100; ++i) {
    const Axis n = rng.axis();
    const double a = rng.uniform(-2 * kPi, 2 * kPi), b = rng.uniform(-2 * kPi, 2 * kPi);
    for (Convention c : kBoth) {
      const Matrix2 w = rotation_operator({n, a}, c);
      EXPECT_TRUE(is_special_unitary(w));
      EXPECT_LE(max_abs_diff(rotation_operator({n, a + b}, c),
                             rotation_operator({n, b}, c) * rotation_operator({n, a}, c)),
                1e-12);
    }
  }
}

TEST(RotationOperator, AngleReductionKeepsMatrix) {
  Sampler rng(25);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(-20, 20);
    const double r = reduce_angle(a);
    EXPECT_GT(r, -2 * kPi);
    EXPECT_LE(r, 2 * kPi);
    const Axis n = rng.axis();
    const AxisAngle big{n, a};
    // Compare against the series exponential at the unreduced angle.
    EXPECT_LE(max_abs_diff(rotation_operator(big, Convention::PaperRight), oracle::exp_half_angle(n, a)),
              1e-11);
  }
  // Adding 2*pi flips the sign: state-equal but not matrix-equal.
  const Axis n = Axis::unit_x();
  const Matrix2 w = rotation_operator({n, 0.4}, Convention::PaperRight);
  const Matrix2 w2 = rotation_operator({n, 0.4 + 2 * kPi}, Convention::PaperRight);
  EXPECT_LE(max_abs_diff(w2, -w), kTolAlg);
}

TEST(RotationOperator, ExponentialForm) {
  Sampler rng(26);
  for (int i = 0; i < 100; ++i) {
    const Axis n = rng.axis();
    const double phi = rng.uniform(-kPi, kPi);
    EXPECT_LE(max_abs_diff(oracle::exp_half_angle(n, phi), rotation_operator({n, phi}, Convention::PaperRight)),
              1e-13);
    EXPECT_LE(max_abs_diff(oracle::exp_half_angle(n, -phi),
                           rotation_operator({n, phi}, Convention::TextbookLeft)),
              1e-13);
  }
}

TEST(RotateSpinor, SigmaYEigenstateToSigmaX) {
  const Spinor chi_y{kInvSqrt2, Complex(0, kInvSqrt2)};
  const Spinor out = rotate_spinor(chi_y, {Axis::unit_z(), kPi / 2}, Convention::PaperRight);
  const Spinor expected = std::polar(1.0, kPi / 4) * Spinor{kInvSqrt2, kInvSqrt2};
  EXPECT_LE(max_abs_diff(out, expected), kTolAlg);
  EXPECT_TRUE(state_equal(out, eigenspinors(Axis::unit_x()).plus));
}

TEST(RotateSpinor, AxisEigenstateIsFixed) {
  Sampler rng(27);
  for (Convention c : kBoth) {
    EXPECT_TRUE(state_equal(rotate_spinor(spin_up(), {Axis::unit_z(), rng.uniform(-7, 7)}, c), spin_up()));
  }
  for (int i = 0; i < 100; ++i) {
    const Axis n = rng.axis();
    const Spinor plus = eigenspinors(n).plus;
    for (Convention c : kBoth)
      EXPECT_TRUE(state_equal(rotate_spinor(plus, {n, rng.uniform(-7, 7)}, c), plus));
  }
}

TEST(RotateSpinor, UpAboutYQuarterTurn) {
  // Oracle: Bloch image of the result vs screw_oracle(y, pi/2) (0,0,1) = (-1,0,0).
  const Spinor out = rotate_spinor(spin_up(), {Axis::unit_y(), kPi / 2}, Convention::PaperRight);
  const Vec3 target = oracle::screw_oracle(Axis::unit_y(), kPi / 2).apply({0, 0, 1});
  EXPECT_LE(max_abs_diff(target, {-1.0, 0.0, 0.0}), 1e-14);
  EXPECT_LE(max_abs_diff(oracle::expectation_vector(out), target), 1e-12);
  EXPECT_TRUE(state_equal(out, eigenspinors(Axis(-1.0, 0.0, 0.0)).plus));
}

TEST(RotateSpinor, PreservesNorm) {
  Sampler rng(28);
  for (int i = 0; i < 100; ++i) {
    const Spinor s = rng.spinor();
    for (Convention c : kBoth)
      EXPECT_NEAR(rotate_spinor(s, {rng.axis(), rng.uniform(-7, 7)}, c).norm(), 1.0, kTolAlg);
  }
}

TEST(ConjugatePauli, QuarterTurnAboutZ) {
  const AxisAngle q{Axis::unit_z(), kPi / 2};
  EXPECT_LE(max_abs_diff(conjugate_pauli(pauli_y(), q, Convention::PaperRight), pauli_x()), kTolAlg);
  // diag(e^{i pi/4}, e^{-i pi/4}) sigma_x diag(e^{-i pi/4}, e^{i pi/4}) = [[0, i], [-i, 0]].
  EXPECT_LE(max_abs_diff(conjugate_pauli(pauli_x(), q, Convention::PaperRight), -pauli_y()), kTolAlg);
  Sampler rng(29);
  for (Convention c : kBoth)
    EXPECT_LE(max_abs_diff(conjugate_pauli(pauli_z(), {Axis::unit_z(), rng.uniform(-7, 7)}, c), pauli_z()),
              kTolAlg);
}

TEST(Rodrigues, HandExpansionAboutZ) {
  // [[c, s, 0], [-s, c, 0], [0, 0, 1]] at pi/2 is [[0,1,0],[-1,0,0],[0,0,1]].
  const Rotation3 r = rodrigues({Axis::unit_z(), kPi / 2});
  const Rotation3 expected({0, 1, 0, -1, 0, 0, 0, 0, 1});
  EXPECT_LE(max_abs_diff(r, expected), 1e-15);
  EXPECT_LE(max_abs_diff(r.apply({0, 1, 0}), {1, 0, 0}), 1e-15);
  EXPECT_EQ(rodrigues({Axis::unit_x(), 0.0}), Rotation3::identity());
}

TEST(Rodrigues, EqualsCoordinateRotationMatrixAboutZ) {
  Sampler rng(30);
  for (int i = 0; i < 50; ++i) {
    const double phi = rng.uniform(-7, 7);
    EXPECT_LE(max_abs_diff(rodrigues({Axis::unit_z(), phi}), passive_z(phi)), 1e-15);
  }
}

TEST(Rodrigues, MatchesGeneratorExponential) {
  Sampler rng(31);
  for (int i = 0; i < 100; ++i) {
    const Axis n = rng.axis();
    const double phi = rng.uniform(-2 * kPi, 2 * kPi);
    const Rotation3 r = rodrigues({n, phi});
    EXPECT_TRUE(is_special_orthogonal(r));
    EXPECT_LE(max_abs_diff(r, oracle::screw_oracle(n, phi)), 1e-12);
    EXPECT_LE(max_abs_diff(r.apply(n.vec()), n.vec()), 1e-14);
  }
}

TEST(AdjointSO3, IdentityAndDoubleCover) {
  EXPECT_LE(max_abs_diff(adjoint_so3(identity2()), Rotation3::identity()), 1e-15);
  Sampler rng(32);
  for (int i = 0; i < 100; ++i) {
    const Matrix2 w = rng.su2();
    EXPECT_EQ(adjoint_so3(w), adjoint_so3(-w));
    EXPECT_TRUE(is_special_orthogonal(adjoint_so3(w)));
  }
  const Matrix2 full = rotation_operator({rng.axis(), 2 * kPi}, Convention::PaperRight);
  EXPECT_LE(max_abs_diff(full, -identity2()), kTolAlg);
  EXPECT_LE(max_abs_diff(adjoint_so3(full), Rotation3::identity()), kTolAlg);
}

TEST(AdjointSO3, QuarterTurnAboutZSendsYToX) {
  const Rotation3 r = adjoint_so3(rotation_operator({Axis::unit_z(), kPi / 2}, Convention::PaperRight));
  EXPECT_LE(max_abs_diff(r, rodrigues({Axis::unit_z(), kPi / 2})), 1e-15);
  EXPECT_LE(max_abs_diff(r.apply({0, 1, 0}), {1, 0, 0}), 1e-15);
}

TEST(AdjointSO3, Homomorphism) {
  Sampler rng(33);
  for (int i = 0; i < 100; ++i) {
    const Matrix2 a = rng.su2(), b = rng.su2();
    EXPECT_LE(max_abs_diff(adjoint_so3(a * b), adjoint_so3(a) * adjoint_so3(b)), 1e-10);
  }
}

TEST(AdjointSO3, ExpansionCoefficients) {
  // W sigma_k W^+ = sum_j R_jk sigma_j, checked by rebuilding the matrix.
  Sampler rng(34);
  for (int i = 0; i < 50; ++i) {
    const Matrix2 w = rng.su2();
    const Rotation3 r = adjoint_so3(w);
    for (int k = 0; k < 3; ++k) {
      Matrix2 rebuilt{};
      for (int j = 0; j < 3; ++j) rebuilt = rebuilt + Complex(r(j, k)) * pauli(j);
      EXPECT_LE(max_abs_diff(rebuilt, w * pauli(k) * adjoint(w)), 1e-14);
    }
  }
}

TEST(AdjointSO3, RejectsNonSpecialUnitary) {
  EXPECT_THROW(adjoint_so3(pauli_x()), Error);  // det -1
  EXPECT_THROW(adjoint_so3(scale(identity2(), 2.0)), Error);
  try {
    adjoint_so3(kI * identity2());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSpecialUnitary);
  }
}

TEST(ConventionSemantics, RightIsScrewOracleLeftIsNegated) {
  Sampler rng(35);
  for (int i = 0; i < 200; ++i) {
    const Axis n = rng.axis();
    const double phi = rng.uniform(1e-6, kPi - 1e-6);
    const Rotation3 oracle = oracle::screw_oracle(n, phi);
    const Rotation3 oracle_neg = oracle::screw_oracle(n, -phi);
    EXPECT_LE(max_abs_diff(adjoint_so3(rotation_operator({n, phi}, Convention::PaperRight)), oracle), 1e-10);
    EXPECT_LE(max_abs_diff(adjoint_so3(rotation_operator({n, phi}, Convention::TextbookLeft)), oracle_neg),
              1e-10);
  }
}

TEST(ConventionSemantics, BlochImageFollowsRodrigues) {
  Sampler rng(36);
  for (int i = 0; i < 100; ++i) {
    const Spinor s = rng.spinor();
    const AxisAngle aa{rng.axis(), rng.uniform(-7, 7)};
    const Vec3 after = bloch_point(rotate_spinor(s, aa, Convention::PaperRight)).s.vec();
    EXPECT_LE(max_abs_diff(after, rodrigues(aa).apply(bloch_point(s).s.vec())), 1e-10);
  }
}

TEST(Audit, IdentityIsAmbiguous) {
  const AuditReport r = audit_convention(identity2());
  EXPECT_EQ(r.handedness, Handedness::Identity);
  EXPECT_TRUE(r.ambiguous_axis);
  EXPECT_EQ(r.axis, Axis::unit_z());
  EXPECT_EQ(audit_convention(-identity2()).handedness, Handedness::Identity);
}

TEST(Audit, RecoversAxisAngleAndSense) {
  Sampler rng(37);
  for (int i = 0; i < 100; ++i) {
    const Axis n = rng.axis();
    const double phi = rng.uniform(0.01, kPi - 0.01);

    const AuditReport right = audit_convention(rotation_operator({n, phi}, Convention::PaperRight), n);
    EXPECT_EQ(right.handedness, Handedness::RightScrew);
    EXPECT_NEAR(right.angle, phi, 1e-10);
    EXPECT_LE(max_abs_diff(right.axis.vec(), n.vec()), 1e-10);

    const AuditReport left = audit_convention(rotation_operator({n, phi}, Convention::TextbookLeft), n);
    EXPECT_EQ(left.handedness, Handedness::LeftScrew);
    EXPECT_NEAR(left.angle, phi, 1e-10);
    EXPECT_LE(max_abs_diff(left.axis.vec(), n.vec()), 1e-10);
  }
}

TEST(Audit, CanonicalHemisphereOrientation) {
  // Without a reference the axis points into z > 0; a left turn about -z is a
  // right turn about +z.
  const Matrix2 w = rotation_operator({Axis(0, 0, -1), 1.0}, Convention::TextbookLeft);
  const AuditReport r = audit_convention(w);
  EXPECT_EQ(r.axis, Axis::unit_z());
  EXPECT_EQ(r.handedness, Handedness::RightScrew);
  EXPECT_NEAR(r.angle, 1.0, 1e-12);
}

TEST(Audit, AnglesBeyondPiFoldBack) {
  // phi in (pi, 2pi) about n equals 2pi - phi in the other sense.
  const Axis n = Axis::unit_z();
  const AuditReport r = audit_convention(rotation_operator({n, 1.5 * kPi}, Convention::PaperRight), n);
  EXPECT_NEAR(r.angle, 0.5 * kPi, 1e-12);
  EXPECT_EQ(r.handedness, Handedness::LeftScrew);
}

TEST(Audit, HalfTurnTieBreak) {
  Sampler rng(38);
  for (int i = 0; i < 20; ++i) {
    const Axis n = rng.axis();
    for (Convention c : kBoth) {
      const AuditReport r = audit_convention(rotation_operator({n, kPi}, c), n);
      EXPECT_TRUE(r.half_turn_tie);
      EXPECT_EQ(r.handedness, Handedness::RightScrew);
      EXPECT_NEAR(r.angle, kPi, 1e-9);
    }
  }
}

TEST(Audit, RejectsNonSpecialUnitary) {
  EXPECT_THROW(audit_convention(pauli_x()), Error);
  EXPECT_THROW(audit_convention(kI * identity2()), Error);
}

TEST(Euler, SingleAxisCollapse) {
  Sampler rng(39);
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0, 2 * kPi);
    for (Convention c : kBoth) {
      for (EulerMode m : {EulerMode::Intrinsic, EulerMode::Extrinsic}) {
        EXPECT_LE(max_abs_diff(compose_euler({a, 0, 0}, m, c), rotation_operator({Axis::unit_z(), a}, c)),
                  kTolAlg);
      }
    }
  }
}

TEST(Euler, IntrinsicEqualsReversedExtrinsic) {
  Sampler rng(40);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0, 2 * kPi), b = rng.uniform(0, kPi), g = rng.uniform(0, 2 * kPi);
    for (Convention c : kBoth) {
      EXPECT_LE(max_abs_diff_up_to_sign(compose_euler({a, b, g}, EulerMode::Intrinsic, c),
                                        compose_euler({g, b, a}, EulerMode::Extrinsic, c)),
                1e-12);
    }
  }
}

TEST(Euler, ExtrinsicMatchesRodriguesProduct) {
  Sampler rng(41);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0, 2 * kPi), b = rng.uniform(0, kPi), g = rng.uniform(0, 2 * kPi);
    const Rotation3 expected = oracle::screw_oracle(Axis::unit_z(), g) *
                               oracle::screw_oracle(Axis::unit_y(), b) *
                               oracle::screw_oracle(Axis::unit_z(), a);
    EXPECT_LE(max_abs_diff(adjoint_so3(compose_euler({a, b, g}, EulerMode::Extrinsic, Convention::PaperRight)),
                           expected),
              1e-10);
  }
}

TEST(Euler, Canonicalization) {
  Sampler rng(42);
  for (int i = 0; i < 100; ++i) {
    const EulerZYZ e{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const EulerZYZ c = e.canonical();
    EXPECT_GE(c.beta, 0.0);
    EXPECT_LE(c.beta, kPi);
    EXPECT_GE(c.alpha, 0.0);
    EXPECT_LT(c.alpha, 2 * kPi);
    EXPECT_GE(c.gamma, 0.0);
    EXPECT_LT(c.gamma, 2 * kPi);
    for (EulerMode m : {EulerMode::Intrinsic, EulerMode::Extrinsic}) {
      EXPECT_LE(max_abs_diff(adjoint_so3(compose_euler(e, m, Convention::PaperRight)),
                             adjoint_so3(compose_euler(c, m, Convention::PaperRight))),
                1e-10);
    }
  }
}

TEST(Euler, GimbalLockFoldsGamma) {
  const EulerZYZ at_zero = EulerZYZ{0.3, 0.0, 0.5}.canonical();
  EXPECT_NEAR(at_zero.alpha, 0.8, 1e-15);
  EXPECT_EQ(at_zero.gamma, 0.0);
  const EulerZYZ at_pi = EulerZYZ{0.9, kPi, 0.5}.canonical();
  EXPECT_NEAR(at_pi.alpha, 0.4, 1e-15);
  EXPECT_EQ(at_pi.gamma, 0.0);
  for (EulerMode m : {EulerMode::Intrinsic, EulerMode::Extrinsic}) {
    EXPECT_LE(max_abs_diff(adjoint_so3(compose_euler({0.9, kPi, 0.5}, m, Convention::PaperRight)),
                           adjoint_so3(compose_euler(at_pi, m, Convention::PaperRight))),
              1e-12);
  }
}

TEST(ProjectorTransport, Examples) {
  Sampler rng(43);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(lemma2_check(identity2(), rng.axis()));

  const Matrix2 u = rotation_operator({Axis::unit_z(), kPi / 2}, Convention::PaperRight);
  EXPECT_TRUE(lemma2_check(u, Axis::unit_y()));
  const EigenPair ev = eigenspinors(Axis::unit_y());
  const Spinor p = u * ev.plus, m = u * ev.minus;
  EXPECT_LE(max_abs_diff(outer(p, p) - outer(m, m), pauli_x()), kTolAlg);
}

TEST(ProjectorTransport, RandomUnitaries) {
  Sampler rng(44);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(lemma2_check(rng.unitary(), rng.axis()));
  try {
    lemma2_check(scale(identity2(), 2.0), Axis::unit_z());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnitary);
  }
}

TEST(PauliDuality, Examples) {
  EXPECT_TRUE(pauli_transport_duality(Rotation3::identity(), Axis::unit_x()));

  // Both sides by hand for A = rodrigues(z, pi/2) = [[0,1,0],[-1,0,0],[0,0,1]], r = x:
  // (A sigma) . r = (A sigma)_x = sigma_y, and A^T r = (0, 1, 0).
  const Rotation3 a = rodrigues({Axis::unit_z(), kPi / 2});
  EXPECT_LE(max_abs_diff(a.transpose().apply({1, 0, 0}), {0, 1, 0}), 1e-15);
  EXPECT_TRUE(pauli_transport_duality(a, Axis::unit_x()));
}

TEST(PauliDuality, RandomRotations) {
  Sampler rng(45);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(pauli_transport_duality(rng.so3(), rng.axis()));
}
