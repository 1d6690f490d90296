#pragma once

// Array kernels over many states and operators. The functions in
// rotor::batch run with OpenMP; rotor::batch::serial holds the plain-loop
// reference they are checked against. Both produce identical results element
// by element.

#include <span>
#include <vector>

#include "rotor/bloch.hpp"
#include "rotor/rotation.hpp"
#include "rotor/su2.hpp"

namespace rotor::batch {

// out[i] = ops[i] * states[i]; a single operator is broadcast over all states.
// Throws std::invalid_argument on size mismatch.
void apply_operators(std::span<const Matrix2> ops, std::span<const Spinor> states,
                     std::span<Spinor> out);

void bloch_points(std::span<const Spinor> states, std::span<Vec3> out);

void adjoint_images(std::span<const Matrix2> ops, std::span<Rotation3> out);

// references may be empty (canonical hemisphere) or one per operator.
void audit_all(std::span<const Matrix2> ops, std::span<const Axis> references,
               std::span<AuditReport> out);

// max_i |adjoint_so3(rotation_operator(samples[i], conv)) - rodrigues(n_i, +-phi_i)|
// with +phi for PaperRight and -phi for TextbookLeft.
double convention_deviation(std::span<const AxisAngle> samples, Convention conv);

int max_threads();

namespace serial {

void apply_operators(std::span<const Matrix2> ops, std::span<const Spinor> states,
                     std::span<Spinor> out);
void bloch_points(std::span<const Spinor> states, std::span<Vec3> out);
void adjoint_images(std::span<const Matrix2> ops, std::span<Rotation3> out);
void audit_all(std::span<const Matrix2> ops, std::span<const Axis> references,
               std::span<AuditReport> out);
double convention_deviation(std::span<const AxisAngle> samples, Convention conv);

}  // namespace serial

}  // namespace rotor::batch
