#include <algorithm>
#include <stdexcept>

#include "batch_detail.hpp"
#include "rotor/batch.hpp"

namespace rotor::batch::serial {

void apply_operators(std::span<const Matrix2> ops, std::span<const Spinor> states,
                     std::span<Spinor> out) {
  detail::check_apply_sizes(ops.size(), states.size(), out.size());
  const bool broadcast = ops.size() == 1;
  for (std::size_t i = 0; i < states.size(); ++i) {
    out[i] = apply(broadcast ? ops[0] : ops[i], states[i]);
  }
}

void bloch_points(std::span<const Spinor> states, std::span<Vec3> out) {
  detail::check_sizes(states.size(), out.size());
  for (std::size_t i = 0; i < states.size(); ++i) out[i] = bloch_point(states[i]).s.vec();
}

void adjoint_images(std::span<const Matrix2> ops, std::span<Rotation3> out) {
  detail::check_sizes(ops.size(), out.size());
  for (std::size_t i = 0; i < ops.size(); ++i) out[i] = adjoint_so3(ops[i]);
}

void audit_all(std::span<const Matrix2> ops, std::span<const Axis> references,
               std::span<AuditReport> out) {
  detail::check_audit_sizes(ops.size(), references.size(), out.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    out[i] = references.empty() ? audit_convention(ops[i])
                                : audit_convention(ops[i], references[i]);
  }
}

double convention_deviation(std::span<const AxisAngle> samples, Convention conv) {
  double worst = 0.0;
  for (const AxisAngle& aa : samples) worst = std::max(worst, detail::convention_residual(aa, conv));
  return worst;
}

}  // namespace rotor::batch::serial
