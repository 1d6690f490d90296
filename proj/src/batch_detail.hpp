#pragma once

#include <cstddef>
#include <stdexcept>

#include "rotor/rotation.hpp"

namespace rotor::batch::detail {

inline void check_sizes(std::size_t in, std::size_t out) {
  if (in != out) throw std::invalid_argument("batch: input and output sizes differ");
}

inline void check_apply_sizes(std::size_t ops, std::size_t states, std::size_t out) {
  if (ops != 1 && ops != states) throw std::invalid_argument("batch: operator count must be 1 or match states");
  check_sizes(states, out);
}

inline void check_audit_sizes(std::size_t ops, std::size_t refs, std::size_t out) {
  if (refs != 0 && refs != ops) throw std::invalid_argument("batch: reference count must be 0 or match operators");
  check_sizes(ops, out);
}

inline double convention_residual(const AxisAngle& aa, Convention conv) {
  const double expected = conv == Convention::PaperRight ? aa.angle : -aa.angle;
  return max_abs_diff(adjoint_so3(rotation_operator(aa, conv)), rodrigues({aa.axis, expected}));
}

}  // namespace rotor::batch::detail
