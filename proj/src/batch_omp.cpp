#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "batch_detail.hpp"
#include "rotor/batch.hpp"

namespace rotor::batch {

namespace {

// Exceptions may not cross an OpenMP region; keep the first one and rethrow.
class FirstError {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(rotor_batch_error)
      if (!error_) error_ = std::current_exception();
    }
  }

  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

int max_threads() { return omp_get_max_threads(); }

void apply_operators(std::span<const Matrix2> ops, std::span<const Spinor> states,
                     std::span<Spinor> out) {
  detail::check_apply_sizes(ops.size(), states.size(), out.size());
  const bool broadcast = ops.size() == 1;
  const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = apply(broadcast ? ops[0] : ops[i], states[i]);
  }
}

void bloch_points(std::span<const Spinor> states, std::span<Vec3> out) {
  detail::check_sizes(states.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(states.size());
  FirstError err;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    err.run([&] { out[i] = bloch_point(states[i]).s.vec(); });
  }
  err.rethrow();
}

void adjoint_images(std::span<const Matrix2> ops, std::span<Rotation3> out) {
  detail::check_sizes(ops.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(ops.size());
  FirstError err;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    err.run([&] { out[i] = adjoint_so3(ops[i]); });
  }
  err.rethrow();
}

void audit_all(std::span<const Matrix2> ops, std::span<const Axis> references,
               std::span<AuditReport> out) {
  detail::check_audit_sizes(ops.size(), references.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(ops.size());
  const bool has_refs = !references.empty();
  FirstError err;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    err.run([&] {
      out[i] = has_refs ? audit_convention(ops[i], references[i]) : audit_convention(ops[i]);
    });
  }
  err.rethrow();
}

double convention_deviation(std::span<const AxisAngle> samples, Convention conv) {
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  double worst = 0.0;
  FirstError err;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    err.run([&] { worst = std::max(worst, detail::convention_residual(samples[i], conv)); });
  }
  err.rethrow();
  return worst;
}

}  // namespace rotor::batch
