// Serial reference vs OpenMP kernels over random operators and states.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "rotor/batch.hpp"

namespace {

using namespace rotor;

struct Data {
  std::vector<AxisAngle> samples;
  std::vector<Matrix2> ops;
  std::vector<Spinor> states;
};

Axis random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    const Vec3 v{g(rng), g(rng), g(rng)};
    if (v.norm() > 1e-3) return Axis::normalized(v);
  }
}

const Data& data(std::size_t n) {
  static std::vector<std::pair<std::size_t, Data>> cache;
  for (const auto& [size, d] : cache)
    if (size == n) return d;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.01, std::numbers::pi - 0.01);
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    const AxisAngle aa{random_axis(rng), angle(rng)};
    d.samples.push_back(aa);
    d.ops.push_back(rotation_operator(aa, Convention::PaperRight));
    d.states.push_back(eigenspinors(random_axis(rng)).plus);
  }
  cache.emplace_back(n, std::move(d));
  return cache.back().second;
}

template <bool Parallel>
void BM_Apply(benchmark::State& state) {
  const Data& d = data(static_cast<std::size_t>(state.range(0)));
  std::vector<Spinor> out(d.states.size());
  for (auto _ : state) {
    if constexpr (Parallel) batch::apply_operators(d.ops, d.states, out);
    else batch::serial::apply_operators(d.ops, d.states, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Audit(benchmark::State& state) {
  const Data& d = data(static_cast<std::size_t>(state.range(0)));
  std::vector<AuditReport> out(d.ops.size());
  for (auto _ : state) {
    if constexpr (Parallel) batch::audit_all(d.ops, {}, out);
    else batch::serial::audit_all(d.ops, {}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_ConventionDeviation(benchmark::State& state) {
  const Data& d = data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const double dev = Parallel ? batch::convention_deviation(d.samples, Convention::PaperRight)
                                : batch::serial::convention_deviation(d.samples, Convention::PaperRight);
    benchmark::DoNotOptimize(dev);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Apply<false>)->Name("apply/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_Apply<true>)->Name("apply/openmp")->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->UseRealTime();
BENCHMARK(BM_Audit<false>)->Name("audit/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_Audit<true>)->Name("audit/openmp")->RangeMultiplier(8)->Range(1 << 10, 1 << 16)->UseRealTime();
BENCHMARK(BM_ConventionDeviation<false>)->Name("convention_deviation/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_ConventionDeviation<true>)
    ->Name("convention_deviation/openmp")
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 16)
    ->UseRealTime();

BENCHMARK_MAIN();
