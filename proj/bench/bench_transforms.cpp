// Serial direct sums against the OpenMP sweep kernels.
//   ./bench_transforms --benchmark_counters_tabular=true
// Thread count follows OMP_NUM_THREADS; the "threads" counter records it.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "woct/reference.hpp"
#include "woct/transforms.hpp"

namespace {

using namespace woct;

const LctParams3 kParams{LctParams{0.5, 1.0, -0.75, 0.5}, LctParams::fourier(), LctParams{0.0, 2.0, -0.5, 0.0}};

SampledField3D random_field(const Grid3D& g) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  SampledField3D f(g);
  for (auto& v : f.values)
    for (std::size_t i = 0; i < 8; ++i) v[i] = n(rng);
  return f;
}

void annotate(benchmark::State& state, std::size_t points) {
  state.counters["threads"] = omp_get_max_threads();
  state.counters["points/s"] =
      benchmark::Counter(static_cast<double>(points) * state.iterations(), benchmark::Counter::kIsRate);
}

template <auto Fn>
void BM_Oclct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid3D g = Grid3D::symmetric(n, 12.0 / static_cast<double>(n));
  const SampledField3D f = random_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, kParams, g));
  annotate(state, g.size());
}

template <auto Fn>
void BM_Oft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid3D g = Grid3D::symmetric(n, 12.0 / static_cast<double>(n));
  const SampledField3D f = random_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, g));
  annotate(state, g.size());
}

// Even n: the window on n + 1 points keeps every mu on the signal grid an integer shift.
template <auto Fn>
void BM_Woclct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double h = 8.0 / static_cast<double>(n);
  const Grid3D g = Grid3D::symmetric(n, h);
  const SampledField3D f = random_field(g);
  const WindowSpec w(random_field(Grid3D::symmetric(n + 1, h)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, w, kParams, g, g));
  annotate(state, g.size() * g.size());
}

SampledField3D sweep_oclct(const SampledField3D& f, const LctParams3& p, const Grid3D& g) {
  return oclct_forward(f, p, g);
}
SampledField3D direct_oclct(const SampledField3D& f, const LctParams3& p, const Grid3D& g) {
  return reference::oclct_forward(f, p, g);
}
SampledField3D sweep_oft(const SampledField3D& f, const Grid3D& g) { return oft_forward(f, g); }
SampledField3D direct_oft(const SampledField3D& f, const Grid3D& g) { return reference::oft_forward(f, g); }
WoclctResult sweep_woclct(const SampledField3D& f, const WindowSpec& w, const LctParams3& p, const Grid3D& o,
                          const Grid3D& m) {
  return woclct_forward(f, w, p, o, m);
}
WoclctResult direct_woclct(const SampledField3D& f, const WindowSpec& w, const LctParams3& p, const Grid3D& o,
                           const Grid3D& m) {
  return reference::woclct_forward(f, w, p, o, m);
}

}  // namespace

BENCHMARK(BM_Oclct<direct_oclct>)->Name("oclct/serial")->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oclct<sweep_oclct>)->Name("oclct/omp")->Arg(6)->Arg(8)->Arg(12)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oft<direct_oft>)->Name("oft/serial")->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oft<sweep_oft>)->Name("oft/omp")->Arg(6)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Woclct<direct_woclct>)->Name("woclct/serial")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Woclct<sweep_woclct>)->Name("woclct/omp")->Arg(4)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
