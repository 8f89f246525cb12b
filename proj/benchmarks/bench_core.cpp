#include <benchmark/benchmark.h>

#include <cmath>

#include "orlicz/bessel.hpp"
#include "orlicz/field_ops.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/lpatoms.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/sobolev.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

Field gaussian(const Grid& g) {
  Field u(g);
  if (g.n == 1) {
    for (int j = 0; j < g.N; ++j) {
      const double x = g.coord(j);
      u.v[j] = std::exp(-x * x);
    }
  } else {
    for (int j0 = 0; j0 < g.N; ++j0) {
      for (int j1 = 0; j1 < g.N; ++j1) {
        const double r2 = g.coord(j0) * g.coord(j0) + g.coord(j1) * g.coord(j1);
        u.v[u.flat(j0, j1)] = std::exp(-r2);
      }
    }
  }
  return u;
}

void BM_SpectralMultiply1D(benchmark::State& state) {
  const Grid g = Grid::make(1, static_cast<int>(state.range(0)), 16.0);
  const Field u = gaussian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential(0.5, u));
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_SpectralMultiply1D)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_SpectralMultiply2D(benchmark::State& state) {
  const Grid g = Grid::make(2, static_cast<int>(state.range(0)), 16.0);
  const Field u = gaussian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential(0.5, u));
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_SpectralMultiply2D)->Arg(128)->Arg(256)->Arg(512);

void BM_Convolve1D(benchmark::State& state) {
  const Grid g = Grid::make(1, static_cast<int>(state.range(0)), 16.0);
  const Field u = gaussian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(u, u));
  }
}
BENCHMARK(BM_Convolve1D)->Arg(4096)->Arg(16384);

void BM_SynthesizeKernel(benchmark::State& state) {
  const Grid g = Grid::make(1, static_cast<int>(state.range(0)), 16.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_kernel(0.5, g));
  }
}
BENCHMARK(BM_SynthesizeKernel)->Arg(4096)->Arg(16384);

void BM_LuxemburgNorm(benchmark::State& state) {
  const Grid g = Grid::make(1, static_cast<int>(state.range(0)), 16.0);
  const Field u = gaussian(g);
  const auto A = YoungFunction::zygmund(2.0, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(luxemburg_norm(A, u));
  }
}
BENCHMARK(BM_LuxemburgNorm)->Arg(4096)->Arg(65536);

void BM_GagliardoModular(benchmark::State& state) {
  const Grid g = Grid::make(1, static_cast<int>(state.range(0)), 16.0);
  const Field u = gaussian(g);
  const auto A = YoungFunction::power(2.0);
  const GagliardoQuadrature q = GagliardoQuadrature::standard(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gagliardo_modular(A, 0.5, u, q));
  }
}
BENCHMARK(BM_GagliardoModular)->Arg(1024)->Arg(4096);

void BM_MaximalFunction(benchmark::State& state) {
  const Grid g = Grid::make(1, static_cast<int>(state.range(0)), 16.0);
  const Field u = gaussian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_function(u));
  }
}
BENCHMARK(BM_MaximalFunction)->Arg(4096)->Arg(16384);

void BM_ConjugateBuild(benchmark::State& state) {
  const auto A = YoungFunction::zygmund(2.0, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(A.conjugate());
  }
}
BENCHMARK(BM_ConjugateBuild);

void BM_AtomicDecompose(benchmark::State& state) {
  const Grid g = Grid::make(1, 2048, 16.0);
  const FilterBank bank = build_filter_bank(5, g);
  const Field u = gaussian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(atomic_decompose(u, 0.5, 2, bank, 5));
  }
}
BENCHMARK(BM_AtomicDecompose);

}  // namespace

BENCHMARK_MAIN();
