// Serial reference kernels against their OpenMP counterparts.
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "twomode/chaos.hpp"
#include "twomode/exact.hpp"
#include "twomode/kernels.hpp"

namespace {

using namespace twomode;

ModelParams kicked(int N) {
  ModelParams p;
  p.N = N;
  p.c = 0.8 * std::numbers::pi;
  p.drive = DriveProtocol::kicked(0.4 * std::numbers::pi);
  return p;
}

void spectral(benchmark::State& st, Execution exec) {
  const ModelParams p = kicked(static_cast<int>(st.range(0)));
  const Propagator prop = make_propagator(p, p.drive.pulse_amplitude());
  const DickeState psi = coherent_state(p.N, std::numbers::pi / 2, 0.0);
  DickeState out(p.N);
  for (auto _ : st) {
    kernels::spectral_apply(exec, prop.eigenvectors, prop.eigenvalues, 0.01, psi.amp, out.amp);
    benchmark::DoNotOptimize(out.amp.data());
  }
}

void lyap_grid(benchmark::State& st, Execution exec) {
  const auto n = static_cast<std::size_t>(st.range(0));
  std::vector<double> A(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    A[i] = std::numbers::pi * (i + 1) / n;
    c[i] = 2 * std::numbers::pi * (i + 1) / n;
  }
  for (auto _ : st) {
    const LyapunovMap map = lyapunov_map(A, c, BlochVector{}, 20, 1e-5, 1.0, 0.01, exec);
    benchmark::DoNotOptimize(map.lambda.data());
  }
}

void BM_SpectralSerial(benchmark::State& st) { spectral(st, Execution::serial); }
void BM_SpectralParallel(benchmark::State& st) { spectral(st, Execution::parallel); }
void BM_LyapunovMapSerial(benchmark::State& st) { lyap_grid(st, Execution::serial); }
void BM_LyapunovMapParallel(benchmark::State& st) { lyap_grid(st, Execution::parallel); }

}  // namespace

BENCHMARK(BM_SpectralSerial)->Arg(200)->Arg(400)->Arg(1600);
BENCHMARK(BM_SpectralParallel)->Arg(200)->Arg(400)->Arg(1600);
BENCHMARK(BM_LyapunovMapSerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LyapunovMapParallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
