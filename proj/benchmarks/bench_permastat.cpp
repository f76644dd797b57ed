#include <benchmark/benchmark.h>

#include <vector>

#include "permastat/hyperdet.hpp"
#include "permastat/matrix.hpp"
#include "permastat/moments.hpp"
#include "permastat/oracle.hpp"
#include "permastat/partition.hpp"
#include "permastat/symfunc.hpp"

using namespace permastat;

namespace {

RatMatrix hilbert(long n) {
  RatMatrix h(static_cast<size_t>(n), std::vector<ExactRational>(static_cast<size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      h[static_cast<size_t>(i)][static_cast<size_t>(j)] = ExactRational(1, i + j + 1);
  return h;
}

// Steady-state cost of one exact moment query; the shared expansion tables
// are warmed on the first iteration, which matches repeated-query usage.
void BM_moment_schur(benchmark::State& state) {
  MomentQuery q;
  q.lambda = Partition{2, 1};
  q.n = state.range(0);
  q.route = Route::SchurKadell;
  for (auto _ : state) benchmark::DoNotOptimize(moment(q));
}
BENCHMARK(BM_moment_schur)->RangeMultiplier(4)->Range(4, 256);

void BM_moment_jack(benchmark::State& state) {
  MomentQuery q;
  q.lambda = Partition{2, 1};
  q.beta = 4;
  q.n = state.range(0);
  q.route = Route::JackKadell;
  for (auto _ : state) benchmark::DoNotOptimize(moment(q));
}
BENCHMARK(BM_moment_jack)->RangeMultiplier(4)->Range(4, 64);

void BM_moment_hyperdet(benchmark::State& state) {
  MomentQuery q;
  q.lambda = Partition{2, 1};
  q.n = state.range(0);
  q.route = Route::HyperdetCauchy;
  for (auto _ : state) benchmark::DoNotOptimize(moment(q));
}
BENCHMARK(BM_moment_hyperdet)->DenseRange(2, 8, 2);

void BM_moment_sweep(benchmark::State& state) {
  std::vector<ExactRational> alphas;
  for (long i = 0; i < state.range(0); ++i) alphas.emplace_back(2 * i + 1, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(moment_sweep(Partition{2, 1}, 2, 8, alphas));
}
BENCHMARK(BM_moment_sweep)->Arg(8)->Arg(32);

void BM_det_exact(benchmark::State& state) {
  const RatMatrix h = hilbert(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(h));
}
BENCHMARK(BM_det_exact)->RangeMultiplier(2)->Range(4, 32);

void BM_permanent(benchmark::State& state) {
  const RatMatrix h = hilbert(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(h));
}
BENCHMARK(BM_permanent)->DenseRange(4, 10, 2);

// A fresh xi each iteration defeats the per-(degree, xi) table memo, so this
// times the Gram-Schmidt build itself; lambda = [d] pulls in every partition
// of d.
void BM_jack_gram_schmidt(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  long tick = 0;
  for (auto _ : state) {
    const ExactRational xi(2 * ++tick + 1, 2);
    benchmark::DoNotOptimize(jack_P_monomials(Partition{d}, xi));
  }
}
BENCHMARK(BM_jack_gram_schmidt)->DenseRange(4, 8, 2);

void BM_mc_estimate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_estimate(Partition{2}, 1, 2, 4, 100000, 42));
}
BENCHMARK(BM_mc_estimate);

} // namespace

BENCHMARK_MAIN();
