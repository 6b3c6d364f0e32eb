#include <benchmark/benchmark.h>

#include "voalab/named.hpp"
#include "voalab/sectors.hpp"
#include "voalab/structure.hpp"
#include "voalab/twisted.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

namespace {
const State& nv(const char* n) { return named_vector(n); }
}  // namespace

static void BM_ScalarInverse(benchmark::State& state) {
  const Scalar x = Scalar(3) + Scalar::sqrt6() - Scalar(Scalar::kSqrt2I, frac(5, 7)) + Scalar::zeta3();
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_ScalarInverse);

static void BM_ModeApplyWeight4(benchmark::State& state) {
  const State& J = nv("J");
  const State& E = nv("E");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mode_apply(J, n, E));
}
BENCHMARK(BM_ModeApplyWeight4)->Arg(3)->Arg(0)->Arg(-3);

static void BM_ModeApplyWeight9(benchmark::State& state) {
  const State& u = nv("u9");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mode_apply(u, n, u));
  state.SetLabel("u9_n u9");
}
BENCHMARK(BM_ModeApplyWeight9)->Arg(1)->Arg(-3)->Arg(-5)->Unit(benchmark::kMillisecond);

static void BM_Virasoro(benchmark::State& state) {
  const State v = mode_apply(nv("u9"), -3, nv("u9"));
  for (auto _ : state) benchmark::DoNotOptimize(virasoro(-1, v));
}
BENCHMARK(BM_Virasoro)->Unit(benchmark::kMillisecond);

static void BM_Pair(benchmark::State& state) {
  const State v = mode_apply(nv("u9"), -3, nv("u9"));
  for (auto _ : state) benchmark::DoNotOptimize(pair(v, v));
}
BENCHMARK(BM_Pair)->Unit(benchmark::kMillisecond);

static void BM_Sigma(benchmark::State& state) {
  const State& u = nv("u9");
  for (auto _ : state) benchmark::DoNotOptimize(sigma(u));
}
BENCHMARK(BM_Sigma);

static void BM_ZeroModeExp(benchmark::State& state) {
  const State& u = nv("u9");
  const State& h = nv("hprime");
  for (auto _ : state) benchmark::DoNotOptimize(zero_mode_exp(h, u));
}
BENCHMARK(BM_ZeroModeExp)->Unit(benchmark::kMillisecond);

static void BM_ApplyWords(benchmark::State& state) {
  const auto words = vacuum_words(static_cast<int>(state.range(0)), WordBase::Vacuum);
  for (auto _ : state) benchmark::DoNotOptimize(apply_words(words));
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_ApplyWords)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_BuildU16(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_u16());
}
BENCHMARK(BM_BuildU16)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_DecomposeWeight20(benchmark::State& state) {
  const State t = mode_apply(nv("u9"), -3, nv("u9"));
  auto words = vacuum_words(20, WordBase::Vacuum);
  const auto w16 = vacuum_words(20, WordBase::U16);
  words.insert(words.end(), w16.begin(), w16.end());
  nv("u16");
  for (auto _ : state) benchmark::DoNotOptimize(decompose_over(t, words));
  state.counters["columns"] = static_cast<double>(words.size());
}
BENCHMARK(BM_DecomposeWeight20)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_SigmaEigenDims(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_eigen_dims(w));
}
BENCHMARK(BM_SigmaEigenDims)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_GradedDim(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graded_dim("fixed", static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GradedDim)->Arg(24)->Arg(36);

BENCHMARK_MAIN();
