#include "gralg/asympt.hpp"
#include "gralg/catalog.hpp"
#include "gralg/cochar.hpp"
#include "gralg/codim.hpp"
#include "gralg/structure.hpp"

#include <benchmark/benchmark.h>

using namespace gralg;

static void BM_GradedCodimModular(benchmark::State& state)
{
  const auto a = catalog_algebra("thm_T1_fractional");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(graded_codim(a, n));
}
BENCHMARK(BM_GradedCodimModular)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_GradedCodimExact(benchmark::State& state)
{
  const auto a = catalog_algebra("thm_T1_fractional");
  CodimOptions o;
  o.mode = RankMode::exact_rational;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(graded_codim(a, n, o));
}
BENCHMARK(BM_GradedCodimExact)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_WitnessShortcut(benchmark::State& state)
{
  const auto a = catalog_algebra("thm_T1_fractional");
  const auto lambda = parse_partition(state.range(0) == 0 ? "2,1,1,1,1,1" : "2^6,1");
  for (auto _ : state)
    benchmark::DoNotOptimize(multiplicity_nonzero_certificate(a, WitnessVariant::T1, lambda));
}
BENCHMARK(BM_WitnessShortcut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_WitnessFullSymmetrizer(benchmark::State& state)
{
  const auto a = catalog_algebra("thm_T3_fractional");
  const auto w = build_witness(WitnessVariant::T3, Partition({2, 1, 1, 1, 1}));
  const auto tau = resolve_tau(a, w);
  SymmetrizerOptions o;
  o.allow_shortcut = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_symmetrizer(a, w.tableau, w.f, tau, o));
}
BENCHMARK(BM_WitnessFullSymmetrizer)->Unit(benchmark::kMillisecond);

static void BM_MaximizePhi(benchmark::State& state)
{
  const auto p = lemma_polytope(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(maximize_phi(p));
}
BENCHMARK(BM_MaximizePhi)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_JacobsonRadical(benchmark::State& state)
{
  const auto a = catalog_algebra("exampleT1(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobson_radical(a));
}
BENCHMARK(BM_JacobsonRadical)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MultiplicityExact(benchmark::State& state)
{
  const auto a = catalog_algebra("thm_T3_fractional");
  const Partition lambda({2, 1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(multiplicity_exact(a, lambda));
}
BENCHMARK(BM_MultiplicityExact)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
