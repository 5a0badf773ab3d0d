#include <benchmark/benchmark.h>

#include "qfe/krstic.hpp"
#include "qfe/solver.hpp"

namespace {

void BM_ParseCatalogEntry(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qfe::catalog(qfe::EquationId{4, 1, ""}));
}
BENCHMARK(BM_ParseCatalogEntry);

void BM_BuildGraphAndClassify(benchmark::State& state) {
  auto e = qfe::catalog(qfe::EquationId{5, 10, ""});
  for (auto _ : state) {
    auto g = qfe::build_graph(e);
    benchmark::DoNotOptimize(qfe::classify_shape(g));
  }
}
BENCHMARK(BM_BuildGraphAndClassify);

void BM_VerifyOrder5(benchmark::State& state) {
  auto z5 = qfe::make_group("Z5");
  auto e = qfe::catalog(qfe::EquationId{4, 1, ""});
  qfe::Interpretation i{5, {{"f1", z5.table}, {"f2", z5.table}}};
  for (auto _ : state) benchmark::DoNotOptimize(qfe::verify_equation(i, e));
}
BENCHMARK(BM_VerifyOrder5);

void BM_SynthesizeZ5(benchmark::State& state) {
  auto z5 = qfe::make_group("Z5");
  for (auto _ : state)
    benchmark::DoNotOptimize(qfe::synthesize(qfe::EquationId{4, 1, ""}, z5));
}
BENCHMARK(BM_SynthesizeZ5);

void BM_ExhaustiveSearchOrder3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qfe::exhaustive_search(qfe::EquationId{4, 1, ""}, 3));
}
BENCHMARK(BM_ExhaustiveSearchOrder3);

void BM_AutomorphismsS3(benchmark::State& state) {
  auto s3 = qfe::make_group("S3");
  for (auto _ : state) benchmark::DoNotOptimize(qfe::automorphisms(s3));
}
BENCHMARK(BM_AutomorphismsS3);

void BM_GeminiRefute(benchmark::State& state) {
  auto e = qfe::catalog(qfe::EquationId{5, 1, ""});
  for (auto _ : state) benchmark::DoNotOptimize(qfe::gemini_refute(e));
}
BENCHMARK(BM_GeminiRefute);

}  // namespace

BENCHMARK_MAIN();
