#include <benchmark/benchmark.h>

#include "pmqkit/aq_ring.hpp"
#include "pmqkit/builtins.hpp"
#include "pmqkit/completion.hpp"
#include "pmqkit/enveloping.hpp"
#include "pmqkit/hurwitz.hpp"
#include "pmqkit/sullivan.hpp"

using namespace pmqkit;

static void BM_CompletionClassesTrivialS3(benchmark::State& state) {
  SymmetricGroup s3 = make_symmetric_group(3);
  FinitePMQ q = trivial_pmq(s3.group, s3.transpositions());
  const int norm = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(completion_classes(q, norm));
}
BENCHMARK(BM_CompletionClassesTrivialS3)->DenseRange(4, 8);

static void BM_CompletionClassesGeodesicS4(benchmark::State& state) {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ q = geodesic_pmq(s4);
  const int norm = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(completion_classes(q, norm));
}
BENCHMARK(BM_CompletionClassesGeodesicS4)->DenseRange(2, 4);

static void BM_HurwitzOrbitsS4(benchmark::State& state) {
  SymmetricGroup s4 = make_symmetric_group(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_orbits(s4.group, s4.transpositions(), n));
}
BENCHMARK(BM_HurwitzOrbitsS4)->DenseRange(2, 6);

static void BM_StructureConstantsGeodesicS4(benchmark::State& state) {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ q = geodesic_pmq(s4);
  for (auto _ : state)
    benchmark::DoNotOptimize(aq_structure_constants(q));
}
BENCHMARK(BM_StructureConstantsGeodesicS4);

static void BM_EnvelopingAbelianizationS4(benchmark::State& state) {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ q = geodesic_pmq(s4);
  for (auto _ : state)
    benchmark::DoNotOptimize(enveloping_abelianization(q));
}
BENCHMARK(BM_EnvelopingAbelianizationS4);

static void BM_InnerAutomorphismsCompleteS4(benchmark::State& state) {
  SymmetricGroup s4 = make_symmetric_group(4);
  FinitePMQ q = complete_pmq(s4.group);
  for (auto _ : state)
    benchmark::DoNotOptimize(inner_automorphism_group(q));
}
BENCHMARK(BM_InnerAutomorphismsCompleteS4);

static void BM_ModelCohomology(benchmark::State& state) {
  SullivanModel model;
  model.classes.assign(state.range(0), {0});
  for (auto _ : state)
    benchmark::DoNotOptimize(model_cohomology(model, 12));
}
BENCHMARK(BM_ModelCohomology)->DenseRange(1, 4);

BENCHMARK_MAIN();
