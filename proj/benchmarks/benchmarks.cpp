// Microbenchmarks for the enumeration and analysis hot paths. Rates are
// reported as items/s where an item is one rotation system (enumeration) or
// one polynomial (analysis).

#include <benchmark/benchmark.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "genus/analysis.hpp"
#include "genus/embedding.hpp"
#include "genus/graph.hpp"
#include "genus/graph6.hpp"
#include "genus/polynomial.hpp"
#include "genus/roots.hpp"
#include "genus/rotation.hpp"
#include "genus/survey.hpp"

namespace {

using namespace genus;

void BM_ParseGraph6(benchmark::State& state) {
  const std::string petersen = "IsP@PGXD_";
  for (auto _ : state) {
    Graph g = parse_graph6(petersen);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_ParseGraph6);

void BM_WriteGraph6(benchmark::State& state) {
  Graph g = generalized_petersen(8, 2);
  for (auto _ : state) {
    std::string line = write_graph6(g);
    benchmark::DoNotOptimize(line);
  }
}
BENCHMARK(BM_WriteGraph6);

void BM_DecodeRotation(benchmark::State& state) {
  Graph g = generalized_petersen(8, 2);
  std::uint64_t idx = 0;
  for (auto _ : state) {
    RotationSystem rot = decode_rotation(g, idx);
    benchmark::DoNotOptimize(rot);
    idx = (idx + 7919) & 0xFFFF;
  }
}
BENCHMARK(BM_DecodeRotation);

void BM_TraceFaces(benchmark::State& state) {
  Graph g = generalized_petersen(8, 2);
  RotationSystem rot = decode_rotation(g, 12345);
  for (auto _ : state) {
    FaceCollection fc = trace_faces(g, rot);
    benchmark::DoNotOptimize(fc);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TraceFaces);

// Full exhaustive distribution of the order-16 featured graph: 2^16 rotation
// systems per iteration, single worker.
void BM_Distribution_GP82(benchmark::State& state) {
  Graph g = generalized_petersen(8, 2);
  EnumerationOptions eo;
  eo.workers = 1;
  for (auto _ : state) {
    GenusDistribution d = genus_distribution(g, eo);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << 16));
}
BENCHMARK(BM_Distribution_GP82)->Unit(benchmark::kMillisecond);

void BM_Distribution_Petersen(benchmark::State& state) {
  Graph g = generalized_petersen(5, 2);
  EnumerationOptions eo;
  eo.workers = 1;
  for (auto _ : state) {
    GenusDistribution d = genus_distribution(g, eo);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_Distribution_Petersen);

// Non-cubic path: K5 has 6^5 = 7776 rotation systems and degree-4 vertices,
// so it exercises the general mixed-radix enumerator.
void BM_Distribution_K5(benchmark::State& state) {
  Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                  {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EnumerationOptions eo;
  eo.workers = 1;
  for (auto _ : state) {
    GenusDistribution d = genus_distribution(g, eo);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * 7776);
}
BENCHMARK(BM_Distribution_K5);

void BM_FindRoots_Degree6(benchmark::State& state) {
  Polynomial p = Polynomial::from_ints({2, 120, 3508, 75088, 1144338, 7244496, 8309664});
  for (auto _ : state) {
    std::vector<ComplexRoot> roots = find_roots(p);
    benchmark::DoNotOptimize(roots);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FindRoots_Degree6);

void BM_SturmRealRooted(benchmark::State& state) {
  Polynomial p = Polynomial::from_ints({2, 84, 2074, 23536, 39840});
  for (auto _ : state) {
    bool rr = is_real_rooted(p);
    benchmark::DoNotOptimize(rr);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SturmRealRooted);

void BM_Analyze_Degree6(benchmark::State& state) {
  Polynomial p = Polynomial::from_ints({2, 114, 3550, 76726, 851384, 2570304, 692224});
  for (auto _ : state) {
    AnalysisReport rep = analyze(p);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Analyze_Degree6);

// End-to-end survey throughput: enumeration, analysis and summary accounting
// per catalog line. The catalog is built from the generator so the benchmark
// has no file dependency (Petersen plus the prisms GP(3,1)..GP(6,1)).
void BM_SurveySmallCatalog(benchmark::State& state) {
  std::string catalog = write_graph6(generalized_petersen(5, 2)) + "\n";
  for (int n = 3; n <= 6; ++n) {
    catalog += write_graph6(generalized_petersen(n, 1)) + "\n";
  }
  SurveyOptions so;
  so.workers = 1;
  for (auto _ : state) {
    std::istringstream in(catalog);
    SurveySummary s = run_survey(in, [](const SurveyRecord&, std::uint64_t) {}, so);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SurveySmallCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
