// Serial reference against the OpenMP kernels, on candidate enumeration and
// on a corpus sweep. Thread count comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "axcat/enumerate.hpp"
#include "axcat/generators.hpp"
#include "axcat/parallel.hpp"

namespace {

using namespace axcat;

// 2! * 2! coherence orders, 3^4 rf choices: 324 candidates.
const LitmusTest& wide_test() {
  static const LitmusTest t = parse_litmus(R"(test W2;
P0: { x <- 1; y <- 1; }
P1: { y <- 2; x <- 2; }
P2: { r0 <- x; r1 <- y; }
P3: { r2 <- y; r3 <- x; })");
  return t;
}

const std::vector<Execution>& corpus() {
  static const std::vector<Execution> c = [] {
    GenConfig cfg;
    cfg.seed = 99;
    cfg.max_events = 8;
    cfg.max_procs = 3;
    return random_corpus(cfg, 20000);
  }();
  return c;
}

void BM_AllowedOutcomes(benchmark::State& state) {
  EnumerationOptions opts;
  opts.schedule = static_cast<Schedule>(state.range(0));
  const auto axioms = AxiomSet::framework(sc_architecture());
  for (auto _ : state) {
    auto r = allowed_outcomes(wide_test(), axioms, opts);
    benchmark::DoNotOptimize(r.summary);
  }
  state.SetLabel(opts.schedule == Schedule::kSerial ? "serial" : "parallel");
}

void BM_CorpusEquivalence(benchmark::State& state) {
  const auto schedule = static_cast<Schedule>(state.range(0));
  const std::span<const Execution> items(corpus());
  for (auto _ : state) {
    auto n = count_failures(
        items,
        [](const Execution& e) {
          const auto d = derive(e);
          return sc_per_location_1(e, d).holds == sc_per_location_2(e, d).holds;
        },
        schedule);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
  state.SetLabel(schedule == Schedule::kSerial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_AllowedOutcomes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusEquivalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
