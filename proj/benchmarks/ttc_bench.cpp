#include <benchmark/benchmark.h>

#include <random>

#include "ttc/generators.hpp"
#include "ttc/interval_tree.hpp"
#include "ttc/timed_transitive_closure.hpp"

namespace {

using namespace ttc;

TimedTransitiveClosure build(std::size_t n, const std::vector<Contact>& contacts) {
  TimedTransitiveClosure closure({n, 1});
  for (const Contact& c : contacts) closure.add_contact(c);
  return closure;
}

// Full build of a complete temporal graph; args are n and tau.
void BM_BuildComplete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tau = static_cast<Timestamp>(state.range(1));
  const auto contacts = bench::gen_complete(n, tau, 1);
  for (auto _ : state) {
    auto closure = build(n, contacts);
    benchmark::DoNotOptimize(closure.entry_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(contacts.size()));
}
BENCHMARK(BM_BuildComplete)->Args({8, 32})->Args({8, 128})->Args({16, 32})->Args({32, 16});

void BM_BuildRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto contacts = bench::gen_random(n, 256, 0.05, 7);
  for (auto _ : state) {
    auto closure = build(n, contacts);
    benchmark::DoNotOptimize(closure.entry_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(contacts.size()));
}
BENCHMARK(BM_BuildRandom)->Arg(8)->Arg(16)->Arg(32);

void BM_CanReach(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Timestamp tau = 64;
  const auto closure = build(n, bench::gen_complete(n, tau, 1));
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto u = static_cast<VertexId>(rng() % n);
    const auto v = static_cast<VertexId>(rng() % n);
    const Timestamp t1 = rng() % tau;
    benchmark::DoNotOptimize(closure.can_reach(u, v, t1, t1 + rng() % 8));
  }
}
BENCHMARK(BM_CanReach)->Arg(8)->Arg(32);

void BM_Reconstruct(benchmark::State& state) {
  const std::size_t n = 16;
  const auto closure = build(n, bench::gen_random(n, 512, 0.02, 11));
  std::mt19937_64 rng(5);
  for (auto _ : state) {
    const auto u = static_cast<VertexId>(rng() % n);
    const auto v = static_cast<VertexId>((u + 1 + rng() % (n - 1)) % n);
    benchmark::DoNotOptimize(closure.reconstruct_journey(u, v));
  }
}
BENCHMARK(BM_Reconstruct);

// Each point insert evicts the run of longer intervals covering it.
void BM_InsertMinimalSweep(benchmark::State& state) {
  const auto width = static_cast<Timestamp>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    IntervalTree tree;
    for (Timestamp s = 0; s < 4096; ++s) tree.insert_minimal({s, s + width}, 0);
    state.ResumeTiming();
    for (Timestamp s = width; s < 4096; s += width) tree.insert_minimal({s, s}, 1);
    benchmark::DoNotOptimize(tree.size());
  }
}
BENCHMARK(BM_InsertMinimalSweep)->Arg(4)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
