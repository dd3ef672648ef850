// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "altcox/catalog.hpp"
#include "altcox/kernels.hpp"
#include "altcox/presentations.hpp"
#include "altcox/tc.hpp"

using namespace altcox;

namespace {

const EnumerationResult& table() {
  static const EnumerationResult r = enumerate(chain_presentation(Family::A, Variant::Edge, 7), {});
  return r;
}

std::vector<Word> random_words(std::size_t count, int length) {
  std::mt19937 rng(1);
  const std::uint32_t rank = static_cast<std::uint32_t>(table().presentation.rank());
  std::vector<Word> words(count);
  for (Word& w : words)
    for (int k = 0; k < length; ++k) w.push_back(Letter({static_cast<std::uint32_t>(rng() % rank)}, rng() % 2 != 0));
  return words;
}

void BM_TraceSerial(benchmark::State& state) {
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trace_words_serial(table().table, words));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TraceParallel(benchmark::State& state) {
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trace_words_parallel(table().table, words));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RelatorsSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::relators_close_serial(table().table, table().presentation.relators()));
}

void BM_RelatorsParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::relators_close_parallel(table().table, table().presentation.relators()));
}

void BM_Catalog(benchmark::State& state) {
  CatalogOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_catalog(o));
}

}  // namespace

BENCHMARK(BM_TraceSerial)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_TraceParallel)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_RelatorsSerial);
BENCHMARK(BM_RelatorsParallel);
BENCHMARK(BM_Catalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
