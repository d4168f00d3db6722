#include <benchmark/benchmark.h>

#include <random>

#include "rl2lz/converter.hpp"
#include "rl2lz/succinct.hpp"
#include "rl2lz/textkit.hpp"

namespace {

using namespace rl2lz;

std::vector<Index> random_set(std::size_t m, Index universe) {
  std::mt19937_64 rng(7);
  std::vector<Index> out(m);
  for (auto& v : out) v = 1 + rng() % universe;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename P>
void BM_Pred(benchmark::State& state) {
  const Index universe = Index{1} << 32;
  const P set(random_set(static_cast<std::size_t>(state.range(0)), universe));
  std::mt19937_64 rng(8);
  Index acc = 0;
  for (auto _ : state) {
    acc += set.pred(rng() % universe);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK_TEMPLATE(BM_Pred, SortedPredecessor)->Range(1 << 6, 1 << 20);
BENCHMARK_TEMPLATE(BM_Pred, BucketPredecessor)->Range(1 << 6, 1 << 20);

void BM_SparseTableMax(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::mt19937_64 rng(9);
  std::vector<Index> values(n);
  for (auto& v : values) v = rng();
  const SparseTableMax table(values);
  Index acc = 0;
  for (auto _ : state) {
    const Index i = 1 + rng() % n;
    const Index j = i + rng() % (n - i + 1);
    acc += *table.max(i, j);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_SparseTableMax)->Range(1 << 6, 1 << 20);

void BM_Convert(benchmark::State& state, textkit::Generator g) {
  const auto bytes = textkit::generate_corpus(g, static_cast<std::size_t>(state.range(0)), 1, 4);
  const auto rlbwt = textkit::build_rlbwt(textkit::text_from_bytes(bytes));
  for (auto _ : state) {
    auto parse = convert(rlbwt);
    benchmark::DoNotOptimize(parse.phrases.data());
  }
  state.counters["r"] = static_cast<double>(rlbwt.r());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Convert, fibonacci, textkit::Generator::fibonacci)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Convert, repeat, textkit::Generator::repeat)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Convert, random, textkit::Generator::random)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
