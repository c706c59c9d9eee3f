#include <benchmark/benchmark.h>

#include "twsa/constructions.hpp"
#include "twsa/explore.hpp"
#include "twsa/io.hpp"
#include "twsa/oracles.hpp"

using namespace twsa;

namespace {

void BM_ExpoRun(benchmark::State& state) {
  const Machine m = constructions::buildExpo();
  const Word w = repeat(0, std::size_t{1} << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(m, w).verdict);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size() + 1));
}
BENCHMARK(BM_ExpoRun)->DenseRange(10, 18, 4);

void BM_FibRun(benchmark::State& state) {
  const Machine m = constructions::buildFib();
  const Word w = repeat(0, 2 * 10946);  // 2 f_21
  for (auto _ : state) benchmark::DoNotOptimize(run(m, w).verdict);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size() + 1));
}
BENCHMARK(BM_FibRun);

void BM_MiHatRun(benchmark::State& state) {
  const Machine m = constructions::buildMiHat();
  Word w = io::parseWord(m.inputAlphabet(), "a b $ cent");
  const Word v = io::parseWord(m.inputAlphabet(), "abba");
  for (int i = 0; i < state.range(0); ++i) w.insert(w.end(), v.begin(), v.end());
  w.push_back(m.inputAlphabet().at("$"));
  const std::size_t n = w.size();
  for (std::size_t i = n - 1; i-- > 4;) w.push_back(w[i]);
  w.push_back(m.inputAlphabet().at("b2"));
  if (!accepts(m, w)) state.SkipWithError("benchmark word is not in the language");
  for (auto _ : state) benchmark::DoNotOptimize(run(m, w).verdict);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size() + 1));
}
BENCHMARK(BM_MiHatRun)->Arg(256)->Arg(4096);

void BM_TraceExpo(benchmark::State& state) {
  const Machine m = constructions::buildExpo();
  const Word w = repeat(0, 4096);
  RunOptions opts;
  opts.traced = true;
  for (auto _ : state) benchmark::DoNotOptimize(run(m, w, opts).trace.size());
}
BENCHMARK(BM_TraceExpo);

void BM_CrossCheckTrie(benchmark::State& state) {
  const Machine m = constructions::buildTrieP();
  const auto oracle = oracles::lp();
  for (auto _ : state) benchmark::DoNotOptimize(crossCheck(m, oracle, state.range(0)).wordsChecked);
}
BENCHMARK(BM_CrossCheckTrie)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
