// Serial reference vs OpenMP search, plus the single-block kernels they are built on.

#include <benchmark/benchmark.h>

#include "stepsha/corpus.hpp"
#include "stepsha/search.hpp"

using namespace stepsha;

namespace {

SearchConfig prefix_config(std::uint64_t budget, int workers) {
    const VectorCorpus& c = builtin_corpus();
    return SearchConfig{SearchStrategy{RandomPrefix{c.sha256_pair}, c.sha256_path, false}, budget, 1, workers};
}

void BM_Compress(benchmark::State& state) {
    const CollisionPair& pair =
        state.range(0) == 256 ? builtin_corpus().sha256_pair : builtin_corpus().sha512_pair;
    const Sha2Params& p = params_for(pair.variant);
    const RegisterState iv = standard_iv(p);
    for (auto _ : state) benchmark::DoNotOptimize(compress(iv, pair.m1, 22, p));
}
BENCHMARK(BM_Compress)->Arg(256)->Arg(512);

void BM_RunTrial(benchmark::State& state) {
    const SearchConfig cfg = prefix_config(1, 1);
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_trial(cfg.strategy, i++, cfg.seed, 22));
}
BENCHMARK(BM_RunTrial);

void BM_SearchSerial(benchmark::State& state) {
    const SearchConfig cfg = prefix_config(static_cast<std::uint64_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(search_serial(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchSerial)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
    const SearchConfig cfg = prefix_config(1 << 16, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(search(cfg));
    state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_SearchParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
