// Micro-benchmarks for the automata kernel and the semantics engine.
#include <benchmark/benchmark.h>

#include <random>

#include "afreg/io.hpp"
#include "afreg/semantics.hpp"

using namespace afreg;

namespace {

Alphabet bench_alphabet() { return Alphabet({"a", "b"}); }

Dfa random_dfa(std::mt19937& rng, const Alphabet& a, int states) {
    std::uniform_int_distribution<int> state(0, states - 1);
    std::bernoulli_distribution acc(0.4);
    std::vector<int> accepting, transitions;
    for (int q = 0; q < states; ++q)
        if (acc(rng)) accepting.push_back(q);
    for (int q = 0; q < states * a.size(); ++q)
        transitions.push_back(state(rng));
    return Dfa::from_parts(a, states, 0, accepting, transitions);
}

AfSpec fixture(const char* name) {
    return load_afs(std::string(AFREG_FIXTURE_DIR) + "/" + name);
}

void BM_product_intersection(benchmark::State& state) {
    std::mt19937 rng(1);
    Alphabet a = bench_alphabet();
    Dfa d1 = random_dfa(rng, a, static_cast<int>(state.range(0)));
    Dfa d2 = random_dfa(rng, a, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(intersect(d1, d2));
}
BENCHMARK(BM_product_intersection)->Arg(8)->Arg(32)->Arg(128);

void BM_concat_determinize(benchmark::State& state) {
    std::mt19937 rng(2);
    Alphabet a = bench_alphabet();
    Dfa d1 = random_dfa(rng, a, static_cast<int>(state.range(0)));
    Dfa d2 = random_dfa(rng, a, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(concat(d1, d2));
}
BENCHMARK(BM_concat_determinize)->Arg(8)->Arg(16);

void BM_quotient(benchmark::State& state) {
    std::mt19937 rng(3);
    Alphabet a = bench_alphabet();
    Dfa d1 = random_dfa(rng, a, static_cast<int>(state.range(0)));
    Dfa d2 = random_dfa(rng, a, 8);
    for (auto _ : state) benchmark::DoNotOptimize(quotient(d1, d2));
}
BENCHMARK(BM_quotient)->Arg(32)->Arg(128);

void BM_attackers_period_twelve(benchmark::State& state) {
    AfSpec spec = fixture("query_cycle.afs");
    Dfa x = spec.arguments();
    for (auto _ : state) benchmark::DoNotOptimize(spec.attackers(x));
}
BENCHMARK(BM_attackers_period_twelve);

void BM_grounded_ambient(benchmark::State& state) {
    AfSpec spec = fixture("ambient.afs");
    for (auto _ : state) benchmark::DoNotOptimize(grounded(spec, 64));
}
BENCHMARK(BM_grounded_ambient);

void BM_semidecide_three_cycle(benchmark::State& state) {
    AfSpec spec = encode_finite_af(
        load_apx(std::string(AFREG_FIXTURE_DIR) + "/three_cycle.apx"));
    for (auto _ : state)
        benchmark::DoNotOptimize(stable_empty_semidecide(spec, 8));
}
BENCHMARK(BM_semidecide_three_cycle);

}  // namespace

BENCHMARK_MAIN();
