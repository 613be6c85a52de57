#include <benchmark/benchmark.h>

#include "rrmo/nds.hpp"
#include "rrmo/problems.hpp"
#include "rrmo/refpoints.hpp"
#include "rrmo/variation.hpp"

namespace {

using namespace rrmo;

void BM_EvaluateRrmo(benchmark::State& state) {
    ProblemSpec spec = ProblemSpec::parse("rrmo:n=40,m=4");
    RandomSource rng(1);
    BitString x = rng.random_bits(spec.n);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_rrmo(x, spec));
}
BENCHMARK(BM_EvaluateRrmo);

void BM_EvaluateUni(benchmark::State& state) {
    ProblemSpec spec = ProblemSpec::parse("rrmo-uni:n=64,m=2");
    RandomSource rng(2);
    BitString x = rng.random_bits(spec.n);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_uni(x, spec));
}
BENCHMARK(BM_EvaluateUni);

void BM_Mutation(benchmark::State& state) {
    RandomSource rng(3);
    BitString x = rng.random_bits(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(standard_bit_mutation(x, rng));
}
BENCHMARK(BM_Mutation)->Arg(40)->Arg(64);

void BM_NonDominatedSort(benchmark::State& state) {
    RandomSource rng(4);
    std::vector<FitnessVector> pts;
    for (int i = 0; i < state.range(0); ++i) {
        FitnessVector f(4);
        for (auto& v : f) v = static_cast<std::int64_t>(rng.next_below(30));
        pts.push_back(std::move(f));
    }
    for (auto _ : state) benchmark::DoNotOptimize(non_dominated_sort(pts));
}
BENCHMARK(BM_NonDominatedSort)->Arg(128)->Arg(1458);

void BM_AssociateExhaustive(benchmark::State& state) {
    auto pts = generate_reference_points(2, 278);
    std::vector<double> fn{0.31, 0.63};
    for (auto _ : state) benchmark::DoNotOptimize(associate_choices(fn, pts));
}
BENCHMARK(BM_AssociateExhaustive);

void BM_AssociateFast(benchmark::State& state) {
    ReferenceLattice lat{4, 576};
    std::vector<double> fn{0.31, 0.23, 0.11, 0.27};
    for (auto _ : state) benchmark::DoNotOptimize(associate_fast_choices(fn, lat, 1));
}
BENCHMARK(BM_AssociateFast);

}  // namespace

BENCHMARK_MAIN();
