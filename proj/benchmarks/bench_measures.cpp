#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "renyi/decision.hpp"
#include "renyi/ensemble.hpp"
#include "renyi/error_bounds.hpp"
#include "renyi/exponents.hpp"
#include "renyi/measures.hpp"

namespace {

using namespace renyi;

JointPMF random_joint(int m, int n, std::uint64_t seed) {
    std::uint64_t s = seed;
    auto next = [&]() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::vector<std::vector<double>> rows(m, std::vector<double>(n));
    for (auto& row : rows)
        for (double& x : row) x = 1e-3 + static_cast<double>(next() >> 11) * 0x1.0p-53;
    return JointPMF::from_matrix(std::move(rows), true);
}

void BM_ArimotoConditional(benchmark::State& state) {
    auto joint = random_joint(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                              42);
    Order order = Order::of(2.5);
    for (auto _ : state) benchmark::DoNotOptimize(arimoto_conditional(joint, order).nats);
}
BENCHMARK(BM_ArimotoConditional)->Arg(4)->Arg(16)->Arg(64);

void BM_FanoInversion(benchmark::State& state) {
    auto joint = random_joint(6, 6, 7);
    Order order = Order::of(3.0);
    double h = arimoto_conditional(joint, order).nats;
    for (auto _ : state) benchmark::DoNotOptimize(fano_lb_error(h, 6, order));
}
BENCHMARK(BM_FanoInversion);

void BM_NegativeOrderOptimization(benchmark::State& state) {
    auto joint = random_joint(4, 4, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(lb_error_negative_alpha_optimized(joint).value);
}
BENCHMARK(BM_NegativeOrderOptimization);

void BM_RandomCodingExponent(benchmark::State& state) {
    auto prior = ProbVector::uniform(2);
    auto channel = Channel::bsc(0.11);
    RateNats rate = RateNats::from_bits(0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(random_coding_exponent(rate, prior, channel).value);
}
BENCHMARK(BM_RandomCodingExponent);

void BM_EnsembleTrial(benchmark::State& state) {
    EnsembleConfig cfg{.blocklength = static_cast<int>(state.range(0)),
                       .codebook_size = 4,
                       .channel = Channel::bsc(0.11),
                       .prior = ProbVector::uniform(2),
                       .orders = {Order::one()},
                       .trials = 1,
                       .seed = 3};
    for (auto _ : state) {
        auto cb = sample_codebook(cfg, 0);
        benchmark::DoNotOptimize(code_conditional_entropy(cb, cfg.channel, Order::one()).nats);
    }
}
BENCHMARK(BM_EnsembleTrial)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
