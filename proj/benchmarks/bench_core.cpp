#include <benchmark/benchmark.h>

#include "minkdef/checks.hpp"

using namespace minkdef;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

std::vector<std::pair<Point, Point>> sample_pairs(int n, size_t count) {
    Sampler sampler(kQ, n);
    Rng rng(1);
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(count);
    for (size_t i = 0; i < count; ++i)
        pairs.emplace_back(sampler.lattice_point(rng, 8, 2), sampler.lattice_point(rng, 8, 2));
    return pairs;
}

void BM_relate(benchmark::State& state) {
    auto pairs = sample_pairs(static_cast<int>(state.range(0)), 512);
    size_t i = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(relate(p, q));
    }
}
BENCHMARK(BM_relate)->Arg(2)->Arg(3)->Arg(6);

void BM_canonicalize_pair(benchmark::State& state) {
    Sampler sampler(kQ, static_cast<int>(state.range(0)));
    Rng rng(2);
    std::vector<Sampler::GeneratedPair> pairs;
    for (int i = 0; i < 256; ++i)
        pairs.push_back(sampler.pair_of_kind(
            rng, i % 3 == 0   ? RelKind::Timelike
                 : i % 3 == 1 ? RelKind::Lightlike
                              : RelKind::Spacelike));
    size_t i = 0;
    for (auto _ : state) {
        const auto& gen = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(canonicalize_pair(gen.p, gen.q));
    }
}
BENCHMARK(BM_canonicalize_pair)->Arg(2)->Arg(3);

void BM_witness_e(benchmark::State& state) {
    Sampler sampler(kQ, 3);
    Rng rng(3);
    std::vector<Sampler::GeneratedPair> pairs;
    for (int i = 0; i < 128; ++i) pairs.push_back(sampler.pair_of_kind(rng, RelKind::Spacelike));
    size_t i = 0;
    for (auto _ : state) {
        const auto& gen = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(witness_e(gen.p, gen.q, RelKind::Timelike));
    }
}
BENCHMARK(BM_witness_e);

void BM_relalg_closure(benchmark::State& state) {
    auto table = relalg::CompositionTable::standard();
    for (auto _ : state) {
        auto closed = relalg::closure(
            {relalg::AtomSet(relalg::Atom::Rho), relalg::AtomSet(relalg::Atom::Id)}, table);
        benchmark::DoNotOptimize(closed);
    }
}
BENCHMARK(BM_relalg_closure);

void BM_nrf2_report(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = nrf2_relation_report(kQ, 2, RelKind::Timelike, 7);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_nrf2_report);

void BM_eval_matrix(benchmark::State& state) {
    auto [vars, matrix] = strip_exists(builtin("Ets").formula);
    Env env = witness_e(Point::of_rats(kQ, {0, 0}), Point::of_rats(kQ, {0, 1}),
                        RelKind::Timelike);
    for (auto _ : state) benchmark::DoNotOptimize(eval_qf(matrix, env));
}
BENCHMARK(BM_eval_matrix);

} // namespace

BENCHMARK_MAIN();
