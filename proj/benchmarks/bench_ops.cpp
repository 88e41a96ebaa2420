#include <benchmark/benchmark.h>

#include "fss/document.hpp"
#include "fss/laws.hpp"
#include "fss/soft_matrix.hpp"
#include "fss/soft_set.hpp"

#include <sstream>

namespace {

fss::GenConfig bench_config(std::uint64_t seed) {
    fss::GenConfig cfg;
    cfg.universe_size = 6;
    cfg.param_count = 5;
    cfg.grade_denominator = 10;
    cfg.seed = seed;
    return cfg;
}

void bm_soft_union(benchmark::State& state) {
    auto f = fss::gen_random(bench_config(1));
    auto g = fss::gen_random(bench_config(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::soft_union(f, g));
    }
}
BENCHMARK(bm_soft_union);

void bm_soft_intersection(benchmark::State& state) {
    auto f = fss::gen_random(bench_config(3));
    auto g = fss::gen_random(bench_config(4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::soft_intersection(f, g));
    }
}
BENCHMARK(bm_soft_intersection);

void bm_min_family(benchmark::State& state) {
    auto f = fss::gen_random(bench_config(5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::min_family(f));
    }
}
BENCHMARK(bm_min_family);

void bm_tau(benchmark::State& state) {
    auto f = fss::gen_random(bench_config(6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::tau(f));
    }
}
BENCHMARK(bm_tau);

void bm_check_de_morgan(benchmark::State& state) {
    auto f = fss::gen_random(bench_config(7));
    auto g = fss::gen_random(bench_config(8));
    const fss::FuzzySoftSet ops[] = {f, g};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::check_law(fss::LawId::DeMorganUnion, ops));
    }
}
BENCHMARK(bm_check_de_morgan);

void bm_matrix_union(benchmark::State& state) {
    auto m = fss::to_matrix(fss::gen_random(bench_config(9)));
    auto n = fss::to_matrix(fss::gen_random(bench_config(10)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::m_union(m, n));
    }
}
BENCHMARK(bm_matrix_union);

void bm_document_round_trip(benchmark::State& state) {
    auto f = fss::gen_random(bench_config(11));
    auto text = fss::serialize_soft_set_document(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fss::parse_soft_set_document(text));
    }
}
BENCHMARK(bm_document_round_trip);

}  // namespace

BENCHMARK_MAIN();
