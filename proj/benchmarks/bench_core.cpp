#include <benchmark/benchmark.h>

#include "drazin/anti_triangular.hpp"
#include "drazin/generate.hpp"
#include "drazin/harness.hpp"

using namespace drazin;

namespace {

Matrix structured(std::size_t size, std::uint64_t seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.size = size;
    spec.kind = Kind::drazin_structured;
    return gen_element(spec);
}

void BM_matrix_multiply(benchmark::State& state) {
    Matrix a = structured(state.range(0), 7);
    Matrix b = structured(state.range(0), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_matrix_multiply)->DenseRange(2, 8, 2);

void BM_rref(benchmark::State& state) {
    Matrix a = structured(state.range(0), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref_decompose(a));
    }
}
BENCHMARK(BM_rref)->DenseRange(2, 8, 2);

void BM_drazin_inverse(benchmark::State& state) {
    Matrix a = structured(state.range(0), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drazin_inverse(a));
    }
}
BENCHMARK(BM_drazin_inverse)->DenseRange(2, 8);

void BM_express_as_polynomial(benchmark::State& state) {
    Matrix a = structured(state.range(0), 17);
    Matrix a_d = drazin_inverse(a).a_d;
    for (auto _ : state) {
        benchmark::DoNotOptimize(express_as_polynomial(a, a_d));
    }
}
BENCHMARK(BM_express_as_polynomial)->DenseRange(2, 8, 2);

void BM_thm36_chain(benchmark::State& state) {
    GenSpec spec;
    spec.seed = 19;
    spec.size = state.range(0);
    spec.kind = Kind::thm36;
    NamedMatrices inst = gen_theorem_instance(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            thm36_split(inst[0].second, inst[1].second, inst[2].second));
    }
}
BENCHMARK(BM_thm36_chain)->DenseRange(1, 4);

void BM_suite_trial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite("thm2.2", 1, {4}, 23, 3));
    }
}
BENCHMARK(BM_suite_trial);

} // namespace

BENCHMARK_MAIN();
