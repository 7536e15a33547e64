// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "maxplus/maxplus.hpp"

using namespace maxplus;

namespace {

const ExtReal ninf = kNegInf;

MpMatrix example() {
    return MpMatrix{
        {-3, 1, ninf, ninf, ninf}, {1, 1, 1, ninf, ninf}, {ninf, 0, ninf, 2, ninf},
        {1, ninf, -5, ninf, -7},   {-2, -2, -7, 1, ninf},
    };
}

// Fixed-seed matrices with entries in -5..5, half of them -inf, λ >= 0.
std::vector<MpMatrix> random_matrices(std::size_t n, std::size_t count) {
    std::mt19937_64 rng(n * 7919);
    std::bernoulli_distribution finite(0.5);
    std::uniform_int_distribution<int> value(-5, 5);
    std::vector<MpMatrix> out;
    while (out.size() < count) {
        MpMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = finite(rng) ? ExtReal(value(rng)) : kNegInf;
            }
        }
        if (graph::max_cycle_mean(a) >= ExtReal(0)) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

ScaledBasis by_search(const MpMatrix& a) {
    supereig::BasisOptions options;
    options.threads = 1;
    return supereig::compute_basis(a, options).basis;
}

ScaledBasis by_generators(const MpMatrix& a) { return oracle::extremal_filter(oracle::cycle_path_generators(a)); }

ScaledBasis by_dd(const MpMatrix& a) {
    return oracle::extremal_filter(oracle::double_description(oracle::TwoSidedSystem::supereigen(a)));
}

template <ScaledBasis (*Method)(const MpMatrix&)>
void BM_Example(benchmark::State& state) {
    const MpMatrix a = example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Method(a));
    }
}

template <ScaledBasis (*Method)(const MpMatrix&)>
void BM_Random(benchmark::State& state) {
    const auto matrices = random_matrices(static_cast<std::size_t>(state.range(0)), 20);
    for (auto _ : state) {
        for (const auto& a : matrices) {
            benchmark::DoNotOptimize(Method(a));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(matrices.size()));
}

void BM_MaxCycleMean(benchmark::State& state) {
    const auto matrices = random_matrices(static_cast<std::size_t>(state.range(0)), 20);
    for (auto _ : state) {
        for (const auto& a : matrices) {
            benchmark::DoNotOptimize(graph::max_cycle_mean(a));
        }
    }
}

}  // namespace

BENCHMARK(BM_Example<by_search>)->Name("example/search");
BENCHMARK(BM_Example<by_generators>)->Name("example/generators");
BENCHMARK(BM_Example<by_dd>)->Name("example/double_description");
BENCHMARK(BM_Random<by_search>)->Name("random/search")->DenseRange(3, 6);
BENCHMARK(BM_Random<by_generators>)->Name("random/generators")->DenseRange(3, 6);
BENCHMARK(BM_Random<by_dd>)->Name("random/double_description")->DenseRange(3, 6);
BENCHMARK(BM_MaxCycleMean)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
