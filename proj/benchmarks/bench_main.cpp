// Copyright 2026 The quhm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "quhm/constructions.hpp"
#include "quhm/schemes.hpp"
#include "quhm/verify.hpp"

namespace {

using namespace quhm;

IntMatrix random_signs(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = (rng() & 1) != 0 ? 1 : -1;
    return m;
}

void BM_Gram(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntMatrix a = random_signs(n, 1);
    const IntMatrix b = random_signs(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(gram(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gram)->RangeMultiplier(3)->Range(9, 729)->Complexity(benchmark::oNCubed);

void BM_ConstructJa(benchmark::State& state) {
    const CoreMatrix core = jacobsthal(3);
    const auto m = static_cast<unsigned>(state.range(0));
    ConstructOptions o;
    o.verify = false;
    for (auto _ : state) benchmark::DoNotOptimize(construct_ja(core, m, o));
}
BENCHMARK(BM_ConstructJa)->DenseRange(1, 6);

void BM_VerifyPair(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    ConstructOptions o;
    o.verify = false;
    const SignPair p = construct_ja(jacobsthal(3), m, o);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_amicable(p.first, p.second));
        benchmark::DoNotOptimize(verify_pair_identity(p.first, p.second, 3));
    }
}
BENCHMARK(BM_VerifyPair)->DenseRange(1, 6);

void BM_Membership(benchmark::State& state) {
    const CoreMatrix core = jacobsthal(3);
    const auto m = static_cast<unsigned>(state.range(0));
    ConstructOptions o;
    o.verify = false;
    const SignPair p = construct_ja(core, m, o);
    const TensorSchemeIndex idx(core, m);
    for (auto _ : state) benchmark::DoNotOptimize(bose_mesner_coeffs(p.first.values(), idx));
}
BENCHMARK(BM_Membership)->DenseRange(1, 6);

}  // namespace

BENCHMARK_MAIN();
