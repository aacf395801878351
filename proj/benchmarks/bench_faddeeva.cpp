// Copyright 2026 The fadw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fadw/error_map.hpp"
#include "fadw/faddeeva.hpp"
#include "fadw/params.hpp"

namespace {

const fadw::ApproximationParams params = fadw::make_params();
const fadw::CoefficientSet coeffs = fadw::derive_coefficients(params);

void BM_DeriveCoefficients(benchmark::State& state) {
    for (auto _ : state) {
        auto c = fadw::derive_coefficients(params);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_DeriveCoefficients);

void BM_RationalPath(benchmark::State& state) {
    const fadw::Complex z{7.5, 0.003};
    for (auto _ : state) {
        auto v = fadw::w_rational(z, params, coeffs);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RationalPath);

void BM_ContinuedFraction(benchmark::State& state) {
    const fadw::Complex z{120.0, 0.05};
    for (auto _ : state) {
        auto v = fadw::w_continued_fraction(z);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ContinuedFraction);

void BM_DispatchEvaluate(benchmark::State& state) {
    const fadw::Complex z{2.0, 1.0};
    for (auto _ : state) {
        auto v = fadw::evaluate(z, params, coeffs);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DispatchEvaluate);

void BM_BatchHitran(benchmark::State& state) {
    const auto pts = fadw::hitran_sample_points(
        static_cast<std::size_t>(state.range(0)), 2016);
    for (auto _ : state) {
        auto out = fadw::evaluate_batch(pts, params, coeffs);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BatchHitran)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
