/*
   Copyright 2026 The coxgrowth authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/spectral.hpp"
#include "coxgrowth/word_oracle.hpp"

using namespace coxgrowth;

namespace {

const CoxeterSystem& simplex5334() {
    static const CoxeterSystem s = *catalog_find("lanner-5334")->system;
    return s;
}

void BM_EnumerateLattice(benchmark::State& state) {
    const CoxeterSystem& s = simplex5334();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_finite_subsets(s));
}
BENCHMARK(BM_EnumerateLattice);

void BM_SteinbergSeries(benchmark::State& state) {
    const CoxeterSystem& s = simplex5334();
    FiniteLattice lat = enumerate_finite_subsets(s);
    for (auto _ : state) benchmark::DoNotOptimize(steinberg_series(s, lat));
}
BENCHMARK(BM_SteinbergSeries);

void BM_AnalyzeGrowth(benchmark::State& state) {
    const CoxeterSystem& s = simplex5334();
    for (auto _ : state) benchmark::DoNotOptimize(analyze_growth(s, 4));
}
BENCHMARK(BM_AnalyzeGrowth);

void BM_RecursionCoefficients(benchmark::State& state) {
    GrowthSeries g = analyze_growth(simplex5334(), 4);
    unsigned upTo = static_cast<unsigned>(g.Q.degree());
    for (auto _ : state) benchmark::DoNotOptimize(recursion_coefficients(g, upTo));
}
BENCHMARK(BM_RecursionCoefficients);

void BM_CyclotomicFactor(benchmark::State& state) {
    GrowthSeries g = analyze_growth(simplex5334(), 4);
    for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_factor(g.Q));
}
BENCHMARK(BM_CyclotomicFactor);

void BM_RootIsolation(benchmark::State& state) {
    GrowthSeries g = analyze_growth(simplex5334(), 4);
    IntPoly den = g.reduced.den();
    for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(den));
}
BENCHMARK(BM_RootIsolation);

void BM_PoleReport(benchmark::State& state) {
    GrowthSeries g = analyze_growth(simplex5334(), 4);
    for (auto _ : state) benchmark::DoNotOptimize(pole_report(g, 4));
}
BENCHMARK(BM_PoleReport);

void BM_TaylorExpansion(benchmark::State& state) {
    GrowthSeries g = analyze_growth(simplex5334(), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(taylor_coefficients(g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_TaylorExpansion)->Arg(64)->Arg(256);

void BM_BfsWordCounts(benchmark::State& state) {
    CoxeterSystem hex = make_right_angled_polygon(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(bfs_counts(hex, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BfsWordCounts)->Arg(5)->Arg(7);

} // namespace

BENCHMARK_MAIN();
