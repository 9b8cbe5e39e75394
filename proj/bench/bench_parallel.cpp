/* Copyright 2026 The twolie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// Serial reference vs OpenMP kernels for Theta construction and oracle runs.

#include <benchmark/benchmark.h>

#include "twolie/families.hpp"
#include "twolie/oracle.hpp"

namespace {

using namespace twolie;

// warm the per-bidegree basis caches so both variants measure the same work
void warm(int k, int l) { benchmark::DoNotOptimize(theta_matrix_serial(k, l)); }

void BM_ThetaSerial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0)), l = static_cast<int>(state.range(1));
    warm(k, l);
    for (auto _ : state) benchmark::DoNotOptimize(theta_matrix_serial(k, l));
}

void BM_ThetaParallel(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0)), l = static_cast<int>(state.range(1));
    warm(k, l);
    for (auto _ : state) benchmark::DoNotOptimize(theta_matrix(k, l));
}

void BM_OracleSerial(benchmark::State& state) {
    KernelCertificate c = i33n_certificate(static_cast<int>(state.range(0)));
    OracleOptions o;
    o.seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_check_serial(c, o));
}

void BM_OracleParallel(benchmark::State& state) {
    KernelCertificate c = i33n_certificate(static_cast<int>(state.range(0)));
    OracleOptions o;
    o.seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_check(c, o));
}

}  // namespace

BENCHMARK(BM_ThetaSerial)->Args({5, 7})->Args({6, 8})->Args({7, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaParallel)->Args({5, 7})->Args({6, 8})->Args({7, 8})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
