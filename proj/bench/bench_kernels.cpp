/*
   Copyright 2026 The kstep Authors

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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kstep/decimation.hpp"
#include "kstep/kernels.hpp"
#include "kstep/prover.hpp"

using kstep::BigInt;
namespace kernels = kstep::kernels;

namespace {

std::vector<BigInt> random_values(std::size_t n, int bits, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> word;
    std::vector<BigInt> v(n);
    for (auto& x : v) {
        x = 0;
        for (int b = 0; b < bits; b += 64) x = (x << 64) + BigInt(word(rng));
    }
    return v;
}

void BM_ConvolveSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_values(n, 256, 1);
    const auto b = random_values(n, 256, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_serial(a, b));
}

void BM_ConvolveParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_values(n, 256, 1);
    const auto b = random_values(n, 256, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_parallel(a, b));
}

void BM_MatmulSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_values(n * n, 512, 3);
    const auto b = random_values(n * n, 512, 4);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(a, b, n));
}

void BM_MatmulParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_values(n * n, 512, 3);
    const auto b = random_values(n * n, 512, 4);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(a, b, n));
}

void BM_ColumnSumsSerial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto m = kstep::prover::build_matrix(k);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::column_sums_serial(m.entries(), m.rows(), m.cols()));
}

void BM_ColumnSumsParallel(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto m = kstep::prover::build_matrix(k);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::column_sums_parallel(m.entries(), m.rows(), m.cols()));
}

void BM_DecimatedCharpoly(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto r = kstep::prover::r_poly(k);
    for (auto _ : state) benchmark::DoNotOptimize(kstep::decimation::decimated_charpoly(r, static_cast<std::size_t>(k)));
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_MatmulSerial)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_MatmulParallel)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_ColumnSumsSerial)->Arg(12)->Arg(25)->Arg(50);
BENCHMARK(BM_ColumnSumsParallel)->Arg(12)->Arg(25)->Arg(50);
BENCHMARK(BM_DecimatedCharpoly)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
