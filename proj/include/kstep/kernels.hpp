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

#ifndef KSTEP_KERNELS_HPP
#define KSTEP_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "kstep/bigint.hpp"

// Data-parallel inner loops. Every kernel has a serial reference that the
// tests compare against and an OpenMP variant; both produce identical exact
// results because each output cell is computed independently.
namespace kstep::kernels {

// Products shorter than this stay on the serial path.
inline constexpr std::size_t kParallelConvolutionThreshold = 256;

std::vector<BigInt> convolve_serial(std::span<const BigInt> a, std::span<const BigInt> b);
std::vector<BigInt> convolve_parallel(std::span<const BigInt> a, std::span<const BigInt> b);
std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b);

// Row-major n x n products.
std::vector<BigInt> matmul_serial(std::span<const BigInt> a, std::span<const BigInt> b,
                                  std::size_t n);
std::vector<BigInt> matmul_parallel(std::span<const BigInt> a, std::span<const BigInt> b,
                                    std::size_t n);

// Column sums of a row-major rows x cols array.
std::vector<BigInt> column_sums_serial(std::span<const BigInt> entries, std::size_t rows,
                                       std::size_t cols);
std::vector<BigInt> column_sums_parallel(std::span<const BigInt> entries, std::size_t rows,
                                         std::size_t cols);

}  // namespace kstep::kernels

#endif
