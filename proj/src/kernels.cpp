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

#include "kstep/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>

namespace kstep::kernels {

std::vector<BigInt> convolve_serial(std::span<const BigInt> a, std::span<const BigInt> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<BigInt> convolve_parallel(std::span<const BigInt> a, std::span<const BigInt> b) {
    if (a.empty() || b.empty()) return {};
    const std::int64_t na = static_cast<std::int64_t>(a.size());
    const std::int64_t nb = static_cast<std::int64_t>(b.size());
    const std::int64_t n = na + nb - 1;
    std::vector<BigInt> out(static_cast<std::size_t>(n));

    // One output coefficient per iteration; the inner sum is private.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < n; ++c) {
        const std::int64_t lo = std::max<std::int64_t>(0, c - nb + 1);
        const std::int64_t hi = std::min<std::int64_t>(c, na - 1);
        BigInt acc = 0;
        for (std::int64_t i = lo; i <= hi; ++i) {
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[c - i].get_mpz_t());
        }
        out[static_cast<std::size_t>(c)] = std::move(acc);
    }
    return out;
}

std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b) {
    if (a.size() + b.size() >= kParallelConvolutionThreshold && !omp_in_parallel()) {
        return convolve_parallel(a, b);
    }
    return convolve_serial(a, b);
}

std::vector<BigInt> matmul_serial(std::span<const BigInt> a, std::span<const BigInt> b,
                                  std::size_t n) {
    std::vector<BigInt> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    }
    return out;
}

std::vector<BigInt> matmul_parallel(std::span<const BigInt> a, std::span<const BigInt> b,
                                    std::size_t n) {
    std::vector<BigInt> out(n * n);
    const std::int64_t cells = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(static)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        const std::size_t i = static_cast<std::size_t>(cell) / n;
        const std::size_t j = static_cast<std::size_t>(cell) % n;
        BigInt acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            mpz_addmul(acc.get_mpz_t(), a[i * n + k].get_mpz_t(), b[k * n + j].get_mpz_t());
        }
        out[static_cast<std::size_t>(cell)] = std::move(acc);
    }
    return out;
}

std::vector<BigInt> column_sums_serial(std::span<const BigInt> entries, std::size_t rows,
                                       std::size_t cols) {
    std::vector<BigInt> sums(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) sums[c] += entries[r * cols + c];
    }
    return sums;
}

std::vector<BigInt> column_sums_parallel(std::span<const BigInt> entries, std::size_t rows,
                                         std::size_t cols) {
    std::vector<BigInt> sums(cols);
    const std::int64_t ncols = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < ncols; ++c) {
        BigInt acc = 0;
        for (std::size_t r = 0; r < rows; ++r) acc += entries[r * cols + static_cast<std::size_t>(c)];
        sums[static_cast<std::size_t>(c)] = std::move(acc);
    }
    return sums;
}

}  // namespace kstep::kernels
