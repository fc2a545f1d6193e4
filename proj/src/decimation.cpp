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

#include "kstep/decimation.hpp"

#include <stdexcept>
#include <utility>

#include "kstep/errors.hpp"
#include "kstep/kernels.hpp"

namespace kstep::decimation {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> row_major)
    : n_(n), entries_(std::move(row_major)) {
    if (entries_.size() != n * n) throw std::invalid_argument("matrix entries do not form a square");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
    return IntMatrix(a.dim(), kernels::matmul_parallel(a.entries(), b.entries(), a.dim()));
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
    std::vector<BigInt> e = a.entries();
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
    return IntMatrix(a.dim(), std::move(e));
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
    std::vector<BigInt> e = a.entries();
    for (auto& x : e) x *= s;
    return IntMatrix(a.dim(), std::move(e));
}

IntMatrix companion_matrix(const IntPoly& charpoly) {
    if (!charpoly.is_monic() || charpoly.degree() < 1) {
        throw NotMonic("companion matrix needs a monic polynomial of degree >= 1, got " +
                       to_string(charpoly));
    }
    const std::size_t n = charpoly.degree();
    IntMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) m(0, i - 1) = -charpoly.coeff(n - i);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    return m;
}

IntMatrix matrix_power(const IntMatrix& m, std::size_t e) {
    if (e < 1) throw std::invalid_argument("matrix_power needs e >= 1");
    IntMatrix result = m;
    IntMatrix base = m;
    --e;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

IntPoly char_poly(const IntMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return IntPoly{1};

    // X I - m
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = IntPoly::monomial(-m(i, j), 0);
            if (i == j) a[i][j] = a[i][j] + IntPoly{0, 1};
        }
    }

    bool negate_result = false;
    IntPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(a[k], a[swap_row]);
            negate_result = !negate_result;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = IntPoly{};
        }
        prev = a[k][k];
    }
    IntPoly det = a[n - 1][n - 1];
    return negate_result ? -det : det;
}

IntMatrix evaluate_at_matrix(const IntPoly& p, const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix acc(n);
    const IntMatrix id = IntMatrix::identity(n);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * m + p.coeffs()[i] * id;
    return acc;
}

IntPoly decimated_charpoly(const IntPoly& rec_charpoly, std::size_t stride) {
    if (stride < 1) throw std::invalid_argument("stride must be positive");
    return char_poly(matrix_power(companion_matrix(rec_charpoly), stride));
}

}  // namespace kstep::decimation
