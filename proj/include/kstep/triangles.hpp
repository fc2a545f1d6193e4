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

#ifndef KSTEP_TRIANGLES_HPP
#define KSTEP_TRIANGLES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kstep/bigint.hpp"

namespace kstep::triangles {

using Row = std::vector<BigInt>;

/*
 * The triangle P with P[i][0] = -1, P[0][0] = -1 and, for 1 <= j <= i,
 *
 *     P[i][j] = 2 P[i-1][j] - P[i-1][j-1]
 *
 * where entries right of the diagonal read as zero. Column 0 is an initial
 * condition; the recursion is never applied there. Row k holds the
 * coefficients of the stride-k identity of the k-step Fibonacci sequence.
 */
class TriangleP {
   public:
    // Rows 0..last_row inclusive.
    static TriangleP generate(std::size_t last_row);

    std::size_t rows() const noexcept { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_.at(i); }
    // Zero outside 0 <= j <= i; throws NegativeRow for i < 0 and
    // std::out_of_range for rows that were not generated.
    BigInt entry(std::int64_t i, std::int64_t j) const;

   private:
    std::vector<Row> rows_;
};

// Backward difference of P down each column: Q[i][j] = P[i][j] - P[i-1][j],
// with row 0 all zeros.
class TriangleQ {
   public:
    static TriangleQ from(const TriangleP& p);
    static TriangleQ generate(std::size_t last_row);

    std::size_t rows() const noexcept { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_.at(i); }
    BigInt entry(std::int64_t i, std::int64_t j) const;

   private:
    std::vector<Row> rows_;
};

Row p_row(std::size_t k);
Row q_row(std::size_t k);
BigInt p_entry(std::int64_t i, std::int64_t j);
BigInt q_entry(std::int64_t i, std::int64_t j);

// Row k of P rebuilt from r_k(2-Y): reversing at degree k gives p_k(X), whose
// coefficients are the negated row entries. Requires k >= 2.
Row p_row_via_reversal(std::size_t k);

// Row n of Q as the ascending coefficients of X(2-X)^(n-1). Requires n >= 1.
Row q_row_via_polynomial(std::size_t n);

// P[n][1] == 2^n - 1 and Q[n][1] == 2^(n-1). Requires n >= 1.
bool closed_form_check(std::size_t n);

}  // namespace kstep::triangles

#endif
