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

#include "kstep/triangles.hpp"

#include <stdexcept>
#include <string>

#include "kstep/errors.hpp"
#include "kstep/poly.hpp"
#include "kstep/prover.hpp"

namespace kstep::triangles {

namespace {

BigInt lookup(const std::vector<Row>& rows, std::int64_t i, std::int64_t j, const char* name) {
    if (i < 0) throw NegativeRow(std::string(name) + " row " + std::to_string(i) + " is negative");
    if (static_cast<std::size_t>(i) >= rows.size()) {
        throw std::out_of_range(std::string(name) + " row " + std::to_string(i) +
                                " was not generated");
    }
    if (j < 0 || j > i) return 0;
    return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

}  // namespace

TriangleP TriangleP::generate(std::size_t last_row) {
    TriangleP t;
    t.rows_.reserve(last_row + 1);
    t.rows_.push_back(Row{BigInt(-1)});
    for (std::size_t i = 1; i <= last_row; ++i) {
        const Row& prev = t.rows_.back();
        Row cur(i + 1);
        cur[0] = -1;
        for (std::size_t j = 1; j <= i; ++j) {
            const BigInt above = j < i ? prev[j] : BigInt(0);
            cur[j] = 2 * above - prev[j - 1];
        }
        t.rows_.push_back(std::move(cur));
    }
    return t;
}

BigInt TriangleP::entry(std::int64_t i, std::int64_t j) const { return lookup(rows_, i, j, "P"); }

TriangleQ TriangleQ::from(const TriangleP& p) {
    TriangleQ t;
    t.rows_.reserve(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Row cur(i + 1);
        if (i > 0) {
            const auto ii = static_cast<std::int64_t>(i);
            for (std::size_t j = 0; j <= i; ++j) {
                const auto jj = static_cast<std::int64_t>(j);
                cur[j] = p.entry(ii, jj) - p.entry(ii - 1, jj);
            }
        }
        t.rows_.push_back(std::move(cur));
    }
    return t;
}

TriangleQ TriangleQ::generate(std::size_t last_row) { return from(TriangleP::generate(last_row)); }

BigInt TriangleQ::entry(std::int64_t i, std::int64_t j) const { return lookup(rows_, i, j, "Q"); }

Row p_row(std::size_t k) { return TriangleP::generate(k).row(k); }

Row q_row(std::size_t k) { return TriangleQ::generate(k).row(k); }

BigInt p_entry(std::int64_t i, std::int64_t j) {
    if (i < 0) throw NegativeRow("P row " + std::to_string(i) + " is negative");
    return TriangleP::generate(static_cast<std::size_t>(i)).entry(i, j);
}

BigInt q_entry(std::int64_t i, std::int64_t j) {
    if (i < 0) throw NegativeRow("Q row " + std::to_string(i) + " is negative");
    return TriangleQ::generate(static_cast<std::size_t>(i)).entry(i, j);
}

Row p_row_via_reversal(std::size_t k) {
    if (k < 2) throw OrderTooSmall("p_row_via_reversal needs k >= 2");
    const IntPoly two_minus_y{2, -1};
    const IntPoly r_at = compose(prover::r_poly(static_cast<int>(k)), two_minus_y);
    const IntPoly pk = reverse(r_at, k);
    Row row(k + 1);
    row[0] = -1;
    for (std::size_t i = 1; i <= k; ++i) row[i] = -pk.coeff(k - i);
    return row;
}

Row q_row_via_polynomial(std::size_t n) {
    if (n < 1) throw std::invalid_argument("q_row_via_polynomial needs n >= 1");
    const IntPoly two_minus_x{2, -1};
    IntPoly power{1};
    for (std::size_t e = 0; e + 1 < n; ++e) power = power * two_minus_x;
    const IntPoly poly = shift(power, 1);
    Row row(n + 1);
    for (std::size_t i = 0; i <= n; ++i) row[i] = poly.coeff(i);
    return row;
}

bool closed_form_check(std::size_t n) {
    if (n < 1) throw std::invalid_argument("closed_form_check needs n >= 1");
    const auto p = TriangleP::generate(n);
    const auto q = TriangleQ::from(p);
    const auto nn = static_cast<std::int64_t>(n);
    return p.entry(nn, 1) == pow2(n) - 1 && q.entry(nn, 1) == pow2(n - 1);
}

}  // namespace kstep::triangles
