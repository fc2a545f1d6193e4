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

#include "kstep/prover.hpp"

#include <stdexcept>

#include "kstep/errors.hpp"
#include "kstep/kernels.hpp"

namespace kstep::prover {

using triangles::TriangleP;
using triangles::TriangleQ;

namespace {

void require_order(int k, const char* what) {
    if (k < 2) throw OrderTooSmall(std::string(what) + " needs k >= 2, got " + std::to_string(k));
}

// Symbolic coefficient of X^e in q_k.
SymbolicCell q_cell(int k, std::int64_t e) {
    SymbolicCell cell;
    if (e < 0) return cell;
    const std::int64_t top = static_cast<std::int64_t>(k) * (k - 1);
    if (e == top) {
        cell.kind = SymbolicCell::Kind::One;
        return cell;
    }
    if (e > top) return cell;
    const auto j = static_cast<int>(e / k);
    const auto m = static_cast<int>(e % k);
    if (m == 0) {
        cell = {SymbolicCell::Kind::P, true, k - 1, k - 1 - j};
    } else if (m <= j + 1) {
        cell = {SymbolicCell::Kind::Q, false, k - m, k - 1 - j};
    }
    return cell;
}

// Sum of 2^(r-1) for r = 1..count.
BigInt powers_of_two_sum(std::int64_t count) {
    BigInt s = 0;
    for (std::int64_t r = 1; r <= count; ++r) s += pow2(static_cast<unsigned long>(r - 1));
    return s;
}

}  // namespace

IntPoly r_poly(int k) {
    require_order(k, "r_poly");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(-1));
    c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly p_poly(int k) {
    require_order(k, "p_poly");
    const auto row = triangles::p_row(static_cast<std::size_t>(k));
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = 1;
    for (int i = 1; i <= k; ++i) c[static_cast<std::size_t>(k - i)] = -row[static_cast<std::size_t>(i)];
    return IntPoly(std::move(c));
}

IntPoly q_poly(int k) {
    require_order(k, "q_poly");
    const auto P = TriangleP::generate(static_cast<std::size_t>(k));
    const auto Q = TriangleQ::from(P);
    const auto kk = static_cast<std::size_t>(k);
    std::vector<BigInt> c(kk * (kk - 1) + 1);
    c.back() = 1;
    for (int j = 0; j <= k - 2; ++j) {
        const std::size_t block = kk * static_cast<std::size_t>(j);
        c[block] -= P.entry(k - 1, k - 1 - j);
        for (int i = k - 1 - j; i <= k - 1; ++i) {
            c[block + static_cast<std::size_t>(k - i)] += Q.entry(i, k - 1 - j);
        }
    }
    return IntPoly(std::move(c));
}

std::vector<BigInt> identity_coefficients(int k) {
    require_order(k, "identity_coefficients");
    auto row = triangles::p_row(static_cast<std::size_t>(k));
    return std::vector<BigInt>(row.begin() + 1, row.end());
}

IntPoly characteristic_poly_of_identity(std::span<const BigInt> coeffs) {
    if (coeffs.empty()) throw EmptyCoefficients("identity has no coefficients");
    const std::size_t n = coeffs.size();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    for (std::size_t i = 1; i <= n; ++i) c[n - i] = -coeffs[i - 1];
    return IntPoly(std::move(c));
}

std::vector<BigInt> recurrence_coefficients(const IntPoly& monic) {
    if (!monic.is_monic()) throw NotMonic("polynomial " + to_string(monic) + " is not monic");
    const std::size_t n = monic.degree();
    std::vector<BigInt> c(n);
    for (std::size_t i = 1; i <= n; ++i) c[i - 1] = -monic.coeff(n - i);
    return c;
}

char to_char(CaseLabel label) { return static_cast<char>('A' + static_cast<int>(label)); }

CaseLabel classify_column(int k, std::int64_t c) {
    require_order(k, "classify_column");
    const std::int64_t last = static_cast<std::int64_t>(k) * k;
    if (c < 0 || c > last) {
        throw ColumnOutOfRange("column " + std::to_string(c) + " outside 0.." + std::to_string(last));
    }
    if (c == 0 || c == last) return CaseLabel::A;
    const std::int64_t j = c / k;
    const std::int64_t m = c % k;
    if (j == k - 1) return CaseLabel::D;
    if (m == 0) return CaseLabel::C;
    if (m >= j + 1) return CaseLabel::B;
    return CaseLabel::E;
}

std::string SymbolicCell::label() const {
    switch (kind) {
        case Kind::Zero:
            return "";
        case Kind::One:
            return negated ? "-1" : "1";
        case Kind::P:
        case Kind::Q: {
            std::string s = negated ? "-" : "";
            s += kind == Kind::P ? "P" : "Q";
            return s + "_{" + std::to_string(row) + "," + std::to_string(col) + "}";
        }
    }
    return "";
}

BigInt SymbolicCell::value(const TriangleP& p, const TriangleQ& q) const {
    BigInt v;
    switch (kind) {
        case Kind::Zero:
            return 0;
        case Kind::One:
            v = 1;
            break;
        case Kind::P:
            v = p.entry(row, col);
            break;
        case Kind::Q:
            v = q.entry(row, col);
            break;
    }
    return negated ? BigInt(-v) : v;
}

ProofMatrix ProofMatrix::build(int k) {
    require_order(k, "build_matrix");
    ProofMatrix m;
    m.k_ = k;
    const IntPoly q = q_poly(k);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const auto kk = static_cast<std::size_t>(k);
    m.entries_.resize(rows * cols);
    for (std::size_t r = 0; r < kk; ++r) {
        for (std::size_t e = 0; e < q.size(); ++e) m.entries_[r * cols + r + e] = q.coeffs()[e];
    }
    for (std::size_t e = 0; e < q.size(); ++e) m.entries_[kk * cols + kk + e] = -q.coeffs()[e];

    m.cases_.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) m.cases_.push_back(classify_column(k, static_cast<std::int64_t>(c)));
    m.sums_ = kernels::column_sums_parallel(m.entries_, rows, cols);
    return m;
}

ProofMatrix build_matrix(int k) { return ProofMatrix::build(k); }

std::vector<SymbolicCell> symbolic_matrix(int k) {
    require_order(k, "symbolic_matrix");
    const std::int64_t cols = static_cast<std::int64_t>(k) * k + 1;
    std::vector<SymbolicCell> cells;
    cells.reserve(static_cast<std::size_t>((k + 1) * cols));
    for (int r = 0; r <= k; ++r) {
        for (std::int64_t c = 0; c < cols; ++c) {
            SymbolicCell cell = q_cell(k, c - r);
            if (r == k && cell.kind != SymbolicCell::Kind::Zero) cell.negated = !cell.negated;
            cells.push_back(cell);
        }
    }
    return cells;
}

int CaseReport::failures() const {
    int n = 0;
    for (const auto& [label, tally] : tallies) n += tally.failed;
    return n;
}

CaseReport verify_case_sums(int k) { return verify_case_sums(ProofMatrix::build(k)); }

CaseReport verify_case_sums(const ProofMatrix& m) {
    const int k = m.k();
    const auto P = TriangleP::generate(static_cast<std::size_t>(k));
    auto p = [&](std::int64_t i, std::int64_t j) { return P.entry(i, j); };
    // Sum of Q[r][c] for r = s..t, by telescoping down column c.
    auto q_run = [&](std::int64_t c, std::int64_t s, std::int64_t t) -> BigInt {
        if (s > t) return 0;
        return p(t, c) - (s - 1 >= 0 ? p(s - 1, c) : BigInt(0));
    };

    const IntPoly target_poly = -compose_power(p_poly(k), static_cast<std::size_t>(k));
    const auto K = static_cast<std::size_t>(k);

    CaseReport report;
    report.k = k;
    for (CaseLabel label : kAllCases) report.tallies[label] = {};

    for (std::size_t c = 0; c < m.cols(); ++c) {
        ColumnCheck check;
        check.column = c;
        check.label = m.column_cases()[c];
        check.target = target_poly.coeff(c);
        check.actual_sum = m.column_sums()[c];

        auto group = [&](std::size_t first, std::size_t last, BigInt closed) {
            check.groups.push_back({first, last, std::move(closed), 0});
        };

        const auto j = static_cast<std::int64_t>(c / K);
        const auto mm = static_cast<std::int64_t>(c % K);
        const auto kk = static_cast<std::int64_t>(k);
        switch (check.label) {
            case CaseLabel::A:
                if (c == 0) {
                    group(0, 0, -p(kk - 1, kk - 1));
                } else {
                    group(K, K, BigInt(-1));
                }
                break;
            case CaseLabel::B:
                // Row 0 of block j, descended diagonally: -P plus a full Q run.
                group(0, static_cast<std::size_t>(mm),
                      -p(kk - 1, kk - 1 - j) + q_run(kk - 1 - j, kk - 1 - j, kk - 1));
                break;
            case CaseLabel::C:
                group(0, 0, -p(kk - 1, kk - 1 - j));
                group(static_cast<std::size_t>(kk - j), K - 1, q_run(kk - j, kk - j, kk - 1));
                group(K, K, p(kk - 1, kk - j));
                break;
            case CaseLabel::D:
                if (mm == 0) {
                    group(0, 0, BigInt(1));
                    group(1, K - 1, powers_of_two_sum(kk - 1));
                    group(K, K, pow2(K - 1) - 1);
                } else {
                    group(static_cast<std::size_t>(mm), static_cast<std::size_t>(mm), BigInt(1));
                    if (mm + 1 <= kk - 1) {
                        group(static_cast<std::size_t>(mm + 1), K - 1, powers_of_two_sum(kk - 1 - mm));
                    }
                    group(K, K, -pow2(static_cast<unsigned long>(kk - mm - 1)));
                }
                break;
            case CaseLabel::E:
                // Q entries of block j reaching this column from rows above.
                group(0, static_cast<std::size_t>(mm - 1), p(kk - 1, kk - j - 1) - p(kk - mm - 1, kk - j - 1));
                // The diagonally descending -P.
                group(static_cast<std::size_t>(mm), static_cast<std::size_t>(mm), -p(kk - 1, kk - 1 - j));
                // Q entries of block j-1; empty when k-1-m < k-j.
                if (mm + 1 <= kk - 1) {
                    group(static_cast<std::size_t>(mm + 1), K - 1, p(kk - mm - 1, kk - j));
                }
                group(K, K, -(p(kk - mm, kk - j) - p(kk - mm - 1, kk - j)));
                break;
        }

        std::vector<bool> covered(m.rows(), false);
        check.argument = 0;
        bool groups_match = true;
        for (auto& g : check.groups) {
            for (std::size_t r = g.first_row; r <= g.last_row; ++r) {
                g.actual += m.at(r, c);
                if (covered[r]) groups_match = false;
                covered[r] = true;
            }
            check.argument += g.closed_form;
            if (g.actual != g.closed_form) groups_match = false;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!covered[r] && m.at(r, c) != 0) check.uncovered_rows_zero = false;
        }

        check.passed = groups_match && check.uncovered_rows_zero && check.argument == check.target &&
                       check.actual_sum == check.target;
        auto& tally = report.tallies[check.label];
        (check.passed ? tally.passed : tally.failed) += 1;
        report.columns.push_back(std::move(check));
    }
    return report;
}

ProofTranscript certify_divisibility(int k) {
    require_order(k, "certify_divisibility");
    ProofTranscript t;
    t.k = k;
    t.r_poly = r_poly(k);
    t.p_poly = p_poly(k);
    t.p_composed = compose_power(t.p_poly, static_cast<std::size_t>(k));
    t.q_poly = q_poly(k);

    auto [quot, rem] = divrem(t.p_composed, t.r_poly);
    t.quotient = std::move(quot);
    t.division_remainder = std::move(rem);
    t.quotient_matches = t.quotient == t.q_poly;
    t.remultiplied = (-t.r_poly) * t.q_poly == -t.p_composed;

    const ProofMatrix m = ProofMatrix::build(k);
    const IntPoly neg_pk = -t.p_composed;
    t.column_sums_ok = true;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.column_sums()[c] != neg_pk.coeff(c)) t.column_sums_ok = false;
    }

    const auto P = TriangleP::generate(static_cast<std::size_t>(k));
    const auto Q = TriangleQ::from(P);
    const auto cells = symbolic_matrix(k);
    t.symbolic_ok = cells.size() == m.entries().size();
    for (std::size_t i = 0; t.symbolic_ok && i < cells.size(); ++i) {
        if (cells[i].value(P, Q) != m.entries()[i]) t.symbolic_ok = false;
    }

    t.cases = verify_case_sums(m);
    t.matrix_verified = t.column_sums_ok && t.symbolic_ok && t.cases.failures() == 0;
    t.conclusion = t.division_remainder.is_zero() && t.quotient_matches && t.remultiplied &&
                   t.matrix_verified;
    return t;
}

}  // namespace kstep::prover
