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

#ifndef KSTEP_PROVER_HPP
#define KSTEP_PROVER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kstep/bigint.hpp"
#include "kstep/poly.hpp"
#include "kstep/triangles.hpp"

namespace kstep::prover {

// X^k - X^(k-1) - ... - X - 1, the minimal polynomial of the k-step sequence.
IntPoly r_poly(int k);

// X^k - sum_{i=1..k} P[k][i] X^(k-i).
IntPoly p_poly(int k);

/*
 * The explicit quotient of p_k(X^k) by r_k(X):
 *
 *   q_k = X^(k(k-1)) + sum_{j=0}^{k-2} X^(kj) ( -P[k-1][k-1-j]
 *                                  + sum_{i=k-1-j}^{k-1} Q[i][k-1-j] X^(k-i) )
 *
 * assembled from triangle entries, never by division.
 */
IntPoly q_poly(int k);

// [P[k][1], ..., P[k][k]]: a_n = sum_i P[k][i] a_{n-ki}.
std::vector<BigInt> identity_coefficients(int k);

// X^n - sum c_i X^(n-i) for the identity a_m = sum c_i a_{m-i}.
IntPoly characteristic_poly_of_identity(std::span<const BigInt> coeffs);

// Inverse of the above for a monic polynomial; throws NotMonic.
std::vector<BigInt> recurrence_coefficients(const IntPoly& monic);

enum class CaseLabel { A, B, C, D, E };
inline constexpr CaseLabel kAllCases[] = {CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::D,
                                          CaseLabel::E};
char to_char(CaseLabel label);

// Case family of column c of M, 0 <= c <= k^2; throws ColumnOutOfRange.
CaseLabel classify_column(int k, std::int64_t c);

// One cell of M named by the triangle entry that occupies it.
struct SymbolicCell {
    enum class Kind { Zero, One, P, Q };
    Kind kind = Kind::Zero;
    bool negated = false;
    int row = 0;
    int col = 0;

    std::string label() const;  // "", "1", "-P_{4,4}", "Q_{3,2}", ...
    BigInt value(const triangles::TriangleP& p, const triangles::TriangleQ& q) const;
};

/*
 * The long-hand product (-r_k) * q_k laid out as a (k+1) x (k^2+1) array.
 * Row r < k holds the coefficients of X^r q_k, row k those of -X^k q_k, and
 * column c is labelled by X^c. Column sums reproduce -p_k(X^k).
 */
class ProofMatrix {
   public:
    static ProofMatrix build(int k);

    int k() const noexcept { return k_; }
    std::size_t rows() const noexcept { return static_cast<std::size_t>(k_) + 1; }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(k_ * k_) + 1; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols() + c); }
    std::span<const BigInt> entries() const noexcept { return entries_; }
    std::span<const CaseLabel> column_cases() const noexcept { return cases_; }
    std::span<const BigInt> column_sums() const noexcept { return sums_; }

   private:
    int k_ = 0;
    std::vector<BigInt> entries_;
    std::vector<CaseLabel> cases_;
    std::vector<BigInt> sums_;
};

ProofMatrix build_matrix(int k);

// Row-major (k+1) x (k^2+1) symbolic view of M derived from the block layout of q_k.
std::vector<SymbolicCell> symbolic_matrix(int k);

// A contiguous run of rows of one column together with the closed form the
// proof assigns to their sum.
struct ColumnGroup {
    std::size_t first_row;
    std::size_t last_row;
    BigInt closed_form;
    BigInt actual;
};

struct ColumnCheck {
    std::size_t column = 0;
    CaseLabel label = CaseLabel::A;
    std::vector<ColumnGroup> groups;
    BigInt argument;    // sum of the group closed forms
    BigInt target;      // coefficient of X^c in -p_k(X^k)
    BigInt actual_sum;  // column sum of M
    bool uncovered_rows_zero = true;
    bool passed = false;
};

struct CaseTally {
    int passed = 0;
    int failed = 0;
};

struct CaseReport {
    int k = 0;
    std::map<CaseLabel, CaseTally> tallies;
    std::vector<ColumnCheck> columns;

    int failures() const;
};

// Re-derives each column sum from its case argument (triangle recursion,
// telescoping, powers of two, four-group split) and checks it against both
// the actual column sum and -p_k(X^k).
CaseReport verify_case_sums(int k);
CaseReport verify_case_sums(const ProofMatrix& m);

struct ProofTranscript {
    int k = 0;
    IntPoly r_poly;
    IntPoly p_poly;
    IntPoly p_composed;  // p_k(X^k)
    IntPoly q_poly;
    IntPoly quotient;  // by long division
    IntPoly division_remainder;
    bool quotient_matches = false;
    bool remultiplied = false;   // (-r_k) q_k == -p_k(X^k)
    bool column_sums_ok = false;
    bool symbolic_ok = false;
    bool matrix_verified = false;
    CaseReport cases;
    bool conclusion = false;
};

// Failures are recorded in the transcript, not thrown.
ProofTranscript certify_divisibility(int k);

}  // namespace kstep::prover

#endif
