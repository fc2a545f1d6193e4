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

#include <doctest.h>

#include <map>
#include <string>

#include "kstep/errors.hpp"
#include "kstep/prover.hpp"
#include "reference_tables.hpp"
#include "test_support.hpp"

using kstep::BigInt;
using kstep::IntPoly;
namespace prover = kstep::prover;
using prover::CaseLabel;

namespace {

std::string case_string(int k) {
    std::string s;
    for (std::int64_t c = 0; c <= static_cast<std::int64_t>(k) * k; ++c) {
        s += prover::to_char(prover::classify_column(k, c));
    }
    return s;
}

}  // namespace

TEST_SUITE("prover") {
    TEST_CASE("r_poly") {
        CHECK(prover::r_poly(2) == IntPoly{-1, -1, 1});
        CHECK(prover::r_poly(3) == IntPoly{-1, -1, -1, 1});
        CHECK(prover::r_poly(5) == IntPoly{-1, -1, -1, -1, -1, 1});
        CHECK_THROWS_AS(prover::r_poly(1), kstep::OrderTooSmall);
    }

    TEST_CASE("p_poly") {
        CHECK(prover::p_poly(2) == IntPoly{1, -3, 1});
        CHECK(prover::p_poly(4) == IntPoly{1, -7, 17, -15, 1});
        CHECK(prover::p_poly(5) == IntPoly{-1, 9, -31, 49, -31, 1});
        CHECK_THROWS_AS(prover::p_poly(0), kstep::OrderTooSmall);
    }

    TEST_CASE("q_poly") {
        CHECK(prover::q_poly(2) == IntPoly{-1, 1, 1});
        // X^20 + X^19 + 2X^18 + 4X^17 + 8X^16 - 15X^15 - X^13 - 4X^12 - 12X^11
        //      + 17X^10 + X^7 + 6X^6 - 7X^5 - X + 1
        const IntPoly q5{1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1};
        CHECK(prover::q_poly(5) == q5);
        std::size_t terms = 0;
        for (const auto& c : q5.coeffs()) terms += c != 0;
        CHECK(terms == 15);
        CHECK(prover::q_poly(3) == IntPoly{1, -1, 0, -3, 2, 1, 1});
    }

    TEST_CASE("q_poly times r_poly is p_poly(X^k)") {
        for (int k = 2; k <= 25; ++k) {
            CAPTURE(k);
            const IntPoly lhs = test_support::schoolbook_product(prover::r_poly(k), prover::q_poly(k));
            CHECK(lhs == kstep::compose_power(prover::p_poly(k), static_cast<std::size_t>(k)));
        }
    }

    TEST_CASE("identity_coefficients") {
        auto big = [](std::initializer_list<long> v) { return std::vector<BigInt>(v.begin(), v.end()); };
        CHECK(prover::identity_coefficients(2) == big({3, -1}));
        CHECK(prover::identity_coefficients(3) == big({7, -5, 1}));
        CHECK(prover::identity_coefficients(4) == big({15, -17, 7, -1}));
    }

    TEST_CASE("characteristic_poly_of_identity") {
        const std::vector<BigInt> fib{1, 1};
        CHECK(prover::characteristic_poly_of_identity(fib) == IntPoly{-1, -1, 1});
        const std::vector<BigInt> even{3, -1};
        CHECK(prover::characteristic_poly_of_identity(even) == IntPoly{1, -3, 1});
        const std::vector<BigInt> one{7};
        CHECK(prover::characteristic_poly_of_identity(one) == IntPoly{-7, 1});
        CHECK_THROWS_AS(prover::characteristic_poly_of_identity(std::vector<BigInt>{}), kstep::EmptyCoefficients);
        CHECK(prover::recurrence_coefficients(IntPoly{1, -3, 1}) == even);
        CHECK_THROWS_AS(prover::recurrence_coefficients(IntPoly{1, 2}), kstep::NotMonic);
    }

    TEST_CASE("certify_divisibility") {
        const auto t2 = prover::certify_divisibility(2);
        CHECK(t2.conclusion);
        CHECK(t2.quotient == IntPoly{-1, 1, 1});

        const auto t5 = prover::certify_divisibility(5);
        CHECK(t5.conclusion);
        CHECK(t5.quotient == prover::q_poly(5));
        CHECK(t5.division_remainder.is_zero());

        const auto t25 = prover::certify_divisibility(25);
        CHECK(t25.conclusion);
        CHECK(t25.remultiplied);
        CHECK(t25.matrix_verified);
    }

    TEST_CASE("build_matrix for k = 2") {
        const auto m = prover::build_matrix(2);
        const long expected[3][5] = {{-1, 1, 1, 0, 0}, {0, -1, 1, 1, 0}, {0, 0, 1, -1, -1}};
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 5; ++c) CHECK(m.at(r, c) == expected[r][c]);
        }
        const long sums[5] = {-1, 0, 3, 0, -1};
        for (std::size_t c = 0; c < 5; ++c) CHECK(m.column_sums()[c] == sums[c]);
    }

    TEST_CASE("build_matrix for k = 5 reproduces the reference tables") {
        const auto m = prover::build_matrix(5);
        REQUIRE(m.rows() == 6);
        REQUIRE(m.cols() == 26);
        for (std::size_t r = 0; r < 6; ++r) {
            for (std::size_t c = 0; c < 26; ++c) {
                CAPTURE(r);
                CAPTURE(c);
                CHECK(m.at(r, c) == reference_tables::kMatrix5[r][c]);
            }
        }
        for (std::size_t c = 0; c < 26; ++c) CHECK(m.column_sums()[c] == reference_tables::kMatrix5[6][c]);
        std::string cases;
        for (auto l : m.column_cases()) cases += prover::to_char(l);
        CHECK(cases == reference_tables::kCases5);
    }

    TEST_CASE("symbolic view for k = 5") {
        const auto cells = prover::symbolic_matrix(5);
        REQUIRE(cells.size() == 6 * 26);
        for (std::size_t c = 0; c < 26; ++c) {
            CHECK(cells[c].label() == reference_tables::kSymbolicRow0[c]);
            CHECK(cells[5 * 26 + c].label() == reference_tables::kSymbolicRow5[c]);
        }
        // Trailing Q_{2,2} entries of the third block reach columns 15 and 16.
        CHECK(cells[2 * 26 + 15].label() == "Q_{2,2}");
        CHECK(cells[3 * 26 + 15].label() == "Q_{3,2}");
        CHECK(cells[4 * 26 + 15].label() == "Q_{4,2}");
        CHECK(cells[3 * 26 + 16].label() == "Q_{2,2}");
        CHECK(cells[4 * 26 + 16].label() == "Q_{3,2}");
    }

    TEST_CASE("symbolic and numeric views agree") {
        for (int k = 2; k <= 12; ++k) {
            const auto m = prover::build_matrix(k);
            const auto P = kstep::triangles::TriangleP::generate(static_cast<std::size_t>(k));
            const auto Q = kstep::triangles::TriangleQ::from(P);
            const auto cells = prover::symbolic_matrix(k);
            for (std::size_t i = 0; i < cells.size(); ++i) CHECK(cells[i].value(P, Q) == m.entries()[i]);
        }
    }

    TEST_CASE("classify_column") {
        CHECK(case_string(5) == "ABBBBCEBBBCEEBBCEEEBDDDDDA");
        CHECK(case_string(2) == "ABDDA");
        CHECK_THROWS_AS(prover::classify_column(5, 26), kstep::ColumnOutOfRange);
        CHECK_THROWS_AS(prover::classify_column(5, -1), kstep::ColumnOutOfRange);
    }

    TEST_CASE("case families partition the columns") {
        for (int k = 2; k <= 50; ++k) {
            std::map<CaseLabel, long> counts;
            for (std::int64_t c = 0; c <= static_cast<std::int64_t>(k) * k; ++c) counts[prover::classify_column(k, c)]++;
            // Sizes of each family counted from its defining ranges.
            const long kk = k;
            CHECK(counts[CaseLabel::A] == 2);
            CHECK(counts[CaseLabel::B] == (kk - 1) * kk / 2);
            CHECK(counts[CaseLabel::C] == kk - 2);
            CHECK(counts[CaseLabel::D] == kk);
            CHECK(counts[CaseLabel::E] == (kk - 2) * (kk - 1) / 2);
            long total = 0;
            for (auto& [l, n] : counts) total += n;
            CHECK(total == kk * kk + 1);
        }
    }

    TEST_CASE("verify_case_sums") {
        for (int k = 2; k <= 12; ++k) {
            CAPTURE(k);
            const auto report = prover::verify_case_sums(k);
            CHECK(report.failures() == 0);
            CHECK(report.columns.size() == static_cast<std::size_t>(k * k + 1));
        }

        const auto r5 = prover::verify_case_sums(5);
        CHECK(r5.columns[0].target == 1);
        CHECK(r5.columns[0].argument == 1);
        CHECK(r5.columns[15].label == CaseLabel::C);
        CHECK(r5.columns[15].argument == -49);

        const auto& col16 = r5.columns[16];
        CHECK(col16.label == CaseLabel::E);
        // X^16 for k = 5: rows 0, 1, 2..4, 5.
        REQUIRE(col16.groups.size() == 4);
        CHECK(col16.groups[0].closed_form == 8);
        CHECK(col16.groups[1].closed_form == -15);
        CHECK(col16.groups[2].closed_form == -5);
        CHECK(col16.groups[3].closed_form == 12);
        CHECK(col16.argument == 0);
        CHECK(col16.passed);
    }

    TEST_CASE("column sums follow P_{k,k-j} at multiples of k") {
        for (int k = 2; k <= 12; ++k) {
            const auto m = prover::build_matrix(k);
            const auto row = kstep::triangles::p_row(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) {
                CHECK(m.column_sums()[static_cast<std::size_t>(j * k)] == row[static_cast<std::size_t>(k - j)]);
            }
            CHECK(m.column_sums().back() == -1);
        }
    }
}
