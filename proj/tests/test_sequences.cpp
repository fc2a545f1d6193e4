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

#include "kstep/errors.hpp"
#include "kstep/prover.hpp"
#include "kstep/sequences.hpp"

using kstep::BigInt;
namespace seq = kstep::sequences;

namespace {

std::vector<BigInt> big_list(std::initializer_list<long> values) {
    std::vector<BigInt> v;
    for (long x : values) v.emplace_back(x);
    return v;
}

std::vector<BigInt> every(const seq::SequenceWindow& w, std::int64_t from, std::int64_t step, int count) {
    std::vector<BigInt> out;
    for (int i = 0; i < count; ++i) out.push_back(w.at(from + step * i));
    return out;
}

}  // namespace

TEST_SUITE("sequences") {
    TEST_CASE("kbonacci") {
        const auto fib = seq::evaluate_window(seq::kbonacci(2), 0, 7);
        CHECK(fib.values == big_list({0, 1, 1, 2, 3, 5, 8, 13}));

        const auto trib = seq::evaluate_window(seq::kbonacci(3), 0, 18);
        CHECK(every(trib, 0, 3, 7) == big_list({0, 1, 7, 44, 274, 1705, 10609}));

        const auto tetra = seq::evaluate_window(seq::kbonacci(4), 0, 24);
        CHECK(every(tetra, 0, 4, 7) == big_list({0, 1, 15, 208, 2872, 39648, 547337}));

        CHECK_THROWS_AS(seq::kbonacci(1), kstep::OrderTooSmall);
    }

    TEST_CASE("evaluate_window extends backwards") {
        CHECK(seq::evaluate_window(seq::kbonacci(2), -4, 4).values == big_list({-3, 2, -1, 1, 0, 1, 1, 2, 3}));
        CHECK(seq::evaluate_window(seq::kbonacci(3), -3, 2).values == big_list({0, -1, 1, 0, 0, 1}));

        const auto rec = seq::random_recurrence_instance(5, 11);
        const auto w = seq::evaluate_window(rec, 0, 4);
        CHECK(w.values == std::vector<BigInt>(rec.initial().begin(), rec.initial().end()));
    }

    TEST_CASE("non-unit last coefficient") {
        // a_n = a_{n-1} + 2 a_{n-2}: backward needs (a_{m+2} - a_{m+1}) / 2.
        const seq::LinearRecurrence even({1, 2}, big_list({1, 3}), 0);
        CHECK(seq::evaluate_window(even, -1, 3).values == big_list({1, 1, 3, 5, 11}));

        const seq::LinearRecurrence odd({1, 2}, big_list({1, 2}), 0);
        CHECK_THROWS_AS(seq::evaluate_window(odd, -1, 3), kstep::NonIntegralBackwardStep);

        const seq::LinearRecurrence dead({1, 0}, big_list({1, 1}), 0);
        CHECK(seq::evaluate_window(dead, 0, 4).values == big_list({1, 1, 1, 1, 1}));
        CHECK_THROWS_AS(seq::evaluate_window(dead, -1, 4), kstep::InvalidRecurrence);

        CHECK_THROWS_AS(seq::LinearRecurrence({1, 1}, big_list({1}), 0), kstep::InvalidRecurrence);
    }

    TEST_CASE("recurrence holds forwards and backwards") {
        for (int k = 2; k <= 8; ++k) {
            const auto rec = seq::random_recurrence_instance(k, static_cast<std::uint64_t>(k));
            const auto w = seq::evaluate_window(rec, -40, 60);
            for (std::int64_t n = -40 + k; n <= 60; ++n) {
                BigInt sum = 0;
                for (int i = 1; i <= k; ++i) sum += w.at(n - i);
                CHECK(w.at(n) == sum);
            }
        }
    }

    TEST_CASE("windows are shift consistent") {
        const auto rec = seq::random_recurrence_instance(4, 5);
        const auto wide = seq::evaluate_window(rec, -30, 50);
        for (auto [lo, hi] : {std::pair{-30, 50}, {-7, 3}, {10, 50}, {-30, -29}, {0, 0}}) {
            CHECK(wide.slice(lo, hi).values == seq::evaluate_window(rec, lo, hi).values);
        }
    }

    TEST_CASE("check_identity") {
        const auto fib = seq::kbonacci(2);
        CHECK(seq::check_identity(fib, big_list({3, -1}), 2, 4, 50).passed);

        const auto report = seq::check_identity(seq::kbonacci(4), big_list({15, -17, 7, -1}), 4, 16, 60);
        CHECK(report.passed);
        CHECK(report.checks.size() == 45);

        const auto bad = seq::check_identity(fib, big_list({3, -2}), 2, 4, 10);
        CHECK_FALSE(bad.passed);
        REQUIRE(bad.first_failure.has_value());
        CHECK(*bad.first_failure == 5);
        CHECK(bad.checks.front().holds);  // F_4 = 3 = 3 F_2 - 2 F_0
        CHECK(bad.checks[1].lhs == 5);
        CHECK(bad.checks[1].rhs == 4);
    }

    TEST_CASE("check_identity rejects a narrow window") {
        const auto w = seq::evaluate_window(seq::kbonacci(2), 0, 20);
        CHECK_THROWS_AS(seq::check_identity(w, big_list({3, -1}), 2, 2, 20), kstep::WindowTooNarrow);
        CHECK_THROWS_AS(seq::check_identity(w, big_list({3, -1}), 2, 4, 21), kstep::WindowTooNarrow);
        CHECK(seq::check_identity(w, big_list({3, -1}), 2, 4, 20).passed);
    }

    TEST_CASE("random instances") {
        const auto a = seq::random_recurrence_instance(2, 42);
        const auto b = seq::random_recurrence_instance(2, 42);
        CHECK(std::vector<BigInt>(a.initial().begin(), a.initial().end()) ==
              std::vector<BigInt>(b.initial().begin(), b.initial().end()));
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto r = seq::random_recurrence_instance(3, seed);
            for (const auto& v : r.initial()) {
                CHECK(v >= -9);
                CHECK(v <= 9);
            }
            for (const auto& c : r.coefficients()) CHECK(c == 1);
        }
    }

    TEST_CASE("stride-k identity holds on every residue class") {
        for (int k = 2; k <= 8; ++k) {
            const auto coeffs = kstep::prover::identity_coefficients(k);
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto rec = seq::random_recurrence_instance(k, seed);
                const auto report = seq::check_identity(rec, coeffs, k, -20, 100);
                CHECK(report.passed);
                for (int c = 0; c < k; ++c) {
                    bool residue_ok = true;
                    int seen = 0;
                    for (const auto& chk : report.checks) {
                        if (((chk.n % k) + k) % k == c) {
                            residue_ok = residue_ok && chk.holds;
                            ++seen;
                        }
                    }
                    CHECK(seen > 0);
                    CHECK(residue_ok);
                }
            }
        }
    }
}
