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

#include "kstep/sequences.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "kstep/errors.hpp"

namespace kstep::sequences {

LinearRecurrence::LinearRecurrence(std::vector<BigInt> coefficients, std::vector<BigInt> initial,
                                   std::int64_t base)
    : coefficients_(std::move(coefficients)), initial_(std::move(initial)), base_(base) {
    if (coefficients_.empty()) throw InvalidRecurrence("recurrence order must be positive");
    if (coefficients_.size() != initial_.size()) {
        throw InvalidRecurrence("recurrence needs exactly one initial value per coefficient");
    }
}

const BigInt& SequenceWindow::at(std::int64_t n) const {
    if (!contains(n)) {
        throw std::out_of_range("index " + std::to_string(n) + " outside window [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return values[static_cast<std::size_t>(n - lo)];
}

SequenceWindow SequenceWindow::slice(std::int64_t from, std::int64_t to) const {
    if (from > to || !contains(from) || !contains(to)) throw std::out_of_range("bad slice");
    SequenceWindow w{from, to, {}};
    w.values.assign(values.begin() + (from - lo), values.begin() + (to - lo) + 1);
    return w;
}

LinearRecurrence kbonacci(int k) {
    if (k < 2) throw OrderTooSmall("k-step Fibonacci needs k >= 2, got " + std::to_string(k));
    const auto n = static_cast<std::size_t>(k);
    std::vector<BigInt> init(n, BigInt(0));
    init.back() = 1;
    return LinearRecurrence(std::vector<BigInt>(n, BigInt(1)), std::move(init), 0);
}

SequenceWindow evaluate_window(const LinearRecurrence& rec, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("evaluate_window needs lo <= hi");
    const auto k = static_cast<std::int64_t>(rec.order());
    const auto c = rec.coefficients();
    const std::int64_t base = rec.base();

    // Materialize the span covering both the request and the seeds.
    const std::int64_t from = std::min(lo, base);
    const std::int64_t to = std::max(hi, base + k - 1);
    std::vector<BigInt> v(static_cast<std::size_t>(to - from + 1));
    auto slot = [&](std::int64_t n) -> BigInt& { return v[static_cast<std::size_t>(n - from)]; };

    for (std::int64_t i = 0; i < k; ++i) slot(base + i) = rec.initial()[static_cast<std::size_t>(i)];

    for (std::int64_t n = base + k; n <= to; ++n) {
        BigInt acc = 0;
        for (std::int64_t i = 1; i <= k; ++i) acc += c[static_cast<std::size_t>(i - 1)] * slot(n - i);
        slot(n) = std::move(acc);
    }

    if (from < base) {
        const BigInt& ck = c[static_cast<std::size_t>(k - 1)];
        if (ck == 0) throw InvalidRecurrence("backward extension needs a nonzero last coefficient");
        // a_{m-k} = (a_m - sum_{i<k} c_i a_{m-i}) / c_k
        for (std::int64_t target = base - 1; target >= from; --target) {
            const std::int64_t m = target + k;
            BigInt acc = slot(m);
            for (std::int64_t i = 1; i < k; ++i) acc -= c[static_cast<std::size_t>(i - 1)] * slot(m - i);
            if (!mpz_divisible_p(acc.get_mpz_t(), ck.get_mpz_t())) {
                throw NonIntegralBackwardStep("a_" + std::to_string(target) + " = " + acc.get_str() +
                                              "/" + ck.get_str() + " is not an integer");
            }
            mpz_divexact(slot(target).get_mpz_t(), acc.get_mpz_t(), ck.get_mpz_t());
        }
    }

    SequenceWindow w{lo, hi, {}};
    w.values.assign(v.begin() + (lo - from), v.begin() + (hi - from) + 1);
    return w;
}

IdentityReport check_identity(const SequenceWindow& window, std::span<const BigInt> identity_coeffs,
                              std::int64_t stride, std::int64_t lo, std::int64_t hi) {
    if (stride < 1) throw std::invalid_argument("stride must be positive");
    if (lo > hi) throw std::invalid_argument("check_identity needs lo <= hi");
    const auto terms = static_cast<std::int64_t>(identity_coeffs.size());
    const std::int64_t need_lo = lo - stride * terms;
    if (!window.contains(need_lo) || !window.contains(hi)) {
        throw WindowTooNarrow("identity over [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] needs indices " + std::to_string(need_lo) + ".." +
                              std::to_string(hi));
    }

    IdentityReport report;
    report.checks.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) {
        BigInt rhs = 0;
        for (std::int64_t j = 0; j < terms; ++j) {
            rhs += identity_coeffs[static_cast<std::size_t>(j)] * window.at(n - stride * (j + 1));
        }
        const BigInt& lhs = window.at(n);
        const bool holds = lhs == rhs;
        if (!holds && report.passed) {
            report.passed = false;
            report.first_failure = n;
        }
        report.checks.push_back({n, lhs, std::move(rhs), holds});
    }
    return report;
}

IdentityReport check_identity(const LinearRecurrence& rec, std::span<const BigInt> identity_coeffs,
                              std::int64_t stride, std::int64_t lo, std::int64_t hi) {
    if (stride < 1) throw std::invalid_argument("stride must be positive");
    const auto terms = static_cast<std::int64_t>(identity_coeffs.size());
    const auto window = evaluate_window(rec, lo - stride * terms, hi);
    return check_identity(window, identity_coeffs, stride, lo, hi);
}

LinearRecurrence random_recurrence_instance(int k, std::uint64_t seed) {
    if (k < 2) throw OrderTooSmall("random instance needs k >= 2, got " + std::to_string(k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    const auto n = static_cast<std::size_t>(k);
    std::vector<BigInt> init;
    init.reserve(n);
    for (std::size_t i = 0; i < n; ++i) init.emplace_back(dist(rng));
    return LinearRecurrence(std::vector<BigInt>(n, BigInt(1)), std::move(init), 0);
}

}  // namespace kstep::sequences
