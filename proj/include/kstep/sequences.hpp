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

#ifndef KSTEP_SEQUENCES_HPP
#define KSTEP_SEQUENCES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kstep/bigint.hpp"

namespace kstep::sequences {

/*
 * a_n = c_1 a_{n-1} + ... + c_k a_{n-k}, seeded with a_base .. a_{base+k-1}.
 *
 * Values below base are solved backwards through c_k, which must then be
 * nonzero and divide every step exactly.
 */
class LinearRecurrence {
   public:
    LinearRecurrence(std::vector<BigInt> coefficients, std::vector<BigInt> initial,
                     std::int64_t base = 0);

    std::size_t order() const noexcept { return coefficients_.size(); }
    std::span<const BigInt> coefficients() const noexcept { return coefficients_; }
    std::span<const BigInt> initial() const noexcept { return initial_; }
    std::int64_t base() const noexcept { return base_; }

   private:
    std::vector<BigInt> coefficients_;
    std::vector<BigInt> initial_;
    std::int64_t base_;
};

struct SequenceWindow {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::vector<BigInt> values;

    bool contains(std::int64_t n) const noexcept { return n >= lo && n <= hi; }
    const BigInt& at(std::int64_t n) const;
    // Sub-window [from, to], which must lie inside this one.
    SequenceWindow slice(std::int64_t from, std::int64_t to) const;
};

struct IdentityCheck {
    std::int64_t n;
    BigInt lhs;
    BigInt rhs;
    bool holds;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool passed = true;
    std::optional<std::int64_t> first_failure;
};

// k-step Fibonacci with k-1 zeros then a one at indices 0..k-1. Throws
// OrderTooSmall for k < 2.
LinearRecurrence kbonacci(int k);

// Values for lo..hi. Throws NonIntegralBackwardStep when solving below base
// hits an inexact division, InvalidRecurrence when c_k is zero.
SequenceWindow evaluate_window(const LinearRecurrence& rec, std::int64_t lo, std::int64_t hi);

// Checks a_n == sum_j coeffs[j] * a_{n - stride*(j+1)} for every n in [lo, hi]
// against a precomputed window. Throws WindowTooNarrow if the window misses
// any needed index.
IdentityReport check_identity(const SequenceWindow& window, std::span<const BigInt> identity_coeffs,
                              std::int64_t stride, std::int64_t lo, std::int64_t hi);

// Same, evaluating exactly the window the check needs.
IdentityReport check_identity(const LinearRecurrence& rec, std::span<const BigInt> identity_coeffs,
                              std::int64_t stride, std::int64_t lo, std::int64_t hi);

// All-ones coefficients with seeded initial values in [-9, 9].
LinearRecurrence random_recurrence_instance(int k, std::uint64_t seed);

}  // namespace kstep::sequences

#endif
