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

#ifndef KSTEP_POLY_HPP
#define KSTEP_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kstep/bigint.hpp"

namespace kstep {

/*
 * Dense univariate polynomial over the integers.
 *
 * Coefficients are stored in ascending exponent order, coeffs()[i] being the
 * coefficient of X^i. The representation is always normalized: the zero
 * polynomial has no coefficients and a nonzero polynomial never ends in a
 * zero coefficient. Values are immutable once built; every operation below
 * returns a fresh polynomial.
 */
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly monomial(const BigInt& coeff, std::size_t exponent);
    // Builds from coefficients listed leading-first, e.g. {1, -1, -1} is X^2-X-1.
    static IntPoly from_descending(std::span<const BigInt> descending);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Throws DegreeOfZero for the zero polynomial.
    std::size_t degree() const;
    const BigInt& leading() const;
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    // Coefficient of X^i; zero past the end.
    BigInt coeff(std::size_t i) const;
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

   private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& s, const IntPoly& a);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly negate(const IntPoly& a);
IntPoly multiply(const IntPoly& a, const IntPoly& b);

// Classical long division. Throws DivisionByZero for a zero divisor and
// NonIntegralQuotient when a step would need a fractional coefficient.
DivRem divrem(const IntPoly& num, const IntPoly& den);

// Quotient of a division that must be exact; throws NonIntegralQuotient otherwise.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

// p(X^k).
IntPoly compose_power(const IntPoly& p, std::size_t k);

// p(q(X)) by Horner's rule.
IntPoly compose(const IntPoly& p, const IntPoly& q);

// X^n * p(1/X). Throws WindowTooSmall if n < degree(p).
IntPoly reverse(const IntPoly& p, std::size_t n);

// X^n * p.
IntPoly shift(const IntPoly& p, std::size_t n);

BigInt evaluate(const IntPoly& p, const BigInt& x);

// Descending powers with explicit signs: "X^4-3X^2+1", "-X+1", "0".
std::string to_string(const IntPoly& p);

}  // namespace kstep

#endif
