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

#include "kstep/poly.hpp"

#include <algorithm>
#include <sstream>

#include "kstep/errors.hpp"
#include "kstep/kernels.hpp"

namespace kstep {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(const BigInt& coeff, std::size_t exponent) {
    if (coeff == 0) return {};
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::from_descending(std::span<const BigInt> descending) {
    std::vector<BigInt> c(descending.rbegin(), descending.rend());
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw DegreeOfZero("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw DegreeOfZero("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    std::vector<BigInt> c(longer.coeffs().begin(), longer.coeffs().end());
    for (std::size_t i = 0; i < shorter.size(); ++i) c[i] += shorter.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return IntPoly(kernels::convolve(a.coeffs(), b.coeffs()));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return IntPoly(std::move(c));
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly negate(const IntPoly& a) { return -a; }
IntPoly multiply(const IntPoly& a, const IntPoly& b) { return a * b; }

DivRem divrem(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.is_zero() || num.degree() < den.degree()) return {IntPoly{}, num};

    const std::size_t dd = den.degree();
    const std::size_t nd = num.degree();
    const auto dc = den.coeffs();
    const BigInt& lc = dc[dd];

    std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
    std::vector<BigInt> quot(nd - dd + 1);
    BigInt t;
    for (std::size_t i = nd + 1; i-- > dd;) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t())) {
            throw NonIntegralQuotient("division step at X^" + std::to_string(i) + " needs " +
                                      rem[i].get_str() + "/" + lc.get_str());
        }
        mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
        const std::size_t shift = i - dd;
        for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= t * dc[j];
        quot[shift] = t;
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw NonIntegralQuotient("division leaves remainder " + to_string(r));
    return q;
}

IntPoly compose_power(const IntPoly& p, std::size_t k) {
    if (k == 0) throw std::invalid_argument("compose_power needs k >= 1");
    if (p.is_zero()) return {};
    std::vector<BigInt> c(p.degree() * k + 1);
    for (std::size_t i = 0; i < p.size(); ++i) c[i * k] = p.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
    IntPoly acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + IntPoly::monomial(p.coeffs()[i], 0);
    return acc;
}

IntPoly reverse(const IntPoly& p, std::size_t n) {
    if (p.is_zero()) return {};
    if (n < p.degree()) {
        throw WindowTooSmall("reverse window " + std::to_string(n) + " below degree " +
                             std::to_string(p.degree()));
    }
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i < p.size(); ++i) c[n - i] = p.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly shift(const IntPoly& p, std::size_t n) {
    if (p.is_zero()) return {};
    std::vector<BigInt> c(n + p.size());
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(n));
    return IntPoly(std::move(c));
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
    return acc;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = p.size(); e-- > 0;) {
        const BigInt& c = p.coeffs()[e];
        if (c == 0) continue;
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        const BigInt mag = abs(c);
        if (e == 0 || mag != 1) os << mag.get_str();
        if (e >= 1) os << 'X';
        if (e >= 2) os << '^' << e;
        first = false;
    }
    return os.str();
}

}  // namespace kstep
