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

#ifndef KSTEP_DECIMATION_HPP
#define KSTEP_DECIMATION_HPP

#include <cstddef>
#include <vector>

#include "kstep/bigint.hpp"
#include "kstep/poly.hpp"

// Stride decimation of monic integer recurrences through companion-matrix
// powers. Nothing here touches the P/Q triangles, so it serves as an
// independent oracle for the prover.
namespace kstep::decimation {

class IntMatrix {
   public:
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::size_t n, std::vector<BigInt> row_major);
    static IntMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
    const std::vector<BigInt>& entries() const noexcept { return entries_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

   private:
    std::size_t n_;
    std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const BigInt& s, const IntMatrix& a);

// First row carries [c_1..c_k] for charpoly = X^k - sum c_i X^(k-i), ones on
// the subdiagonal. Throws NotMonic for a non-monic or constant input.
IntMatrix companion_matrix(const IntPoly& charpoly);

// Repeated squaring; e >= 1.
IntMatrix matrix_power(const IntMatrix& m, std::size_t e);

// det(X I - m) by Bareiss elimination over Z[X]. Each Bareiss division is
// exact, so no rational coefficients ever appear.
IntPoly char_poly(const IntMatrix& m);

// p(m) by Horner's rule on matrices.
IntMatrix evaluate_at_matrix(const IntPoly& p, const IntMatrix& m);

// Characteristic polynomial of the stride-decimated sequence.
IntPoly decimated_charpoly(const IntPoly& rec_charpoly, std::size_t stride);

}  // namespace kstep::decimation

#endif
