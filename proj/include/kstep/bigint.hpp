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

#ifndef KSTEP_BIGINT_HPP
#define KSTEP_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kstep {

// Exact signed integer of unbounded size. GMP keeps zero canonical.
using BigInt = mpz_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline bool fits_int64(const BigInt& v) { return v.fits_slong_p(); }

}  // namespace kstep

#endif
