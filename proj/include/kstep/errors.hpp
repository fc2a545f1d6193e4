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

#ifndef KSTEP_ERRORS_HPP
#define KSTEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kstep {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define KSTEP_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                     \
       public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

KSTEP_DEFINE_ERROR(DivisionByZero);
KSTEP_DEFINE_ERROR(NonIntegralQuotient);
KSTEP_DEFINE_ERROR(DegreeOfZero);
KSTEP_DEFINE_ERROR(WindowTooSmall);
KSTEP_DEFINE_ERROR(NegativeRow);
KSTEP_DEFINE_ERROR(OrderTooSmall);
KSTEP_DEFINE_ERROR(NonIntegralBackwardStep);
KSTEP_DEFINE_ERROR(WindowTooNarrow);
KSTEP_DEFINE_ERROR(ColumnOutOfRange);
KSTEP_DEFINE_ERROR(EmptyCoefficients);
KSTEP_DEFINE_ERROR(NotMonic);
KSTEP_DEFINE_ERROR(InvalidRecurrence);

#undef KSTEP_DEFINE_ERROR

}  // namespace kstep

#endif
