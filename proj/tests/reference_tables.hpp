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

#ifndef KSTEP_REFERENCE_TABLES_HPP
#define KSTEP_REFERENCE_TABLES_HPP

#include <array>
#include <string_view>

// Hand-transcribed reference values for P, Q and the k = 5 product matrix. Zero marks
// cells right of the diagonal (or blank cells).
namespace reference_tables {

inline constexpr long kTableP[7][7] = {
    {-1, 0, 0, 0, 0, 0, 0},        {-1, 1, 0, 0, 0, 0, 0},         {-1, 3, -1, 0, 0, 0, 0},
    {-1, 7, -5, 1, 0, 0, 0},       {-1, 15, -17, 7, -1, 0, 0},     {-1, 31, -49, 31, -9, 1, 0},
    {-1, 63, -129, 111, -49, 11, -1},
};

inline constexpr long kTableQ[7][7] = {
    {0, 0, 0, 0, 0, 0, 0},       {0, 1, 0, 0, 0, 0, 0},          {0, 2, -1, 0, 0, 0, 0},
    {0, 4, -4, 1, 0, 0, 0},      {0, 8, -12, 6, -1, 0, 0},       {0, 16, -32, 24, -8, 1, 0},
    {0, 32, -80, 80, -40, 10, -1},
};

// Long-hand product for k = 5: rows X^0..X^4, -X^5, then SUM; columns 0..25.
inline constexpr long kMatrix5[7][26] = {
    {1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1, 0, 0, 0, 0},
    {0, 0, 1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1, 0, 0, 0},
    {0, 0, 0, 1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1, 0, 0},
    {0, 0, 0, 0, 1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1, 0},
    {0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 7, -6, -1, 0, 0, -17, 12, 4, 1, 0, 15, -8, -4, -2, -1, -1},
    {1, 0, 0, 0, 0, -9, 0, 0, 0, 0, 31, 0, 0, 0, 0, -49, 0, 0, 0, 0, 31, 0, 0, 0, 0, -1},
};

inline constexpr std::string_view kCases5 = "ABBBBCEBBBCEEBBCEEEBDDDDDA";

// Symbolic labels of rows X^0 and -X^5 for k = 5 ("" is a blank cell).
inline constexpr std::array<std::string_view, 26> kSymbolicRow0 = {
    "-P_{4,4}", "Q_{4,4}", "", "", "", "-P_{4,3}", "Q_{4,3}", "Q_{3,3}", "", "",
    "-P_{4,2}", "Q_{4,2}", "Q_{3,2}", "Q_{2,2}", "", "-P_{4,1}", "Q_{4,1}", "Q_{3,1}", "Q_{2,1}",
    "Q_{1,1}", "1", "", "", "", "", ""};
inline constexpr std::array<std::string_view, 26> kSymbolicRow5 = {
    "", "", "", "", "", "P_{4,4}", "-Q_{4,4}", "", "", "",
    "P_{4,3}", "-Q_{4,3}", "-Q_{3,3}", "", "", "P_{4,2}", "-Q_{4,2}", "-Q_{3,2}", "-Q_{2,2}",
    "", "P_{4,1}", "-Q_{4,1}", "-Q_{3,1}", "-Q_{2,1}", "-Q_{1,1}", "-1"};

}  // namespace reference_tables

#endif
