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

#ifndef KSTEP_RENDER_HPP
#define KSTEP_RENDER_HPP

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kstep/bigint.hpp"
#include "kstep/poly.hpp"

namespace kstep::render {

enum class OutputFormat { Tsv, Markdown, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// GitHub-style pipe table, right-aligned columns, LF line endings.
std::string markdown(const Table& t);
// Tab-separated; the header line is emitted only when requested.
std::string tsv(const Table& t, bool with_header);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(std::span<const BigInt> values);
// Ascending coefficient array.
nlohmann::json to_json(const IntPoly& p);

std::string join(std::span<const BigInt> values, std::string_view sep);

}  // namespace kstep::render

#endif
