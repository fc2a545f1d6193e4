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

#include "kstep/render.hpp"

#include <sstream>

namespace kstep::render {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "tsv") return OutputFormat::Tsv;
    if (name == "markdown") return OutputFormat::Markdown;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

namespace {

void markdown_line(std::ostringstream& os, const std::vector<std::string>& cells) {
    os << '|';
    for (const auto& c : cells) os << ' ' << c << " |";
    os << '\n';
}

}  // namespace

std::string markdown(const Table& t) {
    std::ostringstream os;
    markdown_line(os, t.header);
    os << '|';
    for (std::size_t i = 0; i < t.header.size(); ++i) os << "---:|";
    os << '\n';
    for (const auto& row : t.rows) markdown_line(os, row);
    return os.str();
}

std::string tsv(const Table& t, bool with_header) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
        os << '\n';
    };
    if (with_header) line(t.header);
    for (const auto& row : t.rows) line(row);
    return os.str();
}

nlohmann::json to_json(const BigInt& v) {
    if (fits_int64(v)) return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
    return nlohmann::json(v.get_str());
}

nlohmann::json to_json(std::span<const BigInt> values) {
    auto arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
}

nlohmann::json to_json(const IntPoly& p) { return to_json(p.coeffs()); }

std::string join(std::span<const BigInt> values, std::string_view sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += values[i].get_str();
    }
    return s;
}

}  // namespace kstep::render
