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

#include "kstep/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "kstep/decimation.hpp"
#include "kstep/errors.hpp"
#include "kstep/prover.hpp"
#include "kstep/render.hpp"
#include "kstep/sequences.hpp"
#include "kstep/triangles.hpp"

namespace kstep::cli {

namespace {

using nlohmann::json;
using render::OutputFormat;
using render::Table;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string emit_json(const json& j) { return j.dump() + "\n"; }

std::string key_values(const std::vector<std::pair<std::string, std::string>>& kv, OutputFormat f) {
    Table t{{"item", "value"}, {}};
    for (const auto& [k, v] : kv) t.rows.push_back({k, v});
    return f == OutputFormat::Tsv ? render::tsv(t, false) : render::markdown(t);
}

// ---------------------------------------------------------------- triangle

int cmd_triangle(const std::string& kind, long rows, OutputFormat f, std::ostream& out) {
    if (rows < 0) throw UsageError("--rows must be >= 0");
    const auto last = static_cast<std::size_t>(rows);
    const auto P = triangles::TriangleP::generate(last);
    std::vector<triangles::Row> data;
    if (kind == "p") {
        for (std::size_t i = 0; i <= last; ++i) data.push_back(P.row(i));
    } else {
        const auto Q = triangles::TriangleQ::from(P);
        for (std::size_t i = 0; i <= last; ++i) data.push_back(Q.row(i));
    }

    if (f == OutputFormat::Json) {
        auto arr = json::array();
        for (const auto& row : data) arr.push_back(render::to_json(row));
        out << emit_json(arr);
        return kExitOk;
    }

    Table t;
    t.header.push_back("row");
    for (std::size_t j = 0; j <= last; ++j) t.header.push_back(std::to_string(j));
    for (std::size_t i = 0; i <= last; ++i) {
        std::vector<std::string> cells;
        if (f == OutputFormat::Markdown) cells.push_back(std::to_string(i));
        for (const auto& v : data[i]) cells.push_back(v.get_str());
        if (f == OutputFormat::Markdown) {
            for (std::size_t j = i + 1; j <= last; ++j) cells.emplace_back("0");
        }
        t.rows.push_back(std::move(cells));
    }
    out << (f == OutputFormat::Tsv ? render::tsv(t, false) : render::markdown(t));
    return kExitOk;
}

// ------------------------------------------------------------------- prove

Table matrix_table(const prover::ProofMatrix& m, bool symbolic, bool blank_zeros) {
    const int k = m.k();
    Table t;
    t.header.push_back("row");
    for (std::size_t c = 0; c < m.cols(); ++c) t.header.push_back("X^" + std::to_string(c));

    std::vector<std::string> cases{"Case"};
    for (auto label : m.column_cases()) cases.emplace_back(1, prover::to_char(label));
    t.rows.push_back(std::move(cases));

    std::vector<prover::SymbolicCell> cells;
    if (symbolic) cells = prover::symbolic_matrix(k);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        row.push_back(r < m.rows() - 1 ? "X^" + std::to_string(r) : "-X^" + std::to_string(r));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (symbolic) {
                row.push_back(cells[r * m.cols() + c].label());
            } else {
                const BigInt& v = m.at(r, c);
                row.push_back(v == 0 && blank_zeros ? "" : v.get_str());
            }
        }
        t.rows.push_back(std::move(row));
    }
    std::vector<std::string> sums{"SUM"};
    for (const auto& s : m.column_sums()) sums.push_back(s == 0 && blank_zeros ? "" : s.get_str());
    t.rows.push_back(std::move(sums));
    return t;
}

std::string identity_text(int k, std::span<const BigInt> coeffs) {
    std::ostringstream os;
    os << "a_n =";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const BigInt& c = coeffs[i];
        const BigInt mag = abs(c);
        os << (c < 0 ? " - " : (i ? " + " : " "));
        if (mag != 1) os << mag.get_str() << ' ';
        os << "a_{n-" << (static_cast<std::size_t>(k) * (i + 1)) << "}";
    }
    return os.str();
}

int cmd_prove(int k, bool show_matrix, bool symbolic, OutputFormat f, std::ostream& out) {
    if (k < 2) throw UsageError("--k must be >= 2");
    const auto t = prover::certify_divisibility(k);
    const auto coeffs = prover::identity_coefficients(k);
    const bool division_ok = t.division_remainder.is_zero() && t.quotient_matches;
    std::optional<prover::ProofMatrix> m;
    if (show_matrix) m = prover::build_matrix(k);

    if (f == OutputFormat::Json) {
        json j;
        j["k"] = k;
        j["r"] = render::to_json(t.r_poly);
        j["p"] = render::to_json(t.p_poly);
        j["p_composed"] = render::to_json(t.p_composed);
        j["q"] = render::to_json(t.q_poly);
        j["quotient"] = render::to_json(t.quotient);
        j["remainder"] = render::to_json(t.division_remainder);
        j["quotient_matches"] = t.quotient_matches;
        j["remultiplied"] = t.remultiplied;
        j["column_sums_ok"] = t.column_sums_ok;
        j["symbolic_ok"] = t.symbolic_ok;
        j["matrix_verified"] = t.matrix_verified;
        json cases = json::object();
        for (const auto& [label, tally] : t.cases.tallies) {
            cases[std::string(1, prover::to_char(label))] = {{"passed", tally.passed}, {"failed", tally.failed}};
        }
        j["cases"] = cases;
        j["identity"] = render::to_json(coeffs);
        j["conclusion"] = t.conclusion;
        if (m) {
            std::string labels;
            for (auto c : m->column_cases()) labels += prover::to_char(c);
            auto rows = json::array();
            for (std::size_t r = 0; r < m->rows(); ++r) {
                rows.push_back(render::to_json(m->entries().subspan(r * m->cols(), m->cols())));
            }
            j["matrix"] = {{"cases", labels}, {"rows", rows}, {"sums", render::to_json(m->column_sums())}};
        }
        out << emit_json(j);
        return t.conclusion ? kExitOk : kExitVerificationFailed;
    }

    std::vector<std::pair<std::string, std::string>> kv{
        {"k", std::to_string(k)},
        {"r_k(X)", to_string(t.r_poly)},
        {"p_k(X)", to_string(t.p_poly)},
        {"p_k(X^k)", to_string(t.p_composed)},
        {"q_k(X)", to_string(t.q_poly)},
        {"quotient p_k(X^k) / r_k(X)", to_string(t.quotient)},
        {"remainder", to_string(t.division_remainder)},
    };
    if (f == OutputFormat::Markdown) out << "## Proof for k = " << k << "\n\n";
    out << key_values(kv, f);
    if (f == OutputFormat::Markdown) out << '\n';

    std::vector<std::pair<std::string, std::string>> steps;
    for (const auto& [label, tally] : t.cases.tallies) {
        steps.emplace_back(std::string("case ") + prover::to_char(label),
                           std::to_string(tally.passed) + " pass, " + std::to_string(tally.failed) + " fail");
    }
    steps.emplace_back("column sums of M equal -p_k(X^k)", verdict(t.column_sums_ok));
    steps.emplace_back("symbolic M agrees with numeric M", verdict(t.symbolic_ok));
    steps.emplace_back("(-r_k) q_k = -p_k(X^k)", verdict(t.remultiplied));
    steps.emplace_back("p_k(X^k) = r_k q_k with integral q_k", verdict(division_ok));
    steps.emplace_back("identity " + identity_text(k, coeffs), verdict(t.conclusion));
    if (f == OutputFormat::Markdown) {
        for (const auto& [name, value] : steps) out << "- " << name << ": " << value << '\n';
    } else {
        for (const auto& [name, value] : steps) out << name << '\t' << value << '\n';
    }

    if (m) {
        const Table mt = matrix_table(*m, symbolic, f == OutputFormat::Markdown);
        out << (f == OutputFormat::Markdown ? "\n" + render::markdown(mt) : render::tsv(mt, true));
    }
    out << (f == OutputFormat::Markdown ? "\nVerdict: " : "verdict\t") << verdict(t.conclusion) << '\n';
    return t.conclusion ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------------ verify

int cmd_verify(int k, std::int64_t n_from, std::int64_t n_to, std::optional<std::uint64_t> seed,
               OutputFormat f, std::ostream& out) {
    if (k < 2) throw UsageError("--k must be >= 2");
    if (n_from > n_to) throw UsageError("--n-from must not exceed --n-to");
    const auto rec = seed ? sequences::random_recurrence_instance(k, *seed) : sequences::kbonacci(k);
    const auto coeffs = prover::identity_coefficients(k);
    const auto report = sequences::check_identity(rec, coeffs, k, n_from, n_to);

    std::vector<std::pair<int, int>> per_residue(static_cast<std::size_t>(k));  // checked, failed
    for (const auto& c : report.checks) {
        const auto r = static_cast<std::size_t>(((c.n % k) + k) % k);
        per_residue[r].first += 1;
        if (!c.holds) per_residue[r].second += 1;
    }

    if (f == OutputFormat::Json) {
        json j;
        j["k"] = k;
        j["n_from"] = n_from;
        j["n_to"] = n_to;
        j["seed"] = seed ? json(*seed) : json(nullptr);
        j["initial"] = render::to_json(rec.initial());
        j["identity"] = render::to_json(coeffs);
        auto res = json::array();
        for (std::size_t r = 0; r < per_residue.size(); ++r) {
            res.push_back({{"residue", r}, {"checked", per_residue[r].first}, {"passed", per_residue[r].second == 0}});
        }
        j["residues"] = res;
        j["checked"] = report.checks.size();
        j["passed"] = report.passed;
        j["first_failure"] = report.first_failure ? json(*report.first_failure) : json(nullptr);
        out << emit_json(j);
        return report.passed ? kExitOk : kExitVerificationFailed;
    }

    Table t{{"residue", "checked", "result"}, {}};
    for (std::size_t r = 0; r < per_residue.size(); ++r) {
        t.rows.push_back({std::to_string(r), std::to_string(per_residue[r].first), verdict(per_residue[r].second == 0)});
    }
    if (f == OutputFormat::Markdown) {
        out << "## Identity check for k = " << k << "\n\n";
        out << identity_text(k, coeffs) << ", initial values [" << render::join(rec.initial(), ", ")
            << "]" << (seed ? " (seed " + std::to_string(*seed) + ")" : std::string()) << "\n\n";
        out << render::markdown(t) << '\n';
        out << report.checks.size() << " indices checked\n";
        if (report.first_failure) out << "first counterexample: n = " << *report.first_failure << '\n';
        out << "Verdict: " << verdict(report.passed) << '\n';
    } else {
        out << render::tsv(t, true);
        out << "checked\t" << report.checks.size() << '\n';
        if (report.first_failure) out << "first_failure\t" << *report.first_failure << '\n';
        out << "verdict\t" << verdict(report.passed) << '\n';
    }
    return report.passed ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- decimate

IntPoly parse_charpoly(const std::string& text) {
    std::vector<BigInt> desc;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        BigInt v;
        if (item.empty() || v.set_str(item, 10) != 0) throw UsageError("bad coefficient '" + item + "' in --charpoly");
        desc.push_back(v);
    }
    if (desc.empty()) throw UsageError("--charpoly needs at least one coefficient");
    if (desc.front() != 1) throw UsageError("--charpoly must be monic (leading coefficient 1)");
    if (desc.size() < 2) throw UsageError("--charpoly must have degree >= 1");
    return IntPoly::from_descending(desc);
}

int cmd_decimate(const std::string& charpoly_text, long stride, OutputFormat f, std::ostream& out) {
    if (stride < 1) throw UsageError("--stride must be >= 1");
    const IntPoly input = parse_charpoly(charpoly_text);
    const IntPoly dec = decimation::decimated_charpoly(input, static_cast<std::size_t>(stride));
    const auto rec = prover::recurrence_coefficients(dec);

    if (f == OutputFormat::Json) {
        json j;
        j["charpoly"] = render::to_json(input);
        j["stride"] = stride;
        j["decimated"] = render::to_json(dec);
        j["recurrence"] = render::to_json(rec);
        out << emit_json(j);
        return kExitOk;
    }
    const std::string rec_text =
        f == OutputFormat::Tsv ? render::join(rec, ",") : "[" + render::join(rec, ", ") + "]";
    out << key_values({{"charpoly", to_string(input)},
                       {"stride", std::to_string(stride)},
                       {"decimated", to_string(dec)},
                       {"recurrence", rec_text}},
                      f);
    return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepRow {
    int k = 0;
    bool divisibility = false;
    bool cases = false;
    bool oracle = false;
    bool numeric = false;
    bool all() const { return divisibility && cases && oracle && numeric; }
};

SweepRow sweep_one(int k) {
    SweepRow row;
    row.k = k;
    const auto t = prover::certify_divisibility(k);
    row.divisibility = t.division_remainder.is_zero() && t.quotient_matches && t.remultiplied;
    row.cases = t.matrix_verified;
    row.oracle = decimation::decimated_charpoly(prover::r_poly(k), static_cast<std::size_t>(k)) == t.p_poly;
    const auto coeffs = prover::identity_coefficients(k);
    row.numeric = sequences::check_identity(sequences::kbonacci(k), coeffs, k, -20, 100).passed;
    for (std::uint64_t seed = 0; seed < 5 && row.numeric; ++seed) {
        row.numeric = sequences::check_identity(sequences::random_recurrence_instance(k, seed), coeffs, k, -20, 100).passed;
    }
    return row;
}

int cmd_sweep(int k_min, int k_max, OutputFormat f, std::ostream& out) {
    if (k_min < 2) throw UsageError("--k-min must be >= 2");
    if (k_min > k_max) throw UsageError("--k-min must not exceed --k-max");
    const int count = k_max - k_min + 1;
    std::vector<SweepRow> rows(static_cast<std::size_t>(count));
    std::vector<std::string> errors(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = sweep_one(k_min + i);
        } catch (const std::exception& e) {
            rows[static_cast<std::size_t>(i)].k = k_min + i;
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }

    bool all = true;
    for (const auto& r : rows) all = all && r.all();

    if (f == OutputFormat::Json) {
        auto arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"k", r.k}, {"divisibility", r.divisibility}, {"cases", r.cases},
                           {"oracle", r.oracle}, {"numeric", r.numeric}});
        }
        out << emit_json({{"rows", arr}, {"passed", all}});
        return all ? kExitOk : kExitVerificationFailed;
    }
    Table t{{"k", "divisibility", "cases", "oracle", "numeric"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({std::to_string(r.k), verdict(r.divisibility), verdict(r.cases), verdict(r.oracle),
                          verdict(r.numeric)});
    }
    out << (f == OutputFormat::Tsv ? render::tsv(t, true) : render::markdown(t));
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i].empty()) out << "k = " << rows[i].k << ": " << errors[i] << '\n';
    }
    out << (f == OutputFormat::Markdown ? "\nVerdict: " : "verdict\t") << verdict(all) << '\n';
    return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certification of stride-k identities for k-step Fibonacci sequences", "kstep"};
    app.require_subcommand(1);
    std::string format_name = "markdown";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"tsv", "markdown", "json"}));

    auto* tri = app.add_subcommand("triangle", "Print rows 0..N of triangle P or Q");
    std::string kind;
    long rows = 6;
    tri->add_option("kind", kind, "p or q")->required()->check(CLI::IsMember({"p", "q"}));
    tri->add_option("--rows", rows, "Last row to print");
    tri->fallthrough();

    auto* prove = app.add_subcommand("prove", "Certify the stride-k identity symbolically");
    int prove_k = 0;
    bool show_matrix = false;
    bool symbolic = false;
    prove->add_option("--k", prove_k)->required();
    prove->add_flag("--show-matrix", show_matrix, "Print the long-hand product matrix");
    prove->add_flag("--symbolic", symbolic, "Label matrix cells by triangle entries");
    prove->fallthrough();

    auto* verify = app.add_subcommand("verify", "Check the identity numerically");
    int verify_k = 0;
    std::int64_t n_from = 0;
    std::int64_t n_to = 0;
    std::optional<std::uint64_t> seed;
    verify->add_option("--k", verify_k)->required();
    verify->add_option("--n-from", n_from)->required();
    verify->add_option("--n-to", n_to)->required();
    verify->add_option("--seed", seed, "Use seeded random initial values in [-9, 9]");
    verify->fallthrough();

    auto* decimate = app.add_subcommand("decimate", "Characteristic polynomial of a stride-decimated recurrence");
    std::string charpoly;
    long stride = 1;
    decimate->add_option("--charpoly", charpoly, "Descending coefficients, leading 1 first")->required();
    decimate->add_option("--stride", stride)->required();
    decimate->fallthrough();

    auto* sweep = app.add_subcommand("sweep", "Run every check for a range of k");
    int k_min = 0;
    int k_max = 0;
    sweep->add_option("--k-min", k_min)->required();
    sweep->add_option("--k-max", k_max)->required();
    sweep->fallthrough();

    std::vector<std::string> argv_store{"kstep"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto format = *render::parse_format(format_name);
    try {
        if (*tri) return cmd_triangle(kind, rows, format, out);
        if (*prove) return cmd_prove(prove_k, show_matrix, symbolic, format, out);
        if (*verify) return cmd_verify(verify_k, n_from, n_to, seed, format, out);
        if (*decimate) return cmd_decimate(charpoly, stride, format, out);
        if (*sweep) return cmd_sweep(k_min, k_max, format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace kstep::cli
