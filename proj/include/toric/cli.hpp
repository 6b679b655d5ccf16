#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toric/clutter.hpp"
#include "toric/codes.hpp"
#include "toric/error.hpp"

namespace toric::cli {

struct ParsedInput {
    Clutter clutter;
    std::uint32_t q = 0;
};

/// Edge-list text ("n s q" header, then s lines of 1-based vertices) or a
/// JSON object {"q", "n", "edges"}; JSON is recognized by a leading '{'.
/// Throws Errc::parse_error (with line and column), clutter_axiom_violation
/// or field_too_small.
ParsedInput parse_input(std::string_view text);

struct JobSpec {
    std::string command;  // analyze | hilbert | code | ci | verify | predict | fixtures
    std::string input_path;
    std::string inline_text;
    std::optional<std::uint32_t> q;
    std::uint32_t degree_lo = 1;
    std::uint32_t degree_hi = 1;
    std::uint64_t budget = kDefaultDistanceBudget;
    std::string format = "table";
    std::uint64_t seed = 0;
    std::string out;
    std::string dump_points;  // file receiving the X, Y and X* dumps
    bool timings = true;
};

/// "a..b" or "a".
std::pair<std::uint32_t, std::uint32_t> parse_degree_range(std::string_view s);

/// One predicted quantity next to the computed value.
struct Verdict {
    std::string quantity;
    std::string theorem;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::optional<std::uint64_t> computed;
    std::string verdict;  // match | mismatch | inapplicable | unchecked

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CodeRow {
    std::string set;  // "X", "Y" or "X*"
    std::uint32_t degree = 0;
    CodeParameters params;
    std::string method;

    friend bool operator==(const CodeRow&, const CodeRow&) = default;
};

struct Report {
    std::string command;
    std::uint32_t q = 0;
    int n = 0;
    std::vector<std::vector<int>> edges;  // 1-based
    nlohmann::ordered_json facts = nlohmann::ordered_json::object();
    nlohmann::ordered_json invariants = nlohmann::ordered_json::object();
    std::vector<Verdict> verdicts;
    std::vector<CodeRow> codes;
    std::vector<std::string> notes;
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();

    std::size_t mismatches() const;
    friend bool operator==(const Report&, const Report&) = default;
};

/// {"q", "kind", "dim", "points": [[...]], "raw": [[...]]} with coordinates
/// as field element codes. "raw" appears for closure sets only.
nlohmann::ordered_json points_to_json(const PointSet& x);
/// Throws Errc::parse_error on malformed dumps.
PointSet points_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string render_table(const Report& r);

/// Runs one analysis command. Module errors propagate with the command name
/// prepended to the message.
Report run(const JobSpec& job, const Clutter& c, std::uint32_t q);

/// Writes the regression inputs and reports for the worked examples into dir.
std::vector<std::string> write_fixtures(const std::string& dir);

/// 2 for input errors, 3 for budget and size limits.
int exit_code_for(Errc code) noexcept;

/// Full command line front end; returns the process exit status.
int main_entry(int argc, char** argv);

}  // namespace toric::cli
