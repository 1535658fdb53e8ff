// Structured verification reports with deterministic text / JSON / LaTeX
// rendering.  Identical inputs produce byte-identical output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wrescalc {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class MatchState { Exact, Mismatch, NoTarget };

struct ReportItem {
    std::string name;
    std::string computed;                 // canonical scalar text
    std::string computed_latex;
    std::optional<std::string> expected;  // reference value, when one exists
    MatchState match = MatchState::NoTarget;
    std::optional<std::string> note;      // free-form flag, e.g. discrepancy notes
};

enum class ReportFormat { Text, Json, Latex };

struct Report {
    std::string version = kEngineVersion;
    std::string target;
    std::string mode;            // "paper" or "literal"
    std::uint64_t seed = 0;
    std::vector<ReportItem> items;

    // Exact iff every item that has an expected value matches it.
    bool overall_exact() const;

    std::string render(ReportFormat format) const;
};

const char* match_state_name(MatchState m);

}  // namespace wrescalc
