// Verification driver: runs a named pipeline, compares against the
// reference values, and assembles a deterministic Report.
#pragma once

#include "wrescalc/data_io.hpp"
#include "wrescalc/report.hpp"
#include "wrescalc/sphere.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace wrescalc {

// Two strictness modes exist because the reference grand total and the
// reference per-case values disagree; the default judges per case.
enum class Strictness { Parts, Total };

struct VerifyOptions {
    std::string target;                 // thm11 | thm12 | thm13 | lichnerowicz |
                                        // phi:<case>:<pair> | inverse | all
    SphereMode mode = SphereMode::PaperEmulation;
    int dim = 4;
    std::uint64_t seed = 1;
    std::optional<std::string> data_text;  // data document; random data when absent
    Strictness strict = Strictness::Parts;
};

struct VerifyResult {
    Report report;
    int exit_code;  // 0 all comparisons exact, 1 some mismatch
};

// Throws UnsupportedError for an unknown target and InvalidDataError for a
// malformed or type-mismatched data document (callers map these to exit 2).
VerifyResult run_verify(const VerifyOptions& opts);

}  // namespace wrescalc
