#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/bounds.hpp"

namespace hurwitz {

/// Knobs for the verification suites.  Unset fields fall back to each
/// suite's documented defaults.  cache_path, when set, preloads the
/// monotone memo before the suites run (values are trusted, so a corrupted
/// cache surfaces as a verification failure).
struct VerifyOptions {
    std::optional<int> d_max;
    std::optional<int> r_max;
    std::optional<int> weight;
    std::optional<int> degree;
    std::string cache_path;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;    // informational, including report-only comparisons
    std::string first_failure;
};

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs one named suite ("all" runs every suite in order).  Unknown names
// raise std::invalid_argument; cap violations raise BoundExceeded;
// everything else is reported in the result, not thrown.
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts = {});

}  // namespace hurwitz
