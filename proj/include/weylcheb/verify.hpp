// Named verification suites shared by the CLI and the test binaries.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylcheb/analysis.hpp"

namespace weylcheb {

struct VerifyOptions {
    /// Restrict to one rank; otherwise each suite uses its own default range.
    std::optional<int> rank;
    int coord_bound = 3;
    std::uint64_t seed = kDefaultSeed;
    int quadrature_points = 16;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::json detail;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = kDefaultSeed;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// "ortho", "laplace", "symmetry", "chebyshev", "detforms".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws PreconditionError on an
/// unknown name or out-of-range options.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

nlohmann::json to_json(const SuiteResult& r);
std::string to_text(const SuiteResult& r);

}  // namespace weylcheb
