#pragma once

#include "mexp/fpcore.hpp"
#include "mexp/multiplicity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mexp::cli {

struct VerifyOptions {
    Prime p{2};
    /// Inclusive upper corner of the sweep; each suite reads the parts it needs.
    Multiplicity box{8, 8, 8};
    /// Shift / cube exponents for the periodicity and duality suites; empty
    /// means the suite default ({1,2,3} and {1,2}).
    std::vector<std::uint64_t> ds;
    unsigned workers = 1;
    std::uint64_t seed = 20240607;
    /// Points sampled by the module suite.
    std::uint64_t samples = 200;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::optional<std::string> first_failure;
    /// Observations that are logged rather than asserted.
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& opts);

std::string format_result(const SuiteResult& r);

}  // namespace mexp::cli
