#pragma once

#include "hcs/numeric/oracle.hpp"
#include "hcs/scalar/serialize.hpp"
#include "hcs/verify/check.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcs {

// Exact operations on the full algebra grow like 2^n n!; above this size a run must be
// forced explicitly.
inline constexpr int kDeskBound = 5;

struct DeskScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    NumericConfig numeric{};
    int threads = 0;  // 0: one worker per shape
    bool force = false;
};

struct Report {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;
    Checks checks;                                      // sorted by label
    std::vector<std::pair<std::string, double>> timings;  // seconds per phase

    bool passed() const { return all_pass(checks); }
    Json to_json() const;
    std::string to_text() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// True for suites that need exact full-algebra products.
bool suite_is_heavy(const std::string& name);

// Throws std::invalid_argument for an unknown suite or n < 1, and DeskScaleError for a heavy
// suite with n above the desk bound unless forced.
Report run_suite(const std::string& name, int n, const SuiteOptions& opts = {});

}  // namespace hcs
