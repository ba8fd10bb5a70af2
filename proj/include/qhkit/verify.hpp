#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qhkit {

struct CheckResult {
    std::string name;
    bool passed = false;
    double margin = 0.0;  // slack to the threshold; negative on failure
    std::string detail;
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 7;
    std::size_t samples = 10000;
    /// Scales every proven constant by 0.98. A mutation control: a correct
    /// build must fail with this set.
    bool corrupt = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;  // sorted by name

    bool passed() const;
    std::size_t failures() const;
};

const std::vector<std::string>& verify_suites();

/// Throws Error(Precondition) for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

/// One line per check plus a summary line.
std::string format_report(const VerifyReport& report);

}  // namespace qhkit
