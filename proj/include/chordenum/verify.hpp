#pragma once

#include <string>
#include <vector>

namespace chordenum {

enum class CheckCategory {
    CrossCheck,             ///< two independent computations must agree; failure is fatal
    Published,              ///< computed value against a printed reference value; failure is fatal
    InternalInconsistency,  ///< the printed reference disagrees with itself or with an oracle; informational
};

std::string_view to_string(CheckCategory c) noexcept;

enum class CheckStatus { Pass, Fail, Noted };

std::string_view to_string(CheckStatus s) noexcept;

struct Check {
    std::string name;
    CheckCategory category = CheckCategory::CrossCheck;
    int n = -1;  ///< cardinality, or -1 when not applicable
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

struct VerifyReport {
    int L = 12;
    bool brute_force = true;  ///< false when L is too large for orbit enumeration
    std::vector<Check> checks;

    /// No fatal check failed.
    bool ok() const;
    std::size_t count(CheckStatus s) const;
};

/// Runs every cross-check for temperament L. Comparisons with the printed
/// 12-step tables and their inconsistencies are included only for L = 12;
/// the coloured-necklace reference values do not depend on L and always run.
VerifyReport run_verify(int L);

std::string report_to_json(const VerifyReport& r);
std::string report_to_csv(const VerifyReport& r);

} // namespace chordenum
