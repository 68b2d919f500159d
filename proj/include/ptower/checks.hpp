#pragma once

#include <string>
#include <vector>

#include "ptower/norm.hpp"

namespace ptower {

enum class OutputFormat { Text, Json };

struct RunConfig {
    unsigned long p = 3;
    unsigned m = 2;
    unsigned n = 1;
    unsigned precision = 8;
    OutputFormat format = OutputFormat::Text;
    bool heavy = false;

    void validate() const;  // throws std::invalid_argument
};

/// Norm-determinant work grows with the tower degree; above this the checks
/// are opt-in.
constexpr unsigned long kHeavyDegreeLimit = 400;

struct CheckResult {
    std::string name;
    bool pass = false;
    long valuation = 0;
    bool exact = true;
    bool skipped = false;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;  // over the checks that ran
};

/// The full verification suite for one prime: case congruences, the
/// expansion residual, the proof-mirror power computation, the norm-route
/// uniformizer verifications for both theorem recipes, and the K_{1,n}
/// quotient. Checks whose tower degree exceeds kHeavyDegreeLimit are skipped
/// (with a note) unless config.heavy is set. PrecisionError propagates.
VerifyReport run_verify_suite(const RunConfig& config);

}  // namespace ptower
