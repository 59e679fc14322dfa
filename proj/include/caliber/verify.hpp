#pragma once

#include <string>
#include <vector>

#include "caliber/optimize.hpp"

namespace caliber {

struct CheckResult {
    std::string id;        // claim id, e.g. "AC1.cay"; the prefix names the criterion
    std::string ref;       // what is being claimed
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;  // stable order
    int passed = 0;
    int failed = 0;
    // Wall time is reported in the text rendering only; the JSON rendering
    // stays byte-identical for a fixed seed.
    double wall_seconds = 0.0;
};

// Default location of the catalog golden file: $CALIBER_DATA_DIR, then the
// compiled-in source data directory, then ./data.
std::string default_golden_path();

// Replays the full acceptance suite: exact comass and norm statements, the
// construction identities, triality round trips, weight-bracket identities,
// the stabilizer rank, numeric-vs-exact comass agreement, normal-form round
// trips, the catalog with its golden file, and the exact property suites.
VerifyReport verify_all(const SolverConfig& cfg,
                        const std::string& golden_path = default_golden_path());

std::string report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

// The whole catalog (entries plus counterexamples) as JSON with exact
// rational strings; the same rendering backs the catalog subcommand and the
// golden-file comparison.
std::string catalog_json_text();

// Criterion ids in report order: "AC1".."AC10".
const std::vector<std::string>& criterion_ids();
// True when every check under the criterion prefix passed.
bool criterion_passed(const VerifyReport& report, const std::string& criterion);
std::string criterion_title(const std::string& criterion);

}  // namespace caliber
