#include <cstdio>

#include "caliber/verify.hpp"

// Replays the full acceptance suite with the default solver configuration and
// prints one line per criterion, then the details of any failing check.
int main() {
    caliber::SolverConfig cfg;
    caliber::VerifyReport report = caliber::verify_all(cfg);

    for (const auto& id : caliber::criterion_ids()) {
        bool ok = caliber::criterion_passed(report, id);
        std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(),
                    caliber::criterion_title(id).c_str());
    }
    std::printf("%d checks passed, %d failed (%.1f s)\n", report.passed,
                report.failed, report.wall_seconds);

    for (const auto& check : report.checks) {
        if (check.pass) continue;
        std::printf("failed %s: %s\n  expected %s\n  computed %s\n",
                    check.id.c_str(), check.ref.c_str(), check.expected.c_str(),
                    check.computed.c_str());
    }
    return report.failed == 0 ? 0 : 1;
}
