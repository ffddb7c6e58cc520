// Acceptance runner: executes every verification check once and prints
// one PASS/FAIL line per criterion, in a fixed order, with the measured
// values. Exit code 0 only if every criterion holds.

#include <cstdio>
#include <string>
#include <vector>

#include "ratexp/verify.hpp"

int main() {
    using namespace ratexp;
    VerifyOptions opt;  // sweep {10, 20, 40}, 1024 bits
    opt.on_result = [](const CheckResult& r) {
        std::fprintf(stderr, "  ... %s %s\n", r.name.c_str(), r.pass ? "ok" : "FAILED");
    };
    const std::vector<CheckResult> results = run_verify_suite("all", opt);

    const char* order[] = {
        "axis-crossing-constant", "endpoint-constants",    "error-ratio",
        "unit-constant-drift",    "root-exclusion",        "denominator-limit",
        "moment-convergence",     "determinant-identity",  "orthogonality-defects",
        "trajectory-landing",     "reflection-duality",    "figure-presets",
    };
    bool all_ok = true;
    int idx = 0;
    for (const char* name : order) {
        ++idx;
        const CheckResult* found = nullptr;
        for (const auto& r : results) {
            if (r.name == name) found = &r;
        }
        if (found == nullptr) {
            std::printf("FAIL %2d %-23s (check did not run)\n", idx, name);
            all_ok = false;
            continue;
        }
        std::printf("%s %2d %-23s %s\n", found->pass ? "PASS" : "FAIL", idx, name,
                    found->detail.c_str());
        all_ok = all_ok && found->pass;
    }
    return all_ok ? 0 : 1;
}
