#pragma once

// Verification suites: every quantitative claim the library stands
// behind, runnable as one batch. Three suites group the checks by what
// they certify:
//
//  * "limit"     - strong pointwise behavior of the confluent family:
//                  error-model ratio, unit drift constant, root-free
//                  disk, pointwise denominator limit;
//  * "measures"  - distributional behavior: scaled root counting
//                  measures against the arc measures, and the traced
//                  arcs themselves;
//  * "apparatus" - internal identities and reproducibility: the axis
//                  crossing constant, endpoint constants, determinant
//                  and orthogonality certificates, reflection duality,
//                  figure presets.
//
// Each check returns a pass flag and a one-line detail with measured
// values, so a report stays meaningful when thresholds are revisited.

#include <functional>
#include <string>
#include <vector>

#include "ratexp/prec.hpp"

namespace ratexp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    // Degrees for sweep-based checks; must be strictly increasing with at
    // least two entries. Convergence comparisons use the last two, the
    // decreasing-ratio check uses the whole sweep.
    std::vector<long> sweep = {10, 20, 40};
    // Working precision for the heavyweight solves.
    mpfr_prec_t prec = 1024;
    // Invoked after each check completes (e.g. for live table output).
    std::function<void(const CheckResult&)> on_result;
};

// {"limit", "measures", "apparatus"}.
const std::vector<std::string>& verify_suite_names();

// Runs one suite ("all" for every suite in order). Throws
// std::invalid_argument for an unknown suite name or an invalid sweep.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ratexp
