#pragma once

// Gauss-Legendre quadrature along polyline paths at arbitrary precision.
//
// Node/weight tables are computed once per (rule size, precision) pair and
// cached. Integration doubles the rule size until two consecutive
// estimates agree, reporting the last difference as the achieved error so
// callers can decide whether the result is trustworthy instead of being
// forced through an exception.

#include <functional>
#include <utility>
#include <vector>

#include "ratexp/prec.hpp"

namespace ratexp {

struct QuadratureResult {
    BigComplex value;
    // |I_m - I_{m/2}| for the final rule size m; a usable error estimate
    // whenever the integrand is analytic on a neighborhood of the path.
    BigFloat achieved{64};
    bool converged = false;
    int nodes_per_segment = 0;
};

// m-point Gauss-Legendre nodes and weights on [-1, 1]. Nodes ascend;
// weights are positive. The returned reference stays valid for the process
// lifetime.
const std::pair<std::vector<BigFloat>, std::vector<BigFloat>>& gauss_legendre(int m,
                                                                              mpfr_prec_t prec);

// Integrates f along the straight segments path[0] -> path[1] -> ... with
// rule sizes 8, 16, 32, ... up to max_nodes_per_segment, stopping when the
// change is below rel_tol * max(1, |I|).
QuadratureResult integrate_polyline(const std::function<BigComplex(const BigComplex&)>& f,
                                    const std::vector<BigComplex>& path, const BigFloat& rel_tol,
                                    int max_nodes_per_segment = 256);

}  // namespace ratexp
