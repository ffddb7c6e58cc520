#pragma once

// Simultaneous root finding for dense polynomials (Aberth-Ehrlich).
//
// All roots are refined together from a deterministic starting circle, so
// repeated runs on the same coefficients give bit-identical output. A root
// is accepted once its correction falls under a scale-relative floor or the
// polynomial value at it drops below the evaluation noise bound; clustered
// roots therefore converge to the accuracy the coefficients support rather
// than looping forever.

#include <vector>

#include "ratexp/polynomial.hpp"
#include "ratexp/prec.hpp"

namespace ratexp {

struct RootsResult {
    std::vector<BigComplex> roots;  // sorted by (re, im) for determinism
    int iterations = 0;
};

// Finds all complex roots of p. Exact zero roots (vanishing low-order
// coefficients) are deflated first. Throws NoConvergence if the iteration
// cap is reached with unconverged roots and NumericError for the zero
// polynomial.
// The iteration cap covers the slowest realistic case: a root cluster of
// multiplicity m contracts like (m-1)/(m+1) per sweep, so reaching the
// cluster's resolvable accuracy at 1024 bits takes a few hundred sweeps.
RootsResult poly_roots(const Polynomial& p, int max_iterations = 600);

}  // namespace ratexp
