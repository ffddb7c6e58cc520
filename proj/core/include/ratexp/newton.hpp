#pragma once

// Damped Newton iteration for small holomorphic systems and for real
// scalar equations. Jacobians are finite-difference: every system solved
// here is analytic, so a real step along each coordinate captures the full
// complex-linear derivative.

#include <functional>
#include <vector>

#include "ratexp/prec.hpp"

namespace ratexp {

// Solves F(x) = 0 from the start vector x0. Stops when the residual
// max-norm falls under 2^{96-prec} or the accepted step is negligible
// relative to x. Throws NoConvergence when the iteration cap or the
// backtracking line search gives out, SingularJacobian when the
// finite-difference Jacobian loses rank.
std::vector<BigComplex> newton_solve(
    const std::function<std::vector<BigComplex>(const std::vector<BigComplex>&)>& f,
    std::vector<BigComplex> x0, mpfr_prec_t prec, int max_iterations = 100);

// Scalar real Newton with a finite-difference derivative. Same stopping
// rules as newton_solve.
BigFloat real_newton(const std::function<BigFloat(const BigFloat&)>& f, BigFloat x0,
                     mpfr_prec_t prec, int max_iterations = 100);

}  // namespace ratexp
