#include "ratexp/newton.hpp"

#include "ratexp/errors.hpp"
#include "ratexp/nullspace.hpp"

namespace ratexp {

namespace {

BigFloat max_norm(const std::vector<BigComplex>& v, mpfr_prec_t prec) {
    BigFloat m(prec);
    for (const auto& c : v) {
        BigFloat a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

}  // namespace

std::vector<BigComplex> newton_solve(
    const std::function<std::vector<BigComplex>(const std::vector<BigComplex>&)>& f,
    std::vector<BigComplex> x0, mpfr_prec_t prec, int max_iterations) {
    const size_t n = x0.size();
    const BigFloat res_floor = BigFloat::two_pow(96 - static_cast<long>(prec), prec);
    const BigFloat step_floor = BigFloat::two_pow(64 - static_cast<long>(prec), prec);
    // Finite-difference step: large enough that the difference quotient
    // keeps ~2/3 of the working digits, small enough to stay in the linear
    // regime.
    const BigFloat h0 = BigFloat::two_pow(-static_cast<long>(prec) / 3, prec);

    std::vector<BigComplex> x = std::move(x0);
    std::vector<BigComplex> fx = f(x);
    if (fx.size() != n) throw NumericError("newton_solve: F dimension mismatch");
    BigFloat fnorm = max_norm(fx, prec);

    for (int iter = 0; iter < max_iterations; ++iter) {
        if (fnorm < res_floor) return x;

        Matrix jac(n, n, prec);
        for (size_t j = 0; j < n; ++j) {
            BigFloat h = h0 * (BigFloat(1L, prec) + abs(x[j]));
            std::vector<BigComplex> xp = x;
            xp[j] += BigComplex(h, BigFloat(0L, prec));
            std::vector<BigComplex> fp = f(xp);
            for (size_t i = 0; i < n; ++i) {
                jac.at(i, j) = (fp[i] - fx[i]) / BigComplex(h, BigFloat(0L, prec));
            }
        }
        std::vector<BigComplex> rhs(n, BigComplex(prec));
        for (size_t i = 0; i < n; ++i) rhs[i] = -fx[i];
        std::vector<BigComplex> d = solve_square(jac, rhs);

        // Backtracking: accept the first step length that reduces the
        // residual max-norm.
        BigFloat lambda(1L, prec);
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            std::vector<BigComplex> xt = x;
            for (size_t j = 0; j < n; ++j) xt[j] += d[j] * lambda;
            std::vector<BigComplex> ft = f(xt);
            BigFloat fn = max_norm(ft, prec);
            if (fn < fnorm) {
                x = std::move(xt);
                fx = std::move(ft);
                fnorm = fn;
                accepted = true;
                break;
            }
            lambda = lambda / 2L;
        }
        if (!accepted) {
            throw NoConvergence("newton_solve: line search failed at residual " +
                                    fnorm.to_string(8),
                                iter);
        }
        BigFloat step = max_norm(d, prec) * lambda;
        if (step <= step_floor * (BigFloat(1L, prec) + max_norm(x, prec))) return x;
    }
    if (fnorm < res_floor) return x;
    throw NoConvergence("newton_solve: residual " + fnorm.to_string(8) + " after iteration cap",
                        max_iterations);
}

BigFloat real_newton(const std::function<BigFloat(const BigFloat&)>& f, BigFloat x0,
                     mpfr_prec_t prec, int max_iterations) {
    const BigFloat res_floor = BigFloat::two_pow(96 - static_cast<long>(prec), prec);
    const BigFloat step_floor = BigFloat::two_pow(64 - static_cast<long>(prec), prec);
    const BigFloat h0 = BigFloat::two_pow(-static_cast<long>(prec) / 3, prec);

    BigFloat x = std::move(x0);
    BigFloat fx = f(x);
    for (int iter = 0; iter < max_iterations; ++iter) {
        if (abs(fx) < res_floor) return x;
        BigFloat h = h0 * (BigFloat(1L, prec) + abs(x));
        BigFloat der = (f(x + h) - fx) / h;
        if (der.is_zero()) throw SingularJacobian("real_newton: flat derivative");
        BigFloat d = -(fx / der);
        BigFloat lambda(1L, prec);
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            BigFloat xt = x + d * lambda;
            BigFloat ft = f(xt);
            if (abs(ft) < abs(fx)) {
                x = std::move(xt);
                fx = std::move(ft);
                accepted = true;
                break;
            }
            lambda = lambda / 2L;
        }
        if (!accepted) {
            throw NoConvergence("real_newton: line search failed at residual " + fx.to_string(8),
                                iter);
        }
        if (abs(d) * lambda <= step_floor * (BigFloat(1L, prec) + abs(x))) return x;
    }
    if (abs(fx) < res_floor) return x;
    throw NoConvergence("real_newton: residual " + fx.to_string(8) + " after iteration cap",
                        max_iterations);
}

}  // namespace ratexp
