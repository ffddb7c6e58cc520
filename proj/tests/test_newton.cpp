// Damped Newton with finite-difference Jacobians, complex systems and the
// real scalar variant.

#include <doctest.h>

#include <vector>

#include "ratexp/errors.hpp"
#include "ratexp/newton.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;
using testutil::check_close;

TEST_SUITE_BEGIN("newton");

TEST_CASE("scalar complex square root via the system solver") {
    const mpfr_prec_t p = 512;
    auto f = [&](const std::vector<BigComplex>& x) {
        return std::vector<BigComplex>{x[0] * x[0] - BigComplex(2L, 0L, p)};
    };
    std::vector<BigComplex> x = newton_solve(f, {BigComplex(1L, 0L, p)}, p);
    check_close(x[0], BigComplex(sqrt(BigFloat(2L, p)), BigFloat(0L, p)), bits_tol(p, 112));
}

TEST_CASE("two-by-two system with a known solution") {
    const mpfr_prec_t p = 512;
    // x + y = 3, x y = 2 has (1,2) and (2,1); start near (1,2).
    auto f = [&](const std::vector<BigComplex>& v) {
        return std::vector<BigComplex>{v[0] + v[1] - BigComplex(3L, 0L, p),
                                       v[0] * v[1] - BigComplex(2L, 0L, p)};
    };
    std::vector<BigComplex> x =
        newton_solve(f, {BigComplex(0.9, 0.1, p), BigComplex(2.2, -0.1, p)}, p);
    check_close(x[0], BigComplex(1L, 0L, p), bits_tol(p, 112));
    check_close(x[1], BigComplex(2L, 0L, p), bits_tol(p, 112));
}

TEST_CASE("complex starting point reaches a genuinely complex root") {
    const mpfr_prec_t p = 256;
    // x^2 + 1 = 0 from 0.2 + 0.8i converges to +i.
    auto f = [&](const std::vector<BigComplex>& v) {
        return std::vector<BigComplex>{v[0] * v[0] + BigComplex(1L, 0L, p)};
    };
    std::vector<BigComplex> x = newton_solve(f, {BigComplex(0.2, 0.8, p)}, p);
    check_close(x[0], BigComplex(0L, 1L, p), bits_tol(p, 112));
}

TEST_CASE("real scalar equation") {
    const mpfr_prec_t p = 256;
    // cos x = x; the fixed point is 0.739085...
    auto f = [&](const BigFloat& x) { return cos(x) - x; };
    BigFloat x = real_newton(f, BigFloat("0.7", p), p);
    check_close(cos(x), x, bits_tol(p, 104));
    check_close(x, BigFloat("0.73908513321516064165531208767387340401341175890075746496568", p),
                bits_tol(p, 104));
}

TEST_CASE("a rootless real equation fails loudly") {
    const mpfr_prec_t p = 128;
    auto f = [&](const BigFloat& x) { return sqr(x) + BigFloat(1L, p); };
    CHECK_THROWS_AS((void)real_newton(f, BigFloat("0.3", p), p), NumericError);
}

TEST_SUITE_END();
