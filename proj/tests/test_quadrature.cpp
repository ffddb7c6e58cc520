// Gauss-Legendre tables and polyline integration: exactness on
// polynomials, closed-contour residues, and the honest non-converged path.

#include <doctest.h>

#include "ratexp/quadrature.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;
using testutil::check_close;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("node tables: symmetry, positive weights, total weight 2") {
    const mpfr_prec_t p = 256;
    const auto& [x, w] = gauss_legendre(16, p);
    REQUIRE(x.size() == 16);
    BigFloat total(p);
    for (int k = 0; k < 16; ++k) {
        CHECK(w[k].sign() > 0);
        total += w[k];
        // symmetric rule: x[k] == -x[15-k]
        check_close(x[k], -x[15 - k], bits_tol(p, 16));
    }
    check_close(total, BigFloat(2L, p), bits_tol(p, 16));
}

TEST_CASE("degree-15 polynomial integrates exactly with the 8-point rule") {
    const mpfr_prec_t p = 256;
    // f(z) = z^15 + 3 z^4; primitive F(z) = z^16/16 + 3 z^5 / 5
    auto f = [&](const BigComplex& z) { return pow_int(z, 15) + pow_int(z, 4) * 3L; };
    BigComplex z0(BigFloat("-0.3", p), BigFloat("0.1", p));
    BigComplex z1(BigFloat("1.1", p), BigFloat("-0.7", p));
    auto F = [&](const BigComplex& z) {
        return pow_int(z, 16) / 16L + (pow_int(z, 5) * 3L) / 5L;
    };
    QuadratureResult r = integrate_polyline(f, {z0, z1}, bits_tol(p, 64));
    CHECK(r.converged);
    check_close(r.value, F(z1) - F(z0), bits_tol(p, 32));
}

TEST_CASE("closed square around the origin picks up the residue of 1/z") {
    const mpfr_prec_t p = 256;
    auto f = [&](const BigComplex& z) { return inv(z); };
    std::vector<BigComplex> sq{BigComplex(1L, -1L, p), BigComplex(1L, 1L, p),
                               BigComplex(-1L, 1L, p), BigComplex(-1L, -1L, p),
                               BigComplex(1L, -1L, p)};
    QuadratureResult r = integrate_polyline(f, sq, bits_tol(p, 64));
    CHECK(r.converged);
    BigFloat two_pi = BigFloat::pi(p) * 2L;
    check_close(r.value, BigComplex(BigFloat(0L, p), two_pi), bits_tol(p, 40));
}

TEST_CASE("closed contour of an entire function vanishes") {
    const mpfr_prec_t p = 256;
    auto f = [&](const BigComplex& z) { return exp(z); };
    std::vector<BigComplex> tri{BigComplex(1L, 0L, p), BigComplex(0L, 1L, p),
                                BigComplex(-1L, -1L, p), BigComplex(1L, 0L, p)};
    QuadratureResult r = integrate_polyline(f, tri, bits_tol(p, 64));
    CHECK(r.converged);
    CHECK(abs(r.value) <= bits_tol(p, 48));
}

TEST_CASE("real exponential over [0,1]") {
    const mpfr_prec_t p = 256;
    auto f = [&](const BigComplex& z) { return exp(z); };
    QuadratureResult r =
        integrate_polyline(f, {BigComplex(0L, 0L, p), BigComplex(1L, 0L, p)}, bits_tol(p, 64));
    CHECK(r.converged);
    check_close(r.value.re(), exp(BigFloat(1L, p)) - BigFloat(1L, p), bits_tol(p, 32));
}

TEST_CASE("a near-pole integrand reports non-convergence instead of lying") {
    const mpfr_prec_t p = 128;
    BigComplex pole(BigFloat(0L, p), BigFloat("0.0001", p));
    auto f = [&](const BigComplex& z) { return inv(z - pole); };
    QuadratureResult r = integrate_polyline(f, {BigComplex(-1L, 0L, p), BigComplex(1L, 0L, p)},
                                            bits_tol(p, 16), 32);
    CHECK(!r.converged);
    CHECK(r.nodes_per_segment == 32);
    CHECK(!r.achieved.is_zero());
}

TEST_SUITE_END();
