// The rational interpolant solve: classical closed-form coefficients in
// the fully confluent case, interpolation conditions for spread-out and
// partially confluent schemes, normalization, reflection duality, and the
// rescaled pair.

#include <doctest.h>

#include <vector>

#include "ratexp/errors.hpp"
#include "ratexp/interpolant.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;
using testutil::check_close;

namespace {

// Classical diagonal coefficients for all points at the origin:
//   q_n(z) = sum_k [(2n-k)! n!] / [(2n)! k! (n-k)!] (-z)^k,  p_n = -q_n(-z).
Polynomial classical_denominator(long n, mpfr_prec_t p) {
    auto fact = [&](long m) {
        BigFloat f(1L, p);
        for (long i = 2; i <= m; ++i) f *= BigFloat(i, p);
        return f;
    };
    std::vector<BigComplex> c;
    for (long k = 0; k <= n; ++k) {
        BigFloat num = fact(2 * n - k) * fact(n);
        BigFloat den = fact(2 * n) * fact(k) * fact(n - k);
        BigFloat v = num / den;
        if (k % 2 == 1) v = -v;
        c.push_back(BigComplex(v, BigFloat(0L, p)));
    }
    return Polynomial(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("interpolants");

TEST_CASE("fully confluent solve matches the classical coefficients") {
    const mpfr_prec_t p = 1024;
    for (long n : {1L, 2L, 3L, 5L}) {
        CAPTURE(n);
        Interpolant r = solve_interpolant(make_point_mass(n, BigComplex(0L, 0L, p)));
        CHECK(r.normalization == DenominatorNormalization::kUnitAtZero);
        CHECK(r.solve_residual <= bits_tol(p, 96));
        Polynomial q = classical_denominator(n, p);
        REQUIRE(r.q.degree() == n);
        for (long k = 0; k <= n; ++k) {
            check_close(r.q.coeffs()[k], q.coeffs()[k], bits_tol(p, 160));
            // p_n(z) = -q_n(-z): coefficients flip sign at even indices
            BigComplex want = (k % 2 == 0) ? -q.coeffs()[k] : q.coeffs()[k];
            check_close(r.p.coeffs()[k], want, bits_tol(p, 160));
        }
    }
}

TEST_CASE("the lowest order case in closed form") {
    const mpfr_prec_t p = 512;
    // p = -1 - z/2, q = 1 - z/2
    Interpolant r = solve_interpolant(make_point_mass(1, BigComplex(0L, 0L, p)));
    check_close(r.p.coeffs()[0], BigComplex(-1L, 0L, p), bits_tol(p, 96));
    check_close(r.p.coeffs()[1], BigComplex(BigFloat("-0.5", p), BigFloat(0L, p)),
                bits_tol(p, 96));
    check_close(r.q.coeffs()[0], BigComplex(1L, 0L, p), bits_tol(p, 96));
    check_close(r.q.coeffs()[1], BigComplex(BigFloat("-0.5", p), BigFloat(0L, p)),
                bits_tol(p, 96));
}

TEST_CASE("interpolation conditions hold at spread-out simple points") {
    const mpfr_prec_t p = 512;
    std::vector<SchemePoint> pts;
    const double locs[][2] = {{0.3, 0.4},  {-0.2, 0.9}, {0.0, -1.1}, {1.2, 0.0},
                              {-0.7, -0.3}, {0.5, -0.8}, {-1.0, 0.2}};
    for (auto& l : locs) pts.push_back({BigComplex(l[0], l[1], p), 1});
    Scheme s(3, 3, std::move(pts));
    Interpolant r = solve_interpolant(s);
    BigFloat scale = r.p.coeff_norm() + r.q.coeff_norm();
    for (const auto& pt : s.points()) {
        CHECK(abs(interpolant_F(r, pt.location)) <= scale * bits_tol(p, 120));
    }
}

TEST_CASE("confluent conditions kill derivatives too") {
    const mpfr_prec_t p = 512;
    // multiplicity 3 at i, 2 at -0.5, 2 at 0.25-0.75i: total 7 = 2*3+1
    Scheme s(3, 3,
             {{BigComplex(0L, 1L, p), 3},
              {BigComplex(-0.5, 0.0, p), 2},
              {BigComplex(0.25, -0.75, p), 2}});
    Interpolant r = solve_interpolant(s);
    BigFloat scale = r.p.coeff_norm() + r.q.coeff_norm();
    Polynomial dp = r.p.derivative(), dq = r.q.derivative();
    Polynomial ddp = dp.derivative(), ddq = dq.derivative();
    for (const auto& pt : s.points()) {
        const BigComplex& z = pt.location;
        BigComplex ez = exp(z);
        CHECK(abs(r.p.eval(z) + r.q.eval(z) * ez) <= scale * bits_tol(p, 120));
        // F'(z) = p' + (q' + q) e^z
        CHECK(abs(dp.eval(z) + (dq.eval(z) + r.q.eval(z)) * ez) <= scale * bits_tol(p, 120));
        if (pt.multiplicity >= 3) {
            // F''(z) = p'' + (q'' + 2q' + q) e^z
            BigComplex second =
                ddp.eval(z) + (ddq.eval(z) + dq.eval(z) * 2L + r.q.eval(z)) * ez;
            CHECK(abs(second) <= scale * bits_tol(p, 120));
        }
    }
}

TEST_CASE("reflected scheme swaps numerator and denominator") {
    const mpfr_prec_t p = 512;
    Scheme s(2, 2,
             {{BigComplex(0.4, 0.1, p), 2},
              {BigComplex(-0.3, 0.6, p), 1},
              {BigComplex(0.0, -0.9, p), 2}});
    Interpolant orig = solve_interpolant(s);
    Interpolant refl = solve_interpolant(s.reflected());
    // Solutions are proportional: q_refl(z) = p(-z)/p(0), p_refl(z) = q(-z)/p(0).
    BigComplex c = inv(orig.p.eval(BigComplex(0L, 0L, p)));
    const double spots[][2] = {{0.3, -0.2}, {-1.1, 0.5}, {0.0, 1.3}};
    for (auto& l : spots) {
        BigComplex z(l[0], l[1], p);
        check_close(refl.q.eval(z), orig.p.eval(-z) * c, bits_tol(p, 110));
        check_close(refl.p.eval(z), orig.q.eval(-z) * c, bits_tol(p, 110));
    }
}

TEST_CASE("zeros and poles of the lowest order case") {
    const mpfr_prec_t p = 256;
    Interpolant r = solve_interpolant(make_point_mass(1, BigComplex(0L, 0L, p)));
    ZerosPoles zp = zeros_and_poles(r);
    REQUIRE(zp.zeros.size() == 1);
    REQUIRE(zp.poles.size() == 1);
    check_close(zp.zeros[0], BigComplex(-2L, 0L, p), bits_tol(p, 64));
    check_close(zp.poles[0], BigComplex(2L, 0L, p), bits_tol(p, 64));
    CHECK_THROWS_AS((void)interpolant_rational(r, zp.poles[0]), PoleHit);
}

TEST_CASE("approximant agrees with the exponential far better than either varies") {
    const mpfr_prec_t p = 512;
    Interpolant r = solve_interpolant(make_point_mass(8, BigComplex(0L, 0L, p)));
    BigComplex z(BigFloat("0.25", p), BigFloat("0.125", p));
    BigComplex err = interpolant_error(r, z);
    // order of tangency 17 at the origin, |z| ~ 0.28: the error is tiny
    // but nonzero
    CHECK(abs(err) <= BigFloat(1e-18, p));
    CHECK(abs(err) >= BigFloat(1e-40, p));
    check_close(interpolant_rational(r, z) + err, exp(z), bits_tol(p, 120));
}

TEST_CASE("rescaled pair: monic numerator, same scalar, vanishing combination") {
    const mpfr_prec_t p = 512;
    Scheme s(3, 3,
             {{BigComplex(0.8, 0.3, p), 2},
              {BigComplex(-0.6, -0.2, p), 3},
              {BigComplex(0.1, 1.0, p), 2}});
    Interpolant r = solve_interpolant(s);
    ScaledPair sp = scaled_pair(r);
    REQUIRE(sp.P.degree() == 3);
    check_close(sp.P.coeffs().back(), BigComplex(1L, 0L, p), bits_tol(p, 8));
    // Q(w)/P(w) must equal q(2nw)/p(2nw): the same joint scalar.
    BigComplex w(BigFloat("0.21", p), BigFloat("-0.04", p));
    BigComplex z = w * (2L * sp.n);
    check_close(sp.Q.eval(w) * r.p.eval(z), r.q.eval(z) * sp.P.eval(w), bits_tol(p, 100));
    // the scaled combination vanishes at scaled nodes
    BigFloat scale = sp.P.coeff_norm() + sp.Q.coeff_norm();
    for (const auto& node : sp.nodes) {
        CHECK(abs(scaled_E(sp, node)) <= scale * bits_tol(p, 140));
    }
}

TEST_SUITE_END();
