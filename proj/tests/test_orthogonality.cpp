// Contour certificates: vanishing moment defects, and unimodularity of
// the assembled 2x2 solution matrix.

#include <doctest.h>

#include <vector>

#include "ratexp/errors.hpp"
#include "ratexp/interpolant.hpp"
#include "ratexp/orthogonality.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;
using testutil::check_close;

TEST_SUITE_BEGIN("orthogonality");

TEST_CASE("moment defects vanish below the top order, confluent case") {
    const mpfr_prec_t p = 512;
    const long n = 6;
    Interpolant r = solve_interpolant(make_point_mass(n, BigComplex(0L, 0L, p)));
    ScaledPair sp = scaled_pair(r);
    std::vector<BigComplex> d = moment_defects(sp, n);
    REQUIRE(d.size() == static_cast<size_t>(n) + 1);
    BigFloat top = abs(d.back());
    CHECK(top > BigFloat(1e-30, p));  // the top moment genuinely does not vanish
    for (long j = 0; j < n; ++j) {
        CHECK_MESSAGE(abs(d[j]) <= top * BigFloat(1e-60, p), "moment ", j, " = ",
                      abs(d[j]).to_string(8));
    }
    // The top moment equals minus the leading denominator coefficient.
    check_close(d.back(), -sp.Q.coeffs().back(), top * bits_tol(p, 200));
}

TEST_CASE("moment defects vanish for a spread-out scheme") {
    const mpfr_prec_t p = 512;
    const long n = 4;
    Scheme s(n, n,
             {{BigComplex(0.4, 0.2, p), 3},
              {BigComplex(-0.5, 0.1, p), 2},
              {BigComplex(0.1, -0.6, p), 2},
              {BigComplex(-0.1, 0.5, p), 2}});
    ScaledPair sp = scaled_pair(solve_interpolant(s));
    std::vector<BigComplex> d = moment_defects(sp, n);
    BigFloat top = abs(d.back());
    CHECK(top > BigFloat(1e-30, p));
    for (long j = 0; j < n; ++j) {
        CHECK(abs(d[j]) <= top * BigFloat(1e-60, p));
    }
}

TEST_CASE("solution matrix determinant is one, confluent case") {
    const mpfr_prec_t p = 1024;
    const long n = 3;
    Scheme s = make_point_mass(n, BigComplex(0L, 0L, p));
    SolutionMatrixAssembler y(scaled_pair(solve_interpolant(s)), companion_scaled_pair(s));
    const double spots[][2] = {{0.7, 0.3},  {-0.4, 0.9}, {1.5, -0.5},
                               {-1.2, -1.1}, {0.05, 0.0}, {0.0, 2.0}};
    for (auto& l : spots) {
        BigComplex z(l[0], l[1], p);
        check_close(y.det(z), BigComplex(1L, 0L, p), BigFloat(1e-150, p));
    }
}

TEST_CASE("solution matrix determinant is one for distinct complex nodes") {
    const mpfr_prec_t p = 1024;
    const long n = 3;
    std::vector<SchemePoint> pts;
    const double locs[][2] = {{0.3, 0.4},  {-0.2, 0.9}, {0.0, -1.1}, {1.2, 0.0},
                              {-0.7, -0.3}, {0.5, -0.8}, {-1.0, 0.2}};
    for (auto& l : locs) pts.push_back({BigComplex(l[0], l[1], p), 1});
    Scheme s(n, n, std::move(pts));
    SolutionMatrixAssembler y(scaled_pair(solve_interpolant(s)), companion_scaled_pair(s));
    const double spots[][2] = {{0.9, 0.1}, {-0.6, -0.7}, {0.0, 1.4}, {2.0, 0.5}};
    for (auto& l : spots) {
        BigComplex z(l[0], l[1], p);
        check_close(y.det(z), BigComplex(1L, 0L, p), BigFloat(1e-150, p));
    }
}

TEST_CASE("matrix evaluation on a node reports the pole") {
    const mpfr_prec_t p = 512;
    const long n = 2;
    Scheme s = make_point_mass(n, BigComplex(0L, 0L, p));
    SolutionMatrixAssembler y(scaled_pair(solve_interpolant(s)), companion_scaled_pair(s));
    CHECK_THROWS_AS((void)y.at(BigComplex(0L, 0L, p)), PoleHit);
}

TEST_SUITE_END();
