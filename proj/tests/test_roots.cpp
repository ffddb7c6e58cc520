// Simultaneous root refinement: recovery of known root sets, clustered
// roots at the accuracy the coefficients support, determinism.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "ratexp/errors.hpp"
#include "ratexp/polynomial.hpp"
#include "ratexp/rootfinding.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;

namespace {

// Every expected root has exactly one computed partner within tol.
void check_matching(const std::vector<BigComplex>& got, std::vector<BigComplex> want,
                    const BigFloat& tol) {
    REQUIRE(got.size() == want.size());
    for (const auto& g : got) {
        bool found = false;
        for (size_t i = 0; i < want.size(); ++i) {
            if (abs(g - want[i]) <= tol) {
                want.erase(want.begin() + static_cast<long>(i));
                found = true;
                break;
            }
        }
        CHECK_MESSAGE(found, "no partner for root ", g.to_string(20));
    }
}

}  // namespace

TEST_SUITE_BEGIN("roots");

TEST_CASE("simple separated roots to near working precision") {
    const mpfr_prec_t p = 512;
    std::vector<BigComplex> want{BigComplex(2L, 0L, p),  BigComplex(-1L, 0L, p),
                                 BigComplex(0L, 1L, p),  BigComplex(0L, -1L, p),
                                 BigComplex(3L, 4L, p),  BigComplex(-2L, 1L, p)};
    Polynomial q = Polynomial::from_roots(want, BigComplex(2L, -1L, p));
    RootsResult r = poly_roots(q);
    check_matching(r.roots, want, bits_tol(p, 96));
}

TEST_CASE("degree 40 on a circle") {
    const mpfr_prec_t p = 512;
    std::vector<BigComplex> want;
    for (int k = 0; k < 40; ++k) {
        double th = 6.283185307179586 * k / 40.0 + 0.1;
        want.push_back(BigComplex(1.5 * std::cos(th), 1.5 * std::sin(th), p));
    }
    Polynomial q = Polynomial::from_roots(want, BigComplex(1L, 0L, p));
    RootsResult r = poly_roots(q);
    check_matching(r.roots, want, bits_tol(p, 128));
}

TEST_CASE("triple root converges to the coefficient-supported accuracy") {
    const mpfr_prec_t p = 1024;
    std::vector<BigComplex> want(3, BigComplex(1L, 0L, p));
    Polynomial q = Polynomial::from_roots(want, BigComplex(1L, 0L, p));
    RootsResult r = poly_roots(q);
    // A cluster of multiplicity m can only be located to ~ prec/m bits.
    check_matching(r.roots, want, BigFloat::two_pow(-static_cast<long>(p) / 3 + 8, p));
}

TEST_CASE("exact zero roots are deflated") {
    const mpfr_prec_t p = 256;
    // z^2 (z - 5)
    Polynomial q(std::vector<BigComplex>{BigComplex(p), BigComplex(p), BigComplex(-5L, 0L, p),
                                         BigComplex(1L, 0L, p)});
    RootsResult r = poly_roots(q);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0].is_zero());
    CHECK(r.roots[1].is_zero());
    CHECK(abs(r.roots[2] - BigComplex(5L, 0L, p)) <= bits_tol(p, 64));
}

TEST_CASE("zero polynomial is rejected") {
    const mpfr_prec_t p = 128;
    Polynomial q = Polynomial::zero(p);
    CHECK_THROWS_AS((void)poly_roots(q), NumericError);
}

TEST_CASE("output is bit-deterministic across runs") {
    const mpfr_prec_t p = 256;
    std::vector<BigComplex> want{BigComplex(1L, 2L, p), BigComplex(-3L, 0L, p),
                                 BigComplex(0L, -2L, p), BigComplex(2L, 2L, p)};
    Polynomial q = Polynomial::from_roots(want, BigComplex(1L, 0L, p));
    RootsResult a = poly_roots(q);
    RootsResult b = poly_roots(q);
    REQUIRE(a.roots.size() == b.roots.size());
    for (size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(a.roots[i].to_string() == b.roots[i].to_string());
    }
}

TEST_SUITE_END();
