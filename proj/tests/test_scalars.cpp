// Arbitrary-precision scalar layer: arithmetic identities, principal
// branches, and the determinism guarantees everything else leans on.

#include <doctest.h>

#include "ratexp/prec.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;
using testutil::check_close;

TEST_SUITE_BEGIN("scalars");

TEST_CASE("real arithmetic keeps working-precision accuracy") {
    const mpfr_prec_t p = 512;
    BigFloat a = sqrt(BigFloat(2L, p));
    BigFloat b = sqrt(BigFloat(3L, p));
    // (a+b)^2 - (a^2 + 2ab + b^2) == 0 up to rounding
    BigFloat lhs = sqr(a + b);
    BigFloat rhs = sqr(a) + a * b * 2L + sqr(b);
    check_close(lhs, rhs, bits_tol(p, 8));
    CHECK(a.prec() == p);
}

TEST_CASE("precision promotes to the wider operand") {
    BigFloat lo(1L, 128);
    BigFloat hi = sqrt(BigFloat(2L, 1024));
    CHECK((lo + hi).prec() == 1024);
    CHECK((hi * lo).prec() == 1024);
    lo += hi;
    CHECK(lo.prec() == 1024);
}

TEST_CASE("two_pow is exact at any exponent") {
    BigFloat t = BigFloat::two_pow(-900, 64);
    CHECK(t * BigFloat::two_pow(900, 64) == BigFloat(1L, 64));
    CHECK(!t.is_zero());
}

TEST_CASE("decimal round trip") {
    const mpfr_prec_t p = 256;
    BigFloat x("3.14159265358979323846264338327950288419716939937510", p);
    BigFloat y(x.to_string(), p);
    check_close(y, x, bits_tol(p, 8));
}

TEST_CASE("complex multiply and divide invert each other") {
    const mpfr_prec_t p = 512;
    BigComplex z(BigFloat("1.25", p), BigFloat("-0.75", p));
    BigComplex w(BigFloat("-2.5", p), BigFloat("0.125", p));
    check_close((z * w) / w, z, bits_tol(p, 16));
    check_close(z * inv(z), BigComplex(1L, 0L, p), bits_tol(p, 16));
}

TEST_CASE("principal square root: right half-plane, upper edge on the cut") {
    const mpfr_prec_t p = 256;
    // Exactly on the negative real axis: the +0 imaginary part convention
    // must put the result on the positive imaginary axis.
    BigComplex m4(-4L, 0L, p);
    check_close(sqrt(m4), BigComplex(0L, 2L, p), bits_tol(p, 8));
    // All four quadrants: sqrt(z)^2 == z and Re sqrt >= 0.
    const double pts[][2] = {{3.0, 4.0}, {-3.0, 4.0}, {-3.0, -4.0}, {3.0, -4.0}, {0.0, -9.0}};
    for (auto& q : pts) {
        BigComplex z(q[0], q[1], p);
        BigComplex r = sqrt(z);
        CHECK(r.re().sign() >= 0);
        check_close(r * r, z, bits_tol(p, 12));
    }
}

TEST_CASE("principal logarithm: Im in (-pi, pi], cut maps to +pi") {
    const mpfr_prec_t p = 256;
    BigFloat pi = BigFloat::pi(p);
    BigComplex m1(-1L, 0L, p);
    check_close(log(m1), BigComplex(BigFloat(0L, p), pi), bits_tol(p, 8));
    const double pts[][2] = {{2.0, 1.0}, {-2.0, 1.0}, {-2.0, -1.0}, {2.0, -1.0}};
    for (auto& q : pts) {
        BigComplex z(q[0], q[1], p);
        check_close(exp(log(z)), z, bits_tol(p, 16));
        BigFloat im = log(z).im();
        CHECK(im <= pi);
        CHECK(-pi < im);
    }
}

TEST_CASE("exp matches the real exponential on the real axis") {
    const mpfr_prec_t p = 256;
    BigComplex z(BigFloat("0.5", p), BigFloat(0L, p));
    check_close(exp(z).re(), exp(BigFloat("0.5", p)), bits_tol(p, 8));
    CHECK(exp(z).im().is_zero());
}

TEST_CASE("integer powers") {
    const mpfr_prec_t p = 256;
    BigComplex z(1L, 1L, p);
    check_close(pow_int(z, 8), BigComplex(16L, 0L, p), bits_tol(p, 8));
    check_close(pow_int(z, -2), inv(z * z), bits_tol(p, 8));
    check_close(pow_int(z, 0), BigComplex(1L, 0L, p), bits_tol(p, 8));
}

TEST_CASE("submul is one fused update") {
    const mpfr_prec_t p = 512;
    BigComplex acc(BigFloat("1.375", p), BigFloat("-2.25", p));
    BigComplex a(BigFloat("0.5", p), BigFloat("3.0", p));
    BigComplex b(BigFloat("-1.125", p), BigFloat("0.875", p));
    BigComplex want = acc - a * b;
    acc.submul(a, b);
    check_close(acc, want, bits_tol(p, 8));
}

TEST_CASE("string output is deterministic") {
    const mpfr_prec_t p = 128;
    BigFloat x = sqrt(BigFloat(7L, p));
    CHECK(x.to_string() == x.to_string());
    CHECK(x.to_string(20) == x.to_string(20));
}

TEST_SUITE_END();
