#pragma once

// Arbitrary-precision real and complex scalars on top of MPFR.
//
// Precision semantics: every value carries its own precision in bits. Any
// binary operation produces a result at the *maximum* of the operand
// precisions — precision is never silently downgraded. All roundings are
// to-nearest (MPFR_RNDN), so results are bit-deterministic across runs and
// platforms for identical inputs.
//
// Complex arithmetic is spelled out over mpfr reals (no libmpc dependency).
// Principal branches: csqrt has Re >= 0, clog has Im in (-pi, pi]. Values
// whose imaginary part is an exact zero are treated as lying on the upper
// edge of the cut (+0 convention), which keeps evaluation on the negative
// real axis deterministic.

#include <mpfr.h>

#include <string>
#include <utility>

namespace ratexp {

inline constexpr mpfr_prec_t kDefaultPrec = 1024;

class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    // Parses a decimal string at the given precision.
    BigFloat(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Deterministic decimal form; digits == 0 picks full precision.
    std::string to_string(size_t digits = 0) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat& operator+=(const BigFloat& o) {
        bump(o.prec());
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        bump(o.prec());
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        bump(o.prec());
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        bump(o.prec());
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, long k) {
        BigFloat r(a.prec());
        mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, long k) {
        BigFloat r(a.prec());
        mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(pmax(y, x));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y) {
        BigFloat r(pmax(x, y));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqr(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqr(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
    friend const BigFloat& min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

    // 2^e, exact.
    static BigFloat two_pow(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // Nearest integer as a BigFloat at the same precision.
    friend BigFloat round_nearest(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_rint(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    // Multiply by 2^e in place (exact).
    void scale2(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); }

  private:
    static mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    void bump(mpfr_prec_t p) {
        if (prec() < p) {
            mpfr_t t;
            mpfr_init2(t, p);
            mpfr_set(t, v_, MPFR_RNDN);
            mpfr_swap(t, v_);
            mpfr_clear(t);
        }
    }
    mpfr_t v_;
};

class BigComplex {
  public:
    explicit BigComplex(mpfr_prec_t prec = kDefaultPrec) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    BigComplex(long re, long im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    BigFloat& re() { return re_; }
    BigFloat& im() { return im_; }

    mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    std::string to_string(size_t digits = 0) const {
        return "(" + re_.to_string(digits) + ", " + im_.to_string(digits) + ")";
    }

    BigComplex& operator+=(const BigComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re_, -a.im_); }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
        return BigComplex(a.re_ * s, a.im_ * s);
    }
    friend BigComplex operator*(const BigComplex& a, long k) {
        return BigComplex(a.re_ * k, a.im_ * k);
    }
    friend BigComplex operator/(const BigComplex& a, long k) {
        return BigComplex(a.re_ / k, a.im_ / k);
    }

    friend BigComplex conj(const BigComplex& a) { return BigComplex(a.re_, -a.im_); }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
    // |z|^2 without the square root.
    friend BigFloat norm2(const BigComplex& a) { return sqr(a.re_) + sqr(a.im_); }
    friend BigFloat arg(const BigComplex& a);

    friend BigComplex sqrt(const BigComplex& a);  // principal, Re >= 0
    friend BigComplex log(const BigComplex& a);   // principal, Im in (-pi, pi]
    friend BigComplex exp(const BigComplex& a);
    friend BigComplex inv(const BigComplex& a);
    friend BigComplex pow_int(const BigComplex& a, long k);

    // this -= a*b, at the working precision of *this (which is bumped to
    // cover a and b). The workhorse of elimination inner loops.
    void submul(const BigComplex& a, const BigComplex& b);

    static BigComplex i_unit(mpfr_prec_t prec) { return BigComplex(0L, 1L, prec); }

  private:
    BigFloat re_, im_;
};

}  // namespace ratexp
