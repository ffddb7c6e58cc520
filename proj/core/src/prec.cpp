#include "ratexp/prec.hpp"

#include <cstdlib>
#include <cstring>

namespace ratexp {

std::string BigFloat::to_string(size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    if (digits == 0) {
        // Enough decimal digits to round-trip the binary value.
        digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
    }
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // Trim trailing zeros but keep at least one digit.
    size_t last = mant.find_last_not_of('0');
    if (last == std::string::npos) last = 0;
    mant.erase(last + 1);
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    *this = *this * o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    *this = *this / o;
    return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    mpfr_prec_t p = a.prec() > b.prec() ? a.prec() : b.prec();
    BigComplex r(p);
    mpfr_t t1, t2;
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    // re = ac - bd
    mpfr_mul(t1, a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_sub(r.re_.raw(), t1, t2, MPFR_RNDN);
    // im = ad + bc
    mpfr_mul(t1, a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_add(r.im_.raw(), t1, t2, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    // (a * conj b) / |b|^2. The mpfr exponent range is wide enough that the
    // classic overflow concern behind Smith's algorithm does not apply.
    mpfr_prec_t p = a.prec() > b.prec() ? a.prec() : b.prec();
    BigComplex r(p);
    mpfr_t t1, t2, den;
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    mpfr_init2(den, p);
    mpfr_sqr(t1, b.re_.raw(), MPFR_RNDN);
    mpfr_sqr(t2, b.im_.raw(), MPFR_RNDN);
    mpfr_add(den, t1, t2, MPFR_RNDN);
    // re = (ac + bd)/den
    mpfr_mul(t1, a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(r.re_.raw(), t1, den, MPFR_RNDN);
    // im = (bc - ad)/den
    mpfr_mul(t1, a.im_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_div(r.im_.raw(), t1, den, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    mpfr_clear(den);
    return r;
}

BigFloat arg(const BigComplex& a) {
    // Exact-zero imaginary parts are treated as +0 so points on the negative
    // real axis get the upper-edge value +pi, deterministically.
    if (a.im().is_zero()) {
        BigFloat plus0(a.prec());
        return atan2(plus0, a.re());
    }
    return atan2(a.im(), a.re());
}

BigComplex sqrt(const BigComplex& a) {
    mpfr_prec_t p = a.prec();
    if (a.im().is_zero()) {
        BigComplex r(p);
        if (!a.re().is_negative()) {
            mpfr_sqrt(r.re().raw(), a.re().raw(), MPFR_RNDN);
        } else {
            mpfr_neg(r.im().raw(), a.re().raw(), MPFR_RNDN);
            mpfr_sqrt(r.im().raw(), r.im().raw(), MPFR_RNDN);
        }
        return r;
    }
    // w = sqrt((|z| + |re|)/2);  the other component is |im|/(2w).
    // Assigning by sign pattern avoids cancellation in every quadrant.
    BigFloat m = abs(a);
    BigComplex r(p);
    mpfr_t w, t;
    mpfr_init2(w, p);
    mpfr_init2(t, p);
    mpfr_abs(t, a.re().raw(), MPFR_RNDN);
    mpfr_add(w, m.raw(), t, MPFR_RNDN);
    mpfr_div_2ui(w, w, 1, MPFR_RNDN);
    mpfr_sqrt(w, w, MPFR_RNDN);
    mpfr_abs(t, a.im().raw(), MPFR_RNDN);
    mpfr_div(t, t, w, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    if (!a.re().is_negative()) {
        mpfr_set(r.re().raw(), w, MPFR_RNDN);
        mpfr_set(r.im().raw(), t, MPFR_RNDN);
        if (a.im().is_negative()) mpfr_neg(r.im().raw(), r.im().raw(), MPFR_RNDN);
    } else {
        mpfr_set(r.re().raw(), t, MPFR_RNDN);
        mpfr_set(r.im().raw(), w, MPFR_RNDN);
        if (a.im().is_negative()) mpfr_neg(r.im().raw(), r.im().raw(), MPFR_RNDN);
    }
    mpfr_clear(w);
    mpfr_clear(t);
    return r;
}

BigComplex log(const BigComplex& a) {
    BigFloat m = abs(a);
    return BigComplex(log(m), arg(a));
}

BigComplex exp(const BigComplex& a) {
    mpfr_prec_t p = a.prec();
    BigComplex r(p);
    mpfr_t ex, s, c;
    mpfr_init2(ex, p);
    mpfr_init2(s, p);
    mpfr_init2(c, p);
    mpfr_exp(ex, a.re().raw(), MPFR_RNDN);
    mpfr_sin_cos(s, c, a.im().raw(), MPFR_RNDN);
    mpfr_mul(r.re().raw(), ex, c, MPFR_RNDN);
    mpfr_mul(r.im().raw(), ex, s, MPFR_RNDN);
    mpfr_clear(ex);
    mpfr_clear(s);
    mpfr_clear(c);
    return r;
}

BigComplex inv(const BigComplex& a) {
    BigComplex one(1L, 0L, a.prec());
    return one / a;
}

BigComplex pow_int(const BigComplex& a, long k) {
    mpfr_prec_t p = a.prec();
    if (k == 0) return BigComplex(1L, 0L, p);
    bool invert = k < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    BigComplex base = a;
    BigComplex acc(1L, 0L, p);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return invert ? inv(acc) : acc;
}

void BigComplex::submul(const BigComplex& a, const BigComplex& b) {
    mpfr_prec_t p = prec();
    if (a.prec() > p) p = a.prec();
    if (b.prec() > p) p = b.prec();
    if (re_.prec() < p) re_ += BigFloat(0L, p);  // bump storage precision
    if (im_.prec() < p) im_ += BigFloat(0L, p);
    mpfr_t t1, t2;
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    mpfr_mul(t1, a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_sub(re_.raw(), re_.raw(), t1, MPFR_RNDN);
    mpfr_mul(t1, a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_sub(im_.raw(), im_.raw(), t1, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
}

}  // namespace ratexp
