#include "ratexp/polynomial.hpp"

#include <algorithm>

namespace ratexp {

Polynomial Polynomial::from_roots(const std::vector<BigComplex>& roots, const BigComplex& lead) {
    // Ascending-order product: multiplying by (z - r) sends c_k to
    // c_{k-1} - r c_k, with the new leading coefficient carried over.
    std::vector<BigComplex> c{lead};
    for (const BigComplex& r : roots) {
        c.push_back(c.back());
        for (size_t k = c.size() - 2; k > 0; --k) {
            c[k] = c[k - 1] - c[k] * r;
        }
        c[0] = -(c[0] * r);
    }
    return Polynomial(std::move(c));
}

mpfr_prec_t Polynomial::prec() const {
    mpfr_prec_t p = MPFR_PREC_MIN;
    for (const auto& x : c_)
        if (x.prec() > p) p = x.prec();
    return p;
}

BigComplex Polynomial::eval(const BigComplex& z) const {
    if (c_.empty()) return BigComplex(z.prec());
    BigComplex acc = c_.back();
    for (size_t k = c_.size() - 1; k-- > 0;) {
        acc = acc * z + c_[k];
    }
    return acc;
}

std::pair<BigComplex, BigComplex> Polynomial::eval_with_derivative(const BigComplex& z) const {
    mpfr_prec_t p = prec() > z.prec() ? prec() : z.prec();
    if (c_.empty()) return {BigComplex(p), BigComplex(p)};
    BigComplex acc = c_.back();
    BigComplex der(p);
    for (size_t k = c_.size() - 1; k-- > 0;) {
        der = der * z + acc;
        acc = acc * z + c_[k];
    }
    return {acc, der};
}

std::pair<BigComplex, BigFloat> Polynomial::eval_with_noise_bound(const BigComplex& z) const {
    mpfr_prec_t p = prec() > z.prec() ? prec() : z.prec();
    // Track sum |a_k| |z|^k at low precision; the rounding noise of the
    // Horner recurrence is bounded by ~ 4(2 deg + 1) ulp of that sum.
    const mpfr_prec_t lowp = 64;
    if (c_.empty()) return {BigComplex(p), BigFloat(lowp)};
    BigComplex acc = c_.back();
    // Magnitudes at 64 bits are plenty for a noise *bound*; mpfr keeps the
    // full exponent range so nothing over- or underflows.
    BigFloat az(lowp), mu(lowp), t(lowp);
    mpfr_hypot(az.raw(), z.re().raw(), z.im().raw(), MPFR_RNDU);
    mpfr_hypot(mu.raw(), c_.back().re().raw(), c_.back().im().raw(), MPFR_RNDU);
    for (size_t k = c_.size() - 1; k-- > 0;) {
        acc = acc * z + c_[k];
        mpfr_mul(mu.raw(), mu.raw(), az.raw(), MPFR_RNDU);
        mpfr_hypot(t.raw(), c_[k].re().raw(), c_[k].im().raw(), MPFR_RNDU);
        mpfr_add(mu.raw(), mu.raw(), t.raw(), MPFR_RNDU);
    }
    BigFloat noise = mu * static_cast<long>(8 * c_.size());
    noise = noise * BigFloat::two_pow(-static_cast<long>(p), lowp);
    return {acc, noise};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial::zero(prec());
    std::vector<BigComplex> d;
    d.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) {
        d.push_back(c_[k] * static_cast<long>(k));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::with_scaled_argument(const BigComplex& alpha) const {
    std::vector<BigComplex> d;
    d.reserve(c_.size());
    BigComplex pw(1L, 0L, alpha.prec() > prec() ? alpha.prec() : prec());
    for (size_t k = 0; k < c_.size(); ++k) {
        d.push_back(c_[k] * pw);
        pw *= alpha;
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (c_.empty() || other.c_.empty()) return Polynomial();
    mpfr_prec_t p = prec() > other.prec() ? prec() : other.prec();
    std::vector<BigComplex> d(c_.size() + other.c_.size() - 1, BigComplex(p));
    for (size_t i = 0; i < c_.size(); ++i) {
        for (size_t j = 0; j < other.c_.size(); ++j) {
            d[i + j] += c_[i] * other.c_[j];
        }
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    mpfr_prec_t p = prec() > other.prec() ? prec() : other.prec();
    std::vector<BigComplex> d(std::max(c_.size(), other.c_.size()), BigComplex(p));
    for (size_t i = 0; i < d.size(); ++i) {
        if (i < c_.size()) d[i] += c_[i];
        if (i < other.c_.size()) d[i] += other.c_[i];
    }
    return Polynomial(std::move(d));
}

void Polynomial::scale(const BigComplex& s) {
    for (auto& x : c_) x *= s;
}

BigFloat Polynomial::coeff_norm() const {
    BigFloat m(prec());
    for (const auto& x : c_) {
        BigFloat a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

void Polynomial::trim_trailing(const BigFloat& rel_tol) {
    BigFloat cut = coeff_norm() * rel_tol;
    while (c_.size() > 1 && abs(c_.back()) <= cut) {
        c_.pop_back();
    }
}

}  // namespace ratexp
