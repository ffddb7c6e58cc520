#pragma once

#include <utility>
#include <vector>

#include "ratexp/prec.hpp"

namespace ratexp {

// Dense polynomial with complex coefficients in ascending order
// (coeffs()[k] multiplies z^k). Degree is the index of the last stored
// coefficient; callers that need a numerically honest degree should
// trim_trailing() first.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigComplex> coeffs) : c_(std::move(coeffs)) {}

    static Polynomial zero(mpfr_prec_t prec) {
        return Polynomial(std::vector<BigComplex>{BigComplex(prec)});
    }
    static Polynomial constant(BigComplex value) {
        return Polynomial(std::vector<BigComplex>{std::move(value)});
    }
    // lead * prod_k (z - roots[k])
    static Polynomial from_roots(const std::vector<BigComplex>& roots, const BigComplex& lead);

    const std::vector<BigComplex>& coeffs() const { return c_; }
    std::vector<BigComplex>& coeffs() { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_empty() const { return c_.empty(); }
    mpfr_prec_t prec() const;

    BigComplex eval(const BigComplex& z) const;
    // Value and first derivative in one Horner pass.
    std::pair<BigComplex, BigComplex> eval_with_derivative(const BigComplex& z) const;
    // Value plus an a posteriori rounding-noise bound for the evaluation
    // (the classic running Horner error bound). Used by the root finder to
    // recognize when a residual has reached the evaluation noise floor.
    std::pair<BigComplex, BigFloat> eval_with_noise_bound(const BigComplex& z) const;

    Polynomial derivative() const;
    // p(alpha * z) as a polynomial in z.
    Polynomial with_scaled_argument(const BigComplex& alpha) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator+(const Polynomial& other) const;
    void scale(const BigComplex& s);

    // Largest coefficient magnitude.
    BigFloat coeff_norm() const;
    // Drop trailing coefficients smaller than rel_tol * coeff_norm().
    void trim_trailing(const BigFloat& rel_tol);

  private:
    std::vector<BigComplex> c_;
};

}  // namespace ratexp
