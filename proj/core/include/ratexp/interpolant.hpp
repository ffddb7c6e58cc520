#pragma once

// Rational interpolation of the exponential. Given a scheme with degree
// split (n1, n2) and total multiplicity n1+n2+1, determine polynomials
// p (deg <= n1) and q (deg <= n2), not both zero, with
//
//     p(z) + q(z) e^z  vanishing at each scheme point to its multiplicity.
//
// The linear system is homogeneous with a one-dimensional solution space;
// a deterministic normalization picks the representative.

#include <vector>

#include "ratexp/polynomial.hpp"
#include "ratexp/prec.hpp"
#include "ratexp/scheme.hpp"

namespace ratexp {

enum class DenominatorNormalization {
    kUnitAtZero,  // q(0) = 1
    kMonic,       // leading coefficient of q is 1
};

struct Interpolant {
    Scheme scheme;
    Polynomial p, q;
    DenominatorNormalization normalization = DenominatorNormalization::kUnitAtZero;
    // relative residual of the homogeneous solve (pre-normalization)
    BigFloat solve_residual{64};
    // elimination saw one borderline pivot; results may be unreliable
    bool borderline = false;
};

// Solves the scheme. With kUnitAtZero preferred, falls back to kMonic when
// |q(0)| < 2^{-prec/4} * max|q coefficients| (the fallback is recorded in
// the result); with kMonic the denominator is made monic directly, which
// is what the shifted degree split (n-1, n+1) companion solve needs.
Interpolant solve_interpolant(
    const Scheme& s, DenominatorNormalization preference = DenominatorNormalization::kUnitAtZero);

// p(z) + q(z) e^z
BigComplex interpolant_F(const Interpolant& r, const BigComplex& z);
// -p(z)/q(z), the rational approximant of e^z. Throws PoleHit when q(z)
// is below its evaluation noise floor.
BigComplex interpolant_rational(const Interpolant& r, const BigComplex& z);
// e^z - (-p/q) = F/q, the pointwise approximation error.
BigComplex interpolant_error(const Interpolant& r, const BigComplex& z);

struct ZerosPoles {
    std::vector<BigComplex> zeros;  // roots of p
    std::vector<BigComplex> poles;  // roots of q
};
ZerosPoles zeros_and_poles(const Interpolant& r);

// Rescaled pair for balanced splits (n1 == n2 == n): with a single joint
// scalar s, P(z) = s p(2n z) is monic of degree n and Q(z) = s q(2n z).
// The natural companion objects live on points divided by 2n.
struct ScaledPair {
    long n = 0;
    Polynomial P, Q;
    std::vector<BigComplex> nodes;  // scaled unit points, canonical order
};
ScaledPair scaled_pair(const Interpolant& r);

// P(z) e^{-nz} + Q(z) e^{nz}
BigComplex scaled_E(const ScaledPair& sp, const BigComplex& z);

}  // namespace ratexp
