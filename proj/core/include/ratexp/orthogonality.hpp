#pragma once

// Contour characterizations of a solved balanced pair:
//
//  * moment defects  d_j = (1/2pi i) \oint w^j P(w) e^{-2nw} / Omega(w) dw
//    over a contour enclosing all scaled nodes, where Omega is the monic
//    nodal polynomial. For the solved pair d_0 .. d_{n-1} vanish and d_n
//    sets the scale - an independent certificate that the linear solve
//    found the right polynomial.
//
//  * the 2x2 matrix combining the pair with its shifted-split companion
//    (degrees (n-1, n+1), denominator made monic). Its determinant is
//    exactly 1: the two pairs' cross combination P Qhat - Q Phat is a
//    monic polynomial of degree 2n+1 vanishing at every node, hence equal
//    to Omega, which cancels the Omega in the matrix entries.

#include <array>

#include "ratexp/interpolant.hpp"
#include "ratexp/polynomial.hpp"

namespace ratexp {

// Same scheme points, degree split (n-1, n+1), denominator monic after
// the 2n rescale. Throws InvalidScheme for unbalanced input schemes.
ScaledPair companion_scaled_pair(const Scheme& s);

// d_0 .. d_{j_max} as defined above, over a square contour with half-side
// max(1.5, 2 max|node|).
std::vector<BigComplex> moment_defects(const ScaledPair& sp, long j_max);

class SolutionMatrixAssembler {
  public:
    SolutionMatrixAssembler(ScaledPair primary, ScaledPair companion);

    // Row-major entries [[P, E e^{-nz}/Omega], [Phat, Ehat e^{-nz}/Omega]]
    // at a point z off the node set.
    std::array<BigComplex, 4> at(const BigComplex& z) const;
    // Determinant of the above; identically 1 in exact arithmetic.
    BigComplex det(const BigComplex& z) const;

  private:
    ScaledPair primary_, companion_;
    Polynomial omega_;
};

}  // namespace ratexp
