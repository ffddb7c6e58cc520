#pragma once

// The limit-field apparatus attached to a balanced scheme: soft endpoints
// near +-i, the two-sheeted square root with its cut on the left lens
// arc, the exterior field g with its constant terms, Szego-type factors,
// phase integrals, pointwise strong predictions for the rescaled pair,
// and the pointwise error model for the approximant itself.
//
// Branch policy. Multivalued pieces are realized one of two ways:
//  * point evaluations near the origin use principal square roots (valid
//    while the rescaled points stay in |z| < 1/4);
//  * everything z-dependent is continued along a canonical path from the
//    far positive real axis, where every tracked quantity is close to a
//    positive number. Paths to the left region travel above the upper
//    branch point with one deliberate hop across the vertical ray; the
//    hop is never subdivided, because for perturbed endpoints a thin
//    wrong-sign sliver hugs that ray and probing inside it would poison
//    the continuation. A step whose argument moves too fast raises
//    BranchTrackingFailure instead of guessing.
//
// Evaluation points must keep clear of the rescaled node set (field sums
// and nodal factors are singular there) and of the cut itself.

#include <utility>
#include <vector>

#include "ratexp/polynomial.hpp"
#include "ratexp/prec.hpp"
#include "ratexp/scheme.hpp"

namespace ratexp {

// sqrt(z^2+1) + log(z / (1 + sqrt(z^2+1))), principal branches. Purely
// imaginary on the upper unit ray, real on the positive axis, and its
// real part changes sign across the limiting lens boundary.
BigComplex eta_principal(const BigComplex& z);

// The positive real zero of eta (0.66274...).
BigFloat eta_real_root(mpfr_prec_t prec);

enum class Region {
    kLens,      // Re eta < 0: between the two arcs
    kLeft,      // Re eta > 0, Re z < 0
    kRight,     // Re eta > 0, Re z > 0
    kBoundary,  // |Re eta| or |Re z| under the margin: no stable answer
};
Region classify_region(const BigComplex& z, const BigFloat& margin);

class LimitField {
  public:
    // Solves the endpoint pair (a, b) for the rescaled points of s by
    // Newton from (i, -i). Throws InvalidScheme for unbalanced splits and
    // WrongRegion when the rescaled points leave |z| < 1/4.
    explicit LimitField(const Scheme& s);

    long n() const { return n_; }
    mpfr_prec_t prec() const { return prec_; }
    const BigComplex& endpoint_a() const { return a_; }
    const BigComplex& endpoint_b() const { return b_; }
    // max-norm residual of the endpoint equations at (a, b)
    const BigFloat& endpoint_residual() const { return endpoint_residual_; }

    // Two-sheeted sqrt((z-a)(z-b)), cut on the left lens arc, equal to
    // +sqrt(ab) at the origin and to +z + O(1) to the far right.
    BigComplex sqrt_cut(const BigComplex& z) const;
    BigComplex w1(const BigComplex& z) const;  // -z + sqrt_cut(z)
    BigComplex w2(const BigComplex& z) const;  // -z - sqrt_cut(z)

    // The field term: -2z + (a+b) - (1/n) sum_j sqrt_cut(node_j)/(z - node_j),
    // summed over the tail (all rescaled points except one copy of the
    // canonical first). Vanishes at both endpoints by construction.
    BigComplex field_h(const BigComplex& z) const;
    // Boundary density on the cut-from the lens side: -h / (2 pi i R).
    BigComplex cut_density(const BigComplex& s) const;

    // Exterior field, branch tracked from the far positive axis where it
    // matches log z. Its derivative is closed form.
    BigComplex g(const BigComplex& z) const;
    BigComplex g_derivative(const BigComplex& z) const;
    // The constant companion of g (the combination "2 l").
    BigComplex two_ell() const;
    // 2 g(0) + 2 l in one numerically stable sum; tends to
    // -2 + log 4 + i pi as the rescaled points shrink.
    BigComplex origin_constant() const;

    // Szego-type square and the branch-tracked ratio/product pair,
    // normalized so the ratio tends to 1 far to the right.
    BigComplex szego_square(const BigComplex& z) const;
    BigComplex szego_square_infinity() const;
    BigComplex szego_ratio(const BigComplex& z) const;    // D(inf)/D(z)
    BigComplex szego_product(const BigComplex& z) const;  // D(inf) D(z)

    // Phase integral, two independent routes: the explicit sum through g,
    // and quadrature of h/R from the upper endpoint (with a square-root
    // substitution absorbing the endpoint zero). They agree modulo the
    // residue lattice 2 pi i / n.
    BigComplex phase_sum(const BigComplex& z) const;
    BigComplex phase_integral(const BigComplex& z) const;

    // Quarter-power edge factors (r_plus, r_minus) built from
    // ((z-b)/(z-a))^{1/4}, branch tracked, r_plus -> 1 far right.
    std::pair<BigComplex, BigComplex> edge_factors(const BigComplex& z) const;

    // Strong pointwise predictions for the rescaled monic pair and their
    // exponential combination. The applicable formula switches with the
    // region; kBoundary points throw WrongRegion.
    BigComplex predict_P(const BigComplex& z) const;
    BigComplex predict_Q(const BigComplex& z) const;
    BigComplex predict_E(const BigComplex& z) const;

    // Pointwise model for e^z + p(z)/q(z) in original (unscaled)
    // coordinates, built from the nodal polynomial and origin_constant.
    BigComplex error_model(const BigComplex& z) const;
    // Deviation of origin_constant from its limit, imaginary part reduced
    // to (-pi, pi]; and the derived drift factor (tends to 1).
    BigComplex constant_defect() const;
    BigComplex drift_factor() const;

    const std::vector<BigComplex>& nodes() const { return nodes_; }

  private:
    struct Bundle;  // tracked logs of everything z-dependent at one point
    Bundle tracked_bundle(const BigComplex& z, bool with_nodes) const;
    std::vector<BigComplex> canonical_path(const BigComplex& z) const;
    BigComplex g_from_bundle(const Bundle& bu, const BigComplex& z) const;

    Scheme scheme_;
    long n_ = 0;
    mpfr_prec_t prec_ = kDefaultPrec;
    std::vector<BigComplex> nodes_;  // rescaled, canonical order
    std::vector<BigComplex> tail_;   // nodes_ without one copy of the first
    BigComplex a_, b_;
    BigFloat endpoint_residual_{64};

    // cached point data on the tail and on the canonical first node
    std::vector<BigComplex> r_pts_, w1_pts_, w2_pts_, den_pts_;
    BigComplex w1_0_, w2_0_;
    BigComplex sqrt_ab_;
    BigComplex two_ell_, origin_constant_;
    Polynomial nodal_unscaled_;  // prod (z - z_j), original coordinates
};

}  // namespace ratexp
