#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratexp/gfunction.hpp"
#include "ratexp/prec.hpp"

namespace ratexp {

// An oriented polyline in the plane. The tracer below fills it with the
// boundary arcs of the central lens; the vertical boundary rays are
// generated analytically. Vertices are stored as BigComplex for uniform
// downstream plumbing, but the geometry itself is a double-precision
// object (the curves are used at plotting / classification accuracy).
struct Contour {
    std::vector<BigComplex> vertices;
    bool forward = true;  // traversal order is as listed
    std::string start_label;
    std::string end_label;

    // Total polyline length, computed in double precision.
    double length() const;
};

// Minimum distance from z to the polyline (double precision).
double distance_to_contour(const Contour& c, const BigComplex& z);

// Traces the left boundary arc of the central lens: the level curve of
// Re eta = 0 that leaves +i into the left half-plane, crosses the real
// axis at the negative lens corner, and ends at -i. Advances by a
// tangent predictor of the given step and a transverse Newton corrector
// holding every vertex within |Re eta| <= tol; the lower half is the
// conjugate mirror of the upper half, so the arc is exactly symmetric.
// Ordered +i -> -i, the orientation that makes the line measure below
// positive. Throws TraceStalled / BranchConfusion on continuation
// failures.
Contour trace_left_arc(double step, double tol);

// The mirror arc in the right half-plane (negated conjugate of the left
// arc), ordered -i -> +i -- again the positivity orientation.
Contour trace_right_arc(double step, double tol);

// The two vertical boundary rays, above +i and below -i, truncated at
// |Im z| = ymax and sampled with the given step. First member: upper ray
// from +i upward; second: lower ray from -i downward.
std::pair<Contour, Contour> vertical_rays(double step, double ymax);

// A finite positive measure as weighted point masses.
struct DiscreteMeasure {
    std::vector<BigComplex> nodes;
    std::vector<BigFloat> weights;

    BigFloat total_mass() const;
};

// Midpoint discretization, with the given number of pieces, of the line
// measure with density sqrt(s^2+1)/(i pi s) ds along the arc. Piece
// boundaries are graded toward the arc endpoints, where the density has
// a square-root zero (uniform pieces would concentrate the quadrature
// error there). Weights must come out real and nonnegative up to tight
// tolerances; anything else signals a branch error and throws
// NonRealWeight.
DiscreteMeasure discretize_arc_measure(const Contour& arc, long pieces);

// Classifies z against the traced lens arcs and the analytic vertical
// rays by crossing counts of a horizontal ray cast toward +infinity.
// Within plane distance `margin` of any boundary piece the answer is
// kBoundary; otherwise kLens (inside the lens), kLeft (left of the left
// arc and the rays), or kRight. Agrees with the field-sign classifier
// away from boundaries; this one needs no multiprecision evaluations.
Region classify_region(const Contour& left_arc, const Contour& right_arc, const BigComplex& z,
                       double margin);

// Complex power moments of the measure, powers 0..max_power.
std::vector<BigComplex> measure_moments(const DiscreteMeasure& m, int max_power);

// Moments of the uniform counting measure on the given points.
std::vector<BigComplex> empirical_moments(const std::vector<BigComplex>& points, int max_power);

// max_k |a_k - b_k| over the common length (sizes must match).
BigFloat moment_discrepancy(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b);

}  // namespace ratexp
