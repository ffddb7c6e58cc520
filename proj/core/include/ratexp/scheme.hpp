#pragma once

// Interpolation schemes: finite point sets with multiplicities, plus the
// degree split (n1, n2) of the rational interpolant they determine.
//
// Schemes are kept in a canonical form - exact duplicates merged, points
// sorted by (re, im) - so that every derived quantity (hashes, sums that
// single out the first point, emitted files) is independent of the order
// the caller supplied the points in.

#include <cstdint>
#include <string>
#include <vector>

#include "ratexp/prec.hpp"

namespace ratexp {

struct SchemePoint {
    BigComplex location;
    long multiplicity = 1;
};

class Scheme {
  public:
    Scheme() = default;
    Scheme(long n1, long n2, std::vector<SchemePoint> pts);

    long n1() const { return n1_; }
    long n2() const { return n2_; }
    const std::vector<SchemePoint>& points() const { return pts_; }

    long total_multiplicity() const;
    mpfr_prec_t prec() const;
    // max_j |z_j| over the (unscaled) points
    BigFloat max_radius() const;

    // Throws InvalidScheme unless multiplicities are positive, locations
    // finite, degrees non-negative and total multiplicity == n1 + n2 + 1.
    void validate() const;

    // Points expanded to unit multiplicity in canonical order (the first
    // entry is the canonical first point).
    std::vector<BigComplex> unit_points() const;
    // Same, divided by 2n (the natural scale when n1 == n2 == n).
    std::vector<BigComplex> scaled_unit_points() const;

    // z -> -z with the degree split swapped. Solving the reflected scheme
    // swaps the roles of the two polynomials of the original (up to one
    // scalar), which makes this a strong cross-check.
    Scheme reflected() const;

    // FNV-1a over the canonical decimal serialization; stable across runs.
    uint64_t hash() const;

    std::string to_json() const;
    static Scheme from_json(const std::string& text, mpfr_prec_t prec);

  private:
    void canonicalize();
    long n1_ = 0, n2_ = 0;
    std::vector<SchemePoint> pts_;
};

// All n1 + n2 + 1 points at a single location (type (n, n) with 2n+1
// coincident points reproduces the classical diagonal case).
Scheme make_point_mass(long n, const BigComplex& z0);
// 2n+1 equispaced points on the circle |z| = radius.
Scheme make_circle(long n, const BigFloat& radius, mpfr_prec_t prec);
// 2n+1 equispaced points on the segment [a, b] (endpoints included).
Scheme make_segment(long n, const BigComplex& a, const BigComplex& b);
// Two points with multiplicities m1 and m2 and degree split (n1, n2),
// where m1 + m2 = n1 + n2 + 1.
Scheme make_two_point(long n1, long n2, const BigComplex& z1, long m1, const BigComplex& z2,
                      long m2);
// 2n+1 points drawn uniformly from the disk |z| <= radius with a
// deterministic splitmix64 stream; identical seeds give identical schemes.
Scheme make_random_disk(long n, const BigFloat& radius, uint64_t seed, mpfr_prec_t prec);

}  // namespace ratexp
