#include "ratexp/rootfinding.hpp"

#include <algorithm>
#include <cmath>

#include "ratexp/errors.hpp"

namespace ratexp {

namespace {

// Golden-ratio angle sequence: never lines two starting points up with a
// symmetry axis of the coefficient set, which would stall the iteration.
double golden_angle(size_t k) {
    const double phi_frac = 0.61803398874989484820;
    double t = static_cast<double>(k + 1) * phi_frac;
    return 6.283185307179586476925 * (t - std::floor(t));
}

}  // namespace

RootsResult poly_roots(const Polynomial& p, int max_iterations) {
    Polynomial q = p;
    q.trim_trailing(BigFloat(0L, 64));  // drop exact zero leading coefficients
    if (q.is_empty() || (q.degree() == 0 && q.coeffs()[0].is_zero())) {
        throw NumericError("poly_roots: zero polynomial");
    }
    const mpfr_prec_t prec = q.prec();

    RootsResult out;

    // Deflate exact roots at the origin.
    size_t low = 0;
    while (low < q.coeffs().size() && q.coeffs()[low].is_zero()) ++low;
    if (low > 0) {
        std::vector<BigComplex> c(q.coeffs().begin() + low, q.coeffs().end());
        q = Polynomial(std::move(c));
        for (size_t i = 0; i < low; ++i) out.roots.push_back(BigComplex(prec));
    }
    const size_t deg = q.degree();
    if (deg == 0) {
        return out;
    }

    // Monic normalization.
    {
        BigComplex lead = q.coeffs().back();
        std::vector<BigComplex> c = q.coeffs();
        for (auto& ck : c) ck = ck / lead;
        q = Polynomial(std::move(c));
    }

    // Starting radii from the Newton polygon: the upper convex hull of
    // (k, log2 |a_k|) splits the degree into bands, and each band's edge
    // slope estimates the magnitude of its roots. Far better behaved than
    // one global Cauchy circle when root magnitudes are not all comparable.
    std::vector<double> lg(deg + 1);
    std::vector<bool> present(deg + 1, false);
    for (size_t k = 0; k <= deg; ++k) {
        const BigComplex& ck = q.coeffs()[k];
        if (ck.is_zero()) continue;
        long e2 = 0;
        double mant = mpfr_get_d_2exp(&e2, abs(ck).raw(), MPFR_RNDN);
        lg[k] = static_cast<double>(e2) + std::log2(std::abs(mant));
        present[k] = true;
    }
    std::vector<size_t> hull;  // indices of upper-hull vertices, ascending
    for (size_t k = 0; k <= deg; ++k) {
        if (!present[k]) continue;
        while (hull.size() >= 2) {
            size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            // drop b if it sits on or under the chord a--k
            double cross = (lg[b] - lg[a]) * static_cast<double>(k - a) -
                           (lg[k] - lg[a]) * static_cast<double>(b - a);
            if (cross <= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(k);
    }

    std::vector<BigComplex> z(deg, BigComplex(prec));
    {
        size_t idx = 0;
        for (size_t h = 0; h + 1 < hull.size(); ++h) {
            size_t k1 = hull[h], k2 = hull[h + 1];
            double slope = (lg[k1] - lg[k2]) / static_cast<double>(k2 - k1);
            for (size_t j = 0; j < k2 - k1 && idx < deg; ++j, ++idx) {
                double th = golden_angle(idx);
                BigFloat r(std::exp2(slope), prec);
                z[idx] = BigComplex(BigFloat(std::cos(th), prec) * r,
                                    BigFloat(std::sin(th), prec) * r);
            }
        }
    }

    const BigFloat step_floor = BigFloat::two_pow(-static_cast<long>(prec) + 64, prec);
    std::vector<bool> done(deg, false);
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        size_t ndone = 0;
        for (size_t k = 0; k < deg; ++k) {
            if (done[k]) {
                ++ndone;
                continue;
            }
            auto [val, der] = q.eval_with_derivative(z[k]);
            BigFloat noise = q.eval_with_noise_bound(z[k]).second;
            if (abs(val) <= noise) {
                done[k] = true;
                ++ndone;
                continue;
            }
            BigComplex corr(prec);
            if (der.is_zero()) {
                // Sitting on a critical point: nudge off it instead of
                // dividing by zero; the next sweep recovers.
                BigFloat sc = BigFloat(1L, prec) + abs(z[k]);
                corr = BigComplex(BigFloat(0.001, prec) * sc, BigFloat(0.0007, prec) * sc);
            } else {
                BigComplex newton = val / der;
                BigComplex s(prec);
                for (size_t j = 0; j < deg; ++j) {
                    if (j == k) continue;
                    s += inv(z[k] - z[j]);
                }
                BigComplex denom = BigComplex(1L, 0L, prec) - newton * s;
                corr = denom.is_zero() ? newton : newton / denom;
            }
            z[k] -= corr;
            if (abs(corr) <= step_floor * (BigFloat(1L, prec) + abs(z[k]))) {
                done[k] = true;
                ++ndone;
            }
        }
        if (ndone == deg) break;
    }
    out.iterations = iter;
    if (iter >= max_iterations) {
        size_t left = 0;
        for (bool d : done)
            if (!d) ++left;
        throw NoConvergence("poly_roots: " + std::to_string(left) + " of " + std::to_string(deg) +
                                " roots unconverged",
                            iter);
    }

    for (auto& r : z) out.roots.push_back(std::move(r));
    std::sort(out.roots.begin(), out.roots.end(), [](const BigComplex& a, const BigComplex& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    });
    return out;
}

}  // namespace ratexp
