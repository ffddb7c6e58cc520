#include "ratexp/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "ratexp/errors.hpp"

namespace ratexp {

namespace {

using Cd = std::complex<double>;

Cd eta_at(Cd z) {
    const Cd r = std::sqrt(z * z + 1.0);
    return r + std::log(z / (1.0 + r));
}

// d/dz of the function above. Real part is continuous across the negative
// real axis (the logarithm jumps by a purely imaginary constant there), so
// level-curve work with Re eta never sees a cut in the left half-plane.
Cd eta_prime_at(Cd z) { return std::sqrt(z * z + 1.0) / z; }

// Transverse Newton pass pulling z onto the level set Re eta = 0 along the
// gradient direction.
Cd correct_onto_level(Cd z, double tol, const char* where) {
    for (int it = 0; it < 40; ++it) {
        const double f = eta_at(z).real();
        if (std::abs(f) < 0.01 * tol) return z;
        const Cd grad = std::conj(eta_prime_at(z));
        const double g2 = std::norm(grad);
        if (!(g2 > 0.0)) break;
        z -= f * grad / g2;
    }
    if (std::abs(eta_at(z).real()) <= tol) return z;
    throw TraceStalled(std::string("level-set corrector did not converge ") + where);
}

Cd to_cd(const BigComplex& z) { return Cd(z.re().to_double(), z.im().to_double()); }

}  // namespace

double Contour::length() const {
    double total = 0.0;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        total += std::abs(to_cd(vertices[i]) - to_cd(vertices[i - 1]));
    }
    return total;
}

double distance_to_contour(const Contour& c, const BigComplex& z) {
    const Cd p = to_cd(z);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < c.vertices.size(); ++i) {
        const Cd a = to_cd(c.vertices[i - 1]);
        const Cd b = to_cd(c.vertices[i]);
        const Cd ab = b - a;
        const double len2 = std::norm(ab);
        double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, std::abs(p - (a + t * ab)));
    }
    return best;
}

Contour trace_left_arc(double step, double tol) {
    if (!(step > 0.0) || !(tol > 0.0)) {
        throw NumericError("trace_left_arc: step and tol must be positive");
    }
    // Internal step slightly below the configured one so that corrector
    // drift cannot push consecutive vertex spacing above `step`.
    const double hstep = 0.9 * step;

    // The level curves through +i leave along three directions 2*pi/3
    // apart (the local model of eta near the branch point is a 3/2
    // power); the left-descending one is at angle 7*pi/6. Start a small
    // offset away because the gradient vanishes at the branch point
    // itself.
    const double ang = 7.0 * M_PI / 6.0;
    Cd dir(std::cos(ang), std::sin(ang));
    Cd z = correct_onto_level(Cd(0.0, 1.0) + 1e-4 * dir, tol, "near the start point");

    std::vector<Cd> upper{z};
    const std::size_t budget = static_cast<std::size_t>(64.0 / hstep) + 1000;
    double xcross = 0.0;
    for (;;) {
        if (upper.size() > budget) {
            throw TraceStalled("vertex budget exhausted before reaching the real axis");
        }
        const Cd grad = std::conj(eta_prime_at(z));
        Cd tang = Cd(0.0, 1.0) * grad / std::abs(grad);
        if ((tang * std::conj(dir)).real() < 0.0) tang = -tang;
        const Cd pred = z + hstep * tang;
        if (!(pred.imag() > 0.0)) {
            // About to cross the real axis; the arc meets it orthogonally,
            // so land exactly on it with a one-dimensional Newton in x.
            double x = pred.real() < -0.3 ? pred.real() : -0.66;
            for (int it = 0; it < 60; ++it) {
                const double s = std::sqrt(x * x + 1.0);
                const double dx = (s + std::log(-x / (1.0 + s))) * x / s;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            xcross = x;
            break;
        }
        const Cd next = correct_onto_level(pred, tol, "while advancing");
        if (std::abs(next - pred) > step) {
            throw BranchConfusion("corrector jumped off the tracked level set");
        }
        if (std::abs(eta_at(next).real()) > 10.0 * tol) {
            throw BranchConfusion("vertex residual above ten times the tolerance");
        }
        if (!(next.imag() > 0.0)) {
            double x = next.real() < -0.3 ? next.real() : -0.66;
            for (int it = 0; it < 60; ++it) {
                const double s = std::sqrt(x * x + 1.0);
                const double dx = (s + std::log(-x / (1.0 + s))) * x / s;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            xcross = x;
            break;
        }
        dir = (next - z) / std::abs(next - z);
        z = next;
        upper.push_back(z);
    }

    // Exact endpoint, traced upper half, axis crossing, then the
    // conjugate mirror for the lower half: the arc is symmetric by
    // construction and ends exactly at -i.
    Contour c;
    c.vertices.reserve(2 * upper.size() + 3);
    c.vertices.emplace_back(0.0, 1.0, 64);
    for (const Cd& v : upper) c.vertices.emplace_back(v.real(), v.imag(), 64);
    c.vertices.emplace_back(xcross, 0.0, 64);
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
        c.vertices.emplace_back(it->real(), -it->imag(), 64);
    }
    c.vertices.emplace_back(0.0, -1.0, 64);
    c.forward = true;
    c.start_label = "+i";
    c.end_label = "-i";
    return c;
}

Contour trace_right_arc(double step, double tol) {
    const Contour left = trace_left_arc(step, tol);
    Contour c;
    c.vertices.reserve(left.vertices.size());
    for (auto it = left.vertices.rbegin(); it != left.vertices.rend(); ++it) {
        c.vertices.push_back(-conj(*it));
    }
    c.forward = true;
    c.start_label = "-i";
    c.end_label = "+i";
    return c;
}

std::pair<Contour, Contour> vertical_rays(double step, double ymax) {
    if (!(step > 0.0) || !(ymax > 1.0)) {
        throw NumericError("vertical_rays: need step > 0 and ymax > 1");
    }
    const long m = static_cast<long>(std::ceil((ymax - 1.0) / step));
    const double h = (ymax - 1.0) / static_cast<double>(m);
    Contour up, down;
    up.vertices.reserve(m + 1);
    down.vertices.reserve(m + 1);
    for (long k = 0; k <= m; ++k) {
        const double y = 1.0 + h * static_cast<double>(k);
        up.vertices.emplace_back(0.0, y, 64);
        down.vertices.emplace_back(0.0, -y, 64);
    }
    up.start_label = "+i";
    up.end_label = "+i*inf";
    down.start_label = "-i";
    down.end_label = "-i*inf";
    return {up, down};
}

BigFloat DiscreteMeasure::total_mass() const {
    BigFloat total(64);
    for (const auto& w : weights) total += w;
    return total;
}

DiscreteMeasure discretize_arc_measure(const Contour& arc, long pieces) {
    if (pieces < 2 || arc.vertices.size() < 2) {
        throw NumericError("discretize_arc_measure: need >= 2 pieces and >= 2 vertices");
    }
    const std::size_t nv = arc.vertices.size();
    std::vector<Cd> vd(nv);
    std::vector<double> cum(nv, 0.0);
    for (std::size_t i = 0; i < nv; ++i) vd[i] = to_cd(arc.vertices[i]);
    for (std::size_t i = 1; i < nv; ++i) cum[i] = cum[i - 1] + std::abs(vd[i] - vd[i - 1]);
    const double total_len = cum.back();
    if (!(total_len > 0.0)) throw NumericError("discretize_arc_measure: degenerate polyline");

    auto point_at = [&](double u) -> Cd {
        u = std::clamp(u, 0.0, total_len);
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cum.begin());
        if (idx == 0) idx = 1;
        if (idx >= nv) idx = nv - 1;
        const double seg = cum[idx] - cum[idx - 1];
        const double t = seg > 0.0 ? (u - cum[idx - 1]) / seg : 0.0;
        return vd[idx - 1] + t * (vd[idx] - vd[idx - 1]);
    };
    // Graded piece boundaries: arclength u = L (1 - cos(pi xi)) / 2
    // clusters quadratically toward both endpoints.
    auto boundary = [&](long k) {
        const double xi = static_cast<double>(k) / static_cast<double>(pieces);
        return 0.5 * total_len * (1.0 - std::cos(M_PI * xi));
    };

    DiscreteMeasure m;
    m.nodes.reserve(pieces);
    m.weights.reserve(pieces);
    double raw_mass = 0.0;
    Cd prev = point_at(boundary(0));
    for (long k = 1; k <= pieces; ++k) {
        const Cd cur = point_at(boundary(k));
        const Cd mid = 0.5 * (prev + cur);
        const Cd dz = cur - prev;
        const Cd w = std::sqrt(mid * mid + 1.0) / mid * dz / Cd(0.0, M_PI);
        // On the exact trajectory the integrand times the tangent is real, but
        // a piece whose chord spans polyline vertices unevenly picks up a
        // direction error of order (vertex spacing)^2 that the midpoint
        // evaluation cannot cancel, so the imaginary defect reaches a few
        // 1e-7 at the default tracing resolution.  A wrong branch or a wrong
        // orientation shows up at the scale of the weight itself (~1e-3).
        if (std::abs(w.imag()) > 1e-6) {
            throw NonRealWeight("arc measure weight has a non-vanishing imaginary part");
        }
        if (w.real() < -1e-12) {
            throw NonRealWeight("arc measure weight is negative");
        }
        raw_mass += w.real();
        m.nodes.emplace_back(mid.real(), mid.imag(), 64);
        m.weights.emplace_back(w.real(), 64);
        prev = cur;
    }
    // The raw midpoint sums must reproduce the unit total mass on their
    // own; a larger defect means the arc or the piece count cannot
    // resolve the density. Normalize afterwards so that downstream
    // moment comparisons see an exactly unit 0th moment.
    if (std::abs(raw_mass - 1.0) > 1e-6) {
        throw NumericError("discretize_arc_measure: raw mass " + std::to_string(raw_mass) +
                           " is not within 1e-6 of 1; refine the arc or the piece count");
    }
    const BigFloat scale(1.0 / raw_mass, 64);
    for (auto& w : m.weights) w *= scale;
    return m;
}

Region classify_region(const Contour& left_arc, const Contour& right_arc, const BigComplex& z,
                       double margin) {
    const double x = z.re().to_double();
    const double y = z.im().to_double();
    if (distance_to_contour(left_arc, z) < margin) return Region::kBoundary;
    if (distance_to_contour(right_arc, z) < margin) return Region::kBoundary;
    if (std::abs(x) < margin && std::abs(y) >= 1.0 - margin) return Region::kBoundary;

    // Horizontal ray cast from z toward +infinity, with the half-open
    // rule so a crossing exactly at a vertex is counted once.
    auto crossings = [&](const Contour& c) {
        int count = 0;
        for (std::size_t i = 1; i < c.vertices.size(); ++i) {
            const Cd a = to_cd(c.vertices[i - 1]);
            const Cd b = to_cd(c.vertices[i]);
            if ((a.imag() > y) == (b.imag() > y)) continue;
            const double xi = a.real() + (y - a.imag()) * (b.real() - a.real()) /
                                             (b.imag() - a.imag());
            if (xi > x) ++count;
        }
        return count;
    };
    const int ray_hits = (x < 0.0 && std::abs(y) > 1.0) ? 1 : 0;
    if ((crossings(left_arc) + ray_hits) % 2 == 1) return Region::kLeft;
    if ((crossings(right_arc) + ray_hits) % 2 == 1) return Region::kLens;
    return Region::kRight;
}

std::vector<BigComplex> measure_moments(const DiscreteMeasure& m, int max_power) {
    if (max_power < 0) throw NumericError("measure_moments: negative power count");
    if (m.nodes.size() != m.weights.size()) {
        throw NumericError("measure_moments: node/weight size mismatch");
    }
    const mpfr_prec_t prec = m.nodes.empty() ? 64 : m.nodes.front().prec();
    std::vector<BigComplex> out(static_cast<std::size_t>(max_power) + 1, BigComplex(prec));
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        BigComplex p(1L, 0L, prec);
        for (int k = 0; k <= max_power; ++k) {
            out[static_cast<std::size_t>(k)] += p * m.weights[i];
            p *= m.nodes[i];
        }
    }
    return out;
}

std::vector<BigComplex> empirical_moments(const std::vector<BigComplex>& points, int max_power) {
    if (max_power < 0) throw NumericError("empirical_moments: negative power count");
    if (points.empty()) throw NumericError("empirical_moments: no points");
    const mpfr_prec_t prec = points.front().prec();
    std::vector<BigComplex> out(static_cast<std::size_t>(max_power) + 1, BigComplex(prec));
    for (const auto& r : points) {
        BigComplex p(1L, 0L, prec);
        for (int k = 0; k <= max_power; ++k) {
            out[static_cast<std::size_t>(k)] += p;
            p *= r;
        }
    }
    const long count = static_cast<long>(points.size());
    for (auto& v : out) v = v / count;
    return out;
}

BigFloat moment_discrepancy(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw NumericError("moment_discrepancy: moment lists must match in length");
    }
    BigFloat best = abs(a[0] - b[0]);
    for (std::size_t k = 1; k < a.size(); ++k) best = max(best, abs(a[k] - b[k]));
    return best;
}

}  // namespace ratexp
