#include "ratexp/gfunction.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ratexp/errors.hpp"
#include "ratexp/newton.hpp"
#include "ratexp/quadrature.hpp"

namespace ratexp {

namespace {

bool exactly_zero(const BigComplex& z) { return z.re().is_zero() && z.im().is_zero(); }

// Largest principal-log argument step accepted while tracking branches
// along a path segment (radians, safely under pi/2).
constexpr double kArgStep = 1.2;
constexpr int kMaxDepth = 64;

using VectorFn = std::function<std::vector<BigComplex>(const BigComplex&)>;

void advance_logs(const VectorFn& f, const BigComplex& za, std::vector<BigComplex>& vals,
                  std::vector<BigComplex>& logs, const BigComplex& zb, bool rigid, int depth) {
    std::vector<BigComplex> nxt = f(zb);
    std::vector<BigComplex> steps;
    steps.reserve(nxt.size());
    const BigFloat cap(kArgStep, 64);
    bool ok = true;
    for (std::size_t i = 0; i < nxt.size(); ++i) {
        if (exactly_zero(nxt[i]) || exactly_zero(vals[i])) {
            throw BranchTrackingFailure("tracked function vanished on the continuation path");
        }
        BigComplex step = log(nxt[i] / vals[i]);
        if (abs(step.im()) > cap) ok = false;
        steps.push_back(std::move(step));
    }
    if (ok) {
        for (std::size_t i = 0; i < nxt.size(); ++i) logs[i] += steps[i];
        vals = std::move(nxt);
        return;
    }
    if (rigid) {
        throw BranchTrackingFailure("argument jumped across the non-subdividable hop");
    }
    if (depth >= kMaxDepth) {
        throw BranchTrackingFailure("branch tracking exceeded the subdivision depth cap");
    }
    const BigComplex mid = (za + zb) / 2L;
    advance_logs(f, za, vals, logs, mid, false, depth + 1);
    advance_logs(f, mid, vals, logs, zb, false, depth + 1);
}

// Continuous logarithms of every component of f along the polyline,
// seeded with principal values at the first point (all components must
// start well away from the negative real axis there). rigid[k] marks a
// segment that must be crossed in one step.
std::vector<BigComplex> track_logs(const VectorFn& f, const std::vector<BigComplex>& pts,
                                   const std::vector<bool>& rigid) {
    std::vector<BigComplex> vals = f(pts.front());
    std::vector<BigComplex> logs;
    logs.reserve(vals.size());
    for (const auto& v : vals) {
        if (exactly_zero(v)) {
            throw BranchTrackingFailure("tracked function vanishes at the anchor point");
        }
        logs.push_back(log(v));
    }
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        advance_logs(f, pts[k], vals, logs, pts[k + 1], rigid[k], 0);
    }
    return logs;
}

}  // namespace

BigComplex eta_principal(const BigComplex& z) {
    const mpfr_prec_t p = z.prec();
    const BigComplex one(1L, 0L, p);
    const BigComplex root = sqrt(z * z + one);
    return root + log(z / (one + root));
}

BigFloat eta_real_root(mpfr_prec_t prec) {
    auto f = [prec](const BigFloat& x) {
        const BigFloat one(1.0, prec);
        const BigFloat r = sqrt(x * x + one);
        return r + log(x / (one + r));
    };
    return real_newton(f, BigFloat(0.66, prec), prec);
}

Region classify_region(const BigComplex& z, const BigFloat& margin) {
    const BigComplex e = eta_principal(z);
    // The field diverges to -infinity at the origin: deep lens interior.
    if (!e.re().is_finite()) return Region::kLens;
    if (abs(e.re()) <= margin) return Region::kBoundary;
    if (e.re().is_negative()) return Region::kLens;
    if (abs(z.re()) <= margin) return Region::kBoundary;
    return z.re().is_negative() ? Region::kLeft : Region::kRight;
}

LimitField::LimitField(const Scheme& s) : scheme_(s) {
    scheme_.validate();
    n_ = scheme_.n1();
    if (n_ < 1) throw InvalidScheme("the field apparatus needs degree at least one per side");
    prec_ = scheme_.prec() < 128 ? 128 : scheme_.prec();
    nodes_ = scheme_.scaled_unit_points();
    const BigFloat quarter(0.25, 64);
    for (const auto& nd : nodes_) {
        if (!(abs(nd) < quarter)) {
            throw WrongRegion("rescaled interpolation points must stay inside |z| < 1/4");
        }
    }
    tail_.assign(nodes_.begin() + 1, nodes_.end());

    auto gsys = [this](const std::vector<BigComplex>& ab) {
        const BigComplex& av = ab[0];
        const BigComplex& bv = ab[1];
        BigComplex s1(prec_), s2(prec_);
        for (const auto& x : tail_) {
            const BigComplex qa = sqrt(x - av);
            const BigComplex qb = sqrt(x - bv);
            s1 += qb / qa;
            s2 += qa / qb;
        }
        std::vector<BigComplex> out;
        out.push_back(bv - av + s1 / n_);
        out.push_back(av - bv + s2 / n_);
        return out;
    };
    std::vector<BigComplex> start{BigComplex(0L, 1L, prec_), BigComplex(0L, -1L, prec_)};
    std::vector<BigComplex> sol = newton_solve(gsys, start, prec_);
    a_ = sol[0];
    b_ = sol[1];
    const std::vector<BigComplex> res = gsys(sol);
    endpoint_residual_ = max(abs(res[0]), abs(res[1]));

    const BigComplex absum = a_ + b_;
    sqrt_ab_ = sqrt(a_ * b_);
    r_pts_.reserve(tail_.size());
    w1_pts_.reserve(tail_.size());
    w2_pts_.reserve(tail_.size());
    den_pts_.reserve(tail_.size());
    for (const auto& x : tail_) {
        // Near the origin the factor-wise principal square roots agree
        // with the cut realization; they stay exact as x -> 0.
        const BigComplex rx = sqrt(x - a_) * sqrt(x - b_);
        r_pts_.push_back(rx);
        w1_pts_.push_back(-x + rx);
        w2_pts_.push_back(-x - rx);
        den_pts_.push_back(w2_pts_.back() * 2L + absum);
    }
    {
        const BigComplex& x0 = nodes_.front();
        const BigComplex rx = sqrt(x0 - a_) * sqrt(x0 - b_);
        w1_0_ = -x0 + rx;
        w2_0_ = -x0 - rx;
    }

    // Constant companion of g. The per-point logarithm sits near -1; when
    // a point lands exactly on the negative axis the lower edge is the
    // continuous choice (its mirror term in origin_constant_ takes the
    // upper edge, and only the matched pair keeps the two constants
    // consistent for real point configurations).
    const BigFloat pi_p = BigFloat::pi(prec_);
    BigComplex lsum(prec_);
    for (std::size_t j = 0; j < tail_.size(); ++j) {
        const BigComplex ratio = (w1_pts_[j] * 2L + absum) / den_pts_[j];
        BigComplex lg = log(ratio);
        if (ratio.im().is_zero() && ratio.re().is_negative()) {
            lg = BigComplex(lg.re(), -pi_p);
        }
        lsum += lg;
    }
    two_ell_ = absum - lsum / (2 * n_);

    // 2 g(0) + 2 l in one sum. Each closed per-point factor equals
    // A_j^2 / B_j, where A_j is the per-point factor of g at the origin
    // and B_j the per-point ratio of the constant above; building the
    // logarithm as 2 log A_j - log B_j (same branch rules as the two
    // addends) keeps the identity with 2 g(0) + 2 l exact for every
    // point configuration, and the form stays regular even when a
    // point sits exactly at the origin.
    BigComplex csum(prec_);
    for (std::size_t j = 0; j < tail_.size(); ++j) {
        const BigComplex aj =
            (w2_pts_[j] - sqrt_ab_) * (w1_pts_[j] + sqrt_ab_) / den_pts_[j];
        const BigComplex bj = (w1_pts_[j] * 2L + absum) / den_pts_[j];
        BigComplex lb = log(bj);
        if (bj.im().is_zero() && bj.re().is_negative()) {
            lb = BigComplex(lb.re(), -pi_p);
        }
        csum += log(aj) * 2L - lb;
    }
    origin_constant_ = sqrt_ab_ * (-2L) + csum / (2 * n_);

    nodal_unscaled_ = Polynomial::from_roots(scheme_.unit_points(), BigComplex(1L, 0L, prec_));
}

BigComplex LimitField::sqrt_cut(const BigComplex& z) const {
    // Away from the endpoint pair, take the branch normalized to +z at
    // infinity in a form whose only jump set is the straight chord
    // between the endpoints: it stays exact arbitrarily close to the
    // near-vertical rays, where the factor-wise form below develops
    // thin wrong-sign slivers once the endpoints move off the axis.
    const BigComplex center = (a_ + b_) / 2L;
    const BigComplex half = (a_ - b_) / 2L;
    const BigComplex zeta = z - center;
    if (abs(zeta) * 4L > abs(half) * 5L) {
        const BigComplex ratio = half / zeta;
        return zeta * sqrt(BigComplex(1L, 0L, prec_) - ratio * ratio);
    }
    // Near the endpoints the chord form would cut straight through the
    // point cluster; switch to the factor-wise root, whose sign is
    // repaired on the far side of the supporting arc.
    const BigComplex ps = sqrt((z - a_) * (z - b_));
    const BigComplex e = eta_principal(z);
    const bool flip = e.re().is_finite() && !e.re().is_negative() && !e.re().is_zero() &&
                      z.re().is_negative();
    return flip ? -ps : ps;
}

BigComplex LimitField::w1(const BigComplex& z) const { return -z + sqrt_cut(z); }

BigComplex LimitField::w2(const BigComplex& z) const { return -z - sqrt_cut(z); }

BigComplex LimitField::field_h(const BigComplex& z) const {
    BigComplex sum(prec_);
    for (std::size_t j = 0; j < tail_.size(); ++j) {
        const BigComplex d = z - tail_[j];
        if (exactly_zero(d)) throw PoleHit("field evaluated at a rescaled interpolation point");
        sum += r_pts_[j] / d;
    }
    return z * (-2L) + (a_ + b_) - sum / n_;
}

BigComplex LimitField::cut_density(const BigComplex& s) const {
    // Boundary value from the lens side: the factor-wise principal root.
    const BigComplex rplus = sqrt((s - a_) * (s - b_));
    const BigComplex two_pi_i(BigFloat(prec_), BigFloat::pi(prec_) * 2L);
    return -field_h(s) / (two_pi_i * rplus);
}

std::vector<BigComplex> LimitField::canonical_path(const BigComplex& z) const {
    const mpfr_prec_t p = prec_ > z.prec() ? prec_ : z.prec();
    const BigComplex anchor(BigFloat::two_pow(24, p), BigFloat(p));
    const BigComplex e = eta_principal(z);
    const bool left = e.re().is_finite() && !e.re().is_negative() && !e.re().is_zero() &&
                      z.re().is_negative();
    if (!left) return {anchor, z};
    auto cpt = [p](double x, double y) { return BigComplex(x, y, p); };
    // Route around the lens through the half plane containing the target so
    // the final descent never crosses the opposite arc.
    const double h = z.im().is_negative() ? -2.2 : 2.2;
    return {anchor, cpt(1.5, h), cpt(0.45, h), cpt(-0.45, h), cpt(-1.5, h), z};
}

struct LimitField::Bundle {
    std::vector<BigComplex> glogs;  // tracked logs of the field terms (tail order)
    BigComplex dlog;                // tracked log of D^2(z) / D^2(inf)
    BigComplex flog;                // tracked log of (z - b)/(z - a)
    std::vector<BigComplex> nlogs;  // tracked logs of (z - node_j), all nodes
    bool has_nodes = false;
};

LimitField::Bundle LimitField::tracked_bundle(const BigComplex& z, bool with_nodes) const {
    const std::size_t tn = tail_.size();
    const BigComplex absum = a_ + b_;
    const BigComplex dinf_den = w2_0_ * 2L + absum;  // equals 4 / D^2(inf)
    auto eval = [&](const BigComplex& zz) {
        std::vector<BigComplex> out;
        out.reserve(tn + 2 + (with_nodes ? nodes_.size() : 0));
        const BigComplex r = sqrt_cut(zz);
        const BigComplex w1v = -zz + r;
        const BigComplex w2v = -zz - r;
        for (std::size_t j = 0; j < tn; ++j) {
            out.push_back((w2_pts_[j] - w1v) * (w1_pts_[j] - w2v) / den_pts_[j]);
        }
        const BigComplex num = -(w2v * 2L) - absum;
        const BigComplex den = (w2_0_ - w1v) * (w1_0_ - w2v);
        out.push_back(num * dinf_den / (den * 4L));
        out.push_back((zz - b_) / (zz - a_));
        if (with_nodes) {
            for (const auto& nd : nodes_) out.push_back(zz - nd);
        }
        return out;
    };
    const std::vector<BigComplex> pts = canonical_path(z);
    std::vector<bool> rigid(pts.size() - 1, false);
    if (pts.size() > 2) rigid[2] = true;  // the hop across the upper ray
    std::vector<BigComplex> logs = track_logs(eval, pts, rigid);
    Bundle bu;
    bu.glogs.assign(logs.begin(), logs.begin() + static_cast<std::ptrdiff_t>(tn));
    bu.dlog = logs[tn];
    bu.flog = logs[tn + 1];
    if (with_nodes) {
        bu.nlogs.assign(logs.begin() + static_cast<std::ptrdiff_t>(tn) + 2, logs.end());
        bu.has_nodes = true;
    }
    return bu;
}

BigComplex LimitField::g_from_bundle(const Bundle& bu, const BigComplex& z) const {
    const BigComplex r = sqrt_cut(z);
    const BigComplex w2v = -z - r;
    const BigComplex diff = a_ - b_;
    const BigComplex first = -(diff * diff) / ((w2v * 2L + a_ + b_) * 2L);
    BigComplex sum(prec_);
    for (const auto& lg : bu.glogs) sum += lg;
    return first + sum / (2 * n_);
}

BigComplex LimitField::g(const BigComplex& z) const {
    return g_from_bundle(tracked_bundle(z, false), z);
}

BigComplex LimitField::g_derivative(const BigComplex& z) const {
    const BigComplex r = sqrt_cut(z);
    const BigComplex rp = (z * 2L - a_ - b_) / (r * 2L);
    const BigComplex w1p = rp - BigComplex(1L, 0L, prec_);
    const BigComplex w2p = -rp - BigComplex(1L, 0L, prec_);
    const BigComplex w1v = -z + r;
    const BigComplex w2v = -z - r;
    const BigComplex diff = a_ - b_;
    const BigComplex dd = w2v * 2L + a_ + b_;
    BigComplex total = diff * diff * w2p / (dd * dd);
    BigComplex sum(prec_);
    for (std::size_t j = 0; j < tail_.size(); ++j) {
        sum += w1p / (w2_pts_[j] - w1v) + w2p / (w1_pts_[j] - w2v);
    }
    return total - sum / (2 * n_);
}

BigComplex LimitField::two_ell() const { return two_ell_; }

BigComplex LimitField::origin_constant() const { return origin_constant_; }

BigComplex LimitField::szego_square(const BigComplex& z) const {
    const BigComplex r = sqrt_cut(z);
    const BigComplex w1v = -z + r;
    const BigComplex w2v = -z - r;
    return (-(w2v * 2L) - a_ - b_) / ((w2_0_ - w1v) * (w1_0_ - w2v));
}

BigComplex LimitField::szego_square_infinity() const {
    return BigComplex(4L, 0L, prec_) / (w2_0_ * 2L + a_ + b_);
}

BigComplex LimitField::szego_ratio(const BigComplex& z) const {
    const Bundle bu = tracked_bundle(z, false);
    return exp(bu.dlog / (-2L));
}

BigComplex LimitField::szego_product(const BigComplex& z) const {
    const Bundle bu = tracked_bundle(z, false);
    return szego_square_infinity() * exp(bu.dlog / 2L);
}

BigComplex LimitField::phase_sum(const BigComplex& z) const {
    const Bundle bu = tracked_bundle(z, true);
    BigComplex nsum(prec_);
    for (std::size_t j = 1; j < nodes_.size(); ++j) nsum += bu.nlogs[j];
    const BigComplex gz = g_from_bundle(bu, z);
    return gz * (-2L) + z * 2L + nsum / n_ - two_ell_;
}

BigComplex LimitField::phase_integral(const BigComplex& z) const {
    // First leg from the upper endpoint with s = a + u^2, which absorbs
    // the square-root zero of the integrand; second leg straight on. The
    // fixed joint keeps the path right of the cut for right-region z.
    const BigComplex joint(0.5, 0.5, prec_);
    const BigComplex u1 = sqrt(joint - a_);
    auto leg1 = [this](const BigComplex& u) {
        const BigComplex s = a_ + u * u;
        return field_h(s) / sqrt_cut(s) * (u * 2L);
    };
    auto leg2 = [this](const BigComplex& s) { return field_h(s) / sqrt_cut(s); };
    const BigFloat tol = BigFloat::two_pow(96 - static_cast<long>(prec_), 64);
    const QuadratureResult i1 =
        integrate_polyline(leg1, {BigComplex(prec_), u1}, tol, 512);
    const QuadratureResult i2 = integrate_polyline(leg2, {joint, z}, tol, 512);
    return -(i1.value + i2.value);
}

std::pair<BigComplex, BigComplex> LimitField::edge_factors(const BigComplex& z) const {
    const Bundle bu = tracked_bundle(z, false);
    const BigComplex q = exp(bu.flog / 4L);
    const BigComplex qi = inv(q);
    return {(q + qi) / 2L, (q - qi) / 2L};
}

BigComplex LimitField::predict_P(const BigComplex& z) const {
    const Bundle bu = tracked_bundle(z, false);
    const BigComplex q = exp(bu.flog / 4L);
    const BigComplex rp = (q + inv(q)) / 2L;
    const BigComplex ratio = exp(bu.dlog / (-2L));
    const BigComplex gz = g_from_bundle(bu, z);
    return rp * ratio * exp(gz * n_);
}

BigComplex LimitField::predict_Q(const BigComplex& z) const {
    const Region reg = classify_region(z, BigFloat(64));
    if (reg == Region::kBoundary) {
        throw WrongRegion("prediction undefined on the region boundary");
    }
    if (reg == Region::kLens) {
        const Bundle bu = tracked_bundle(z, false);
        const BigComplex q = exp(bu.flog / 4L);
        const BigComplex rp = (q + inv(q)) / 2L;
        const BigComplex ratio = exp(bu.dlog / (-2L));
        const BigComplex gz = g_from_bundle(bu, z);
        return -(rp * ratio * exp((gz - z * 2L) * n_));
    }
    const Bundle bu = tracked_bundle(z, true);
    const BigComplex q = exp(bu.flog / 4L);
    const BigComplex rm = (q - inv(q)) / 2L;
    const BigComplex product = szego_square_infinity() * exp(bu.dlog / 2L);
    BigComplex olog(prec_);
    for (const auto& lg : bu.nlogs) olog += lg;
    const BigComplex gz = g_from_bundle(bu, z);
    const BigComplex minus_i(0L, -1L, prec_);
    return minus_i * rm * product * exp(olog - (gz + two_ell_) * n_);
}

BigComplex LimitField::predict_E(const BigComplex& z) const {
    const Region reg = classify_region(z, BigFloat(64));
    if (reg == Region::kBoundary) {
        throw WrongRegion("prediction undefined on the region boundary");
    }
    if (reg == Region::kLeft) {
        const Bundle bu = tracked_bundle(z, false);
        const BigComplex q = exp(bu.flog / 4L);
        const BigComplex rp = (q + inv(q)) / 2L;
        const BigComplex ratio = exp(bu.dlog / (-2L));
        const BigComplex gz = g_from_bundle(bu, z);
        return rp * ratio * exp((gz - z) * n_);
    }
    const Bundle bu = tracked_bundle(z, true);
    const BigComplex q = exp(bu.flog / 4L);
    const BigComplex rm = (q - inv(q)) / 2L;
    const BigComplex product = szego_square_infinity() * exp(bu.dlog / 2L);
    BigComplex olog(prec_);
    for (const auto& lg : bu.nlogs) olog += lg;
    const BigComplex gz = g_from_bundle(bu, z);
    const BigComplex minus_i(0L, -1L, prec_);
    return minus_i * rm * product * exp(olog + (z - gz - two_ell_) * n_);
}

BigComplex LimitField::error_model(const BigComplex& z) const {
    const BigComplex w = nodal_unscaled_.eval(z);
    const long twon = 2 * n_;
    const BigComplex pw = pow_int(BigComplex(twon, 0L, prec_), -(twon + 1));
    return w * pw * exp(z - origin_constant_ * n_) / 2L;
}

BigComplex LimitField::constant_defect() const {
    const BigFloat pi_p = BigFloat::pi(prec_);
    const BigFloat re_lim = log(BigFloat(4.0, prec_)) - BigFloat(2.0, prec_);
    const BigComplex d = origin_constant_ - BigComplex(re_lim, pi_p);
    const BigFloat turns = round_nearest(d.im() / (pi_p * 2L));
    return BigComplex(d.re(), d.im() - pi_p * 2L * turns);
}

BigComplex LimitField::drift_factor() const {
    return exp(constant_defect() * (-n_) / (2 * n_ + 1));
}

}  // namespace ratexp
