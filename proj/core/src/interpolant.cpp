#include "ratexp/interpolant.hpp"

#include <algorithm>

#include "ratexp/errors.hpp"
#include "ratexp/nullspace.hpp"
#include "ratexp/rootfinding.hpp"

namespace ratexp {

namespace {

// Falling factorial k (k-1) ... (k-s+1) as an exact BigFloat.
BigFloat falling(long k, long s, mpfr_prec_t prec) {
    BigFloat f(1L, prec);
    for (long i = 0; i < s; ++i) f *= BigFloat(k - i, prec);
    return f;
}

}  // namespace

Interpolant solve_interpolant(const Scheme& s, DenominatorNormalization preference) {
    s.validate();
    // Work at the scheme's precision, with a floor that keeps the
    // elimination thresholds meaningful for carelessly built schemes.
    const mpfr_prec_t prec = s.prec() < 128 ? 128 : s.prec();
    const long n1 = s.n1(), n2 = s.n2();
    const size_t rows = static_cast<size_t>(n1 + n2 + 1);
    const size_t cols = rows + 1;
    const long maxdeg = std::max(n1, n2);

    Matrix m(rows, cols, prec);
    size_t row = 0;
    for (const auto& pt : s.points()) {
        const BigComplex& zj = pt.location;
        BigComplex ez = exp(zj);
        // powers of the location up to the degree needed
        std::vector<BigComplex> pw(static_cast<size_t>(maxdeg) + 1, BigComplex(1L, 0L, prec));
        for (long k = 1; k <= maxdeg; ++k) pw[k] = pw[k - 1] * zj;

        // Pascal triangle row for the Leibniz expansion, updated in place.
        std::vector<BigFloat> binom{BigFloat(1L, prec)};
        for (long r = 0; r < pt.multiplicity; ++r, ++row) {
            // d^r/dz^r of p at zj: column k gets k!/(k-r)! z^{k-r}
            for (long k = r; k <= n1; ++k) {
                m.at(row, static_cast<size_t>(k)) = pw[k - r] * falling(k, r, prec);
            }
            // d^r/dz^r of q e^z at zj: Leibniz over derivative orders of q
            for (long k = 0; k <= n2; ++k) {
                BigComplex acc(prec);
                for (long sd = 0; sd <= std::min(r, k); ++sd) {
                    acc += pw[k - sd] * (binom[sd] * falling(k, sd, prec));
                }
                m.at(row, static_cast<size_t>(n1 + 1 + k)) = acc * ez;
            }
            // extend the Pascal row: C(r+1, s) = C(r, s-1) + C(r, s)
            binom.push_back(binom.back());
            for (size_t i = binom.size() - 2; i > 0; --i) binom[i] += binom[i - 1];
        }
    }

    // Exact power-of-two row equilibration keeps the full pivoting honest
    // when multiplicities push factorial-sized entries into some rows.
    for (size_t i = 0; i < rows; ++i) {
        bool any = false;
        mpfr_exp_t emax = 0;
        for (size_t j = 0; j < cols; ++j) {
            const BigComplex& c = m.at(i, j);
            if (!c.re().is_zero()) {
                mpfr_exp_t e = mpfr_get_exp(c.re().raw());
                emax = any ? std::max(emax, e) : e;
                any = true;
            }
            if (!c.im().is_zero()) {
                mpfr_exp_t e = mpfr_get_exp(c.im().raw());
                emax = any ? std::max(emax, e) : e;
                any = true;
            }
        }
        if (!any) continue;
        for (size_t j = 0; j < cols; ++j) {
            m.at(i, j).re().scale2(-emax);
            m.at(i, j).im().scale2(-emax);
        }
    }

    NullVectorResult nv = null_vector(m);

    Interpolant out;
    out.scheme = s;
    out.solve_residual = nv.residual;
    out.borderline = nv.rank_defect;

    std::vector<BigComplex> pc(nv.v.begin(), nv.v.begin() + n1 + 1);
    std::vector<BigComplex> qc(nv.v.begin() + n1 + 1, nv.v.end());
    Polynomial p(std::move(pc)), q(std::move(qc));

    BigFloat qnorm = q.coeff_norm();
    if (qnorm.is_zero()) throw DegenerateScheme("denominator solved to zero");
    const BigFloat floor = qnorm * BigFloat::two_pow(-static_cast<long>(prec) / 4, prec);

    BigComplex pivot(prec);
    if (preference == DenominatorNormalization::kUnitAtZero && abs(q.coeffs().front()) > floor) {
        pivot = q.coeffs().front();
        out.normalization = DenominatorNormalization::kUnitAtZero;
    } else if (abs(q.coeffs().back()) > floor) {
        pivot = q.coeffs().back();
        out.normalization = DenominatorNormalization::kMonic;
    } else {
        throw DegenerateScheme(
            "denominator admits neither the unit-constant nor the monic normalization");
    }
    BigComplex scale = inv(pivot);
    p.scale(scale);
    q.scale(scale);
    out.p = std::move(p);
    out.q = std::move(q);
    return out;
}

BigComplex interpolant_F(const Interpolant& r, const BigComplex& z) {
    return r.p.eval(z) + r.q.eval(z) * exp(z);
}

BigComplex interpolant_rational(const Interpolant& r, const BigComplex& z) {
    auto [qv, noise] = r.q.eval_with_noise_bound(z);
    if (abs(qv) <= noise) {
        throw PoleHit("rational evaluation at a denominator zero near " + z.to_string(8));
    }
    return -(r.p.eval(z) / qv);
}

BigComplex interpolant_error(const Interpolant& r, const BigComplex& z) {
    auto [qv, noise] = r.q.eval_with_noise_bound(z);
    if (abs(qv) <= noise) {
        throw PoleHit("error evaluation at a denominator zero near " + z.to_string(8));
    }
    return interpolant_F(r, z) / qv;
}

ZerosPoles zeros_and_poles(const Interpolant& r) {
    ZerosPoles zp;
    zp.zeros = poly_roots(r.p).roots;
    zp.poles = poly_roots(r.q).roots;
    return zp;
}

ScaledPair scaled_pair(const Interpolant& r) {
    if (r.scheme.n1() != r.scheme.n2()) {
        throw InvalidScheme("scaled pair requires a balanced degree split");
    }
    const long n = r.scheme.n1();
    const mpfr_prec_t prec = std::max(r.p.prec(), r.q.prec());
    BigComplex two_n(2 * n, 0L, prec);

    Polynomial P = r.p.with_scaled_argument(two_n);
    Polynomial Q = r.q.with_scaled_argument(two_n);
    if (P.degree() != n) throw DegenerateScheme("numerator lost degree in scaling");
    BigComplex lead = P.coeffs().back();
    if (abs(lead) <= P.coeff_norm() * BigFloat::two_pow(-static_cast<long>(prec) / 2, prec)) {
        throw DegenerateScheme("numerator leading coefficient too small for a monic rescale");
    }
    BigComplex s = inv(lead);
    P.scale(s);
    Q.scale(s);

    ScaledPair sp;
    sp.n = n;
    sp.P = std::move(P);
    sp.Q = std::move(Q);
    sp.nodes = r.scheme.scaled_unit_points();
    return sp;
}

BigComplex scaled_E(const ScaledPair& sp, const BigComplex& z) {
    BigComplex nz = z * sp.n;
    return sp.P.eval(z) * exp(-nz) + sp.Q.eval(z) * exp(nz);
}

}  // namespace ratexp
