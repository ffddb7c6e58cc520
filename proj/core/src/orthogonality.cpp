#include "ratexp/orthogonality.hpp"

#include <utility>

#include "ratexp/errors.hpp"
#include "ratexp/quadrature.hpp"

namespace ratexp {

ScaledPair companion_scaled_pair(const Scheme& s) {
    if (s.n1() != s.n2()) {
        throw InvalidScheme("companion pair requires a balanced degree split");
    }
    const long n = s.n1();
    if (n < 1) throw InvalidScheme("companion pair needs n >= 1");
    Scheme shifted(n - 1, n + 1, s.points());
    Interpolant r = solve_interpolant(shifted, DenominatorNormalization::kMonic);

    const mpfr_prec_t prec = std::max(r.p.prec(), r.q.prec());
    BigComplex two_n(2 * n, 0L, prec);
    Polynomial P = r.p.with_scaled_argument(two_n);
    Polynomial Q = r.q.with_scaled_argument(two_n);
    BigComplex lead = Q.coeffs().back();
    if (abs(lead) <= Q.coeff_norm() * BigFloat::two_pow(-static_cast<long>(prec) / 2, prec)) {
        throw DegenerateScheme("companion denominator lost its leading coefficient");
    }
    BigComplex scale = inv(lead);
    P.scale(scale);
    Q.scale(scale);

    ScaledPair sp;
    sp.n = n;
    sp.P = std::move(P);
    sp.Q = std::move(Q);
    sp.nodes = s.scaled_unit_points();
    return sp;
}

std::vector<BigComplex> moment_defects(const ScaledPair& sp, long j_max) {
    const mpfr_prec_t prec = std::max(sp.P.prec(), sp.Q.prec());
    Polynomial omega = Polynomial::from_roots(sp.nodes, BigComplex(1L, 0L, prec));

    BigFloat r("1.5", prec);
    for (const auto& node : sp.nodes) {
        BigFloat a = abs(node) * 2L;
        if (a > r) r = a;
    }
    std::vector<BigComplex> contour{BigComplex(r, -r), BigComplex(r, r), BigComplex(-r, r),
                                    BigComplex(-r, -r), BigComplex(r, -r)};

    const BigFloat tol = BigFloat::two_pow(-static_cast<long>(prec) + 80, prec);
    const long n = sp.n;
    std::vector<BigComplex> out;
    out.reserve(static_cast<size_t>(j_max) + 1);
    for (long j = 0; j <= j_max; ++j) {
        auto f = [&](const BigComplex& w) {
            return pow_int(w, j) * sp.P.eval(w) * exp(w * (-2 * n)) / omega.eval(w);
        };
        QuadratureResult qr = integrate_polyline(f, contour, tol, 512);
        BigComplex two_pi_i(BigFloat(0L, prec), BigFloat::pi(prec) * 2L);
        out.push_back(qr.value / two_pi_i);
    }
    return out;
}

SolutionMatrixAssembler::SolutionMatrixAssembler(ScaledPair primary, ScaledPair companion)
    : primary_(std::move(primary)), companion_(std::move(companion)) {
    const mpfr_prec_t prec = std::max(primary_.P.prec(), companion_.P.prec());
    omega_ = Polynomial::from_roots(primary_.nodes, BigComplex(1L, 0L, prec));
}

std::array<BigComplex, 4> SolutionMatrixAssembler::at(const BigComplex& z) const {
    auto [omv, noise] = omega_.eval_with_noise_bound(z);
    if (abs(omv) <= noise) {
        throw PoleHit("solution matrix evaluated on the node set near " + z.to_string(8));
    }
    BigComplex decay = exp(z * (-primary_.n));
    BigComplex e1 = scaled_E(primary_, z);
    BigComplex e2 = scaled_E(companion_, z);
    return {primary_.P.eval(z), e1 * decay / omv, companion_.P.eval(z), e2 * decay / omv};
}

BigComplex SolutionMatrixAssembler::det(const BigComplex& z) const {
    std::array<BigComplex, 4> y = at(z);
    return y[0] * y[3] - y[1] * y[2];
}

}  // namespace ratexp
