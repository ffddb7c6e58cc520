#include "ratexp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "ratexp/errors.hpp"

namespace ratexp {

namespace {

// Legendre value and derivative by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre(int m, const BigFloat& x) {
    const mpfr_prec_t p = x.prec();
    BigFloat pm1(1L, p);  // P_0
    BigFloat pm = x;      // P_1
    for (int j = 2; j <= m; ++j) {
        BigFloat pj = (x * pm * (2L * j - 1L) - pm1 * (j - 1L)) / j;
        pm1 = pm;
        pm = pj;
    }
    // P_m'(x) = m (x P_m - P_{m-1}) / (x^2 - 1)
    BigFloat der = (x * pm - pm1) * static_cast<long>(m) / (sqr(x) - BigFloat(1L, p));
    return {pm, der};
}

using Table = std::pair<std::vector<BigFloat>, std::vector<BigFloat>>;

}  // namespace

const Table& gauss_legendre(int m, mpfr_prec_t prec) {
    static std::map<std::pair<int, long>, Table> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, static_cast<long>(prec));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Table t;
    t.first.reserve(m);
    t.second.reserve(m);
    const BigFloat tol = BigFloat::two_pow(-static_cast<long>(prec) + 16, prec);
    const double pi_d = 3.14159265358979323846;
    for (int k = 0; k < m; ++k) {
        // Classic Chebyshev-like initial guess, then Newton to full
        // precision (the guess carries ~50 bits, each step doubles them).
        double x0 = std::cos(pi_d * (m - 1 - k + 0.75) / (m + 0.5));
        BigFloat x(x0, prec);
        for (int it2 = 0; it2 < 64; ++it2) {
            auto [val, d] = legendre(m, x);
            BigFloat dx = val / d;
            x -= dx;
            if (abs(dx) <= tol) break;
            if (it2 == 63) throw NoConvergence("gauss_legendre node refinement stalled", it2);
        }
        BigFloat der = legendre(m, x).second;
        BigFloat w = BigFloat(2L, prec) / ((BigFloat(1L, prec) - sqr(x)) * sqr(der));
        t.first.push_back(x);
        t.second.push_back(w);
    }
    auto [pos, inserted] = cache.emplace(key, std::move(t));
    return pos->second;
}

QuadratureResult integrate_polyline(const std::function<BigComplex(const BigComplex&)>& f,
                                    const std::vector<BigComplex>& path, const BigFloat& rel_tol,
                                    int max_nodes_per_segment) {
    if (path.size() < 2) throw NumericError("integrate_polyline: need at least two path points");
    mpfr_prec_t prec = MPFR_PREC_MIN;
    for (const auto& z : path)
        if (z.prec() > prec) prec = z.prec();

    QuadratureResult res;
    BigComplex prev(prec);
    bool have_prev = false;
    for (int m = 8; m <= max_nodes_per_segment; m *= 2) {
        const Table& tab = gauss_legendre(m, prec);
        BigComplex total(prec);
        for (size_t s = 0; s + 1 < path.size(); ++s) {
            BigComplex mid = (path[s] + path[s + 1]) / 2L;
            BigComplex half = (path[s + 1] - path[s]) / 2L;
            BigComplex acc(prec);
            for (int k = 0; k < m; ++k) {
                BigComplex zk = mid + half * tab.first[k];
                acc += f(zk) * tab.second[k];
            }
            total += acc * half;
        }
        res.value = total;
        res.nodes_per_segment = m;
        if (have_prev) {
            res.achieved = abs(total - prev);
            BigFloat scale = max(BigFloat(1L, prec), abs(total));
            if (res.achieved <= rel_tol * scale) {
                res.converged = true;
                return res;
            }
        }
        prev = total;
        have_prev = true;
    }
    return res;
}

}  // namespace ratexp
