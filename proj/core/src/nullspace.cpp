#include "ratexp/nullspace.hpp"

#include <numeric>

#include "ratexp/errors.hpp"

namespace ratexp {

namespace {

// Fully pivoted row-echelon reduction, in place. Returns the column
// permutation (work column j holds original column col_perm[j]) and the
// pivot magnitudes in elimination order. Stops early when the next pivot
// falls under rel_floor * (first pivot); remaining columns count as free.
struct Echelon {
    std::vector<size_t> col_perm;
    std::vector<BigFloat> pivots;
    size_t rank = 0;
};

Echelon eliminate(Matrix& w, const BigFloat& rel_floor) {
    const size_t rows = w.rows(), cols = w.cols();
    Echelon e;
    e.col_perm.resize(cols);
    std::iota(e.col_perm.begin(), e.col_perm.end(), size_t{0});

    BigFloat first_pivot(w.prec());
    for (size_t step = 0; step < rows && step < cols; ++step) {
        // Largest remaining entry (full pivoting keeps pivots monotone).
        size_t bi = step, bj = step;
        BigFloat best(w.prec());
        for (size_t i = step; i < rows; ++i) {
            for (size_t j = step; j < cols; ++j) {
                BigFloat a = norm2(w.at(i, j));
                if (a > best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        }
        BigFloat pm = sqrt(best);
        if (step == 0) first_pivot = pm;
        if (pm <= first_pivot * rel_floor) {
            break;  // treat everything remaining as numerically zero
        }
        if (bi != step)
            for (size_t j = 0; j < cols; ++j) std::swap(w.at(step, j), w.at(bi, j));
        if (bj != step) {
            for (size_t i = 0; i < rows; ++i) std::swap(w.at(i, step), w.at(i, bj));
            std::swap(e.col_perm[step], e.col_perm[bj]);
        }
        e.pivots.push_back(pm);
        e.rank = step + 1;
        for (size_t i = step + 1; i < rows; ++i) {
            if (w.at(i, step).is_zero()) continue;
            BigComplex f = w.at(i, step) / w.at(step, step);
            w.at(i, step) = BigComplex(w.prec());
            for (size_t j = step + 1; j < cols; ++j) {
                w.at(i, j).submul(f, w.at(step, j));
            }
        }
    }
    return e;
}

}  // namespace

NullVectorResult null_vector(const Matrix& m) {
    if (m.cols() != m.rows() + 1) {
        throw NumericError("null_vector expects a rows x (rows+1) system");
    }
    const size_t rows = m.rows(), cols = m.cols();
    const mpfr_prec_t prec = m.prec();

    Matrix w = m;
    BigFloat rel_floor = BigFloat::two_pow(-static_cast<long>(prec) / 2, prec);
    Echelon e = eliminate(w, rel_floor);

    size_t missing = rows - e.rank;  // pivots that underflowed
    if (missing >= 2) {
        throw NumericalRankDeficiency("homogeneous system has a null space of dimension > 1 at " +
                                      std::to_string(prec) + " bits (" + std::to_string(missing) +
                                      " pivots under the rank floor)");
    }

    NullVectorResult r;
    r.rank_defect = missing == 1;
    if (!e.pivots.empty()) {
        r.max_pivot = e.pivots.front();
        r.min_pivot = e.pivots.back();
    }

    // Back-substitute with the last permuted column as the designated free
    // variable (set to 1); any further free columns are set to 0.
    std::vector<BigComplex> x(cols, BigComplex(prec));
    x[cols - 1] = BigComplex(1L, 0L, prec);
    for (size_t k = e.rank; k-- > 0;) {
        BigComplex s(prec);
        for (size_t j = k + 1; j < cols; ++j) {
            if (!x[j].is_zero()) s += w.at(k, j) * x[j];
        }
        x[k] = -(s / w.at(k, k));
    }
    r.v.assign(cols, BigComplex(prec));
    for (size_t j = 0; j < cols; ++j) r.v[e.col_perm[j]] = x[j];

    // Normalize to unit max magnitude (deterministic scale for callers).
    BigFloat vmax(prec);
    for (const auto& c : r.v) {
        BigFloat a = abs(c);
        if (a > vmax) vmax = a;
    }
    if (!vmax.is_zero()) {
        BigComplex s(vmax, BigFloat(0L, prec));
        for (auto& c : r.v) c = c / s;
    }

    // Residual per row, relative to row and vector norms.
    BigFloat vnorm(prec);
    for (const auto& c : r.v) vnorm += norm2(c);
    vnorm = sqrt(vnorm);
    BigFloat worst(prec);
    for (size_t i = 0; i < rows; ++i) {
        BigComplex dot(prec);
        BigFloat rn(prec);
        for (size_t j = 0; j < cols; ++j) {
            dot += m.at(i, j) * r.v[j];
            rn += norm2(m.at(i, j));
        }
        rn = sqrt(rn);
        if (rn.is_zero()) continue;
        BigFloat rel = abs(dot) / (rn * vnorm);
        if (rel > worst) worst = rel;
    }
    r.residual = worst;

    // The elimination itself should keep residuals near working precision;
    // a residual worse than 2^{64-prec} by a wide margin means the system
    // was not solved at all.
    BigFloat bound = BigFloat::two_pow(64 - static_cast<long>(prec), prec);
    if (!r.rank_defect && r.residual > bound * BigFloat(4294967296.0, prec)) {
        throw NumericError("null vector residual " + r.residual.to_string(8) +
                           " exceeds the working-precision bound");
    }
    return r;
}

std::vector<BigComplex> solve_square(const Matrix& a, const std::vector<BigComplex>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) {
        throw NumericError("solve_square expects square A and matching b");
    }
    const size_t n = a.rows();
    const mpfr_prec_t prec = a.prec();
    // Augment [A | b] and eliminate; the b column must never be pivoted,
    // so eliminate a copy of A and carry b along manually.
    Matrix w = a;
    std::vector<BigComplex> rhs = b;
    BigFloat rel_floor = BigFloat::two_pow(-static_cast<long>(prec) / 2, prec);

    std::vector<size_t> col_perm(n);
    std::iota(col_perm.begin(), col_perm.end(), size_t{0});
    BigFloat first_pivot(prec);
    for (size_t step = 0; step < n; ++step) {
        size_t bi = step, bj = step;
        BigFloat best(prec);
        for (size_t i = step; i < n; ++i)
            for (size_t j = step; j < n; ++j) {
                BigFloat m2 = norm2(w.at(i, j));
                if (m2 > best) {
                    best = m2;
                    bi = i;
                    bj = j;
                }
            }
        BigFloat pm = sqrt(best);
        if (step == 0) first_pivot = pm;
        if (pm.is_zero() || pm <= first_pivot * rel_floor) {
            throw SingularJacobian("pivot " + std::to_string(step) +
                                   " under the rank floor in square solve");
        }
        if (bi != step) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(step, j), w.at(bi, j));
            std::swap(rhs[step], rhs[bi]);
        }
        if (bj != step) {
            for (size_t i = 0; i < n; ++i) std::swap(w.at(i, step), w.at(i, bj));
            std::swap(col_perm[step], col_perm[bj]);
        }
        for (size_t i = step + 1; i < n; ++i) {
            if (w.at(i, step).is_zero()) continue;
            BigComplex f = w.at(i, step) / w.at(step, step);
            w.at(i, step) = BigComplex(prec);
            for (size_t j = step + 1; j < n; ++j) w.at(i, j).submul(f, w.at(step, j));
            rhs[i] -= f * rhs[step];
        }
    }
    std::vector<BigComplex> x(n, BigComplex(prec));
    for (size_t k = n; k-- > 0;) {
        BigComplex s = rhs[k];
        for (size_t j = k + 1; j < n; ++j) s -= w.at(k, j) * x[j];
        x[k] = s / w.at(k, k);
    }
    std::vector<BigComplex> out(n, BigComplex(prec));
    for (size_t j = 0; j < n; ++j) out[col_perm[j]] = x[j];
    return out;
}

}  // namespace ratexp
