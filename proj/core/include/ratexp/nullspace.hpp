#pragma once

#include <vector>

#include "ratexp/prec.hpp"

namespace ratexp {

// Dense row-major complex matrix. Small and boring on purpose: the only two
// consumers are the homogeneous interpolation systems (rows x rows+1) and
// Newton's square solves.
class Matrix {
  public:
    Matrix(size_t rows, size_t cols, mpfr_prec_t prec)
        : rows_(rows), cols_(cols), prec_(prec), d_(rows * cols, BigComplex(prec)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpfr_prec_t prec() const { return prec_; }

    BigComplex& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const BigComplex& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

  private:
    size_t rows_, cols_;
    mpfr_prec_t prec_;
    std::vector<BigComplex> d_;
};

struct NullVectorResult {
    std::vector<BigComplex> v;  // cols() entries, scaled to unit max magnitude
    // max_i |row_i . v| / (||row_i||_2 ||v||_2) over the input rows
    BigFloat residual{64};
    // One pivot fell below the relative rank threshold: a valid null vector
    // was still produced, but the system is borderline degenerate.
    bool rank_defect = false;
    BigFloat max_pivot{64};
    BigFloat min_pivot{64};
};

// Null vector of a rows x (rows+1) matrix via fully pivoted elimination.
// The result residual must satisfy the working-precision bound
// (2^{64-prec} relative); a grossly larger residual raises NumericError.
// Two or more pivots below 2^{-prec/2} relative to the largest raises
// NumericalRankDeficiency (a wider-than-1 numerical null space means the
// originating scheme is degenerate at this precision).
NullVectorResult null_vector(const Matrix& m);

// Solves A x = b for square A by the same pivoted elimination; raises
// SingularJacobian when a pivot underflows 2^{-prec/2} relative.
std::vector<BigComplex> solve_square(const Matrix& a, const std::vector<BigComplex>& b);

}  // namespace ratexp
