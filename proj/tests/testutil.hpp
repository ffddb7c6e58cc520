#pragma once

// Small helpers shared by the test translation units.

#include <doctest.h>

#include <string>

#include "ratexp/prec.hpp"

namespace ratexp::testutil {

// 2^{slack - prec}: the usual "all but `slack` guard bits" tolerance.
inline BigFloat bits_tol(mpfr_prec_t prec, long slack) {
    return BigFloat::two_pow(slack - static_cast<long>(prec), prec);
}

inline void check_close(const BigFloat& got, const BigFloat& want, const BigFloat& tol) {
    BigFloat d = abs(got - want);
    CHECK_MESSAGE(d <= tol, "got ", got.to_string(24), " want ", want.to_string(24), " |diff| ",
                  d.to_string(8), " tol ", tol.to_string(8));
}

inline void check_close(const BigComplex& got, const BigComplex& want, const BigFloat& tol) {
    BigFloat d = abs(got - want);
    CHECK_MESSAGE(d <= tol, "got ", got.to_string(24), " want ", want.to_string(24), " |diff| ",
                  d.to_string(8), " tol ", tol.to_string(8));
}

}  // namespace ratexp::testutil
