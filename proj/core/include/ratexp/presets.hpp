#pragma once

// Named figure presets: fixed interpolation schemes whose zero/pole
// scatters make instructive pictures. Three families, four sizes each:
//
//  * two-point-X : all points at -X and +X on the real axis (51 each,
//                  degree split (51, 50)),
//  * line-X      : 101 points equispaced on the segment [-X, X],
//  * circle-X    : 101 points equispaced on the circle |z| = X.
//
// X is the preset's scale; every scale is an exact binary fraction so a
// preset denotes the same scheme at any working precision. All presets
// carry the degree-50 confluent reference overlay.

#include <string>
#include <vector>

#include "ratexp/prec.hpp"
#include "ratexp/scheme.hpp"

namespace ratexp {

struct FigurePreset {
    std::string id;
    Scheme scheme;
    bool overlay = true;  // include the confluent (all-points-at-zero) reference roots
};

// The twelve preset ids in canonical order.
const std::vector<std::string>& figure_preset_ids();

// Builds the named preset at the given working precision.
// Throws InvalidScheme for an unknown id.
FigurePreset make_figure_preset(const std::string& id, mpfr_prec_t prec);

}  // namespace ratexp
