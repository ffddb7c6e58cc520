#pragma once

// Deterministic artifact emission. Three formats share one metadata
// header (working precision, canonical scheme hash, denominator
// normalization) so a file can always be traced back to its inputs:
//
//  * CSV   - "kind,re,im" marker rows for scatter data,
//  * JSON  - full solve report with coefficient decimal strings,
//  * SVG   - static scatter figure on a fixed [-150, 150]^2 canvas.
//
// Byte-identical output for identical inputs is part of the contract:
// no timestamps, no locale-dependent formatting, fixed digit counts.

#include <cstdint>
#include <string>
#include <vector>

#include "ratexp/interpolant.hpp"
#include "ratexp/prec.hpp"

namespace ratexp {

enum class MarkKind {
    kZero,         // root of the numerator
    kPole,         // root of the denominator
    kInterpPoint,  // scheme point, one mark per multiplicity unit
    kPadeZero,     // reference overlay: Pade (all-points-at-zero) numerator root
    kPadePole,     // reference overlay: Pade denominator root
};

// Stable lowercase identifier used in CSV rows and SVG class names.
const char* mark_kind_name(MarkKind k);

struct Mark {
    MarkKind kind;
    BigComplex z;
};

struct EmitMeta {
    long precision_bits = 0;
    uint64_t scheme_hash = 0;
    std::string normalization;
};

// Metadata for a solved interpolant (hash of its scheme, the
// normalization that was actually applied, the working precision).
EmitMeta meta_for(const Interpolant& r);

// Human name of the denominator normalization ("q(0)=1" / "q monic").
std::string normalization_name(DenominatorNormalization n);

// Marker rows for a solved interpolant: zeros, poles, and the scheme
// points expanded to unit multiplicity, in canonical order.
std::vector<Mark> interpolant_marks(const Interpolant& r, const ZerosPoles& zp,
                                    bool include_scheme_points);

// '#'-prefixed metadata lines, a "kind,re,im" header, then one row per
// mark with 17 significant digits.
std::string format_csv(const std::vector<Mark>& marks, const EmitMeta& meta);

// "re,im" rows (or "re,im,weight" when weights is non-empty, in which
// case it must be the same length as pts). Used to export traced
// contours and discretized arc measures for external plotting.
std::string format_path_csv(const std::vector<BigComplex>& pts,
                            const std::vector<BigFloat>& weights);

// Minimal static scatter: zeros open circles, poles filled circles,
// scheme points diamonds, reference roots small dots. Fixed viewBox
// [-150,150]^2 with the imaginary axis pointing up.
std::string format_svg(const std::vector<Mark>& marks, const EmitMeta& meta);

// One evaluation of the pointwise approximation error e^z + p(z)/q(z).
struct GridSample {
    BigComplex z;
    BigComplex err;
};

// Full solve report: degrees, coefficient decimal strings (ascending
// powers), zeros/poles, solve residual, normalization, metadata, and an
// optional "error_grid" block with one entry per evaluated grid point.
std::string interpolant_report_json(const Interpolant& r, const ZerosPoles& zp,
                                    const EmitMeta& meta,
                                    const std::vector<GridSample>& grid = {});

}  // namespace ratexp
