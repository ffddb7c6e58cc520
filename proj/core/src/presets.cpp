#include "ratexp/presets.hpp"

#include "ratexp/errors.hpp"

namespace ratexp {

namespace {

enum class Family { kTwoPoint, kSegment, kCircle };

struct PresetRow {
    const char* id;
    Family family;
    double scale;  // exact binary fraction
};

// Fixed catalogue; order here is the canonical listing order.
constexpr PresetRow kPresets[] = {
    {"two-point-50", Family::kTwoPoint, 50.0},
    {"two-point-65", Family::kTwoPoint, 65.0},
    {"two-point-85", Family::kTwoPoint, 85.0},
    {"two-point-100", Family::kTwoPoint, 100.0},
    {"line-60", Family::kSegment, 60.0},
    {"line-72.5", Family::kSegment, 72.5},
    {"line-87.5", Family::kSegment, 87.5},
    {"line-110", Family::kSegment, 110.0},
    {"circle-60", Family::kCircle, 60.0},
    {"circle-77.5", Family::kCircle, 77.5},
    {"circle-92.5", Family::kCircle, 92.5},
    {"circle-110", Family::kCircle, 110.0},
};

}  // namespace

const std::vector<std::string>& figure_preset_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& row : kPresets) v.emplace_back(row.id);
        return v;
    }();
    return ids;
}

FigurePreset make_figure_preset(const std::string& id, mpfr_prec_t prec) {
    for (const auto& row : kPresets) {
        if (id != row.id) continue;
        const BigFloat x(row.scale, prec);
        const BigComplex right(x, BigFloat(0.0, prec));
        const BigComplex left(-x, BigFloat(0.0, prec));
        Scheme s;
        switch (row.family) {
            case Family::kTwoPoint:
                // 51 points at each end; split (51, 50) so the totals match.
                s = make_two_point(51, 50, left, 51, right, 51);
                break;
            case Family::kSegment:
                s = make_segment(50, left, right);
                break;
            case Family::kCircle:
                s = make_circle(50, x, prec);
                break;
        }
        return FigurePreset{row.id, std::move(s), true};
    }
    throw InvalidScheme("unknown figure preset: " + id);
}

}  // namespace ratexp
