#include "ratexp/emit.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace ratexp {

namespace {

std::string hash_hex(uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string meta_lines(const EmitMeta& meta) {
    std::ostringstream os;
    os << "# precision_bits=" << meta.precision_bits << "\n";
    os << "# scheme_hash=" << hash_hex(meta.scheme_hash) << "\n";
    os << "# normalization=" << meta.normalization << "\n";
    return os.str();
}

// Fixed-point coordinate for SVG. %.4f is far below marker size on a
// 300x300 canvas, and printing through snprintf keeps the bytes
// independent of locale and stream state.
std::string svg_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    if (std::strcmp(buf, "-0.0000") == 0) return "0.0000";
    return buf;
}

nlohmann::json complex_json(const BigComplex& z) {
    nlohmann::json j;
    j["re"] = z.re().to_string(17);
    j["im"] = z.im().to_string(17);
    return j;
}

}  // namespace

const char* mark_kind_name(MarkKind k) {
    switch (k) {
        case MarkKind::kZero: return "zero";
        case MarkKind::kPole: return "pole";
        case MarkKind::kInterpPoint: return "interp_point";
        case MarkKind::kPadeZero: return "pade_zero";
        case MarkKind::kPadePole: return "pade_pole";
    }
    return "unknown";
}

std::string normalization_name(DenominatorNormalization n) {
    return n == DenominatorNormalization::kUnitAtZero ? "q(0)=1" : "q monic";
}

EmitMeta meta_for(const Interpolant& r) {
    EmitMeta m;
    m.precision_bits = static_cast<long>(r.scheme.prec());
    m.scheme_hash = r.scheme.hash();
    m.normalization = normalization_name(r.normalization);
    return m;
}

std::vector<Mark> interpolant_marks(const Interpolant& r, const ZerosPoles& zp,
                                    bool include_scheme_points) {
    std::vector<Mark> out;
    out.reserve(zp.zeros.size() + zp.poles.size() +
                (include_scheme_points ? static_cast<size_t>(r.scheme.total_multiplicity()) : 0));
    for (const auto& z : zp.zeros) out.push_back({MarkKind::kZero, z});
    for (const auto& z : zp.poles) out.push_back({MarkKind::kPole, z});
    if (include_scheme_points) {
        for (const auto& z : r.scheme.unit_points()) out.push_back({MarkKind::kInterpPoint, z});
    }
    return out;
}

std::string format_csv(const std::vector<Mark>& marks, const EmitMeta& meta) {
    std::ostringstream os;
    os << meta_lines(meta);
    os << "kind,re,im\n";
    for (const auto& m : marks) {
        os << mark_kind_name(m.kind) << ',' << m.z.re().to_string(17) << ','
           << m.z.im().to_string(17) << '\n';
    }
    return os.str();
}

std::string format_path_csv(const std::vector<BigComplex>& pts,
                            const std::vector<BigFloat>& weights) {
    if (!weights.empty() && weights.size() != pts.size()) {
        throw std::invalid_argument("format_path_csv: weights must be empty or match pts");
    }
    std::ostringstream os;
    os << (weights.empty() ? "re,im\n" : "re,im,weight\n");
    for (size_t i = 0; i < pts.size(); ++i) {
        os << pts[i].re().to_string(17) << ',' << pts[i].im().to_string(17);
        if (!weights.empty()) os << ',' << weights[i].to_string(17);
        os << '\n';
    }
    return os.str();
}

std::string format_svg(const std::vector<Mark>& marks, const EmitMeta& meta) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-150 -150 300 300\">\n";
    os << "  <desc>precision_bits=" << meta.precision_bits << " scheme_hash="
       << hash_hex(meta.scheme_hash) << " normalization=" << meta.normalization << "</desc>\n";
    os << "  <rect x=\"-150\" y=\"-150\" width=\"300\" height=\"300\" fill=\"white\"/>\n";
    os << "  <line x1=\"-150\" y1=\"0\" x2=\"150\" y2=\"0\" stroke=\"#cccccc\" "
          "stroke-width=\"0.5\"/>\n";
    os << "  <line x1=\"0\" y1=\"-150\" x2=\"0\" y2=\"150\" stroke=\"#cccccc\" "
          "stroke-width=\"0.5\"/>\n";
    for (const auto& m : marks) {
        // SVG's y axis points down; negate Im so the upper half plane is up.
        const std::string x = svg_num(m.z.re().to_double());
        const std::string y = svg_num(-m.z.im().to_double());
        switch (m.kind) {
            case MarkKind::kZero:
                os << "  <circle class=\"zero\" cx=\"" << x << "\" cy=\"" << y
                   << "\" r=\"1.8\" fill=\"none\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
                break;
            case MarkKind::kPole:
                os << "  <circle class=\"pole\" cx=\"" << x << "\" cy=\"" << y
                   << "\" r=\"1.8\" fill=\"black\"/>\n";
                break;
            case MarkKind::kInterpPoint:
                os << "  <path class=\"interp_point\" d=\"M " << x << ' '
                   << svg_num(-m.z.im().to_double() - 2.2) << " L "
                   << svg_num(m.z.re().to_double() + 2.2) << ' ' << y << " L " << x << ' '
                   << svg_num(-m.z.im().to_double() + 2.2) << " L "
                   << svg_num(m.z.re().to_double() - 2.2) << ' ' << y
                   << " Z\" fill=\"none\" stroke=\"#2060c0\" stroke-width=\"0.6\"/>\n";
                break;
            case MarkKind::kPadeZero:
                os << "  <circle class=\"pade_zero\" cx=\"" << x << "\" cy=\"" << y
                   << "\" r=\"0.8\" fill=\"#a0a0a0\"/>\n";
                break;
            case MarkKind::kPadePole:
                os << "  <circle class=\"pade_pole\" cx=\"" << x << "\" cy=\"" << y
                   << "\" r=\"0.8\" fill=\"#505050\"/>\n";
                break;
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string interpolant_report_json(const Interpolant& r, const ZerosPoles& zp,
                                    const EmitMeta& meta, const std::vector<GridSample>& grid) {
    nlohmann::json j;
    j["precision_bits"] = meta.precision_bits;
    j["scheme_hash"] = hash_hex(meta.scheme_hash);
    j["normalization"] = meta.normalization;
    j["n1"] = r.scheme.n1();
    j["n2"] = r.scheme.n2();
    j["borderline"] = r.borderline;
    j["solve_residual"] = r.solve_residual.to_string(17);
    auto coeff_array = [](const Polynomial& poly) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : poly.coeffs()) a.push_back(complex_json(c));
        return a;
    };
    j["p"] = coeff_array(r.p);
    j["q"] = coeff_array(r.q);
    auto point_array = [](const std::vector<BigComplex>& pts) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& z : pts) a.push_back(complex_json(z));
        return a;
    };
    j["zeros"] = point_array(zp.zeros);
    j["poles"] = point_array(zp.poles);
    if (!grid.empty()) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& g : grid) {
            nlohmann::json e;
            e["z"] = complex_json(g.z);
            e["error"] = complex_json(g.err);
            a.push_back(e);
        }
        j["error_grid"] = a;
    }
    return j.dump(2) + "\n";
}

}  // namespace ratexp
