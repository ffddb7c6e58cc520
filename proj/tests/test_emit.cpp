// Artifact emission: metadata headers, CSV rows, SVG structure, JSON
// reports, and byte determinism across repeated pipelines.

#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "ratexp/emit.hpp"
#include "ratexp/interpolant.hpp"
#include "ratexp/scheme.hpp"

using namespace ratexp;

namespace {

// Smallest confluent case: numerator -1 - z/2, denominator 1 - z/2, so
// one zero at -2 and one pole at +2.
Interpolant tiny_solution() {
    return solve_interpolant(make_point_mass(1, BigComplex(0L, 0L, 256)));
}

size_t count_lines_with(const std::string& text, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

TEST_SUITE_BEGIN("emission");

TEST_CASE("csv carries the metadata header and one row per mark") {
    const Interpolant r = tiny_solution();
    const ZerosPoles zp = zeros_and_poles(r);
    REQUIRE(zp.zeros.size() == 1);
    REQUIRE(zp.poles.size() == 1);
    const auto marks = interpolant_marks(r, zp, true);
    // 1 zero + 1 pole + 3 scheme points (multiplicity expanded)
    REQUIRE(marks.size() == 5);

    const std::string csv = format_csv(marks, meta_for(r));
    CHECK(csv.find("# precision_bits=256\n") != std::string::npos);
    CHECK(csv.find("# scheme_hash=") != std::string::npos);
    CHECK(csv.find("# normalization=q(0)=1\n") != std::string::npos);
    CHECK(csv.find("kind,re,im\n") != std::string::npos);
    CHECK(count_lines_with(csv, "\nzero,") == 1);
    CHECK(count_lines_with(csv, "\npole,") == 1);
    CHECK(count_lines_with(csv, "\ninterp_point,") == 3);
    // the zero near -2 and the pole near +2 land in their rows (the root
    // finder is accurate to far more digits than the prefix checked here)
    const bool zero_row = csv.find("\nzero,-1.9") != std::string::npos ||
                          csv.find("\nzero,-2") != std::string::npos;
    const bool pole_row =
        csv.find("\npole,1.9") != std::string::npos || csv.find("\npole,2") != std::string::npos;
    CHECK(zero_row);
    CHECK(pole_row);
}

TEST_CASE("reference overlay kinds have their own row names") {
    CHECK(std::string(mark_kind_name(MarkKind::kPadeZero)) == "pade_zero");
    CHECK(std::string(mark_kind_name(MarkKind::kPadePole)) == "pade_pole");
    const BigComplex z(3L, -4L, 64);
    const std::string csv = format_csv({{MarkKind::kPadeZero, z}, {MarkKind::kPadePole, z}},
                                       EmitMeta{64, 7, "q(0)=1"});
    CHECK(csv.find("pade_zero,3e0,-4e0") != std::string::npos);
    CHECK(csv.find("pade_pole,3e0,-4e0") != std::string::npos);
    CHECK(csv.find("# scheme_hash=0000000000000007\n") != std::string::npos);
}

TEST_CASE("svg is structurally fixed and flips the imaginary axis") {
    const Interpolant r = tiny_solution();
    const ZerosPoles zp = zeros_and_poles(r);
    std::vector<Mark> marks = interpolant_marks(r, zp, true);
    marks.push_back({MarkKind::kPadeZero, BigComplex(1L, 2L, 64)});
    const std::string svg = format_svg(marks, meta_for(r));

    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-150 -150 300 300\">", 0) ==
          0);
    CHECK(svg.find("precision_bits=256") != std::string::npos);
    CHECK(count_lines_with(svg, "class=\"zero\"") == 1);
    CHECK(count_lines_with(svg, "class=\"pole\"") == 1);
    CHECK(count_lines_with(svg, "class=\"interp_point\"") == 3);
    // the overlay dot at 1+2i lands at canvas (1, -2)
    CHECK(svg.find("class=\"pade_zero\" cx=\"1.0000\" cy=\"-2.0000\"") != std::string::npos);
    // open vs filled circles for zeros vs poles
    CHECK(svg.find("class=\"zero\" cx=\"-2.0000\" cy=\"0.0000\" r=\"1.8\" fill=\"none\"") !=
          std::string::npos);
    CHECK(svg.find("class=\"pole\" cx=\"2.0000\" cy=\"0.0000\" r=\"1.8\" fill=\"black\"") !=
          std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("json report round-trips the solve") {
    const Interpolant r = tiny_solution();
    const ZerosPoles zp = zeros_and_poles(r);
    const std::string text = interpolant_report_json(r, zp, meta_for(r));
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["precision_bits"] == 256);
    CHECK(j["n1"] == 1);
    CHECK(j["n2"] == 1);
    CHECK(j["normalization"] == "q(0)=1");
    CHECK(j["borderline"] == false);
    REQUIRE(j["p"].size() == 2);
    REQUIRE(j["q"].size() == 2);
    // q = 1 - z/2 (q(0) = 1 exactly by normalization, the rest to solve
    // accuracy); decimal strings parse back
    CHECK(j["q"][0]["re"] == "1e0");
    CHECK(std::stod(j["q"][1]["re"].get<std::string>()) == doctest::Approx(-0.5).epsilon(1e-12));
    REQUIRE(j["zeros"].size() == 1);
    CHECK(std::stod(j["zeros"][0]["re"].get<std::string>()) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::stod(j["poles"][0]["re"].get<std::string>()) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(!j.contains("error_grid"));

    // grid samples append under their own key
    const std::vector<GridSample> grid{{BigComplex(0L, 0L, 64), BigComplex(1L, 0L, 64)}};
    const nlohmann::json k =
        nlohmann::json::parse(interpolant_report_json(r, zp, meta_for(r), grid));
    REQUIRE(k["error_grid"].size() == 1);
    CHECK(k["error_grid"][0]["z"]["re"] == "0");
}

TEST_CASE("path csv with and without weights") {
    const std::vector<BigComplex> pts{BigComplex(0L, 1L, 64), BigComplex(-1L, 0L, 64)};
    CHECK(format_path_csv(pts, {}) == "re,im\n0,1e0\n-1e0,0\n");
    const std::vector<BigFloat> w{BigFloat(0.5, 64), BigFloat(0.25, 64)};
    CHECK(format_path_csv(pts, w) == "re,im,weight\n0,1e0,5e-1\n-1e0,0,2.5e-1\n");
    CHECK_THROWS((void)format_path_csv(pts, {BigFloat(1.0, 64)}));
}

TEST_CASE("identical pipelines give identical bytes") {
    auto render = [] {
        const Interpolant r = tiny_solution();
        const ZerosPoles zp = zeros_and_poles(r);
        const auto marks = interpolant_marks(r, zp, true);
        return format_csv(marks, meta_for(r)) + format_svg(marks, meta_for(r)) +
               interpolant_report_json(r, zp, meta_for(r));
    };
    CHECK(render() == render());
}

TEST_SUITE_END();
