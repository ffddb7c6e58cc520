// Command-line front end: solve interpolation schemes, render the preset
// figures, and run the verification suites.
//
// Exit codes: 0 success, 1 a verification or numeric computation failed,
// 2 bad input (unknown preset, malformed scheme file, invalid flags).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ratexp/emit.hpp"
#include "ratexp/errors.hpp"
#include "ratexp/interpolant.hpp"
#include "ratexp/presets.hpp"
#include "ratexp/prec.hpp"
#include "ratexp/scheme.hpp"
#include "ratexp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;    // a computation or verification failed
constexpr int kExitBadInput = 2;  // flags, files or schemes were invalid

struct GridSpec {
    double re0 = 0, re1 = 0;
    long re_steps = 0;
    double im0 = 0, im1 = 0;
    long im_steps = 0;
};

// "re0:re1:steps,im0:im1:steps"
GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char trailing = 0;
    const int got = std::sscanf(text.c_str(), "%lf:%lf:%ld,%lf:%lf:%ld%c", &g.re0, &g.re1,
                                &g.re_steps, &g.im0, &g.im1, &g.im_steps, &trailing);
    if (got != 6 || g.re_steps < 1 || g.im_steps < 1) {
        throw CLI::ValidationError("--grid", "expected re0:re1:steps,im0:im1:steps with steps >= 1");
    }
    return g;
}

std::vector<ratexp::GridSample> evaluate_grid(const ratexp::Interpolant& r, const GridSpec& g,
                                              mpfr_prec_t prec) {
    using ratexp::BigComplex;
    using ratexp::BigFloat;
    std::vector<ratexp::GridSample> out;
    for (long i = 0; i < g.re_steps; ++i) {
        const double re =
            g.re_steps == 1 ? g.re0 : g.re0 + (g.re1 - g.re0) * i / double(g.re_steps - 1);
        for (long j = 0; j < g.im_steps; ++j) {
            const double im =
                g.im_steps == 1 ? g.im0 : g.im0 + (g.im1 - g.im0) * j / double(g.im_steps - 1);
            const BigComplex z(BigFloat(re, prec), BigFloat(im, prec));
            out.push_back({z, ratexp::interpolant_error(r, z)});
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

void write_or_print(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
    } else {
        write_file(path, bytes);
    }
}

// Builds the scheme a subcommand asked for: a JSON file, one of the
// figure presets, or the confluent family "pade" with --n.
ratexp::Scheme resolve_scheme(const std::string& scheme_path, const std::string& preset, long n,
                              mpfr_prec_t prec) {
    using namespace ratexp;
    if (!scheme_path.empty()) {
        if (n != 0) throw InvalidScheme("--n only applies to --preset pade");
        return Scheme::from_json(read_file(scheme_path), prec);
    }
    if (preset == "pade") {
        if (n < 1) throw InvalidScheme("--preset pade needs --n >= 1");
        return make_point_mass(n, BigComplex(0L, 0L, prec));
    }
    if (n != 0) throw InvalidScheme("--n only applies to --preset pade");
    return make_figure_preset(preset, prec).scheme;  // throws for unknown ids
}

int cmd_interpolate(const std::string& scheme_path, const std::string& preset, long n,
                    long precision, const std::string& grid_text, const std::string& format,
                    const std::string& out) {
    using namespace ratexp;
    const auto prec = static_cast<mpfr_prec_t>(precision);
    const Scheme s = resolve_scheme(scheme_path, preset, n, prec);
    s.validate();
    if (!grid_text.empty() && format != "json") {
        throw CLI::ValidationError("--grid", "error grids are only emitted in json format");
    }
    const Interpolant r = solve_interpolant(s);
    const ZerosPoles zp = zeros_and_poles(r);
    const EmitMeta meta = meta_for(r);
    std::string bytes;
    if (format == "json") {
        std::vector<GridSample> samples;
        if (!grid_text.empty()) samples = evaluate_grid(r, parse_grid(grid_text), prec);
        bytes = interpolant_report_json(r, zp, meta, samples);
    } else {
        const auto marks = interpolant_marks(r, zp, true);
        bytes = format == "csv" ? format_csv(marks, meta) : format_svg(marks, meta);
    }
    write_or_print(out, bytes);
    return kExitOk;
}

int cmd_figure(const std::string& preset, long precision, std::string out) {
    using namespace ratexp;
    const auto prec = static_cast<mpfr_prec_t>(precision);
    const FigurePreset fp = make_figure_preset(preset, prec);
    const Interpolant r = solve_interpolant(fp.scheme);
    const ZerosPoles zp = zeros_and_poles(r);
    std::vector<Mark> marks = interpolant_marks(r, zp, true);
    if (fp.overlay) {
        const Interpolant ref = solve_interpolant(make_point_mass(50, BigComplex(0L, 0L, prec)));
        const ZerosPoles rzp = zeros_and_poles(ref);
        for (const auto& z : rzp.zeros) marks.push_back({MarkKind::kPadeZero, z});
        for (const auto& z : rzp.poles) marks.push_back({MarkKind::kPadePole, z});
    }
    const EmitMeta meta = meta_for(r);
    if (out.empty()) out = preset;
    write_file(out + ".csv", format_csv(marks, meta));
    write_file(out + ".svg", format_svg(marks, meta));
    std::cout << "wrote " << out << ".csv and " << out << ".svg\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::vector<long>& sweep, long precision,
               const std::string& out) {
    using namespace ratexp;
    VerifyOptions opt;
    if (!sweep.empty()) opt.sweep = sweep;
    opt.prec = static_cast<mpfr_prec_t>(precision);
    opt.on_result = [](const CheckResult& r) {
        std::printf("%s  %-24s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
    };
    std::vector<CheckResult> results;
    try {
        results = run_verify_suite(suite, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    const bool ok = all_passed(results);
    std::printf("%zu checks, %zu failed\n", results.size(),
                results.size() - static_cast<size_t>(std::count_if(
                                     results.begin(), results.end(),
                                     [](const CheckResult& r) { return r.pass; })));
    if (!out.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            j.push_back(e);
        }
        write_file(out, j.dump(2) + "\n");
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational interpolants of the exponential: solve, plot, verify"};
    app.require_subcommand(1);

    // interpolate
    std::string i_scheme, i_preset, i_grid, i_format = "json", i_out;
    long i_n = 0, i_prec = 256;
    auto* interpolate = app.add_subcommand("interpolate", "solve a scheme and emit the result");
    auto* opt_scheme = interpolate->add_option("--scheme", i_scheme, "scheme JSON file");
    auto* opt_preset =
        interpolate->add_option("--preset", i_preset, "figure preset id or 'pade' (with --n)");
    interpolate->add_option("--n", i_n, "confluent degree for --preset pade");
    interpolate->add_option("--precision-bits", i_prec, "working precision")
        ->check(CLI::Range(128L, 65536L));
    interpolate->add_option("--grid", i_grid,
                            "error evaluation grid re0:re1:steps,im0:im1:steps (json only)");
    interpolate->add_option("--format", i_format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    interpolate->add_option("--out", i_out, "output path ('-' for stdout)");
    opt_scheme->excludes(opt_preset);

    // figure
    std::string f_preset, f_out;
    long f_prec = 1536;
    auto* figure = app.add_subcommand("figure", "render a preset as CSV + SVG scatter");
    figure->add_option("--preset", f_preset, "figure preset id")->required();
    figure
        ->add_option("--precision-bits", f_prec,
                     "working precision (the widest preset needs 1536)")
        ->check(CLI::Range(128L, 65536L));
    figure->add_option("--out", f_out, "output base path (default: the preset id)");

    // verify
    std::string v_suite = "all", v_out;
    std::vector<long> v_sweep;
    long v_prec = 1024;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", v_suite, "limit, measures, apparatus or all")
        ->check(CLI::IsMember({"limit", "measures", "apparatus", "all"}));
    verify->add_option("--n-sweep", v_sweep, "sweep degrees, e.g. 10,20,40")->delimiter(',');
    verify->add_option("--precision-bits", v_prec, "working precision")
        ->check(CLI::Range(128L, 65536L));
    verify->add_option("--out", v_out, "also write the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitBadInput;
    }

    try {
        if (interpolate->parsed()) {
            if (i_scheme.empty() && i_preset.empty()) {
                std::cerr << "error: interpolate needs --scheme or --preset\n";
                return kExitBadInput;
            }
            return cmd_interpolate(i_scheme, i_preset, i_n, i_prec, i_grid, i_format, i_out);
        }
        if (figure->parsed()) return cmd_figure(f_preset, f_prec, f_out);
        return cmd_verify(v_suite, v_sweep, v_prec, v_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ratexp::InvalidScheme& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ratexp::DegenerateScheme& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ratexp::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
