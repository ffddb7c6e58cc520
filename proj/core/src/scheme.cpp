#include "ratexp/scheme.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ratexp/errors.hpp"

namespace ratexp {

namespace {

bool float_eq(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }

bool point_less(const SchemePoint& a, const SchemePoint& b) {
    int c = mpfr_cmp(a.location.re().raw(), b.location.re().raw());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.location.im().raw(), b.location.im().raw()) < 0;
}

uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_double(uint64_t& state) {
    return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

}  // namespace

Scheme::Scheme(long n1, long n2, std::vector<SchemePoint> pts)
    : n1_(n1), n2_(n2), pts_(std::move(pts)) {
    canonicalize();
}

void Scheme::canonicalize() {
    std::sort(pts_.begin(), pts_.end(), point_less);
    std::vector<SchemePoint> merged;
    for (auto& p : pts_) {
        if (!merged.empty() && float_eq(merged.back().location.re(), p.location.re()) &&
            float_eq(merged.back().location.im(), p.location.im())) {
            merged.back().multiplicity += p.multiplicity;
        } else {
            merged.push_back(std::move(p));
        }
    }
    pts_ = std::move(merged);
}

long Scheme::total_multiplicity() const {
    long t = 0;
    for (const auto& p : pts_) t += p.multiplicity;
    return t;
}

mpfr_prec_t Scheme::prec() const {
    mpfr_prec_t p = MPFR_PREC_MIN;
    for (const auto& q : pts_)
        if (q.location.prec() > p) p = q.location.prec();
    return p;
}

BigFloat Scheme::max_radius() const {
    BigFloat m(prec());
    for (const auto& p : pts_) {
        BigFloat a = abs(p.location);
        if (a > m) m = a;
    }
    return m;
}

void Scheme::validate() const {
    if (n1_ < 0 || n2_ < 0) throw InvalidScheme("negative degree in scheme");
    if (pts_.empty()) throw InvalidScheme("scheme has no points");
    for (const auto& p : pts_) {
        if (p.multiplicity < 1) throw InvalidScheme("non-positive multiplicity");
        if (!p.location.is_finite()) throw InvalidScheme("non-finite point location");
    }
    long t = total_multiplicity();
    if (t != n1_ + n2_ + 1) {
        throw InvalidScheme("total multiplicity " + std::to_string(t) + " does not match degrees (" +
                            std::to_string(n1_) + ", " + std::to_string(n2_) + ")");
    }
}

std::vector<BigComplex> Scheme::unit_points() const {
    std::vector<BigComplex> out;
    out.reserve(static_cast<size_t>(total_multiplicity()));
    for (const auto& p : pts_) {
        for (long k = 0; k < p.multiplicity; ++k) out.push_back(p.location);
    }
    return out;
}

std::vector<BigComplex> Scheme::scaled_unit_points() const {
    if (n1_ != n2_) {
        throw InvalidScheme("scaled points are defined for a balanced degree split only");
    }
    std::vector<BigComplex> out = unit_points();
    for (auto& z : out) z = z / (2L * n1_);
    return out;
}

Scheme Scheme::reflected() const {
    std::vector<SchemePoint> pts;
    pts.reserve(pts_.size());
    for (const auto& p : pts_) pts.push_back({-p.location, p.multiplicity});
    return Scheme(n2_, n1_, std::move(pts));
}

uint64_t Scheme::hash() const {
    std::string s = "scheme-v1|" + std::to_string(n1_) + "|" + std::to_string(n2_) + "|";
    for (const auto& p : pts_) {
        s += p.location.re().to_string() + "," + p.location.im().to_string() + "," +
             std::to_string(p.multiplicity) + ";";
    }
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string Scheme::to_json() const {
    nlohmann::json j;
    j["n1"] = n1_;
    j["n2"] = n2_;
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts_) {
        nlohmann::json q;
        q["re"] = p.location.re().to_string();
        q["im"] = p.location.im().to_string();
        q["mult"] = p.multiplicity;
        j["points"].push_back(q);
    }
    return j.dump(2);
}

Scheme Scheme::from_json(const std::string& text, mpfr_prec_t prec) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidScheme(std::string("scheme JSON does not parse: ") + e.what());
    }
    if (!j.contains("n1") || !j.contains("n2") || !j.contains("points")) {
        throw InvalidScheme("scheme JSON needs n1, n2 and points");
    }
    auto parse_part = [&](const nlohmann::json& v, const char* what) -> BigFloat {
        if (v.is_string()) return BigFloat(v.get<std::string>(), prec);
        if (v.is_number()) {
            char buf[64];
            snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            return BigFloat(std::string(buf), prec);
        }
        throw InvalidScheme(std::string(what) + " must be a decimal string or number");
    };
    std::vector<SchemePoint> pts;
    for (const auto& q : j["points"]) {
        SchemePoint p;
        p.location = BigComplex(parse_part(q.at("re"), "re"), parse_part(q.at("im"), "im"));
        p.multiplicity = q.value("mult", 1L);
        pts.push_back(std::move(p));
    }
    Scheme s(j["n1"].get<long>(), j["n2"].get<long>(), std::move(pts));
    s.validate();
    return s;
}

Scheme make_point_mass(long n, const BigComplex& z0) {
    return Scheme(n, n, {SchemePoint{z0, 2 * n + 1}});
}

Scheme make_circle(long n, const BigFloat& radius, mpfr_prec_t prec) {
    std::vector<SchemePoint> pts;
    const long m = 2 * n + 1;
    BigFloat two_pi = BigFloat::pi(prec) * 2L;
    for (long k = 0; k < m; ++k) {
        BigFloat th = two_pi * k / m;
        pts.push_back({BigComplex(radius * cos(th), radius * sin(th)), 1});
    }
    return Scheme(n, n, std::move(pts));
}

Scheme make_segment(long n, const BigComplex& a, const BigComplex& b) {
    if (n < 1) throw InvalidScheme("segment scheme needs n >= 1");
    std::vector<SchemePoint> pts;
    const long m = 2 * n;  // 2n+1 points, k = 0..2n
    for (long k = 0; k <= m; ++k) {
        pts.push_back({a + ((b - a) * k) / m, 1});
    }
    return Scheme(n, n, std::move(pts));
}

Scheme make_two_point(long n1, long n2, const BigComplex& z1, long m1, const BigComplex& z2,
                      long m2) {
    Scheme s(n1, n2, {SchemePoint{z1, m1}, SchemePoint{z2, m2}});
    s.validate();
    return s;
}

Scheme make_random_disk(long n, const BigFloat& radius, uint64_t seed, mpfr_prec_t prec) {
    std::vector<SchemePoint> pts;
    uint64_t state = seed;
    for (long k = 0; k < 2 * n + 1; ++k) {
        double u = unit_double(state);
        double v = unit_double(state);
        double r = std::sqrt(u);
        double th = 6.283185307179586476925 * v;
        BigFloat rr = radius * BigFloat(r, prec);
        pts.push_back({BigComplex(rr * BigFloat(std::cos(th), prec),
                                  rr * BigFloat(std::sin(th), prec)),
                       1});
    }
    return Scheme(n, n, std::move(pts));
}

}  // namespace ratexp
