// Scheme handling: canonical order, duplicate merging, hashing, JSON
// round trips, reflection, generators.

#include <doctest.h>

#include <vector>

#include "ratexp/errors.hpp"
#include "ratexp/scheme.hpp"
#include "testutil.hpp"

using namespace ratexp;
using testutil::bits_tol;
using testutil::check_close;

TEST_SUITE_BEGIN("schemes");

TEST_CASE("canonical form merges duplicates and sorts") {
    const mpfr_prec_t p = 256;
    std::vector<SchemePoint> pts{
        {BigComplex(1L, 1L, p), 1}, {BigComplex(-1L, 0L, p), 2},
        {BigComplex(1L, 1L, p), 1},  // exact duplicate of the first
        {BigComplex(0L, -2L, p), 1},
    };
    Scheme s(2, 2, std::move(pts));
    REQUIRE(s.points().size() == 3);
    // sorted by (re, im): (-1,0), (0,-2), (1,1)
    CHECK(s.points()[0].location.re().to_long() == -1);
    CHECK(s.points()[1].location.im().to_long() == -2);
    CHECK(s.points()[2].multiplicity == 2);
    CHECK(s.total_multiplicity() == 5);
    s.validate();
}

TEST_CASE("hash ignores input order") {
    const mpfr_prec_t p = 256;
    std::vector<SchemePoint> a{{BigComplex(1L, 0L, p), 1}, {BigComplex(2L, 1L, p), 2}};
    std::vector<SchemePoint> b{{BigComplex(2L, 1L, p), 2}, {BigComplex(1L, 0L, p), 1}};
    Scheme sa(1, 2, std::move(a)), sb(1, 2, std::move(b));
    CHECK(sa.hash() == sb.hash());
    Scheme sc(2, 1, {{BigComplex(1L, 0L, p), 1}, {BigComplex(2L, 1L, p), 2}});
    CHECK(sa.hash() != sc.hash());
}

TEST_CASE("JSON round trip preserves everything") {
    const mpfr_prec_t p = 512;
    Scheme s = make_circle(3, sqrt(BigFloat(2L, p)), p);
    Scheme t = Scheme::from_json(s.to_json(), p);
    CHECK(s.hash() == t.hash());
    CHECK(t.n1() == 3);
    CHECK(t.total_multiplicity() == 7);
}

TEST_CASE("JSON validation failures are loud") {
    const mpfr_prec_t p = 128;
    CHECK_THROWS_AS((void)Scheme::from_json("{not json", p), InvalidScheme);
    // multiplicities don't match the degree split
    CHECK_THROWS_AS((void)Scheme::from_json(
                        R"({"n1":2,"n2":2,"points":[{"re":"0","im":"0","mult":3}]})", p),
                    InvalidScheme);
}

TEST_CASE("reflection negates points and swaps the split") {
    const mpfr_prec_t p = 256;
    Scheme s = make_two_point(3, 2, BigComplex(1L, 2L, p), 4, BigComplex(-1L, 0L, p), 2);
    Scheme r = s.reflected();
    CHECK(r.n1() == 2);
    CHECK(r.n2() == 3);
    // (1,2) -> (-1,-2) which sorts first
    CHECK(r.points()[0].location.re().to_long() == -1);
    CHECK(r.points()[0].location.im().to_long() == -2);
    CHECK(r.points()[0].multiplicity == 4);
    CHECK(r.reflected().hash() == s.hash());
}

TEST_CASE("point mass expansion puts every copy at the location") {
    const mpfr_prec_t p = 256;
    Scheme s = make_point_mass(2, BigComplex(0L, 0L, p));
    auto u = s.unit_points();
    REQUIRE(u.size() == 5);
    for (const auto& z : u) CHECK(z.is_zero());
    auto sc = s.scaled_unit_points();
    REQUIRE(sc.size() == 5);
}

TEST_CASE("segment scheme endpoints and count") {
    const mpfr_prec_t p = 256;
    BigComplex a(0L, -3L, p), b(0L, 3L, p);
    Scheme s = make_segment(2, a, b);
    REQUIRE(s.points().size() == 5);
    check_close(s.points().front().location, a, bits_tol(p, 8));
    check_close(s.points().back().location, b, bits_tol(p, 8));
    check_close(s.max_radius(), BigFloat(3L, p), bits_tol(p, 8));
}

TEST_CASE("random disk scheme is seed-deterministic and inside the disk") {
    const mpfr_prec_t p = 256;
    BigFloat radius("2.5", p);
    Scheme a = make_random_disk(4, radius, 12345, p);
    Scheme b = make_random_disk(4, radius, 12345, p);
    Scheme c = make_random_disk(4, radius, 54321, p);
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != c.hash());
    CHECK(a.total_multiplicity() == 9);
    CHECK(a.max_radius() <= radius);
}

TEST_CASE("scaled points need a balanced split") {
    const mpfr_prec_t p = 128;
    Scheme s = make_two_point(2, 1, BigComplex(1L, 0L, p), 2, BigComplex(-1L, 0L, p), 2);
    CHECK_THROWS_AS((void)s.scaled_unit_points(), InvalidScheme);
}

TEST_SUITE_END();
