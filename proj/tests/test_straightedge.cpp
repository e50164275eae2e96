#include <doctest.h>

#include <random>

#include "opgeo/coords.hpp"
#include "opgeo/errors.hpp"
#include "opgeo/straightedge.hpp"

using namespace opgeo;

namespace {

PointId mark(Frame& f, long x, long y) { return f.mark_point({Scalar(x), Scalar(y)}); }
PointId mark3(Frame& f, long x, long y, long z) { return f.mark_point({Scalar(x), Scalar(y), Scalar(z)}); }

Scalar rnd_scalar(std::mt19937_64& rng) {
    return Scalar(static_cast<long>(rng() % 25) - 12, static_cast<long>(rng() % 7) + 1);
}

// independent coplanarity oracle: det of the three spanning differences
bool coplanar_oracle(const Frame& f, PointId a, PointId b, PointId c, PointId x) {
    Coords u = coords_sub(f.coords(b), f.coords(a));
    Coords v = coords_sub(f.coords(c), f.coords(a));
    Coords w = coords_sub(f.coords(x), f.coords(a));
    Scalar det = dot(cross3(u, v), w);
    return sign(det) == Cmp::Equal;
}

}  // namespace

TEST_CASE("betweenness is the equality case of the triangle inequality") {
    Frame f(2);
    PointId a = mark(f, 0, 0);
    PointId x = mark(f, 1, 0);
    PointId b = mark(f, 2, 0);
    CHECK(is_between(f, a, x, b) == Tri::True);  // 1 + 1 = 2
    CHECK(is_between(f, a, a, b) == Tri::True);  // endpoint case
    CHECK(is_between(f, a, mark(f, 1, 1), b) == Tri::False);  // 2*sqrt(2) > 2
    // symmetric in the outer arguments
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        PointId p = f.mark_point({rnd_scalar(rng), rnd_scalar(rng)});
        PointId q = f.mark_point({rnd_scalar(rng), rnd_scalar(rng)});
        PointId r = f.mark_point({rnd_scalar(rng), rnd_scalar(rng)});
        CHECK(is_between(f, p, q, r) == is_between(f, r, q, p));
    }
}

TEST_CASE("line membership covers the three betweenness cases") {
    Frame f(2);
    PointId a = mark(f, 0, 0);
    PointId b = mark(f, 1, 0);
    Line l = line(f, a, b);
    CHECK(line_member(f, l, mark(f, 5, 0)) == Tri::True);   // r(ABX)
    CHECK(line_member(f, l, mark(f, -1, 0)) == Tri::True);  // r(XAB)
    CHECK(line_member(f, l, mark(f, 0, 1)) == Tri::False);
    CHECK_THROWS_AS(line(f, a, a), DegenerateInput);

    // line(A,B) and line(B,A) agree as membership predicates
    Line rev = line(f, b, a);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        PointId p = f.mark_point({rnd_scalar(rng), rnd_scalar(rng)});
        CHECK(line_member(f, l, p) == line_member(f, rev, p));
    }
}

TEST_CASE("distance from point to line via the perpendicular foot") {
    Frame f(2);
    Line xaxis = line(f, mark(f, 0, 0), mark(f, 1, 0));
    PointId on = mark(f, 7, 0);
    CHECK(dist_point_line(f, on, xaxis).is_zero());
    CHECK(compare(dist_point_line(f, mark(f, 0, 1), xaxis).magnitude(), Scalar(1)) == Cmp::Equal);
    CHECK(compare(dist_point_line(f, mark(f, 3, 4), xaxis).magnitude(), Scalar(4)) == Cmp::Equal);
    PointId foot = perpendicular_foot(f, mark(f, 3, 4), xaxis);
    CHECK(foot == mark(f, 3, 0));
}

TEST_CASE("the unique parallel through a point") {
    Frame f(2);
    Line xaxis = line(f, mark(f, 0, 0), mark(f, 1, 0));
    PointId p = mark(f, 0, 1);
    Line s = parallel_through(f, p, xaxis);
    // constant distance sampled along the source line, both ways
    for (long t : {-3L, 0L, 5L}) {
        CHECK(compare(dist_point_line(f, mark(f, t, 0), s).magnitude(), Scalar(1)) == Cmp::Equal);
    }
    for (long t : {-2L, 1L, 9L}) {
        CHECK(compare(dist_point_line(f, mark(f, t, 1), xaxis).magnitude(), Scalar(1)) == Cmp::Equal);
    }
    CHECK(line_member(f, s, mark(f, 4, 1)) == Tri::True);

    // degenerate: a point of the line returns the line itself
    Line same = parallel_through(f, mark(f, 2, 0), xaxis);
    CHECK(line_member(f, same, mark(f, -5, 0)) == Tri::True);

    // two-step construction: the parallel through a parallel recovers r
    Line back = parallel_through(f, mark(f, 0, 0), s);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        PointId probe = f.mark_point({rnd_scalar(rng), Scalar(0)});
        CHECK(line_member(f, back, probe) == Tri::True);
    }
}

TEST_CASE("cylinder membership") {
    Frame f(3);
    Line axis = line(f, mark3(f, 0, 0, 0), mark3(f, 1, 0, 0));
    Cylinder c = cylinder(axis, distance(f, mark3(f, 0, 0, 0), mark3(f, 0, 2, 0)));
    CHECK(cylinder_member(f, c, mark3(f, 5, 2, 0)) == Tri::True);
    CHECK(cylinder_member(f, c, mark3(f, 5, 0, -2)) == Tri::True);
    CHECK(cylinder_member(f, c, mark3(f, 5, 1, 0)) == Tri::False);
    CHECK_THROWS_AS(cylinder(axis, DistanceValue()), DegenerateInput);
}

TEST_CASE("plane membership against the coplanarity oracle") {
    Frame f(3);
    PointId o = mark3(f, 0, 0, 0);
    Line r = line(f, mark3(f, 0, 2, 0), mark3(f, 1, 2, 0));  // shifted x-direction line
    Line s = line(f, o, mark3(f, 0, 1, 0));                  // y-axis
    Plane pi = plane(f, r, s, o);

    CHECK(plane_member(f, pi, mark3(f, 2, 3, 0)) == Tri::True);
    CHECK(plane_member(f, pi, mark3(f, 0, 0, 1)) == Tri::False);
    CHECK(plane_member(f, pi, mark3(f, 0, -4, 0)) == Tri::True);  // on s
    CHECK(plane_member(f, pi, o) == Tri::True);                   // the anchor itself

    // membership implies coplanarity, and coplanar probes through the
    // construction are members
    std::mt19937_64 rng(21);
    PointId ra = mark3(f, 0, 2, 0);
    for (int i = 0; i < 60; ++i) {
        Coords probe{rnd_scalar(rng), rnd_scalar(rng), rnd_scalar(rng)};
        PointId x = f.mark_point(probe);
        if (plane_member(f, pi, x) == Tri::True) {
            CHECK(coplanar_oracle(f, o, ra, mark3(f, 1, 2, 0), x));
        }
    }
    for (int i = 0; i < 60; ++i) {
        // X = P + t*(Y - P) for Y on r: member by construction
        Scalar t = rnd_scalar(rng);
        Scalar u = rnd_scalar(rng);
        Coords y = coords_add(f.coords(ra), coords_scale(coords_sub(f.coords(mark3(f, 1, 2, 0)), f.coords(ra)), u));
        Coords x = coords_add(f.coords(o), coords_scale(coords_sub(y, f.coords(o)), t));
        PointId px = f.mark_point(x);
        CHECK(coplanar_oracle(f, o, ra, mark3(f, 1, 2, 0), px));
        CHECK(plane_member(f, pi, px) == Tri::True);
    }

    CHECK_THROWS_AS(plane(f, r, s, mark3(f, 5, 5, 5)), DegenerateInput);   // P not on s
    CHECK_THROWS_AS(plane(f, s, s, o), DegenerateInput);                   // identical lines
    Line through_o = line(f, o, mark3(f, 1, 0, 0));
    CHECK_THROWS_AS(plane(f, through_o, s, o), DegenerateInput);           // r through P
}

TEST_CASE("exact line intersection") {
    Frame f(2);
    Line a = line(f, mark(f, 0, 0), mark(f, 2, 2));
    Line b = line(f, mark(f, 0, 2), mark(f, 2, 0));
    auto hit = intersect_lines(f, a, b);
    REQUIRE(hit.has_value());
    CHECK(*hit == mark(f, 1, 1));

    Line c = line(f, mark(f, 0, 5), mark(f, 1, 6));  // parallel to a
    CHECK_FALSE(intersect_lines(f, a, c).has_value());

    Frame g(3);
    Line d = line(g, mark3(g, 0, 0, 0), mark3(g, 1, 0, 0));
    Line e = line(g, mark3(g, 0, 1, 1), mark3(g, 0, 2, 1));  // skew to d
    CHECK_FALSE(intersect_lines(g, d, e).has_value());
    Line h = line(g, mark3(g, 2, -1, 0), mark3(g, 2, 1, 0));
    auto hit3 = intersect_lines(g, d, h);
    REQUIRE(hit3.has_value());
    CHECK(*hit3 == mark3(g, 2, 0, 0));
}
