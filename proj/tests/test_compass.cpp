#include <doctest.h>

#include <random>

#include "opgeo/compass.hpp"
#include "opgeo/errors.hpp"

using namespace opgeo;

namespace {

PointId mark(Frame& f, long x, long y) { return f.mark_point({Scalar(x), Scalar(y)}); }

Scalar rnd_scalar(std::mt19937_64& rng) {
    return Scalar(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
}

PointId rnd_point(Frame& f, std::mt19937_64& rng) {
    return f.mark_point({rnd_scalar(rng), rnd_scalar(rng)});
}

}  // namespace

TEST_CASE("the compass has no aperture on a single point") {
    Frame f(2);
    PointId a = mark(f, 4, -7);
    CHECK(distance(f, a, a).is_zero());
}

TEST_CASE("3-4-5 distance is exact") {
    Frame f(2);
    PointId a = mark(f, 0, 0);
    PointId b = mark(f, 3, 4);
    // coordinate oracle: sqrt(9 + 16) = 5
    CHECK(compare(distance(f, a, b).magnitude(), Scalar(5)) == Cmp::Equal);
}

TEST_CASE("apertures are symmetric") {
    Frame f(2);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        PointId a = rnd_point(f, rng);
        PointId b = rnd_point(f, rng);
        CHECK(compare(distance(f, a, b), distance(f, b, a)) == Cmp::Equal);
    }
}

TEST_CASE("distances across frames are rejected") {
    Frame f(2), g(2);
    PointId a = mark(f, 0, 0);
    PointId b = mark(g, 1, 0);
    CHECK_THROWS_AS(distance(f, a, b), FrameMismatch);
}

TEST_CASE("order relation matches the drawn construction") {
    Frame f(2);
    PointId o = mark(f, 0, 0);
    PointId e = mark(f, 1, 0);
    PointId a = mark(f, 0, 0);
    PointId b = mark(f, 2, 0);
    CHECK(compare(distance(f, o, e), distance(f, a, b)) == Cmp::Less);

    DistanceValue x = distance(f, o, b);
    CHECK(compare(x, x) == Cmp::Equal);

    // trichotomy against a coordinate oracle
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        PointId p = rnd_point(f, rng);
        PointId q = rnd_point(f, rng);
        PointId r = rnd_point(f, rng);
        Cmp c = compare(distance(f, o, p), distance(f, q, r));
        double d1 = distance(f, o, p).magnitude().approx();
        double d2 = distance(f, q, r).magnitude().approx();
        if (c == Cmp::Less) CHECK(d1 < d2 + 1e-9);
        if (c == Cmp::Greater) CHECK(d1 > d2 - 1e-9);
        CHECK(c != Cmp::Uncertain);
    }

    // the drawn-line procedure agrees with the magnitude comparison
    for (int i = 0; i < 50; ++i) {
        PointId p = rnd_point(f, rng);
        PointId q = rnd_point(f, rng);
        DistanceValue r = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        Cmp direct = compare(distance(f, p, q), r);
        CHECK(compare_by_construction(f, p, q, r) == direct);
    }
}

TEST_CASE("sum of apertures via the maximal point") {
    Frame f(2);
    DistanceValue two = distance(f, mark(f, 0, 0), mark(f, 2, 0));
    DistanceValue three = distance(f, mark(f, 0, 0), mark(f, 0, 3));
    // collinear maximal-point oracle
    CHECK(compare(add_by_construction(f, two, three).magnitude(), Scalar(5)) == Cmp::Equal);
    CHECK(compare(add(two, three).magnitude(), Scalar(5)) == Cmp::Equal);

    CHECK(compare(add(two, DistanceValue()), two) == Cmp::Equal);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        DistanceValue d1 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        DistanceValue d2 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        CHECK(compare(add(d1, d2), add(d2, d1)) == Cmp::Equal);
        CHECK(compare(add(d1, d2), add_by_construction(f, d1, d2)) == Cmp::Equal);
    }
}

TEST_CASE("scaling apertures") {
    Frame f(2);
    DistanceValue five = distance(f, mark(f, 0, 0), mark(f, 3, 4));
    CHECK(compare(scale(Scalar(1), five), five) == Cmp::Equal);
    CHECK(compare(scale(Scalar(3, 5), five).magnitude(), Scalar(3)) == Cmp::Equal);
    CHECK(scale(Scalar(0), five).is_zero());
    CHECK_THROWS_AS(scale(Scalar(-1), five), DomainError);
}

TEST_CASE("sphere membership is the exact aperture test") {
    Frame f(2);
    PointId o = mark(f, 0, 0);
    Sphere s = sphere(o, distance(f, o, mark(f, 1, 0)));
    CHECK(sphere_member(f, s, mark(f, 1, 0)) == Tri::True);
    CHECK(sphere_member(f, s, mark(f, 0, -1)) == Tri::True);
    CHECK(sphere_member(f, s, mark(f, 1, 1)) == Tri::False);  // sqrt(2) != 1
    Sphere degenerate = sphere(o, DistanceValue());
    CHECK(sphere_member(f, degenerate, o) == Tri::True);
}

TEST_CASE("triangle inequality holds exactly on random triples") {
    Frame f(2);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        PointId o = rnd_point(f, rng);
        PointId g = rnd_point(f, rng);
        PointId m = rnd_point(f, rng);
        Cmp c = compare(add(distance(f, o, g), distance(f, g, m)), distance(f, o, m));
        CHECK((c == Cmp::Greater || c == Cmp::Equal));
    }
    // degenerate triple hits the equality branch
    PointId p = mark(f, 1, 1);
    CHECK(compare(add(distance(f, p, p), distance(f, p, p)), distance(f, p, p)) == Cmp::Equal);
}

TEST_CASE("total order is compatible with addition") {
    Frame f(2);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        DistanceValue d1 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        DistanceValue d2 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        DistanceValue e = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        if (compare(d1, d2) == Cmp::Less) {
            CHECK(compare(add(d1, e), add(d2, e)) == Cmp::Less);
        }
    }
}

TEST_CASE("nonnegative cone vector axioms") {
    Frame f(2);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        DistanceValue d1 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        DistanceValue d2 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        DistanceValue d3 = distance(f, rnd_point(f, rng), rnd_point(f, rng));
        CHECK(compare(add(add(d1, d2), d3), add(d1, add(d2, d3))) == Cmp::Equal);
        Scalar q(static_cast<long>(rng() % 7), static_cast<long>(rng() % 5) + 1);
        CHECK(compare(scale(q, add(d1, d2)), add(scale(q, d1), scale(q, d2))) == Cmp::Equal);
        Scalar p(static_cast<long>(rng() % 7), static_cast<long>(rng() % 5) + 1);
        CHECK(compare(scale(p + q, d1), add(scale(p, d1), scale(q, d1))) == Cmp::Equal);
    }
}
