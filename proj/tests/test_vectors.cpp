#include <doctest.h>

#include <random>

#include "opgeo/errors.hpp"
#include "opgeo/vectors.hpp"

using namespace opgeo;

namespace {

PointId mark(Frame& f, long x, long y) { return f.mark_point({Scalar(x), Scalar(y)}); }

Scalar rnd_scalar(std::mt19937_64& rng) {
    return Scalar(static_cast<long>(rng() % 31) - 15, static_cast<long>(rng() % 6) + 1);
}

PointId rnd_point(Frame& f, std::mt19937_64& rng) {
    return f.mark_point({rnd_scalar(rng), rnd_scalar(rng)});
}

VectorClass rnd_vector(Frame& f, std::mt19937_64& rng) {
    return vector_between(f, rnd_point(f, rng), rnd_point(f, rng));
}

}  // namespace

TEST_CASE("parallel transport of an ordered pair") {
    Frame f(2);
    PointId a = mark(f, 0, 0);
    PointId b = mark(f, 1, 2);
    OrderedPair p{a, b};

    // not moving the square keeps the pair
    OrderedPair same = transport(f, p, a);
    CHECK(same.origin == a);
    CHECK(same.end == b);

    OrderedPair moved = transport(f, p, mark(f, 5, 5));
    CHECK(moved.end == mark(f, 6, 7));

    OrderedPair back = transport(f, moved, a);
    CHECK(back.end == b);
}

TEST_CASE("transport equivalence") {
    Frame f(2);
    OrderedPair p{mark(f, 0, 0), mark(f, 1, 0)};
    OrderedPair q{mark(f, 0, 1), mark(f, 1, 1)};
    OrderedPair r{mark(f, 0, 0), mark(f, 0, 1)};
    CHECK(equivalent(f, p, p) == Tri::True);
    CHECK(equivalent(f, p, q) == Tri::True);
    CHECK(equivalent(f, q, p) == Tri::True);
    CHECK(equivalent(f, p, r) == Tri::False);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        OrderedPair x{rnd_point(f, rng), rnd_point(f, rng)};
        OrderedPair y{rnd_point(f, rng), rnd_point(f, rng)};
        CHECK(equivalent(f, x, x) == Tri::True);
        CHECK(equivalent(f, x, y) == equivalent(f, y, x));
    }
}

TEST_CASE("vector sum") {
    Frame f(2);
    VectorClass ex = vector_between(f, mark(f, 0, 0), mark(f, 1, 0));
    VectorClass ey = vector_between(f, mark(f, 0, 0), mark(f, 0, 1));
    VectorClass zero = vector_between(f, mark(f, 3, 3), mark(f, 3, 3));

    CHECK(vec_equal(vec_add(ex, zero), ex) == Tri::True);
    VectorClass diag = vec_add(ex, ey);
    CHECK(vec_equal(diag, vector_between(f, mark(f, 0, 0), mark(f, 1, 1))) == Tri::True);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        VectorClass a = rnd_vector(f, rng);
        VectorClass b = rnd_vector(f, rng);
        CHECK(vec_equal(vec_add(a, b), vec_add(b, a)) == Tri::True);
    }
}

TEST_CASE("sum by construction is independent of the anchor") {
    Frame f(2);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 30; ++i) {
        VectorClass a = rnd_vector(f, rng);
        VectorClass b = rnd_vector(f, rng);
        VectorClass expect = vec_add(a, b);
        for (int k = 0; k < 3; ++k) {
            PointId s1 = rnd_point(f, rng);
            PointId s2 = sum_by_construction(f, a, b, s1);
            CHECK(vec_equal(vector_between(f, s1, s2), expect) == Tri::True);
        }
    }
}

TEST_CASE("scaling by naturals marches the compass") {
    Frame f(2);
    VectorClass ex = vector_between(f, mark(f, 0, 0), mark(f, 1, 0));
    VectorClass tripled = nat_scale_by_compass(f, 3, ex);
    CHECK(vec_equal(tripled, vec_scale(Scalar(3), ex)) == Tri::True);
    CHECK(vec_equal(tripled, vector_between(f, mark(f, 0, 0), mark(f, 3, 0))) == Tri::True);
}

TEST_CASE("rational multiplication: Thales intercept construction") {
    Frame f(2);
    PointId o = mark(f, 0, 0);
    VectorClass a = vector_between(f, o, mark(f, 5, 0));
    VectorClass scaled = intercept_scale_construction(f, Rational(3, 5), a);
    CHECK(vec_equal(scaled, vec_scale(Scalar(3, 5), a)) == Tri::True);
    // norm 5 collapses to norm 3 on the same support line
    CHECK(compare(scaled.norm().magnitude(), Scalar(3)) == Cmp::Equal);

    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        VectorClass v = rnd_vector(f, rng);
        long m = static_cast<long>(rng() % 40) + 1;
        long n = static_cast<long>(rng() % 19) + 1;
        if (rng() % 4 == 0) m = -m;
        Rational ratio(m, n);
        VectorClass built = intercept_scale_construction(f, ratio, v);
        CHECK(vec_equal(built, vec_scale(Scalar(ratio), v)) == Tri::True);
    }
}

TEST_CASE("reversal and double reversal") {
    Frame f(2);
    std::mt19937_64 rng(59);
    VectorClass a = rnd_vector(f, rng);
    VectorClass back = vec_scale(Scalar(-1), vec_scale(Scalar(-1), a));
    CHECK(vec_equal(back, a) == Tri::True);
    CHECK(vec_equal(vec_add(a, vec_scale(Scalar(-1), a)), vec_scale(Scalar(0), a)) == Tri::True);
}

TEST_CASE("affine correspondence") {
    Frame f(2);
    PointId p = mark(f, 1, 1);
    VectorClass v = vector_between(f, mark(f, 0, 0), mark(f, 2, 3));
    CHECK(point_plus_vector(f, p, v) == mark(f, 3, 4));

    VectorClass zero = vec_scale(Scalar(0), v);
    CHECK(point_plus_vector(f, p, zero) == p);

    // round trip: vector_between(A, A + a) = a
    CHECK(vec_equal(vector_between(f, p, point_plus_vector(f, p, v)), v) == Tri::True);

    // Chasles on random triples
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        PointId x = rnd_point(f, rng);
        PointId y = rnd_point(f, rng);
        PointId z = rnd_point(f, rng);
        VectorClass lhs = vec_add(vector_between(f, x, y), vector_between(f, y, z));
        CHECK(vec_equal(lhs, vector_between(f, x, z)) == Tri::True);
    }
}

TEST_CASE("vector space axioms on random instances") {
    Frame f(2);
    std::mt19937_64 rng(67);
    for (int i = 0; i < 60; ++i) {
        VectorClass a = rnd_vector(f, rng);
        VectorClass b = rnd_vector(f, rng);
        VectorClass c = rnd_vector(f, rng);
        Scalar lam = rnd_scalar(rng);
        Scalar mu = rnd_scalar(rng);
        CHECK(vec_equal(vec_add(vec_add(a, b), c), vec_add(a, vec_add(b, c))) == Tri::True);
        CHECK(vec_equal(vec_scale(lam, vec_add(a, b)), vec_add(vec_scale(lam, a), vec_scale(lam, b))) ==
              Tri::True);
        CHECK(vec_equal(vec_scale(lam + mu, a), vec_add(vec_scale(lam, a), vec_scale(mu, a))) == Tri::True);
        CHECK(vec_equal(vec_scale(lam * mu, a), vec_scale(lam, vec_scale(mu, a))) == Tri::True);
        CHECK(vec_equal(vec_scale(Scalar(1), a), a) == Tri::True);
    }
}

TEST_CASE("approximating an irrational factor by convergents") {
    Frame f(2);
    VectorClass a = vector_between(f, mark(f, 0, 0), mark(f, 1, 0));
    Scalar root2 = Scalar::sqrt(Scalar(2));
    auto trace = rational_approximation_trace(f, root2, a, Scalar(1, 1000));

    // continued fraction of sqrt(2): 1, 3/2, 7/5, 17/12, then 41/29 lands
    // within 1e-3 (|41/29 - sqrt(2)| ~ 4.2e-4)
    std::vector<Rational> expect = {Rational(1), Rational(3, 2), Rational(7, 5), Rational(17, 12),
                                    Rational(41, 29)};
    REQUIRE(trace.size() == expect.size());
    for (size_t i = 0; i < trace.size(); ++i) {
        CHECK(trace[i].convergent == expect[i]);
        CHECK(vec_equal(trace[i].constructed, vec_scale(Scalar(expect[i]), a)) == Tri::True);
    }
    // the last step is within tolerance
    Scalar err = abs(Scalar(trace.back().convergent) - root2);
    CHECK(compare(err, Scalar(1, 1000)) == Cmp::Less);

    CHECK_THROWS_AS(rational_approximation_trace(f, Scalar::pi(), a, Scalar(1, 10)), DomainError);
    CHECK_THROWS_AS(rational_approximation_trace(f, root2, a, Scalar(0)), DomainError);
}

TEST_CASE("cross-frame vector operations are rejected") {
    Frame f(2), g(2);
    VectorClass a = vector_between(f, mark(f, 0, 0), mark(f, 1, 0));
    VectorClass b = vector_between(g, mark(g, 0, 0), mark(g, 1, 0));
    CHECK_THROWS_AS(vec_add(a, b), FrameMismatch);
    CHECK_THROWS_AS(point_plus_vector(g, mark(g, 0, 0), a), FrameMismatch);
}
