#include <doctest.h>

#include <limits>
#include <random>

#include "opgeo/errors.hpp"
#include "opgeo/scalar.hpp"

using namespace opgeo;

namespace {
Scalar sq2() { return Scalar::sqrt(Scalar(2)); }
Scalar sq3() { return Scalar::sqrt(Scalar(3)); }
}  // namespace

TEST_CASE("rational arithmetic folds exactly") {
    Scalar x = Scalar(1, 3) + Scalar(1, 6);
    CHECK(x.is_rational());
    CHECK(compare(x, Scalar(1, 2)) == Cmp::Equal);
    CHECK(compare(Scalar(1, 3), Scalar(1, 3)) == Cmp::Equal);
    CHECK(compare(Scalar(2, 3) * Scalar(3, 4), Scalar(1, 2)) == Cmp::Equal);
}

TEST_CASE("sqrt(2) against its decimal underestimate") {
    // squaring oracle: 2 > (141/100)^2 = 19881/10000
    CHECK(Rational(2) * Rational(10000) > Rational(19881));
    CHECK(compare(sq2(), Scalar(141, 100)) == Cmp::Greater);
    CHECK(compare(sq2(), Scalar(142, 100)) == Cmp::Less);
}

TEST_CASE("sqrt multiplication folds symbolically") {
    CHECK(compare(sq2() * sq2(), Scalar(2)) == Cmp::Equal);
    CHECK(compare(sq2() * sq3(), Scalar::sqrt(Scalar(6))) == Cmp::Equal);
    CHECK(Scalar::sqrt(Scalar(4)).is_rational());
    CHECK(compare(Scalar::sqrt(Scalar(9, 4)), Scalar(3, 2)) == Cmp::Equal);
}

TEST_CASE("separation bound decides nested radical equalities") {
    // (sqrt(2)+sqrt(3))^2 = 5 + 2*sqrt(6): no structural route, needs the zero test
    Scalar lhs = (sq2() + sq3()) * (sq2() + sq3());
    Scalar rhs = Scalar(5) + Scalar(2) * Scalar::sqrt(Scalar(6));
    CHECK(compare(lhs, rhs) == Cmp::Equal);

    // denesting identity sqrt(5 + 2*sqrt(6)) = sqrt(2) + sqrt(3)
    CHECK(compare(Scalar::sqrt(rhs), sq2() + sq3()) == Cmp::Equal);

    // and a near miss stays separated
    CHECK(compare(lhs, rhs + Scalar(1, 1000000)) == Cmp::Less);
}

TEST_CASE("interval-only mode reports uncertainty instead of deciding") {
    CompareConfig cfg;
    cfg.symbolic = false;
    cfg.max_precision = 256;
    Scalar lhs = (sq2() + sq3()) * (sq2() + sq3());
    Scalar rhs = Scalar(5) + Scalar(2) * Scalar::sqrt(Scalar(6));
    CHECK(compare(lhs, rhs, cfg) == Cmp::Uncertain);
    // separated values still resolve from enclosures alone
    CHECK(compare(lhs, Scalar(10), cfg) == Cmp::Less);
}

TEST_CASE("comparison agrees with exact rational order on a large sample") {
    std::mt19937_64 rng(42);
    auto small = [&rng]() {
        long num = static_cast<long>(rng() % 201) - 100;
        long den = static_cast<long>(rng() % 30) + 1;
        return Rational(num, den);
    };
    int checked = 0;
    for (int i = 0; i < 1000000; ++i) {
        Rational a = small(), b = small();
        Cmp c = compare(Scalar(a), Scalar(b));
        Cmp expected = a < b ? Cmp::Less : a > b ? Cmp::Greater : Cmp::Equal;
        if (c != expected) {
            CHECK(c == expected);
            break;
        }
        ++checked;
    }
    CHECK(checked == 1000000);
}

TEST_CASE("enclosures tighten geometrically under refinement") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        // random expression of radical depth <= 3
        Scalar x = Scalar(static_cast<long>(rng() % 50) + 1, static_cast<long>(rng() % 9) + 1);
        for (int d = 0; d < 3; ++d) {
            x = Scalar::sqrt(x + Scalar(static_cast<long>(rng() % 7) + 1));
        }
        long prev_exp = 0;
        bool have_prev = false;
        for (mpfr_prec_t prec = 64; prec <= 1024; prec *= 2) {
            Interval iv = x.enclosure(prec);
            long e = iv.width_exponent();
            if (have_prev && prev_exp != std::numeric_limits<long>::min()) {
                CHECK(e <= prev_exp - 1);  // width at least halves per refinement
            }
            prev_exp = e;
            have_prev = true;
        }
    }
}

TEST_CASE("pi stays symbolic and interval-certified") {
    Scalar pi = Scalar::pi();
    CHECK_FALSE(pi.is_algebraic());
    CHECK(compare(pi, Scalar(355, 113)) == Cmp::Less);
    CHECK(compare(pi, Scalar(314159, 100000)) == Cmp::Greater);
    // |pi - 355/113| < 1e-6
    CHECK(enclosure_within(pi - Scalar(355, 113), Rational(1, 1000000)) == Tri::True);
    CHECK(enclosure_within(pi - Scalar(355, 113), Rational(1, 100000000)) == Tri::False);
    // structural cancellation still certifies equality with pi present
    CHECK(compare(pi + sq2() - pi, sq2()) == Cmp::Equal);
}

TEST_CASE("trig and atan2 special values fold to exact form") {
    CHECK(compare(Scalar::sin(Scalar::pi() * Scalar(1, 6)), Scalar(1, 2)) == Cmp::Equal);
    CHECK(compare(Scalar::cos(Scalar::pi() * Scalar(1, 3)), Scalar(1, 2)) == Cmp::Equal);
    CHECK(compare(Scalar::sin(Scalar::pi() * Scalar(1, 4)), Scalar::sqrt(Scalar(1, 2))) == Cmp::Equal);
    CHECK(compare(Scalar::sin(Scalar::pi()), Scalar(0)) == Cmp::Equal);
    CHECK(compare(Scalar::cos(Scalar(0)), Scalar(1)) == Cmp::Equal);
    CHECK(compare(Scalar::atan2(Scalar(1), Scalar(0)), Scalar::pi() * Scalar(1, 2)) == Cmp::Equal);
    CHECK(compare(Scalar::atan2(Scalar(0), Scalar(-2)), Scalar::pi()) == Cmp::Equal);
    CHECK(compare(Scalar::atan2(Scalar(3), Scalar(3)), Scalar::pi() * Scalar(1, 4)) == Cmp::Equal);
    // odd symmetry is canonicalized, so the sum cancels exactly
    Scalar a = Scalar::atan2(Scalar(3), Scalar(4));
    Scalar b = Scalar::atan2(Scalar(-3), Scalar(4));
    CHECK(compare(a + b, Scalar(0)) == Cmp::Equal);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(Scalar::sqrt(Scalar(-1)), DomainError);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
    CHECK_THROWS_AS(Scalar::atan2(Scalar(0), Scalar(0)), DomainError);
    CHECK_THROWS_AS(Scalar(1) / (sq2() * sq2() - Scalar(2)), DomainError);
}

TEST_CASE("floor and round decide exactly") {
    CHECK(*scalar_floor(sq2()) == Rational(1));
    CHECK(*scalar_floor(-sq2()) == Rational(-2));
    CHECK(*scalar_floor(Scalar(7, 2)) == Rational(3));
    CHECK(*scalar_floor(Scalar(-7, 2)) == Rational(-4));
    CHECK(*scalar_floor(Scalar(4))== Rational(4));
    CHECK(*scalar_floor(Scalar::pi()) == Rational(3));
    CHECK(*scalar_floor(sq2() * sq2()) == Rational(2));  // exact boundary
    CHECK(*scalar_round(Scalar(97, 10)) == Rational(10));
    CHECK(*scalar_round(Scalar(94, 10)) == Rational(9));
}

TEST_CASE("serialization round trips through the parser") {
    Scalar samples[] = {
        Scalar(-3, 5),
        sq2() + Scalar(2) * sq3(),
        (Scalar(1) + Scalar::sqrt(Scalar(5))) / Scalar(2),
        Scalar::pi() * Scalar(2, 3) + Scalar(1, 7),
        Scalar::atan2(Scalar(3), Scalar(4)),
        Scalar::sin(sq2()),
    };
    for (const Scalar& s : samples) {
        auto back = Scalar::parse(s.to_string());
        REQUIRE(back.has_value());
        CHECK(compare(*back, s) == Cmp::Equal);
    }
    CHECK(compare(*Scalar::parse("9.7"), Scalar(97, 10)) == Cmp::Equal);
    CHECK(compare(*Scalar::parse("(1+sqrt(5))/2"), (Scalar(1) + Scalar::sqrt(Scalar(5))) / Scalar(2)) ==
          Cmp::Equal);
    CHECK_FALSE(Scalar::parse("3//4").has_value());
    CHECK_FALSE(Scalar::parse("sqrt(").has_value());
    CHECK_FALSE(Scalar::parse("nope").has_value());
}

TEST_CASE("decimal formatting is deterministic") {
    CHECK(Scalar(100, 97).decimal(2) == "1.03");
    CHECK(Scalar::pi().decimal(5) == "3.14159");
    CHECK(Scalar(5).decimal(0) == "5");
}
