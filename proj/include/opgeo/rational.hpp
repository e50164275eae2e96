#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace opgeo {

/// Arbitrary-precision rational, a thin RAII wrapper over GMP's mpq_t.
/// Always kept in canonical form (coprime, positive denominator).
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {  // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "p", "p/q" or a decimal literal like "9.7" (exactly 97/10).
    static std::optional<Rational> parse(const std::string& text);

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    /// Division by zero is the caller's bug; asserted in debug builds.
    friend Rational operator/(const Rational& a, const Rational& b) {
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational inverse() const {
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    /// Exact square root if this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    /// Largest integer <= value.
    Rational floor() const;
    /// Nearest integer, ties away from zero.
    Rational round_nearest() const;

    /// Numerator/denominator as long, only when they fit.
    std::optional<long> to_long() const;

    double to_double() const { return mpq_get_d(q_); }

    /// log2 of |value| rounded up; 0 for zero (callers clamp anyway).
    double log2_abs_ceil() const;
    /// log2 of |numerator| / denominator separately, rounded up, >= 0.
    double log2_num_ceil() const;
    double log2_den_ceil() const;

    std::string to_string() const;

    size_t hash() const;

    const mpq_t& raw() const { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace opgeo
