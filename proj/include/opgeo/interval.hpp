#pragma once

#include <mpfr.h>

#include <string>

#include "opgeo/rational.hpp"

namespace opgeo {

/// Closed interval [lo, hi] with MPFR endpoints, outward rounded so the
/// exact value it tracks is always enclosed. Endpoints may be infinite
/// (e.g. division through an interval straddling zero); refinement at
/// higher precision recovers finite enclosures.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    mpfr_prec_t precision() const { return prec_; }

    static Interval from_rational(const Rational& q, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);
    static Interval whole_line(mpfr_prec_t prec);

    static Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval div(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval scale(const Interval& a, const Rational& q, mpfr_prec_t prec);
    /// sqrt clamps a slightly-negative lower endpoint to zero; the caller
    /// guarantees the exact operand is nonnegative.
    static Interval sqrt(const Interval& a, mpfr_prec_t prec);
    static Interval atan2(const Interval& y, const Interval& x, mpfr_prec_t prec);
    static Interval sin(const Interval& a, mpfr_prec_t prec);
    static Interval cos(const Interval& a, mpfr_prec_t prec);
    static Interval abs(const Interval& a, mpfr_prec_t prec);

    /// Accumulate a + q*b into a running sum (used for linear combinations).
    void add_scaled(const Interval& b, const Rational& q);

    bool strictly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool strictly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return !strictly_positive() && !strictly_negative(); }
    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
    bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

    /// True when hi - lo < 2^log2_bound (false for infinite endpoints).
    bool width_below_pow2(long log2_bound) const;

    /// Exponent e with hi - lo < 2^e; LONG_MIN for exact (zero-width)
    /// intervals, LONG_MAX for infinite ones.
    long width_exponent() const;

    double midpoint_double() const;
    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    /// Midpoint printed with the given number of decimal digits (fixed
    /// notation, locale independent) — for reports and rendering only.
    std::string midpoint_decimal(int digits) const;
    std::string to_string() const;

    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    mpfr_t& lo_mut() { return lo_; }
    mpfr_t& hi_mut() { return hi_; }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace opgeo
