#include "opgeo/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <limits>
#include <vector>

namespace opgeo {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        prec_ = o.prec_;
        mpfr_set_prec(lo_, prec_);
        mpfr_set_prec(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        prec_ = o.prec_;
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.raw(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::whole_line(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_inf(r.lo_, -1);
    mpfr_set_inf(r.hi_, 1);
    return r;
}

Interval Interval::add(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sub(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::mul(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    const mpfr_t* as[2] = {&a.lo_, &a.hi_};
    const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
    for (auto& x : as) {
        for (auto& y : bs) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    // 0 * inf produces NaN; the exact product is 0 there, widen to be safe
    if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_)) {
        mpfr_clear(t);
        return whole_line(prec);
    }
    mpfr_clear(t);
    return r;
}

Interval Interval::div(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    if (b.contains_zero()) return whole_line(prec);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    const mpfr_t* as[2] = {&a.lo_, &a.hi_};
    const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
    for (auto& x : as) {
        for (auto& y : bs) {
            mpfr_div(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_)) {
        mpfr_clear(t);
        return whole_line(prec);
    }
    mpfr_clear(t);
    return r;
}

Interval Interval::scale(const Interval& a, const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    if (q.sign() >= 0) {
        mpfr_mul_q(r.lo_, a.lo_, q.raw(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, a.hi_, q.raw(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, a.hi_, q.raw(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, a.lo_, q.raw(), MPFR_RNDU);
    }
    return r;
}

void Interval::add_scaled(const Interval& b, const Rational& q) {
    mpfr_t t;
    mpfr_init2(t, prec_);
    if (q.sign() >= 0) {
        mpfr_mul_q(t, b.lo_, q.raw(), MPFR_RNDD);
        mpfr_add(lo_, lo_, t, MPFR_RNDD);
        mpfr_mul_q(t, b.hi_, q.raw(), MPFR_RNDU);
        mpfr_add(hi_, hi_, t, MPFR_RNDU);
    } else {
        mpfr_mul_q(t, b.hi_, q.raw(), MPFR_RNDD);
        mpfr_add(lo_, lo_, t, MPFR_RNDD);
        mpfr_mul_q(t, b.lo_, q.raw(), MPFR_RNDU);
        mpfr_add(hi_, hi_, t, MPFR_RNDU);
    }
    mpfr_clear(t);
}

Interval Interval::sqrt(const Interval& a, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_sgn(a.lo_) < 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    }
    if (mpfr_sgn(a.hi_) < 0) {
        mpfr_set_zero(r.hi_, 1);
    } else {
        mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    }
    return r;
}

Interval Interval::abs(const Interval& a, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        if (mpfr_less_p(r.hi_, a.hi_)) mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
    }
    return r;
}

Interval Interval::atan2(const Interval& y, const Interval& x, mpfr_prec_t prec) {
    Interval r(prec);
    if (!y.is_finite() || !x.is_finite() || mpfr_sgn(y.lo_) <= 0) {
        // only the canonical case y > 0 is evaluated tightly; otherwise fall
        // back to the full range of the principal branch
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        mpfr_const_pi(r.lo_, MPFR_RNDU);
        mpfr_neg(r.lo_, r.lo_, MPFR_RNDD);
        return r;
    }
    // y > 0: no interior critical points, extrema sit on box corners
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    const mpfr_t* ys[2] = {&y.lo_, &y.hi_};
    const mpfr_t* xs[2] = {&x.lo_, &x.hi_};
    for (auto& yy : ys) {
        for (auto& xx : xs) {
            mpfr_atan2(t, *yy, *xx, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_atan2(t, *yy, *xx, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

namespace {

// Extrema of sin sit at (k + 1/2)*pi, of cos at k*pi; value there is +1 for
// even k, -1 for odd. Detection is conservative: candidates are computed with
// downward rounding, so a critical point can be counted in when it is just
// outside the interval (harmless widening) but never missed.
Interval trig_enclosure(const Interval& a, mpfr_prec_t prec, bool is_sin) {
    Interval r(prec);
    auto full_range = [&r] {
        mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
        mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
        return r;
    };
    if (!a.is_finite()) return full_range();

    mpfr_t w, pi;
    mpfr_init2(w, prec);
    mpfr_init2(pi, prec);
    mpfr_sub(w, a.hi(), a.lo(), MPFR_RNDU);
    mpfr_const_pi(pi, MPFR_RNDD);
    bool wide = mpfr_cmp(w, pi) >= 0;
    mpfr_clear(w);
    if (wide) {
        mpfr_clear(pi);
        return full_range();
    }

    mpfr_t t;
    mpfr_init2(t, prec);
    auto eval = [&](const mpfr_t x, mpfr_rnd_t rnd, mpfr_t out) {
        if (is_sin) {
            mpfr_sin(out, x, rnd);
        } else {
            mpfr_cos(out, x, rnd);
        }
    };
    eval(a.lo(), MPFR_RNDD, r.lo_mut());
    eval(a.hi(), MPFR_RNDD, t);
    if (mpfr_less_p(t, r.lo_mut())) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
    eval(a.lo(), MPFR_RNDU, r.hi_mut());
    eval(a.hi(), MPFR_RNDU, t);
    if (mpfr_greater_p(t, r.hi_mut())) mpfr_set(r.hi_mut(), t, MPFR_RNDU);

    // first critical point >= lo (approximately): k = ceil(lo/pi - offset)
    const double offset = is_sin ? 0.5 : 0.0;
    mpfr_t k, cand;
    mpfr_init2(k, prec);
    mpfr_init2(cand, prec);
    mpfr_div(t, a.lo(), pi, MPFR_RNDD);
    mpfr_sub_d(t, t, offset, MPFR_RNDD);
    mpfr_ceil(k, t);
    // width < pi means at most two candidates k, k+1 can touch the interval
    for (int j = 0; j < 2; ++j) {
        mpfr_add_d(cand, k, offset, MPFR_RNDD);
        mpfr_mul(cand, cand, pi, MPFR_RNDD);
        if (mpfr_cmp(cand, a.hi()) <= 0) {
            bool known_parity = mpfr_fits_slong_p(k, MPFR_RNDN) != 0;
            long kl = known_parity ? mpfr_get_si(k, MPFR_RNDN) : 0;
            if (!known_parity) {
                mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
                mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
            } else if (kl % 2 == 0) {
                mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
            } else {
                mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
            }
        }
        mpfr_add_si(k, k, 1, MPFR_RNDN);
    }
    mpfr_clear(t);
    mpfr_clear(k);
    mpfr_clear(cand);
    mpfr_clear(pi);
    return r;
}

}  // namespace

Interval Interval::sin(const Interval& a, mpfr_prec_t prec) { return trig_enclosure(a, prec, true); }

Interval Interval::cos(const Interval& a, mpfr_prec_t prec) { return trig_enclosure(a, prec, false); }

bool Interval::width_below_pow2(long log2_bound) const {
    if (!is_finite()) return false;
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    bool ok;
    if (mpfr_zero_p(w)) {
        ok = true;
    } else {
        ok = mpfr_get_exp(w) <= log2_bound;  // |w| < 2^exp
    }
    mpfr_clear(w);
    return ok;
}

long Interval::width_exponent() const {
    if (!is_finite()) return std::numeric_limits<long>::max();
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    long e;
    if (mpfr_zero_p(w)) {
        e = std::numeric_limits<long>::min();
    } else {
        e = static_cast<long>(mpfr_get_exp(w));
    }
    mpfr_clear(w);
    return e;
}

double Interval::midpoint_double() const {
    if (!is_finite()) return lo_double();
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

std::string Interval::midpoint_decimal(int digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, m);
    mpfr_clear(m);
    return std::string(buf);
}

std::string Interval::to_string() const {
    char buf[1024];
    mpfr_snprintf(buf, sizeof buf, "[%.20Re, %.20Re]", lo_, hi_);
    return std::string(buf);
}

}  // namespace opgeo
