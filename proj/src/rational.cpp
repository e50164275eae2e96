#include "opgeo/rational.hpp"

#include <cassert>
#include <cmath>
#include <ostream>

#include "opgeo/errors.hpp"

namespace opgeo {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        // decimal literal: digits '.' digits, optional leading sign
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || dot == 0) return std::nullopt;
        Rational r;
        if (mpq_set_str(r.q_, digits.c_str(), 10) != 0) return std::nullopt;
        mpz_t scale;
        mpz_init(scale);
        mpz_ui_pow_ui(scale, 10, frac_len);
        mpz_set(mpq_denref(r.q_), scale);
        mpz_clear(scale);
        mpq_canonicalize(r.q_);
        return r;
    }
    Rational r;
    if (mpq_set_str(r.q_, text.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(r.q_)) == 0) return std::nullopt;
    mpq_canonicalize(r.q_);
    return r;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(mpq_numref(q_)) && mpz_perfect_square_p(mpq_denref(q_))) {
        Rational r;
        mpz_sqrt(mpq_numref(r.q_), mpq_numref(q_));
        mpz_sqrt(mpq_denref(r.q_), mpq_denref(q_));
        mpq_canonicalize(r.q_);
        return r;
    }
    return std::nullopt;
}

Rational Rational::floor() const {
    Rational r;
    mpz_fdiv_q(mpq_numref(r.q_), mpq_numref(q_), mpq_denref(q_));
    mpz_set_ui(mpq_denref(r.q_), 1);
    return r;
}

Rational Rational::round_nearest() const {
    // floor(x + 1/2) for x >= 0, mirrored for x < 0 (ties away from zero)
    Rational half(1, 2);
    if (sign() >= 0) return (*this + half).floor();
    return -((-*this + half).floor());
}

std::optional<long> Rational::to_long() const {
    if (!is_integer()) return std::nullopt;
    if (!mpz_fits_slong_p(mpq_numref(q_))) return std::nullopt;
    return mpz_get_si(mpq_numref(q_));
}

double Rational::log2_num_ceil() const {
    if (mpz_sgn(mpq_numref(q_)) == 0) return 0.0;
    // sizeinbase(|n|, 2) is ceil(log2(|n|+1)) for nonzero n, so always an upper bound
    return static_cast<double>(mpz_sizeinbase(mpq_numref(q_), 2));
}

double Rational::log2_den_ceil() const {
    return static_cast<double>(mpz_sizeinbase(mpq_denref(q_), 2));
}

double Rational::log2_abs_ceil() const {
    if (is_zero()) return 0.0;
    return log2_num_ceil();  // ignoring the denominator only enlarges the bound
}

std::string Rational::to_string() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

size_t Rational::hash() const {
    // cheap but adequate: combine limb residues of numerator and denominator
    size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](const mpz_t z) {
        h ^= static_cast<size_t>(mpz_fdiv_ui(z, 0xfffffffbu)) + 0x9e3779b9u + (h << 6) + (h >> 2);
        h ^= static_cast<size_t>(mpz_sgn(z) + 2) * 0x100000001b3ull;
    };
    mix(mpq_numref(q_));
    mix(mpq_denref(q_));
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace opgeo
