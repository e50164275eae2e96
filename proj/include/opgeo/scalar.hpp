#pragma once

#include <cstdint>
#include <memory>
#include <vector>
#include <optional>
#include <string>

#include "opgeo/interval.hpp"
#include "opgeo/rational.hpp"
#include "opgeo/tri.hpp"

namespace opgeo {

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
}  // namespace detail

/// Knobs for the comparison engine.
///
/// max_precision caps the enclosure-refinement ladder. Comparisons of
/// square-root expressions never end Uncertain: when refinement alone does
/// not separate them the engine decides equality through a root separation
/// bound, which may use precision beyond max_precision (that is the
/// termination guarantee, not a heuristic). Comparisons involving pi,
/// atan2, sin or cos have no separation bound and may return Uncertain at
/// equality once max_precision is exhausted. symbolic=false switches the
/// separation-bound decision off (interval-only mode).
struct CompareConfig {
    unsigned max_precision = 1024;
    bool symbolic = true;
};

CompareConfig& default_compare_config();

/// Exact number from the field generated by the rationals under
/// +, -, *, /, sqrt — the coordinate domain of compass-and-straightedge
/// constructions — extended with symbolic pi/atan2/sin/cos whose values are
/// tracked by arbitrary-precision enclosures only.
///
/// Scalars are immutable shared handles into a hash-consed expression DAG:
/// structurally equal expressions are the same node, and linear
/// combinations are kept in a canonical collected form so that sums and
/// differences cancel structurally whenever possible.
class Scalar {
public:
    Scalar();  // zero
    Scalar(long n);  // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    Scalar(Rational q);  // NOLINT(google-explicit-constructor)

    static Scalar pi();
    static Scalar sqrt(const Scalar& x);
    /// atan2 in the principal branch (-pi, pi]; rejects (0, 0).
    static Scalar atan2(const Scalar& y, const Scalar& x);
    static Scalar sin(const Scalar& x);
    static Scalar cos(const Scalar& x);

    /// Parses "3", "-3/5", "9.7", "sqrt(2)", "pi", "(1+sqrt(5))/2",
    /// "atan2(1,2)", "sin(pi)" with the usual +-*/ precedence.
    static std::optional<Scalar> parse(const std::string& text);

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    /// True when the expression contains no pi/atan2/sin/cos node, i.e.
    /// comparisons against it are always exactly decidable.
    bool is_algebraic() const;

    /// Same DAG node (implies equal value; the converse holds only up to
    /// the canonicalization rules).
    bool same_node(const Scalar& o) const { return node_ == o.node_; }
    uint64_t node_id() const;

    /// Outward-rounded enclosure of the exact value.
    Interval enclosure(mpfr_prec_t prec) const;
    /// Cached double approximation (midpoint of a 64-bit enclosure).
    double approx() const;

    /// Exact, parseable expression text.
    std::string to_string() const;
    /// Deterministic fixed-point decimal of the midpoint.
    std::string decimal(int digits) const;

private:
    explicit Scalar(detail::NodePtr n);
    detail::NodePtr node_;

    friend Cmp compare(const Scalar&, const Scalar&, const CompareConfig&);
    friend Tri enclosure_within(const Scalar&, const Rational&, unsigned);
    friend Scalar scalar_sum(const std::vector<Scalar>&);
    friend class ScalarParser;
};

/// Exact three-way comparison (see CompareConfig for the Uncertain rules).
Cmp compare(const Scalar& a, const Scalar& b, const CompareConfig& cfg = default_compare_config());

/// Sum of many terms, built in one pass (use instead of repeated += for
/// long accumulations).
Scalar scalar_sum(const std::vector<Scalar>& terms);
Cmp sign(const Scalar& a, const CompareConfig& cfg = default_compare_config());

/// |x|; throws PrecisionExhausted if the sign cannot be decided.
Scalar abs(const Scalar& x, const CompareConfig& cfg = default_compare_config());

/// Exact floor, when decidable under cfg.
std::optional<Rational> scalar_floor(const Scalar& x, const CompareConfig& cfg = default_compare_config());
/// Nearest integer, ties round up; nullopt when not decidable.
std::optional<Rational> scalar_round(const Scalar& x, const CompareConfig& cfg = default_compare_config());

/// Certifies |x| < bound by enclosure refinement up to max_precision bits.
/// Returns True/False when certified either way, Uncertain at the ceiling.
Tri enclosure_within(const Scalar& x, const Rational& bound, unsigned max_precision = 4096);

}  // namespace opgeo
