#include "opgeo/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "opgeo/errors.hpp"

namespace opgeo {
namespace detail {

enum class Kind : uint8_t { Rat, Sum, Mul, Div, Sqrt, Pi, Atan2, Sin, Cos };

struct Term {
    Rational coeff;
    NodePtr atom;
};

struct ExprNode {
    Kind kind = Kind::Rat;
    uint64_t id = 0;
    size_t hash = 0;
    bool transcendental = false;
    Rational rat;             // Rat value, or the constant of a Sum
    std::vector<Term> terms;  // Sum only, sorted by atom id, no zero coeffs
    NodePtr a, b;             // operands of Mul/Div/Sqrt/Atan2/Sin/Cos

    // enclosure cache: best precision computed so far (engine-mutex guarded)
    mutable std::shared_ptr<const Interval> cache;
    mutable double approx = std::numeric_limits<double>::quiet_NaN();
    mutable bool approx_valid = false;
};

namespace {

size_t hash_mix(size_t h, size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

size_t structural_hash(Kind kind, const Rational& rat, const std::vector<Term>& terms, const NodePtr& a,
                       const NodePtr& b) {
    size_t h = static_cast<size_t>(kind) * 0x100000001b3ull;
    h = hash_mix(h, rat.hash());
    for (const auto& t : terms) {
        h = hash_mix(h, t.coeff.hash());
        h = hash_mix(h, static_cast<size_t>(t.atom->id));
    }
    if (a) h = hash_mix(h, static_cast<size_t>(a->id));
    if (b) h = hash_mix(h, static_cast<size_t>(b->id));
    return h;
}

bool structural_equal(const ExprNode& n, Kind kind, const Rational& rat, const std::vector<Term>& terms,
                      const NodePtr& a, const NodePtr& b) {
    if (n.kind != kind || n.a != a || n.b != b) return false;
    if (n.rat != rat) return false;
    if (n.terms.size() != terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (n.terms[i].atom != terms[i].atom || n.terms[i].coeff != terms[i].coeff) return false;
    }
    return true;
}

/// Hash-consing registry. All node construction funnels through intern().
class Engine {
public:
    static Engine& instance() {
        static Engine e;
        return e;
    }

    NodePtr intern(Kind kind, Rational rat, std::vector<Term> terms, NodePtr a, NodePtr b) {
        std::lock_guard<std::mutex> lock(mu_);
        size_t h = structural_hash(kind, rat, terms, a, b);
        auto range = table_.equal_range(h);
        for (auto it = range.first; it != range.second;) {
            if (auto sp = it->second.lock()) {
                if (structural_equal(*sp, kind, rat, terms, a, b)) return sp;
                ++it;
            } else {
                it = table_.erase(it);
            }
        }
        auto node = std::make_shared<ExprNode>();
        node->kind = kind;
        node->id = next_id_++;
        node->hash = h;
        node->rat = std::move(rat);
        node->terms = std::move(terms);
        node->a = std::move(a);
        node->b = std::move(b);
        node->transcendental = kind == Kind::Pi || kind == Kind::Atan2 || kind == Kind::Sin || kind == Kind::Cos;
        if (node->a && node->a->transcendental) node->transcendental = true;
        if (node->b && node->b->transcendental) node->transcendental = true;
        for (const auto& t : node->terms) {
            if (t.atom->transcendental) node->transcendental = true;
        }
        table_.emplace(h, node);
        return node;
    }

    std::shared_ptr<const Interval> cached_enclosure(const ExprNode* n, mpfr_prec_t prec) {
        std::lock_guard<std::mutex> lock(mu_);
        if (n->cache && n->cache->precision() >= prec) return n->cache;
        return nullptr;
    }

    void store_enclosure(const ExprNode* n, std::shared_ptr<const Interval> iv) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!n->cache || n->cache->precision() < iv->precision()) n->cache = std::move(iv);
    }

private:
    std::mutex mu_;
    std::unordered_multimap<size_t, std::weak_ptr<ExprNode>> table_;
    uint64_t next_id_ = 1;
};

NodePtr make_rat(Rational q) { return Engine::instance().intern(Kind::Rat, std::move(q), {}, nullptr, nullptr); }

const NodePtr& zero_node() {
    static NodePtr z = make_rat(Rational(0));
    return z;
}
const NodePtr& one_node() {
    static NodePtr o = make_rat(Rational(1));
    return o;
}
const NodePtr& pi_node() {
    static NodePtr p = Engine::instance().intern(Kind::Pi, Rational(0), {}, nullptr, nullptr);
    return p;
}

// ---- canonical constructors ------------------------------------------------

// view of any node as constant + sum of (coeff, atom) terms
struct SumView {
    Rational constant;
    std::vector<Term> terms;
};

SumView view_of(const NodePtr& n) {
    if (n->kind == Kind::Rat) return {n->rat, {}};
    if (n->kind == Kind::Sum) return {n->rat, n->terms};
    return {Rational(0), {Term{Rational(1), n}}};
}

NodePtr make_sum(Rational constant, std::vector<Term> terms) {
    std::erase_if(terms, [](const Term& t) { return t.coeff.is_zero(); });
    if (terms.empty()) return make_rat(std::move(constant));
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.atom->id < y.atom->id; });
    if (constant.is_zero() && terms.size() == 1 && terms[0].coeff.is_one()) return terms[0].atom;
    return Engine::instance().intern(Kind::Sum, std::move(constant), std::move(terms), nullptr, nullptr);
}

NodePtr add_nodes(const NodePtr& x, const NodePtr& y) {
    SumView vx = view_of(x);
    SumView vy = view_of(y);
    std::vector<Term> merged;
    merged.reserve(vx.terms.size() + vy.terms.size());
    size_t i = 0, j = 0;
    while (i < vx.terms.size() || j < vy.terms.size()) {
        if (j >= vy.terms.size() || (i < vx.terms.size() && vx.terms[i].atom->id < vy.terms[j].atom->id)) {
            merged.push_back(vx.terms[i++]);
        } else if (i >= vx.terms.size() || vy.terms[j].atom->id < vx.terms[i].atom->id) {
            merged.push_back(vy.terms[j++]);
        } else {
            Term t{vx.terms[i].coeff + vy.terms[j].coeff, vx.terms[i].atom};
            if (!t.coeff.is_zero()) merged.push_back(std::move(t));
            ++i;
            ++j;
        }
    }
    return make_sum(vx.constant + vy.constant, std::move(merged));
}

NodePtr scale_node(const NodePtr& x, const Rational& q) {
    if (q.is_zero()) return zero_node();
    if (q.is_one()) return x;
    SumView v = view_of(x);
    for (auto& t : v.terms) t.coeff *= q;
    return make_sum(v.constant * q, std::move(v.terms));
}

NodePtr neg_node(const NodePtr& x) { return scale_node(x, Rational(-1)); }

NodePtr sub_nodes(const NodePtr& x, const NodePtr& y) { return add_nodes(x, neg_node(y)); }

Cmp sign_of(const NodePtr& n, const CompareConfig& cfg);
NodePtr sqrt_node(const NodePtr& x);

// strips the rational factor off a single-term sum: q*core
std::pair<Rational, NodePtr> factor_of(const NodePtr& n) {
    if (n->kind == Kind::Sum && n->rat.is_zero() && n->terms.size() == 1) {
        return {n->terms[0].coeff, n->terms[0].atom};
    }
    return {Rational(1), n};
}

bool is_reciprocal_of(const NodePtr& d, const NodePtr& x) {
    return d->kind == Kind::Div && d->a == one_node() && d->b == x;
}

NodePtr mul_nodes(const NodePtr& x, const NodePtr& y) {
    if (x->kind == Kind::Rat) return scale_node(y, x->rat);
    if (y->kind == Kind::Rat) return scale_node(x, y->rat);
    auto [qx, cx] = factor_of(x);
    auto [qy, cy] = factor_of(y);
    Rational q = qx * qy;
    NodePtr core;
    if (cx->kind == Kind::Sqrt && cy->kind == Kind::Sqrt) {
        core = sqrt_node(mul_nodes(cx->a, cy->a));
    } else if (is_reciprocal_of(cx, cy) || is_reciprocal_of(cy, cx)) {
        core = one_node();
    } else if (cx->kind == Kind::Rat) {
        core = scale_node(cy, cx->rat);
    } else if (cy->kind == Kind::Rat) {
        core = scale_node(cx, cy->rat);
    } else {
        const NodePtr& lo = cx->id <= cy->id ? cx : cy;
        const NodePtr& hi = cx->id <= cy->id ? cy : cx;
        core = Engine::instance().intern(Kind::Mul, Rational(0), {}, lo, hi);
    }
    return scale_node(core, q);
}

NodePtr raw_reciprocal(const NodePtr& n) {
    if (n->kind == Kind::Rat) return make_rat(n->rat.inverse());
    return Engine::instance().intern(Kind::Div, Rational(0), {}, one_node(), n);
}

NodePtr reciprocal_node(const NodePtr& y) {
    // caller has established y != 0
    if (y->kind == Kind::Rat) return make_rat(y->rat.inverse());
    auto [qy, cy] = factor_of(y);
    if (!qy.is_one()) return scale_node(reciprocal_node(cy), qy.inverse());
    if (y->kind == Kind::Sqrt) {
        // operand is nonnegative and nonzero here, so is its reciprocal
        return sqrt_node(raw_reciprocal(y->a));
    }
    if (y->kind == Kind::Div && y->a == one_node()) return y->b;
    return raw_reciprocal(y);
}

NodePtr div_nodes(const NodePtr& x, const NodePtr& y, const CompareConfig& cfg) {
    if (y->kind == Kind::Rat) {
        if (y->rat.is_zero()) throw DomainError("division by zero");
        return scale_node(x, y->rat.inverse());
    }
    Cmp s = sign_of(y, cfg);
    if (s == Cmp::Equal) throw DomainError("division by zero");
    if (s == Cmp::Uncertain) throw PrecisionExhausted("division by a value whose sign is undecided");
    if (x->kind == Kind::Rat && x->rat.is_zero()) return zero_node();
    if (x == y) return one_node();
    return mul_nodes(x, reciprocal_node(y));
}

NodePtr sqrt_node_checked(const NodePtr& x, const CompareConfig& cfg) {
    Cmp s = sign_of(x, cfg);
    if (s == Cmp::Less) throw DomainError("sqrt of a negative value");
    if (s == Cmp::Uncertain) throw PrecisionExhausted("sqrt of a value whose sign is undecided");
    if (s == Cmp::Equal) return zero_node();
    return sqrt_node(x);
}

NodePtr sqrt_node(const NodePtr& x) {
    if (x->kind == Kind::Rat) {
        if (auto r = x->rat.exact_sqrt()) return make_rat(*r);
    }
    return Engine::instance().intern(Kind::Sqrt, Rational(0), {}, x, nullptr);
}

NodePtr half_pi_scaled(long num) {  // num * pi / 2
    return scale_node(pi_node(), Rational(num, 2));
}

NodePtr atan2_nodes(const NodePtr& y, const NodePtr& x, const CompareConfig& cfg) {
    Cmp sy = sign_of(y, cfg);
    if (sy == Cmp::Equal) {
        Cmp sx = sign_of(x, cfg);
        if (sx == Cmp::Greater) return zero_node();
        if (sx == Cmp::Less) return pi_node();
        if (sx == Cmp::Equal) throw DomainError("atan2(0, 0)");
        throw PrecisionExhausted("atan2: sign of x undecided");
    }
    if (sy == Cmp::Less) return neg_node(atan2_nodes(neg_node(y), x, cfg));
    if (sy == Cmp::Uncertain) {
        // cannot canonicalize; keep the raw node
        return Engine::instance().intern(Kind::Atan2, Rational(0), {}, y, x);
    }
    // y > 0 from here
    Cmp sx = sign_of(x, cfg);
    if (sx == Cmp::Equal) return half_pi_scaled(1);
    if (y == x) return scale_node(pi_node(), Rational(1, 4));
    if (y->kind == Kind::Rat && x->kind == Kind::Rat) {
        if (y->rat == x->rat) return scale_node(pi_node(), Rational(1, 4));
        if (y->rat == -x->rat) return scale_node(pi_node(), Rational(3, 4));
    }
    return Engine::instance().intern(Kind::Atan2, Rational(0), {}, y, x);
}

// sin/cos of exact rational multiples of pi with denominator dividing 12
std::optional<NodePtr> trig_table(const Rational& multiple, bool is_sin) {
    Rational twelve = multiple * Rational(12);
    if (!twelve.is_integer()) return std::nullopt;
    auto k_opt = (twelve - (twelve / Rational(24)).floor() * Rational(24)).to_long();
    if (!k_opt) return std::nullopt;
    long k = *k_opt;  // position in [0, 24) twelfths of pi
    if (!is_sin) k = (k + 6) % 24;  // cos t = sin(t + pi/2)
    long s = k <= 12 ? 1 : -1;      // sin sign in upper/lower half turn
    long r = k % 12;
    if (k > 12) r = k - 12;
    // sin of r twelfths of pi, r in [0, 12]
    if (r > 6) r = 12 - r;
    NodePtr mag;
    switch (r) {
        case 0: return zero_node();
        case 2: mag = make_rat(Rational(1, 2)); break;                    // pi/6
        case 3: mag = sqrt_node(make_rat(Rational(1, 2))); break;         // pi/4
        case 4: mag = scale_node(sqrt_node(make_rat(Rational(3))), Rational(1, 2)); break;  // pi/3
        case 6: mag = one_node(); break;                                  // pi/2
        default: return std::nullopt;
    }
    return s == 1 ? mag : neg_node(mag);
}

NodePtr sin_nodes(const NodePtr& x) {
    if (x->kind == Kind::Rat && x->rat.is_zero()) return zero_node();
    if (x == pi_node()) return zero_node();
    auto [q, core] = factor_of(x);
    if (core == pi_node()) {
        if (auto v = trig_table(q, true)) return *v;
    }
    return Engine::instance().intern(Kind::Sin, Rational(0), {}, x, nullptr);
}

NodePtr cos_nodes(const NodePtr& x) {
    if (x->kind == Kind::Rat && x->rat.is_zero()) return one_node();
    if (x == pi_node()) return make_rat(Rational(-1));
    auto [q, core] = factor_of(x);
    if (core == pi_node()) {
        if (auto v = trig_table(q, false)) return *v;
    }
    return Engine::instance().intern(Kind::Cos, Rational(0), {}, x, nullptr);
}

// ---- enclosure evaluation ---------------------------------------------------

Interval eval_node(const NodePtr& n, mpfr_prec_t prec) {
    if (auto hit = Engine::instance().cached_enclosure(n.get(), prec)) return *hit;
    Interval out(prec);
    switch (n->kind) {
        case Kind::Rat:
            out = Interval::from_rational(n->rat, prec);
            break;
        case Kind::Sum: {
            out = Interval::from_rational(n->rat, prec);
            for (const auto& t : n->terms) {
                Interval atom = eval_node(t.atom, prec);
                out.add_scaled(atom, t.coeff);
            }
            break;
        }
        case Kind::Mul:
            out = Interval::mul(eval_node(n->a, prec), eval_node(n->b, prec), prec);
            break;
        case Kind::Div:
            out = Interval::div(eval_node(n->a, prec), eval_node(n->b, prec), prec);
            break;
        case Kind::Sqrt:
            out = Interval::sqrt(eval_node(n->a, prec), prec);
            break;
        case Kind::Pi:
            out = Interval::pi(prec);
            break;
        case Kind::Atan2:
            out = Interval::atan2(eval_node(n->a, prec), eval_node(n->b, prec), prec);
            break;
        case Kind::Sin:
            out = Interval::sin(eval_node(n->a, prec), prec);
            break;
        case Kind::Cos:
            out = Interval::cos(eval_node(n->a, prec), prec);
            break;
    }
    auto shared = std::make_shared<Interval>(out);
    Engine::instance().store_enclosure(n.get(), shared);
    return out;
}

// ---- separation bound (conjugate bounds a la BFMSS) -------------------------

struct ConjBound {
    double log_u = 0.0;  // log2 upper bound on numerator conjugates, >= 0
    double log_l = 0.0;  // log2 upper bound on denominator conjugates, >= 0
};

double log2_add(double x, double y) {
    double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log2(1.0 + std::exp2(lo - hi)) + 1e-9;
}

ConjBound clamp_bound(double u, double l) { return {std::max(u, 0.0), std::max(l, 0.0)}; }

ConjBound conj_bound(const NodePtr& n, std::unordered_map<const ExprNode*, ConjBound>& memo,
                     std::unordered_set<const ExprNode*>& sqrt_nodes) {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    ConjBound out;
    switch (n->kind) {
        case Kind::Rat:
            out = clamp_bound(n->rat.log2_num_ceil(), n->rat.log2_den_ceil());
            break;
        case Kind::Sum: {
            out = clamp_bound(n->rat.log2_num_ceil(), n->rat.log2_den_ceil());
            for (const auto& t : n->terms) {
                ConjBound a = conj_bound(t.atom, memo, sqrt_nodes);
                ConjBound term = clamp_bound(a.log_u + t.coeff.log2_num_ceil(), a.log_l + t.coeff.log2_den_ceil());
                out = clamp_bound(log2_add(out.log_u + term.log_l, term.log_u + out.log_l), out.log_l + term.log_l);
            }
            break;
        }
        case Kind::Mul: {
            ConjBound a = conj_bound(n->a, memo, sqrt_nodes);
            ConjBound b = conj_bound(n->b, memo, sqrt_nodes);
            out = clamp_bound(a.log_u + b.log_u, a.log_l + b.log_l);
            break;
        }
        case Kind::Div: {
            ConjBound a = conj_bound(n->a, memo, sqrt_nodes);
            ConjBound b = conj_bound(n->b, memo, sqrt_nodes);
            out = clamp_bound(a.log_u + b.log_l, a.log_l + b.log_u);
            break;
        }
        case Kind::Sqrt: {
            sqrt_nodes.insert(n.get());
            ConjBound a = conj_bound(n->a, memo, sqrt_nodes);
            double root = (a.log_u + a.log_l) / 2.0 + 0.5;
            if (a.log_u >= a.log_l) {
                out = clamp_bound(root, a.log_l);
            } else {
                out = clamp_bound(a.log_u, root);
            }
            break;
        }
        default:
            throw PrecisionExhausted("separation bound requested for a transcendental expression");
    }
    memo.emplace(n.get(), out);
    return out;
}

// bits such that |value| >= 2^-bits whenever value != 0
long separation_bits(const NodePtr& n) {
    std::unordered_map<const ExprNode*, ConjBound> memo;
    std::unordered_set<const ExprNode*> sqrt_nodes;
    ConjBound b = conj_bound(n, memo, sqrt_nodes);
    size_t s = sqrt_nodes.size();
    if (s > 48) throw PrecisionExhausted("radical tower too deep for the separation bound");
    double degree = std::exp2(static_cast<double>(s));
    double bits = (degree - 1.0) * b.log_u + b.log_l;
    if (bits > static_cast<double>(1L << 23)) {
        throw PrecisionExhausted("separation bound beyond the supported precision ceiling");
    }
    return static_cast<long>(std::ceil(bits)) + 2;
}

// ---- comparison -------------------------------------------------------------

Cmp sign_of(const NodePtr& n, const CompareConfig& cfg) {
    if (n->kind == Kind::Rat) {
        int s = n->rat.sign();
        return s < 0 ? Cmp::Less : s > 0 ? Cmp::Greater : Cmp::Equal;
    }
    mpfr_prec_t prec = 64;
    mpfr_prec_t ladder_cap = std::max<mpfr_prec_t>(64, cfg.max_precision);
    // with the separation bound available, long ladder climbs are wasted work
    if (cfg.symbolic && !n->transcendental) ladder_cap = std::min<mpfr_prec_t>(ladder_cap, 256);
    while (true) {
        Interval iv = eval_node(n, prec);
        if (iv.strictly_positive()) return Cmp::Greater;
        if (iv.strictly_negative()) return Cmp::Less;
        if (iv.is_point()) return Cmp::Equal;  // exact zero enclosure
        if (prec >= ladder_cap) break;
        prec = std::min<mpfr_prec_t>(prec * 2, ladder_cap);
    }
    if (cfg.symbolic && !n->transcendental) {
        long bits = separation_bits(n);
        prec = std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(bits) + 64);
        while (true) {
            Interval iv = eval_node(n, prec);
            if (iv.strictly_positive()) return Cmp::Greater;
            if (iv.strictly_negative()) return Cmp::Less;
            if (iv.width_below_pow2(-bits)) return Cmp::Equal;
            if (prec > (1L << 24)) throw PrecisionExhausted("separation refinement exceeded the hard ceiling");
            prec *= 2;
        }
    }
    return Cmp::Uncertain;
}

}  // namespace
}  // namespace detail

using detail::NodePtr;

Scalar::Scalar() : node_(detail::zero_node()) {}
Scalar::Scalar(long n) : node_(detail::make_rat(Rational(n))) {}
Scalar::Scalar(long num, long den) : node_(detail::make_rat(Rational(num, den))) {}
Scalar::Scalar(Rational q) : node_(detail::make_rat(std::move(q))) {}
Scalar::Scalar(NodePtr n) : node_(std::move(n)) {}

Scalar Scalar::pi() { return Scalar(detail::pi_node()); }

Scalar Scalar::sqrt(const Scalar& x) { return Scalar(detail::sqrt_node_checked(x.node_, default_compare_config())); }

Scalar Scalar::atan2(const Scalar& y, const Scalar& x) {
    return Scalar(detail::atan2_nodes(y.node_, x.node_, default_compare_config()));
}

Scalar Scalar::sin(const Scalar& x) { return Scalar(detail::sin_nodes(x.node_)); }
Scalar Scalar::cos(const Scalar& x) { return Scalar(detail::cos_nodes(x.node_)); }

Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(detail::add_nodes(a.node_, b.node_)); }
Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(detail::sub_nodes(a.node_, b.node_)); }
Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(detail::mul_nodes(a.node_, b.node_)); }
Scalar operator/(const Scalar& a, const Scalar& b) {
    return Scalar(detail::div_nodes(a.node_, b.node_, default_compare_config()));
}
Scalar Scalar::operator-() const { return Scalar(detail::neg_node(node_)); }

bool Scalar::is_rational() const { return node_->kind == detail::Kind::Rat; }

std::optional<Rational> Scalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return node_->rat;
}

bool Scalar::is_algebraic() const { return !node_->transcendental; }

uint64_t Scalar::node_id() const { return node_->id; }

Interval Scalar::enclosure(mpfr_prec_t prec) const { return detail::eval_node(node_, prec); }

double Scalar::approx() const {
    if (!node_->approx_valid) {
        node_->approx = enclosure(64).midpoint_double();
        node_->approx_valid = true;
    }
    return node_->approx;
}

std::string Scalar::decimal(int digits) const {
    mpfr_prec_t prec = std::max(96, digits * 4 + 32);
    return enclosure(prec).midpoint_decimal(digits);
}

CompareConfig& default_compare_config() {
    static CompareConfig cfg;
    return cfg;
}

Cmp compare(const Scalar& a, const Scalar& b, const CompareConfig& cfg) {
    if (a.same_node(b)) return Cmp::Equal;
    return detail::sign_of(detail::sub_nodes(a.node_, b.node_), cfg);
}

Scalar scalar_sum(const std::vector<Scalar>& terms) {
    Rational constant(0);
    std::vector<detail::Term> collected;
    collected.reserve(terms.size());
    for (const Scalar& t : terms) {
        detail::SumView v = detail::view_of(t.node_);
        constant += v.constant;
        for (auto& term : v.terms) collected.push_back(std::move(term));
    }
    std::sort(collected.begin(), collected.end(),
              [](const detail::Term& x, const detail::Term& y) { return x.atom->id < y.atom->id; });
    std::vector<detail::Term> merged;
    merged.reserve(collected.size());
    for (auto& term : collected) {
        if (!merged.empty() && merged.back().atom == term.atom) {
            merged.back().coeff += term.coeff;
        } else {
            merged.push_back(std::move(term));
        }
    }
    return Scalar(detail::make_sum(std::move(constant), std::move(merged)));
}

Cmp sign(const Scalar& a, const CompareConfig& cfg) { return compare(a, Scalar(), cfg); }

Scalar abs(const Scalar& x, const CompareConfig& cfg) {
    switch (sign(x, cfg)) {
        case Cmp::Less: return -x;
        case Cmp::Equal: return Scalar();
        case Cmp::Greater: return x;
        default: throw PrecisionExhausted("abs of a value whose sign is undecided");
    }
}

std::optional<Rational> scalar_floor(const Scalar& x, const CompareConfig& cfg) {
    if (auto q = x.as_rational()) return q->floor();
    mpfr_prec_t prec = 64;
    mpfr_prec_t cap = std::max<mpfr_prec_t>(256, cfg.max_precision);
    while (true) {
        Interval iv = x.enclosure(prec);
        if (iv.is_finite()) {
            mpfr_t f;
            mpfr_init2(f, prec);
            mpfr_floor(f, iv.lo());
            double flo = mpfr_get_d(f, MPFR_RNDN);
            mpfr_floor(f, iv.hi());
            double fhi = mpfr_get_d(f, MPFR_RNDN);
            mpfr_clear(f);
            if (flo == fhi && std::abs(flo) < 9e15) {
                return Rational(static_cast<long>(flo));
            }
            if (fhi == flo + 1 && std::abs(fhi) < 9e15) {
                // single integer boundary inside the enclosure: settle which
                // side x falls on (or whether it is the boundary exactly)
                Rational k(static_cast<long>(fhi));
                Cmp c = compare(x, Scalar(k), cfg);
                if (c == Cmp::Equal || c == Cmp::Greater) return k;
                if (c == Cmp::Less) return k - Rational(1);
                return std::nullopt;  // undecidable under cfg
            }
        }
        if (prec >= cap) return std::nullopt;
        prec *= 2;
    }
}

std::optional<Rational> scalar_round(const Scalar& x, const CompareConfig& cfg) {
    return scalar_floor(x + Scalar(1, 2), cfg);
}

Tri enclosure_within(const Scalar& x, const Rational& bound, unsigned max_precision) {
    Interval b = Interval::from_rational(bound, 128);
    mpfr_prec_t prec = 64;
    while (true) {
        Interval iv = x.enclosure(prec);
        if (iv.is_finite()) {
            Interval mag = Interval::abs(iv, prec);
            if (mpfr_cmp(mag.hi(), b.lo()) < 0) return Tri::True;
            if (mpfr_cmp(mag.lo(), b.hi()) > 0) return Tri::False;
        }
        if (prec >= static_cast<mpfr_prec_t>(max_precision)) return Tri::Uncertain;
        prec *= 2;
    }
}

// ---- serialization ----------------------------------------------------------

namespace {

void print_node(const NodePtr& n, std::string& out) {
    using detail::Kind;
    switch (n->kind) {
        case Kind::Rat:
            if (n->rat.sign() < 0) {
                out += "(" + n->rat.to_string() + ")";
            } else {
                out += n->rat.to_string();
            }
            break;
        case Kind::Sum: {
            out += "(";
            bool first = true;
            if (!n->rat.is_zero() || n->terms.empty()) {
                out += n->rat.to_string();
                first = false;
            }
            for (const auto& t : n->terms) {
                if (!first) out += " + ";
                first = false;
                if (!t.coeff.is_one()) {
                    out += t.coeff.to_string();
                    out += "*";
                }
                print_node(t.atom, out);
            }
            out += ")";
            break;
        }
        case Kind::Mul:
            out += "(";
            print_node(n->a, out);
            out += "*";
            print_node(n->b, out);
            out += ")";
            break;
        case Kind::Div:
            out += "(";
            print_node(n->a, out);
            out += "/";
            print_node(n->b, out);
            out += ")";
            break;
        case Kind::Sqrt:
            out += "sqrt(";
            print_node(n->a, out);
            out += ")";
            break;
        case Kind::Pi:
            out += "pi";
            break;
        case Kind::Atan2:
            out += "atan2(";
            print_node(n->a, out);
            out += ",";
            print_node(n->b, out);
            out += ")";
            break;
        case Kind::Sin:
            out += "sin(";
            print_node(n->a, out);
            out += ")";
            break;
        case Kind::Cos:
            out += "cos(";
            print_node(n->a, out);
            out += ")";
            break;
    }
}

}  // namespace

std::string Scalar::to_string() const {
    std::string out;
    print_node(node_, out);
    return out;
}

// ---- expression parser --------------------------------------------------

class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : text_(text) {}

    std::optional<Scalar> run() {
        try {
            Scalar v = expression();
            skip_ws();
            if (pos_ != text_.size()) return std::nullopt;
            return v;
        } catch (const Error&) {
            return std::nullopt;
        } catch (const ParseFail&) {
            return std::nullopt;
        }
    }

private:
    struct ParseFail {};

    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expression() {
        Scalar v = term();
        while (true) {
            if (eat('+')) {
                v = v + term();
            } else if (eat('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (true) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('(')) {
            Scalar v = expression();
            if (!eat(')')) throw ParseFail{};
            return v;
        }
        if (pos_ >= text_.size()) throw ParseFail{};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        throw ParseFail{};
    }

    Scalar number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        auto q = Rational::parse(text_.substr(start, pos_ - start));
        if (!q) throw ParseFail{};
        return Scalar(*q);
    }

    Scalar name() {
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        std::string id = text_.substr(start, pos_ - start);
        if (id == "pi") return Scalar::pi();
        if (id == "sqrt") return Scalar::sqrt(single_arg());
        if (id == "sin") return Scalar::sin(single_arg());
        if (id == "cos") return Scalar::cos(single_arg());
        if (id == "atan2") {
            if (!eat('(')) throw ParseFail{};
            Scalar y = expression();
            if (!eat(',')) throw ParseFail{};
            Scalar x = expression();
            if (!eat(')')) throw ParseFail{};
            return Scalar::atan2(y, x);
        }
        throw ParseFail{};
    }

    Scalar single_arg() {
        if (!eat('(')) throw ParseFail{};
        Scalar v = expression();
        if (!eat(')')) throw ParseFail{};
        return v;
    }
};

std::optional<Scalar> Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

}  // namespace opgeo
