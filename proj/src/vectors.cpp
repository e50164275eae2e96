#include "opgeo/vectors.hpp"

#include "opgeo/coords.hpp"
#include "opgeo/errors.hpp"
#include "opgeo/straightedge.hpp"

namespace opgeo {

bool VectorClass::is_zero() const { return coords_all_zero(delta_); }

DistanceValue VectorClass::norm() const { return distance_between_coords(Coords(delta_.size(), Scalar()), delta_); }

namespace {

void check_same_frame(const Frame& frame, uint32_t tag) {
    if (frame.tag() != tag) throw FrameMismatch("vector belongs to a different frame of reference");
}

void check_compatible(const VectorClass& a, const VectorClass& b) {
    if (a.frame_tag() != b.frame_tag()) throw FrameMismatch("vectors from different frames of reference");
}

}  // namespace

OrderedPair transport(Frame& frame, const OrderedPair& p, PointId new_origin) {
    frame.check_point(p.origin);
    frame.check_point(p.end);
    frame.check_point(new_origin);
    Coords delta = coords_sub(frame.coords(p.end), frame.coords(p.origin));
    PointId end = frame.mark_point(coords_add(frame.coords(new_origin), delta));
    return OrderedPair{new_origin, end};
}

Tri equivalent(Frame& frame, const OrderedPair& p, const OrderedPair& q) {
    OrderedPair moved = transport(frame, p, q.origin);
    return tri_of(moved.end == q.end);
}

VectorClass vector_between(const Frame& frame, PointId a, PointId b) {
    frame.check_point(a);
    frame.check_point(b);
    return VectorClass(frame.tag(), coords_sub(frame.coords(b), frame.coords(a)));
}

VectorClass class_of(const Frame& frame, const OrderedPair& p) {
    return vector_between(frame, p.origin, p.end);
}

VectorClass vector_from_delta(const Frame& frame, Coords delta) {
    if (static_cast<int>(delta.size()) != frame.dimension()) {
        throw DimensionMismatch("vector component count does not match the frame dimension");
    }
    return VectorClass(frame.tag(), std::move(delta));
}

Tri vec_equal(const VectorClass& a, const VectorClass& b, const CompareConfig& cfg) {
    check_compatible(a, b);
    Tri acc = Tri::True;
    for (int i = 0; i < a.dimension(); ++i) {
        Cmp c = compare(a.delta()[i], b.delta()[i], cfg);
        if (c == Cmp::Uncertain) {
            acc = tri_and(acc, Tri::Uncertain);
        } else if (c != Cmp::Equal) {
            return Tri::False;
        }
    }
    return acc;
}

VectorClass vec_add(const VectorClass& a, const VectorClass& b) {
    check_compatible(a, b);
    return VectorClass(a.frame_tag(), coords_add(a.delta(), b.delta()));
}

VectorClass vec_scale(const Scalar& factor, const VectorClass& a) {
    return VectorClass(a.frame_tag(), coords_scale(a.delta(), factor));
}

PointId point_plus_vector(Frame& frame, PointId a, const VectorClass& v) {
    frame.check_point(a);
    check_same_frame(frame, v.frame_tag());
    return frame.mark_point(coords_add(frame.coords(a), v.delta()));
}

OrderedPair representative(Frame& frame, const VectorClass& v) {
    check_same_frame(frame, v.frame_tag());
    PointId base = frame.base_point();
    return OrderedPair{base, frame.mark_point(coords_add(frame.coords(base), v.delta()))};
}

PointId sum_by_construction(Frame& frame, const VectorClass& a, const VectorClass& b, PointId s1) {
    check_compatible(a, b);
    check_same_frame(frame, a.frame_tag());
    frame.check_point(s1);
    // transport both to s1, then slide each along the other's support
    OrderedPair pa = transport(frame, representative(frame, a), s1);
    OrderedPair pb = transport(frame, representative(frame, b), s1);
    OrderedPair slid_b = transport(frame, pb, pa.end);
    OrderedPair slid_a = transport(frame, pa, pb.end);
    if (!(slid_b.end == slid_a.end)) throw Error("vector sum end points failed to meet");
    return slid_b.end;
}

VectorClass nat_scale_by_compass(Frame& frame, unsigned long n, const VectorClass& a) {
    check_same_frame(frame, a.frame_tag());
    PointId start = frame.base_point();
    PointId cursor = start;
    for (unsigned long i = 0; i < n; ++i) {
        cursor = frame.mark_point(coords_add(frame.coords(cursor), a.delta()));
    }
    return vector_between(frame, start, cursor);
}

namespace {

// auxiliary compass direction off the support line of `a`
Coords auxiliary_direction(const VectorClass& a) {
    const Coords& d = a.delta();
    if (d.size() == 2) return Coords{-d[1], d[0]};
    // 3D: cross with the coordinate axis least aligned with d
    for (int axis = 0; axis < 3; ++axis) {
        Coords e(3, Scalar());
        e[axis] = Scalar(1);
        Coords w = cross3(d, e);
        if (!coords_all_zero(w)) return w;
    }
    throw DegenerateInput("zero vector has no support line");
}

// the fractional intercept construction proper, 0 < m < n
VectorClass intercept_fraction(Frame& frame, unsigned long m, unsigned long n, const VectorClass& a,
                               PointId a0) {
    Coords w = auxiliary_direction(a);
    PointId a1 = frame.mark_point(coords_add(frame.coords(a0), a.delta()));
    // equal compass marks B_1 .. B_n along the auxiliary ray
    std::vector<PointId> b(n + 1);
    b[0] = a0;
    for (unsigned long i = 1; i <= n; ++i) {
        b[i] = frame.mark_point(coords_add(frame.coords(b[i - 1]), w));
    }
    // segment B_n -> A_1 and its parallel through B_m
    Line support = line(frame, a0, a1);
    Line traced = parallel_through(frame, b[m], line(frame, b[n], a1));
    auto hit = intersect_lines(frame, traced, support);
    if (!hit) throw Error("intercept construction: parallel failed to meet the support line");
    return vector_between(frame, a0, *hit);
}

}  // namespace

VectorClass intercept_scale_construction(Frame& frame, const Rational& ratio, const VectorClass& a) {
    check_same_frame(frame, a.frame_tag());
    if (a.is_zero()) return vec_scale(Scalar(0), a);
    bool negative = ratio.sign() < 0;
    Rational q = ratio.abs();
    Rational whole = q.floor();
    Rational frac = q - whole;
    auto whole_l = whole.to_long();
    if (!whole_l) throw DomainError("intercept construction: whole part out of range");

    PointId a0 = frame.base_point();
    VectorClass result = nat_scale_by_compass(frame, static_cast<unsigned long>(*whole_l), a);
    if (!frac.is_zero()) {
        // frac = m/n in lowest terms with m < n, chained after the whole steps
        mpq_srcptr raw = frac.raw();
        if (!mpz_fits_slong_p(mpq_numref(raw)) || !mpz_fits_slong_p(mpq_denref(raw))) {
            throw DomainError("intercept construction: fraction out of range");
        }
        auto m = static_cast<unsigned long>(mpz_get_si(mpq_numref(raw)));
        auto n = static_cast<unsigned long>(mpz_get_si(mpq_denref(raw)));
        PointId chain_start = point_plus_vector(frame, a0, result);
        VectorClass part = intercept_fraction(frame, m, n, a, chain_start);
        result = vec_add(result, part);
    }
    return negative ? vec_scale(Scalar(-1), result) : result;
}

std::vector<ApproximationStep> rational_approximation_trace(Frame& frame, const Scalar& factor,
                                                            const VectorClass& a, const Scalar& tol) {
    if (sign(tol) != Cmp::Greater) throw DomainError("tolerance must be positive");
    if (!factor.is_algebraic()) throw DomainError("approximation trace needs an algebraic factor");
    std::vector<ApproximationStep> steps;
    Scalar norm_a = a.norm().magnitude();

    // continued-fraction state
    Scalar x = factor;
    Rational h1(1), h2(0);  // convergent numerators
    Rational k1(0), k2(1);  // convergent denominators
    for (int depth = 0; depth < 64; ++depth) {
        auto a_i = scalar_floor(x);
        if (!a_i) throw PrecisionExhausted("continued fraction step undecidable");
        Rational h = *a_i * h1 + h2;
        Rational k = *a_i * k1 + k2;
        Rational conv = h / k;
        VectorClass built = intercept_scale_construction(frame, conv, a);
        steps.push_back({conv, built});
        Scalar err = abs(Scalar(conv) - factor) * norm_a;
        if (compare(err, tol) == Cmp::Less) break;
        Scalar rem = x - Scalar(*a_i);
        if (sign(rem) == Cmp::Equal) break;  // factor is rational, convergent exact
        x = Scalar(1) / rem;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    return steps;
}

}  // namespace opgeo
