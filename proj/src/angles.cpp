#include "opgeo/angles.hpp"

#include "opgeo/coords.hpp"
#include "opgeo/errors.hpp"

namespace opgeo {

namespace {

Scalar two_pi() { return Scalar(2) * Scalar::pi(); }

// planar components of a vector: (x, y), rejecting out-of-plane 3D vectors
std::pair<Scalar, Scalar> planar(const VectorClass& v) {
    const Coords& d = v.delta();
    if (d.size() == 3 && sign(d[2]) != Cmp::Equal) {
        throw DomainError("angle constructions live in the frame plane (z = 0)");
    }
    return {d[0], d[1]};
}

struct Opening {
    Scalar value;  // principal ccw value in [0, 2pi)
    Scalar cos_v;
    Scalar sin_v;
};

// principal counterclockwise opening from a to b with exact trig data
Opening ccw_opening(const VectorClass& a, const VectorClass& b) {
    if (a.is_zero() || b.is_zero()) throw DegenerateInput("angles need nonzero vectors");
    auto [ax, ay] = planar(a);
    auto [bx, by] = planar(b);
    Scalar cross = ax * by - ay * bx;
    Scalar dotp = ax * bx + ay * by;
    Scalar norms = a.norm().magnitude() * b.norm().magnitude();
    Scalar cos_v = dotp / norms;
    Scalar sin_v = cross / norms;
    Cmp sc = sign(cross);
    if (sc == Cmp::Uncertain) throw PrecisionExhausted("angle orientation undecided");
    Scalar value;
    if (sc == Cmp::Equal) {
        Cmp sd = sign(dotp);
        if (sd == Cmp::Greater) {
            value = Scalar(0);
        } else {
            value = Scalar::pi();  // opposite directions
        }
    } else if (sc == Cmp::Greater) {
        value = Scalar::atan2(cross, dotp);  // in (0, pi)
    } else {
        value = two_pi() + Scalar::atan2(cross, dotp);  // atan2 < 0, result in (pi, 2pi)
    }
    return {value, cos_v, sin_v};
}

// decompose a nonnegative total into principal value + winding
std::pair<Scalar, long> decompose(const Scalar& total) {
    auto turns = scalar_floor(total / two_pi());
    if (!turns) throw PrecisionExhausted("winding decomposition undecided");
    auto k = turns->to_long();
    if (!k) throw DomainError("winding index out of range");
    Scalar principal = total - Scalar(*turns) * two_pi();
    return {principal, *k};
}

AngleValue from_signed_total(const Scalar& total, std::optional<std::pair<Scalar, Scalar>> cos_sin) {
    Cmp s = sign(total);
    if (s == Cmp::Uncertain) throw PrecisionExhausted("angle orientation undecided");
    Orientation o = s == Cmp::Less ? Orientation::CW : Orientation::CCW;
    Scalar magnitude = s == Cmp::Less ? -total : total;
    auto [principal, k] = decompose(magnitude);
    // (cos, sin) arrives for the ccw total; flip sin for the cw reading
    if (cos_sin && o == Orientation::CW) {
        cos_sin = std::make_pair(cos_sin->first, -cos_sin->second);
    }
    return AngleValue(principal, o, k, std::move(cos_sin));
}

}  // namespace

Scalar AngleValue::signed_total() const {
    Scalar total = value_ + Scalar(winding_) * two_pi();
    return orientation_ == Orientation::CW ? -total : total;
}

AngleValue angle(const VectorClass& a, const VectorClass& b, Orientation orientation) {
    Opening o = orientation == Orientation::CCW ? ccw_opening(a, b) : ccw_opening(b, a);
    return AngleValue(o.value, orientation, 0, std::make_pair(o.cos_v, o.sin_v));
}

Tri same_opening(const AngleValue& alpha, const AngleValue& beta) {
    if (alpha.cos_sin() && beta.cos_sin()) {
        Cmp c = compare(alpha.cos_sin()->first, beta.cos_sin()->first);
        Cmp s = compare(alpha.cos_sin()->second, beta.cos_sin()->second);
        if (c == Cmp::Uncertain || s == Cmp::Uncertain) return Tri::Uncertain;
        return tri_of(c == Cmp::Equal && s == Cmp::Equal);
    }
    Cmp v = compare(alpha.value(), beta.value());
    if (v == Cmp::Uncertain) return Tri::Uncertain;
    return tri_of(v == Cmp::Equal);
}

AngleValue angle_add(const AngleValue& alpha, const AngleValue& beta) {
    Scalar total = alpha.signed_total() + beta.signed_total();
    std::optional<std::pair<Scalar, Scalar>> cs;
    if (alpha.cos_sin() && beta.cos_sin()) {
        // ccw readings of both operands, composed by the addition formulas
        Scalar c1 = alpha.cos_sin()->first;
        Scalar s1 = alpha.orientation() == Orientation::CW ? -alpha.cos_sin()->second : alpha.cos_sin()->second;
        Scalar c2 = beta.cos_sin()->first;
        Scalar s2 = beta.orientation() == Orientation::CW ? -beta.cos_sin()->second : beta.cos_sin()->second;
        cs = std::make_pair(c1 * c2 - s1 * s2, s1 * c2 + c1 * s2);
    }
    return from_signed_total(total, std::move(cs));
}

AngleValue angle_scale(const Scalar& factor, const AngleValue& alpha) {
    Scalar total = factor * alpha.signed_total();
    std::optional<std::pair<Scalar, Scalar>> cs;
    if (alpha.cos_sin() && factor.is_rational() && factor.as_rational()->is_integer()) {
        if (auto n = factor.as_rational()->to_long()) {
            // integer multiples keep exact trig data via de Moivre
            Scalar c = alpha.cos_sin()->first;
            Scalar s = alpha.orientation() == Orientation::CW ? -alpha.cos_sin()->second : alpha.cos_sin()->second;
            long steps = *n;
            if (steps < 0) {
                s = -s;
                steps = -steps;
            }
            Scalar rc(1), rs(0);
            for (long i = 0; i < steps; ++i) {
                Scalar nc = rc * c - rs * s;
                rs = rc * s + rs * c;
                rc = nc;
            }
            cs = std::make_pair(rc, rs);
        }
    }
    return from_signed_total(total, std::move(cs));
}

AngleValue principal(const AngleValue& alpha) {
    return AngleValue(alpha.value(), alpha.orientation(), 0, alpha.cos_sin());
}

std::pair<Scalar, Scalar> sin_cos(const AngleValue& alpha) {
    if (alpha.cos_sin()) return {alpha.cos_sin()->second, alpha.cos_sin()->first};
    return {Scalar::sin(alpha.value()), Scalar::cos(alpha.value())};
}

Rotation rotation_aligning(Frame& frame, const VectorClass& b, const VectorClass& c) {
    return Rotation{frame.base_point(), angle(b, c, Orientation::CCW)};
}

Rotation rotation_about(PointId center, AngleValue a) { return Rotation{center, std::move(a)}; }

VectorClass rotate_vector(const Frame& frame, const Rotation& rot, const VectorClass& a) {
    auto [x, y] = planar(a);
    auto cs = sin_cos(rot.angle);  // (sin, cos) of the principal value
    Scalar s = rot.angle.orientation() == Orientation::CW ? -cs.first : cs.first;
    const Scalar& c = cs.second;
    Coords delta{c * x - s * y, s * x + c * y};
    if (a.dimension() == 3) delta.push_back(Scalar(0));
    return vector_from_delta(frame, std::move(delta));
}

PointId rotate_point(Frame& frame, const Rotation& rot, PointId p) {
    VectorClass radial = vector_between(frame, rot.center, p);
    VectorClass turned = rotate_vector(frame, rot, radial);
    return point_plus_vector(frame, rot.center, turned);
}

Arc make_arc(Frame& frame, PointId center, const DistanceValue& radius, const VectorClass& from,
             const VectorClass& to, Orientation orientation, bool full_turn) {
    frame.check_point(center);
    if (radius.is_zero()) throw DegenerateInput("arcs need a positive radius");
    if (from.is_zero() || to.is_zero()) throw DegenerateInput("arcs need nonzero directions");
    VectorClass u = vec_scale(Scalar(1) / from.norm().magnitude(), from);
    VectorClass v = vec_scale(Scalar(1) / to.norm().magnitude(), to);
    if (full_turn && vec_equal(u, v) != Tri::True) {
        throw DegenerateInput("a full turn needs matching start and end directions");
    }
    AngleValue opening = full_turn ? AngleValue(Scalar(0), orientation, 1, std::make_pair(Scalar(1), Scalar(0)))
                                   : angle(u, v, orientation);
    return Arc{frame.tag(), center, radius, std::move(u), std::move(v), orientation, full_turn,
               std::move(opening)};
}

namespace {

// direction angle psi_i of the i-th partition point and its coordinates
Scalar start_direction_angle(const Arc& arc) {
    auto [ux, uy] = planar(arc.start_dir);
    return Scalar::atan2(uy, ux);
}

Coords point_at(const Arc& arc, const Coords& center, const Scalar& psi) {
    const Scalar& r = arc.radius.magnitude();
    return {center[0] + r * Scalar::cos(psi), center[1] + r * Scalar::sin(psi)};
}

Scalar sweep_total(const Arc& arc) {
    Scalar total = arc.opening.value() + Scalar(arc.opening.winding()) * two_pi();
    return arc.orientation == Orientation::CW ? -total : total;
}

DistanceValue chord_sum(const Arc& arc, const std::vector<Scalar>& fractions) {
    // fractions: 0 = t_0 < t_1 < ... < t_last = 1
    Coords center{Scalar(0), Scalar(0)};  // chords are translation invariant
    Scalar psi0 = start_direction_angle(arc);
    Scalar total = sweep_total(arc);
    std::vector<Scalar> chords;
    chords.reserve(fractions.size());
    Coords prev = point_at(arc, center, psi0);
    for (size_t i = 1; i < fractions.size(); ++i) {
        Coords next = point_at(arc, center, psi0 + fractions[i] * total);
        chords.push_back(distance_between_coords(prev, next).magnitude());
        prev = std::move(next);
    }
    return DistanceValue::from_scalar(scalar_sum(chords));
}

std::vector<Scalar> uniform_fractions(unsigned points) {
    std::vector<Scalar> f;
    f.reserve(points);
    for (unsigned i = 0; i < points; ++i) f.push_back(Scalar(static_cast<long>(i), static_cast<long>(points - 1)));
    return f;
}

}  // namespace

DistanceValue partition_length(const Arc& arc, unsigned points) {
    if (points < 2) throw DomainError("a partition needs at least two points");
    return chord_sum(arc, uniform_fractions(points));
}

DistanceValue partition_length(const Arc& arc, const std::vector<Scalar>& interior_fractions) {
    std::vector<Scalar> f;
    f.reserve(interior_fractions.size() + 2);
    f.push_back(Scalar(0));
    Scalar prev(0);
    for (const Scalar& t : interior_fractions) {
        if (compare(prev, t) != Cmp::Less || compare(t, Scalar(1)) != Cmp::Less) {
            throw DomainError("partition fractions must increase strictly inside (0, 1)");
        }
        f.push_back(t);
        prev = t;
    }
    f.push_back(Scalar(1));
    return chord_sum(arc, f);
}

std::vector<Coords> partition_coords(const Frame& frame, const Arc& arc, unsigned points) {
    if (frame.tag() != arc.frame_tag) throw FrameMismatch("arc belongs to a different frame");
    if (points < 2) throw DomainError("a partition needs at least two points");
    std::vector<Coords> out;
    out.reserve(points);
    const Coords& c = frame.coords(arc.center);
    Coords center{c[0], c[1]};
    Scalar psi0 = start_direction_angle(arc);
    Scalar total = sweep_total(arc);
    for (unsigned i = 0; i < points; ++i) {
        Scalar t(static_cast<long>(i), static_cast<long>(points - 1));
        Coords xy = point_at(arc, center, psi0 + t * total);
        if (frame.dimension() == 3) xy.push_back(c[2]);
        out.push_back(std::move(xy));
    }
    return out;
}

Partition make_partition(Frame& frame, const Arc& arc, unsigned points) {
    auto raw = partition_coords(frame, arc, points);
    Partition p;
    p.points.reserve(raw.size());
    for (auto& xy : raw) p.points.push_back(frame.mark_point(xy));
    return p;
}

DistanceValue partition_length(const Frame& frame, const Partition& partition) {
    if (partition.points.size() < 2) throw DomainError("a partition needs at least two points");
    std::vector<Scalar> chords;
    chords.reserve(partition.points.size());
    for (size_t i = 1; i < partition.points.size(); ++i) {
        chords.push_back(distance(frame, partition.points[i - 1], partition.points[i]).magnitude());
    }
    return DistanceValue::from_scalar(scalar_sum(chords));
}

DistanceValue arc_length(const Arc& arc, const Scalar& tol) {
    if (sign(tol) != Cmp::Greater) throw DomainError("arc length tolerance must be positive");
    unsigned chords = 2;
    DistanceValue prev = partition_length(arc, chords + 1);
    while (true) {
        unsigned next_chords = chords * 2;
        DistanceValue next = partition_length(arc, next_chords + 1);
        Scalar increment = next.magnitude() - prev.magnitude();
        if (compare(increment, tol) == Cmp::Less) return next;
        chords = next_chords;
        prev = next;
        if (chords > (1u << 22)) throw PrecisionExhausted("arc length refinement did not converge");
    }
}

AngleValue tape_measure_angle(const DistanceValue& arc_len, const DistanceValue& radius,
                              const Scalar& tape_resolution, Orientation orientation) {
    auto res = tape_resolution.as_rational();
    if (!res || res->sign() <= 0) throw DomainError("tape resolution must be a positive rational");
    auto ticks_l = scalar_round(arc_len.magnitude() / Scalar(*res));
    auto ticks_r = scalar_round(radius.magnitude() / Scalar(*res));
    if (!ticks_l || !ticks_r) throw PrecisionExhausted("tape reading undecided");
    Rational ql = *ticks_l * *res;
    Rational qr = *ticks_r * *res;
    if (qr.is_zero()) throw DomainError("radius reads as zero at this tape resolution");
    Rational value = ql / qr;
    // principal normalization of an exact rational reading
    long k = 0;
    Scalar v(value);
    while (compare(v, two_pi()) != Cmp::Less) {
        v = v - two_pi();
        if (++k > 100000) throw DomainError("tape reading absurdly large");
    }
    return AngleValue(v, orientation, k);
}

AngleValue measured_angle_report(const Arc& arc, const Scalar& tape_resolution) {
    auto res = tape_resolution.as_rational();
    if (!res || res->sign() <= 0) throw DomainError("tape resolution must be a positive rational");
    // measure comfortably below the tape resolution before quantizing
    DistanceValue l = arc_length(arc, Scalar(*res * Rational(1, 64)));
    return tape_measure_angle(l, arc.radius, tape_resolution, arc.orientation);
}

}  // namespace opgeo
