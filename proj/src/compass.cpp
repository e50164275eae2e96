#include "opgeo/compass.hpp"

#include "opgeo/coords.hpp"
#include "opgeo/errors.hpp"

namespace opgeo {

DistanceValue DistanceValue::from_scalar(const Scalar& magnitude) {
    Cmp s = sign(magnitude);
    if (s == Cmp::Less) throw DomainError("a compass aperture cannot be negative");
    if (s == Cmp::Uncertain) throw PrecisionExhausted("aperture sign undecided");
    return DistanceValue(s == Cmp::Equal ? Scalar() : magnitude);
}

DistanceValue distance_between_coords(const Coords& a, const Coords& b) {
    return DistanceValue(Scalar::sqrt(squared_norm(coords_sub(a, b))));
}

DistanceValue distance(const Frame& frame, PointId a, PointId b) {
    frame.check_point(a);
    frame.check_point(b);
    if (a == b) return DistanceValue();
    return distance_between_coords(frame.coords(a), frame.coords(b));
}

Cmp compare(const DistanceValue& d1, const DistanceValue& d2, const CompareConfig& cfg) {
    return compare(d1.magnitude(), d2.magnitude(), cfg);
}

DistanceValue add(const DistanceValue& d1, const DistanceValue& d2) {
    return DistanceValue(d1.magnitude() + d2.magnitude());
}

DistanceValue scale(const Scalar& q, const DistanceValue& d) {
    Cmp s = sign(q);
    if (s == Cmp::Less) throw DomainError("distances scale by nonnegative factors only");
    if (s == Cmp::Uncertain) throw PrecisionExhausted("scale factor sign undecided");
    if (s == Cmp::Equal) return DistanceValue();
    return DistanceValue(q * d.magnitude());
}

Sphere sphere(PointId center, const DistanceValue& radius) { return Sphere{center, radius}; }

Tri sphere_member(const Frame& frame, const Sphere& s, PointId x) {
    Cmp c = compare(distance(frame, s.center, x), s.radius);
    if (c == Cmp::Uncertain) return Tri::Uncertain;
    return tri_of(c == Cmp::Equal);
}

DistanceValue add_by_construction(Frame& frame, const DistanceValue& d1, const DistanceValue& d2) {
    // place O at the base point, walk along the first axis: O' on the sphere
    // of radius d1 around O, then M diametrically outward on the sphere of
    // radius d2 around O' — the point where d(O, .) is maximal
    Coords o(frame.dimension(), Scalar());
    Coords o_prime = o;
    o_prime[0] = d1.magnitude();
    Coords m = o_prime;
    m[0] = o_prime[0] + d2.magnitude();
    PointId po = frame.mark_point(o);
    PointId pm = frame.mark_point(m);
    return distance(frame, po, pm);
}

Cmp compare_by_construction(Frame& frame, PointId o, PointId h, const DistanceValue& r) {
    DistanceValue oh = distance(frame, o, h);
    if (o == h) {
        // degenerate ray: the aperture is zero
        return r.is_zero() ? Cmp::Equal : Cmp::Less;
    }
    if (r.is_zero()) return Cmp::Greater;
    // X: crossing of ray O->H with the sphere of radius r around O
    const Coords& co = frame.coords(o);
    Coords dir = coords_sub(frame.coords(h), co);
    Coords x = coords_add(co, coords_scale(dir, r.magnitude() / oh.magnitude()));
    PointId px = frame.mark_point(x);
    if (px == h) return Cmp::Equal;
    // the drawn line crosses the sphere before reaching H exactly when X
    // lies between O and H: d(O,X) + d(X,H) = d(O,H)
    DistanceValue split = add(distance(frame, o, px), distance(frame, px, h));
    Cmp between = compare(split, oh);
    if (between == Cmp::Uncertain) return Cmp::Uncertain;
    return between == Cmp::Equal ? Cmp::Greater : Cmp::Less;
}

}  // namespace opgeo
