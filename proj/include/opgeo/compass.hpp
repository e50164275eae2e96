#pragma once

#include "opgeo/frame.hpp"
#include "opgeo/scalar.hpp"
#include "opgeo/tri.hpp"

namespace opgeo {

/// A compass aperture: the nonnegative quantity the compass carries between
/// two needle positions. Element of the value space of lengths.
class DistanceValue {
public:
    DistanceValue() = default;  // zero aperture

    /// Wraps a scalar after proving it nonnegative.
    static DistanceValue from_scalar(const Scalar& magnitude);

    const Scalar& magnitude() const { return mag_; }
    bool is_zero() const { return sign(mag_) == Cmp::Equal; }

private:
    explicit DistanceValue(Scalar m) : mag_(std::move(m)) {}
    Scalar mag_;

    friend DistanceValue distance(const Frame&, PointId, PointId);
    friend DistanceValue add(const DistanceValue&, const DistanceValue&);
    friend DistanceValue scale(const Scalar&, const DistanceValue&);
    friend DistanceValue distance_between_coords(const Coords&, const Coords&);
};

struct Sphere {
    PointId center;
    DistanceValue radius;
};

/// Compass aperture between two marked points of one frame.
DistanceValue distance(const Frame& frame, PointId a, PointId b);

/// Aperture between raw coordinate tuples (same arithmetic, no registry).
DistanceValue distance_between_coords(const Coords& a, const Coords& b);

/// Total order on apertures.
Cmp compare(const DistanceValue& d1, const DistanceValue& d2,
            const CompareConfig& cfg = default_compare_config());

/// Sum of apertures: the maximal aperture d(O,M) over the second sphere
/// centered on the first; exact magnitude addition in the model.
DistanceValue add(const DistanceValue& d1, const DistanceValue& d2);

/// Nonnegative scaling; negative factors are rejected.
DistanceValue scale(const Scalar& q, const DistanceValue& d);

Sphere sphere(PointId center, const DistanceValue& radius);

/// Exact membership: d(center, x) equals the radius.
Tri sphere_member(const Frame& frame, const Sphere& s, PointId x);

/// The sum realized by the explicit construction: O' on the first sphere
/// along a chosen ray, M maximal on the second sphere. Marks the points.
DistanceValue add_by_construction(Frame& frame, const DistanceValue& d1, const DistanceValue& d2);

/// The drawn-line procedure for the order relation: compares d(O,H) with an
/// aperture r by constructing the crossing point of ray O->H with the
/// sphere of radius r, using only point marks and distance sums.
Cmp compare_by_construction(Frame& frame, PointId o, PointId h, const DistanceValue& r);

}  // namespace opgeo
