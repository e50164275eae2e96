#pragma once

#include <vector>

#include "opgeo/compass.hpp"
#include "opgeo/frame.hpp"

namespace opgeo {

/// Ordered pair of marked points; (A,B) and (B,A) differ unless A = B.
struct OrderedPair {
    PointId origin;
    PointId end;
};

/// Equivalence class of ordered pairs under parallel transport. The
/// canonical representative is anchored at the frame's base point, so class
/// identity reduces to comparing the coordinate difference end - origin.
class VectorClass {
public:
    VectorClass() = default;

    uint32_t frame_tag() const { return frame_tag_; }
    const Coords& delta() const { return delta_; }
    int dimension() const { return static_cast<int>(delta_.size()); }
    bool is_zero() const;

    /// d(origin, end) of any representative.
    DistanceValue norm() const;

private:
    VectorClass(uint32_t tag, Coords delta) : frame_tag_(tag), delta_(std::move(delta)) {}
    uint32_t frame_tag_ = 0;
    Coords delta_;

    friend VectorClass vector_between(const Frame&, PointId, PointId);
    friend VectorClass class_of(const Frame&, const OrderedPair&);
    friend VectorClass vec_add(const VectorClass&, const VectorClass&);
    friend VectorClass vec_scale(const Scalar&, const VectorClass&);
    friend VectorClass vector_from_delta(const Frame&, Coords);
};

/// The unique pair with the given origin that is transport-equivalent to p.
/// Marks the translated end point.
OrderedPair transport(Frame& frame, const OrderedPair& p, PointId new_origin);

/// Transport-equivalence of two ordered pairs, tested literally: transport
/// p onto q's origin and ask whether the ends coincide.
Tri equivalent(Frame& frame, const OrderedPair& p, const OrderedPair& q);

VectorClass vector_between(const Frame& frame, PointId a, PointId b);
VectorClass class_of(const Frame& frame, const OrderedPair& p);
VectorClass vector_from_delta(const Frame& frame, Coords delta);

Tri vec_equal(const VectorClass& a, const VectorClass& b,
              const CompareConfig& cfg = default_compare_config());

VectorClass vec_add(const VectorClass& a, const VectorClass& b);
VectorClass vec_scale(const Scalar& factor, const VectorClass& a);

/// B := A + a, the unique end point of the representative anchored at A.
PointId point_plus_vector(Frame& frame, PointId a, const VectorClass& v);

/// The canonical representative anchored at the frame base point
/// (marks both points).
OrderedPair representative(Frame& frame, const VectorClass& v);

/// The paper-procedure sum: transport both classes to s1, slide along the
/// support lines, and return the single meeting point of the end points.
/// Checks that the two transport orders meet in the same point.
PointId sum_by_construction(Frame& frame, const VectorClass& a, const VectorClass& b, PointId s1);

/// n compass steps along the support line.
VectorClass nat_scale_by_compass(Frame& frame, unsigned long n, const VectorClass& a);

/// Step-by-step intercept construction for (m/n)*a: equal compass marks on
/// an auxiliary ray, the segment to the end of a, and exact intersections
/// of the parallels with the support line. m may exceed n (whole steps are
/// chained first) and may be negative (direction reversed).
VectorClass intercept_scale_construction(Frame& frame, const Rational& ratio, const VectorClass& a);

struct ApproximationStep {
    Rational convergent;
    VectorClass constructed;
};

/// Continued-fraction convergents of an algebraic factor, each realized by
/// the intercept construction, until |q_k - factor| * |a| < tol.
std::vector<ApproximationStep> rational_approximation_trace(Frame& frame, const Scalar& factor,
                                                            const VectorClass& a, const Scalar& tol);

}  // namespace opgeo
