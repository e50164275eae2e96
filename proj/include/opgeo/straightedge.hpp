#pragma once

#include <optional>

#include "opgeo/compass.hpp"
#include "opgeo/frame.hpp"

namespace opgeo {

struct Segment {
    PointId a, b;
};

/// Straight line through two distinct anchors; membership is the union of
/// the three betweenness cases, evaluated lazily per query point.
struct Line {
    PointId a, b;
};

struct Cylinder {
    Line axis;
    DistanceValue radius;
};

/// Plane named by two lines r, s and a point p of s (p off r); membership is
/// "on s, or on some line through p and a point of r".
struct Plane {
    Line r;
    Line s;
    PointId p;
};

/// X between A and B: the equality case of the triangle inequality,
/// d(A,X) + d(X,B) = d(A,B).
Tri is_between(const Frame& frame, PointId a, PointId x, PointId b,
               const CompareConfig& cfg = default_compare_config());

Line line(const Frame& frame, PointId a, PointId b);

Tri line_member(const Frame& frame, const Line& l, PointId x);
Tri segment_member(const Frame& frame, const Segment& s, PointId x);

/// inf { d(X,P) : X on the line }, attained at the perpendicular foot.
DistanceValue dist_point_line(const Frame& frame, PointId p, const Line& l);

/// Marks and returns the perpendicular foot of P on the line.
PointId perpendicular_foot(Frame& frame, PointId p, const Line& l);

/// The unique parallel through P inside the cylinder around the line.
/// P on the line degenerates to the line itself.
Line parallel_through(Frame& frame, PointId p, const Line& l);

Cylinder cylinder(const Line& axis, const DistanceValue& radius);
Tri cylinder_member(const Frame& frame, const Cylinder& c, PointId x);

Plane plane(const Frame& frame, const Line& r, const Line& s, PointId p);
Tri plane_member(Frame& frame, const Plane& pi, PointId x);

/// Exact intersection of two lines; nullopt when parallel, coincident or
/// skew. The crossing point is marked in the frame.
std::optional<PointId> intersect_lines(Frame& frame, const Line& l1, const Line& l2);

}  // namespace opgeo
