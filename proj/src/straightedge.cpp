#include "opgeo/straightedge.hpp"

#include "opgeo/coords.hpp"
#include "opgeo/errors.hpp"

namespace opgeo {

Tri is_between(const Frame& frame, PointId a, PointId x, PointId b, const CompareConfig& cfg) {
    DistanceValue split = add(distance(frame, a, x), distance(frame, x, b));
    Cmp c = compare(split, distance(frame, a, b), cfg);
    if (c == Cmp::Uncertain) return Tri::Uncertain;
    return tri_of(c == Cmp::Equal);
}

Line line(const Frame& frame, PointId a, PointId b) {
    frame.check_point(a);
    frame.check_point(b);
    if (a == b) throw DegenerateInput("a line needs two distinct anchors");
    return Line{a, b};
}

Tri line_member(const Frame& frame, const Line& l, PointId x) {
    // r(XAB) v r(AXB) v r(ABX)
    Tri m = tri_or(is_between(frame, x, l.a, l.b), is_between(frame, l.a, x, l.b));
    return tri_or(m, is_between(frame, l.a, l.b, x));
}

Tri segment_member(const Frame& frame, const Segment& s, PointId x) {
    return is_between(frame, s.a, x, s.b);
}

namespace {

Coords foot_coords(const Frame& frame, PointId p, const Line& l) {
    const Coords& a = frame.coords(l.a);
    Coords u = coords_sub(frame.coords(l.b), a);
    Coords ap = coords_sub(frame.coords(p), a);
    Scalar t = dot(ap, u) / squared_norm(u);
    return coords_add(a, coords_scale(u, t));
}

}  // namespace

DistanceValue dist_point_line(const Frame& frame, PointId p, const Line& l) {
    frame.check_point(p);
    return distance_between_coords(frame.coords(p), foot_coords(frame, p, l));
}

PointId perpendicular_foot(Frame& frame, PointId p, const Line& l) {
    return frame.mark_point(foot_coords(frame, p, l));
}

Line parallel_through(Frame& frame, PointId p, const Line& l) {
    frame.check_point(p);
    if (line_member(frame, l, p) == Tri::True) {
        // zero-radius cylinder: the parallel degenerates to the axis
        return l;
    }
    Coords u = coords_sub(frame.coords(l.b), frame.coords(l.a));
    PointId q = frame.mark_point(coords_add(frame.coords(p), u));
    return Line{p, q};
}

Cylinder cylinder(const Line& axis, const DistanceValue& radius) {
    if (radius.is_zero()) throw DegenerateInput("cylinder radius must be positive");
    return Cylinder{axis, radius};
}

Tri cylinder_member(const Frame& frame, const Cylinder& c, PointId x) {
    Cmp cmp = compare(dist_point_line(frame, x, c.axis), c.radius);
    if (cmp == Cmp::Uncertain) return Tri::Uncertain;
    return tri_of(cmp == Cmp::Equal);
}

Plane plane(const Frame& frame, const Line& r, const Line& s, PointId p) {
    frame.check_point(p);
    if (line_member(frame, s, p) != Tri::True) throw DegenerateInput("plane: the point must lie on s");
    if (line_member(frame, r, p) == Tri::True) throw DegenerateInput("plane: the point must lie off r");
    if (line_member(frame, s, r.a) == Tri::True && line_member(frame, s, r.b) == Tri::True) {
        throw DegenerateInput("plane: the generating lines must be distinct");
    }
    return Plane{r, s, p};
}

Tri plane_member(Frame& frame, const Plane& pi, PointId x) {
    if (x == pi.p) return Tri::True;  // p itself belongs via s
    Tri on_s = line_member(frame, pi.s, x);
    if (on_s != Tri::False) return on_s;
    if (line_member(frame, pi.r, x) == Tri::True) return Tri::True;  // take the crossing at x itself
    // x on some line through p and a point of r <=> line(p, x) meets r
    Line through = line(frame, pi.p, x);
    if (intersect_lines(frame, through, pi.r)) return Tri::True;
    return Tri::False;
}

std::optional<PointId> intersect_lines(Frame& frame, const Line& l1, const Line& l2) {
    const Coords& p1 = frame.coords(l1.a);
    const Coords& p2 = frame.coords(l2.a);
    Coords u = coords_sub(frame.coords(l1.b), p1);
    Coords v = coords_sub(frame.coords(l2.b), p2);
    Coords rhs = coords_sub(p2, p1);
    const int dim = frame.dimension();
    // solve t*u - s*v = rhs on a nonsingular pair of coordinate rows
    int rows[2] = {-1, -1};
    Scalar det;
    for (int i = 0; i < dim && rows[0] < 0; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            det = u[i] * (-v[j]) - u[j] * (-v[i]);
            if (sign(det) != Cmp::Equal) {
                rows[0] = i;
                rows[1] = j;
                break;
            }
        }
    }
    if (rows[0] < 0) return std::nullopt;  // parallel (or coincident)
    int i = rows[0], j = rows[1];
    Scalar t = (rhs[i] * (-v[j]) - rhs[j] * (-v[i])) / det;
    Scalar s = (u[i] * rhs[j] - u[j] * rhs[i]) / det;
    if (dim == 3) {
        // the remaining row must agree, otherwise the lines are skew
        int k = 3 - i - j;
        if (compare(t * u[k] - s * v[k], rhs[k]) != Cmp::Equal) return std::nullopt;
    }
    return frame.mark_point(coords_add(p1, coords_scale(u, t)));
}

}  // namespace opgeo
