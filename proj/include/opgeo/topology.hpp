#pragma once

#include <memory>
#include <vector>

#include "opgeo/compass.hpp"
#include "opgeo/frame.hpp"
#include "opgeo/report.hpp"

namespace opgeo {

/// Element of the compass topology: a combinator tree over open balls,
/// closed under arbitrary union and finite intersection, plus the whole
/// space and the empty set. Membership is a strict aperture comparison at
/// the leaves, evaluated lazily per point.
class OpenSet {
public:
    enum class Kind { Ball, Union, Intersection, Whole, Empty };

    static OpenSet ball(PointId center, const DistanceValue& radius);
    static OpenSet unite(std::vector<OpenSet> parts);
    static OpenSet intersect(std::vector<OpenSet> parts);
    static OpenSet whole();
    static OpenSet empty();

    Kind kind() const { return node_->kind; }
    const std::vector<OpenSet>& parts() const { return node_->parts; }
    PointId ball_center() const { return node_->center; }
    const DistanceValue& ball_radius() const { return node_->radius; }

private:
    struct Node {
        Kind kind;
        PointId center;
        DistanceValue radius;
        std::vector<OpenSet> parts;
    };
    explicit OpenSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct InteriorWitness {
    PointId point;
    DistanceValue radius;
    Rational cautious_factor;
};

/// Strict membership test.
Tri member(const Frame& frame, const OpenSet& s, PointId x);

/// Analytic interior margin of a member point: leaf margin is
/// radius - d(A, center); unions take the best containing branch,
/// intersections the minimum over branches. Positive iff A is inside.
Scalar interior_margin(const Frame& frame, const OpenSet& s, PointId a);

/// Witness ball around a member point with radius factor * margin.
/// factor 1/2 is the cautious default; factor 1 still yields a subset
/// because membership is strict.
InteriorWitness interior_ball(const Frame& frame, const OpenSet& s, PointId a,
                              const Rational& cautious_factor = Rational(1, 2));

/// Analytic proof that the ball B(a, eps) is contained in s (sufficient
/// branch-wise criterion, exact arithmetic).
Tri ball_inside(const Frame& frame, const OpenSet& s, PointId a, const Scalar& eps);

/// Disjoint open balls separating two distinct points, radii d(A,B)/n.
std::pair<OpenSet, OpenSet> hausdorff_witness(const Frame& frame, PointId a, PointId b, long n = 2);

struct OpennessCheck {
    Report report;
    std::vector<InteriorWitness> witnesses;
};

/// Produces an interior witness for every probe (all probes must be
/// members) and verifies each ball analytically.
OpennessCheck check_open(const Frame& frame, const OpenSet& s, const std::vector<PointId>& probes,
                         const Rational& cautious_factor = Rational(1, 2));

}  // namespace opgeo
