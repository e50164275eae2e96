#include "opgeo/topology.hpp"

#include "opgeo/errors.hpp"

namespace opgeo {

OpenSet OpenSet::ball(PointId center, const DistanceValue& radius) {
    if (radius.is_zero()) throw DegenerateInput("open balls need a positive radius");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ball;
    n->center = center;
    n->radius = radius;
    return OpenSet(std::move(n));
}

OpenSet OpenSet::unite(std::vector<OpenSet> parts) {
    if (parts.empty()) return empty();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->parts = std::move(parts);
    return OpenSet(std::move(n));
}

OpenSet OpenSet::intersect(std::vector<OpenSet> parts) {
    if (parts.empty()) return whole();  // empty intersection is the whole space
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->parts = std::move(parts);
    return OpenSet(std::move(n));
}

OpenSet OpenSet::whole() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Whole;
    return OpenSet(std::move(n));
}

OpenSet OpenSet::empty() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Empty;
    return OpenSet(std::move(n));
}

Tri member(const Frame& frame, const OpenSet& s, PointId x) {
    switch (s.kind()) {
        case OpenSet::Kind::Ball: {
            Cmp c = compare(distance(frame, s.ball_center(), x), s.ball_radius());
            if (c == Cmp::Uncertain) return Tri::Uncertain;
            return tri_of(c == Cmp::Less);  // strict: the boundary is excluded
        }
        case OpenSet::Kind::Union: {
            Tri acc = Tri::False;
            for (const auto& p : s.parts()) acc = tri_or(acc, member(frame, p, x));
            return acc;
        }
        case OpenSet::Kind::Intersection: {
            Tri acc = Tri::True;
            for (const auto& p : s.parts()) acc = tri_and(acc, member(frame, p, x));
            return acc;
        }
        case OpenSet::Kind::Whole:
            return Tri::True;
        default:
            return Tri::False;
    }
}

Scalar interior_margin(const Frame& frame, const OpenSet& s, PointId a) {
    switch (s.kind()) {
        case OpenSet::Kind::Ball:
            return s.ball_radius().magnitude() - distance(frame, s.ball_center(), a).magnitude();
        case OpenSet::Kind::Union: {
            // best containing branch; margins of non-containing branches are
            // negative and lose the max
            bool first = true;
            Scalar best;
            for (const auto& p : s.parts()) {
                Scalar m = interior_margin(frame, p, a);
                if (first || compare(m, best) == Cmp::Greater) {
                    best = m;
                    first = false;
                }
            }
            if (first) throw DegenerateInput("empty union has no interior");
            return best;
        }
        case OpenSet::Kind::Intersection: {
            bool first = true;
            Scalar worst;
            for (const auto& p : s.parts()) {
                Scalar m = interior_margin(frame, p, a);
                if (first || compare(m, worst) == Cmp::Less) {
                    worst = m;
                    first = false;
                }
            }
            if (first) return Scalar(1);  // whole space
            return worst;
        }
        case OpenSet::Kind::Whole:
            return Scalar(1);  // any positive witness radius works
        default:
            return Scalar(-1);
    }
}

InteriorWitness interior_ball(const Frame& frame, const OpenSet& s, PointId a,
                              const Rational& cautious_factor) {
    if (cautious_factor.sign() <= 0 || cautious_factor > Rational(1)) {
        throw DomainError("cautious factor must lie in (0, 1]");
    }
    if (member(frame, s, a) != Tri::True) throw DegenerateInput("interior witness: the point is not a member");
    Scalar margin = interior_margin(frame, s, a);
    if (sign(margin) != Cmp::Greater) {
        throw DegenerateInput("interior witness: no analytic margin at this point");
    }
    DistanceValue eps = DistanceValue::from_scalar(Scalar(cautious_factor) * margin);
    InteriorWitness w{a, eps, cautious_factor};
    if (ball_inside(frame, s, a, eps.magnitude()) != Tri::True) {
        throw Error("interior witness failed its analytic containment check");
    }
    return w;
}

Tri ball_inside(const Frame& frame, const OpenSet& s, PointId a, const Scalar& eps) {
    switch (s.kind()) {
        case OpenSet::Kind::Ball: {
            // B(a, eps) inside the strict ball whenever d(a,c) + eps <= radius
            Scalar reach = distance(frame, s.ball_center(), a).magnitude() + eps;
            Cmp c = compare(reach, s.ball_radius().magnitude());
            if (c == Cmp::Uncertain) return Tri::Uncertain;
            return tri_of(c != Cmp::Greater);
        }
        case OpenSet::Kind::Union: {
            // sufficient criterion: some single branch contains the ball
            Tri acc = Tri::False;
            for (const auto& p : s.parts()) acc = tri_or(acc, ball_inside(frame, p, a, eps));
            return acc;
        }
        case OpenSet::Kind::Intersection: {
            Tri acc = Tri::True;
            for (const auto& p : s.parts()) acc = tri_and(acc, ball_inside(frame, p, a, eps));
            return acc;
        }
        case OpenSet::Kind::Whole:
            return Tri::True;
        default:
            return Tri::False;
    }
}

std::pair<OpenSet, OpenSet> hausdorff_witness(const Frame& frame, PointId a, PointId b, long n) {
    if (a == b) throw DegenerateInput("separation needs two distinct points");
    if (n < 2) throw DomainError("the separating radius divides d(A,B) by at least 2");
    DistanceValue gap = distance(frame, a, b);
    DistanceValue radius = DistanceValue::from_scalar(gap.magnitude() / Scalar(n));
    OpenSet ball_a = OpenSet::ball(a, radius);
    OpenSet ball_b = OpenSet::ball(b, radius);
    // analytic disjointness: sum of radii <= d(A,B) and strict membership
    Scalar radii_sum = radius.magnitude() + radius.magnitude();
    if (compare(radii_sum, gap.magnitude()) == Cmp::Greater) {
        throw Error("separating balls overlap");
    }
    return {std::move(ball_a), std::move(ball_b)};
}

OpennessCheck check_open(const Frame& frame, const OpenSet& s, const std::vector<PointId>& probes,
                         const Rational& cautious_factor) {
    OpennessCheck out;
    out.report.suite = "check_open";
    out.report.trials = probes.size();
    AxiomResult axiom;
    axiom.name = "interior_witness";
    for (size_t i = 0; i < probes.size(); ++i) {
        PointId p = probes[i];
        if (member(frame, s, p) != Tri::True) {
            throw DegenerateInput("check_open: probe " + std::to_string(i) + " is not a member");
        }
        try {
            InteriorWitness w = interior_ball(frame, s, p, cautious_factor);
            out.witnesses.push_back(w);
            ++axiom.pass;
        } catch (const Error& e) {
            ++axiom.fail;
            if (!axiom.counterexample) {
                Counterexample ce;
                ce.trial = i;
                ce.description = e.what();
                out.report.axioms.push_back(axiom);
            }
        }
    }
    out.report.axioms.push_back(std::move(axiom));
    return out;
}

}  // namespace opgeo
