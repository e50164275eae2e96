#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opgeo/compass.hpp"
#include "opgeo/frame.hpp"
#include "opgeo/vectors.hpp"

namespace opgeo {

enum class Orientation { CCW, CW };

inline Orientation opposite(Orientation o) { return o == Orientation::CCW ? Orientation::CW : Orientation::CCW; }

/// An oriented opening: principal value in [0, 2pi) radians plus a winding
/// index counting completed turns. When the angle was built from exact
/// directions it carries (cos, sin) of the principal value as constructible
/// scalars, which keeps rotations and trigonometry exact.
class AngleValue {
public:
    AngleValue() : value_(Scalar(0)), orientation_(Orientation::CCW), winding_(0) {}
    AngleValue(Scalar principal, Orientation o, long winding,
               std::optional<std::pair<Scalar, Scalar>> cos_sin = std::nullopt)
        : value_(std::move(principal)), orientation_(o), winding_(winding), cos_sin_(std::move(cos_sin)) {}

    /// Principal value in [0, 2pi) radians.
    const Scalar& value() const { return value_; }
    Orientation orientation() const { return orientation_; }
    long winding() const { return winding_; }
    /// Exact (cos, sin) of the principal value, when available.
    const std::optional<std::pair<Scalar, Scalar>>& cos_sin() const { return cos_sin_; }

    /// value + 2*pi*winding, signed positive for CCW.
    Scalar signed_total() const;

private:
    Scalar value_;
    Orientation orientation_;
    long winding_;
    std::optional<std::pair<Scalar, Scalar>> cos_sin_;
};

struct Rotation {
    PointId center;
    AngleValue angle;
};

/// Circular arc around a center: radius, unit start/end directions in the
/// plane, orientation, and an optional full-turn flag for closed circles.
struct Arc {
    uint32_t frame_tag = 0;
    PointId center;
    DistanceValue radius;
    VectorClass start_dir;  // unit
    VectorClass end_dir;    // unit
    Orientation orientation = Orientation::CCW;
    bool full_turn = false;
    AngleValue opening;
};

/// Marked points along an arc, first at the start, last at the end.
struct Partition {
    std::vector<PointId> points;
};

/// The opening from a to b in the given sweep direction; both vectors must
/// be nonzero and lie in the frame plane (z = 0 in 3D frames).
AngleValue angle(const VectorClass& a, const VectorClass& b, Orientation orientation = Orientation::CCW);

/// Same principal opening? Uses the exact (cos, sin) data when both sides
/// carry it, so the decision is exact for constructed angles.
Tri same_opening(const AngleValue& alpha, const AngleValue& beta);

AngleValue angle_add(const AngleValue& alpha, const AngleValue& beta);
AngleValue angle_scale(const Scalar& factor, const AngleValue& alpha);
/// Forgets completed turns (winding := 0); never applied implicitly.
AngleValue principal(const AngleValue& alpha);

/// (sin, cos) of the principal value: exact ratios of the right-triangle
/// construction when direction data is present, enclosure-backed otherwise.
std::pair<Scalar, Scalar> sin_cos(const AngleValue& alpha);

/// The rotation around `center` taking the direction of b to the direction
/// of c (identity when they are already parallel and co-directed).
Rotation rotation_aligning(Frame& frame, const VectorClass& b, const VectorClass& c);
Rotation rotation_about(PointId center, AngleValue angle);

VectorClass rotate_vector(const Frame& frame, const Rotation& rot, const VectorClass& a);
PointId rotate_point(Frame& frame, const Rotation& rot, PointId p);

Arc make_arc(Frame& frame, PointId center, const DistanceValue& radius, const VectorClass& from,
             const VectorClass& to, Orientation orientation = Orientation::CCW, bool full_turn = false);

/// Chord-length sum over the uniform partition with `points` marks
/// (points - 1 chords). points >= 2.
DistanceValue partition_length(const Arc& arc, unsigned points);

/// Chord-length sum over an arbitrary partition given by strictly
/// increasing interior fractions of the opening (0 and 1 are implicit).
DistanceValue partition_length(const Arc& arc, const std::vector<Scalar>& interior_fractions);

/// Coordinates of the uniform partition points (start first).
std::vector<Coords> partition_coords(const Frame& frame, const Arc& arc, unsigned points);

/// Marks the uniform partition in the frame.
Partition make_partition(Frame& frame, const Arc& arc, unsigned points);

/// Chord-length sum of a marked partition.
DistanceValue partition_length(const Frame& frame, const Partition& partition);

/// Refines uniform partitions (doubling the chord count) until the
/// increment drops below tol; the result is within tol of the supremum.
DistanceValue arc_length(const Arc& arc, const Scalar& tol);

/// Tailor's-tape mode: arc length and radius quantized to the tape
/// resolution before dividing.
AngleValue measured_angle_report(const Arc& arc, const Scalar& tape_resolution);
AngleValue tape_measure_angle(const DistanceValue& arc_len, const DistanceValue& radius,
                              const Scalar& tape_resolution, Orientation orientation = Orientation::CCW);

}  // namespace opgeo
