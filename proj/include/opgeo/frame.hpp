#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opgeo/scalar.hpp"
#include "opgeo/tri.hpp"

namespace opgeo {

using Coords = std::vector<Scalar>;

struct PointId {
    uint32_t frame = 0;
    uint32_t index = 0;
    friend bool operator==(const PointId&, const PointId&) = default;
};

struct BodyId {
    uint32_t frame = 0;
    uint32_t index = 0;
    friend bool operator==(const BodyId&, const BodyId&) = default;
};

/// One rigid frame of reference: an immutable registry of marked points over
/// exact coordinates, plus the steady-union partition of the bodies glued to
/// it. Marking and gluing mutate the frame; everything else is read-only.
/// A frame must be confined to one thread or externally synchronized.
class Frame {
public:
    explicit Frame(int dimension);
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;
    Frame(Frame&&) = default;
    Frame& operator=(Frame&&) = default;

    int dimension() const { return dim_; }
    uint32_t tag() const { return tag_; }

    /// Marks a point; coordinates whose difference is exactly zero resolve
    /// to the already-registered PointId. Equality must be proven: a pair
    /// undecided at the precision ceiling is registered as a new point.
    PointId mark_point(const Coords& coords);

    const Coords& coords(PointId p) const;
    Scalar coord(PointId p, int axis) const;
    size_t point_count() const { return points_.size(); }

    /// The distinguished base point (the origin of canonical vector
    /// representatives), marked lazily.
    PointId base_point();

    void check_point(PointId p) const;

    // -- bodies and steady unions --
    BodyId register_body(std::string name = {});
    void steady_union(BodyId a, BodyId b);
    bool same_frame(BodyId a, BodyId b) const;
    size_t body_count() const { return parent_.size(); }
    const std::string& body_name(BodyId b) const;
    /// Every body must reach exactly one root; cheap structural audit.
    bool partition_consistent() const;

private:
    struct PointRec {
        Coords coords;
        double ax = 0, ay = 0, az = 0;  // coarse approximations for dedup prefilter
    };

    uint32_t find(uint32_t i) const;
    void check_body(BodyId b) const;

    int dim_;
    uint32_t tag_;
    std::vector<PointRec> points_;
    int base_point_index_ = -1;

    mutable std::vector<uint32_t> parent_;  // path compression
    std::vector<uint32_t> rank_;
    std::vector<std::string> body_names_;
};

}  // namespace opgeo
