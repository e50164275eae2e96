#include "opgeo/frame.hpp"

#include <atomic>
#include <cmath>

#include "opgeo/errors.hpp"

namespace opgeo {

namespace {
std::atomic<uint32_t> next_frame_tag{1};

// prefilter slack: equal values have double approximations far closer than
// this, so no true duplicate ever skips the exact comparison
bool roughly_equal(double a, double b) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= 1e-9 * scale;
}
}  // namespace

Frame::Frame(int dimension) : dim_(dimension), tag_(next_frame_tag.fetch_add(1)) {
    if (dimension != 2 && dimension != 3) {
        throw DimensionMismatch("frame dimension must be 2 or 3, got " + std::to_string(dimension));
    }
}

PointId Frame::mark_point(const Coords& coords) {
    if (static_cast<int>(coords.size()) != dim_) {
        throw DimensionMismatch("mark_point: expected " + std::to_string(dim_) + " coordinates, got " +
                                std::to_string(coords.size()));
    }
    PointRec rec;
    rec.coords = coords;
    rec.ax = coords[0].approx();
    rec.ay = coords[1].approx();
    rec.az = dim_ == 3 ? coords[2].approx() : 0.0;
    for (uint32_t i = 0; i < points_.size(); ++i) {
        const PointRec& p = points_[i];
        if (!roughly_equal(p.ax, rec.ax) || !roughly_equal(p.ay, rec.ay) || !roughly_equal(p.az, rec.az)) {
            continue;
        }
        bool all_equal = true;
        for (int k = 0; k < dim_; ++k) {
            if (compare(p.coords[k], coords[k]) != Cmp::Equal) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) return PointId{tag_, i};
    }
    points_.push_back(std::move(rec));
    return PointId{tag_, static_cast<uint32_t>(points_.size() - 1)};
}

const Coords& Frame::coords(PointId p) const {
    check_point(p);
    return points_[p.index].coords;
}

Scalar Frame::coord(PointId p, int axis) const {
    check_point(p);
    if (axis < 0 || axis >= dim_) throw DimensionMismatch("coordinate axis out of range");
    return points_[p.index].coords[axis];
}

PointId Frame::base_point() {
    if (base_point_index_ < 0) {
        PointId p = mark_point(Coords(dim_, Scalar()));
        base_point_index_ = static_cast<int>(p.index);
        return p;
    }
    return PointId{tag_, static_cast<uint32_t>(base_point_index_)};
}

void Frame::check_point(PointId p) const {
    if (p.frame != tag_) throw FrameMismatch("point belongs to a different frame of reference");
    if (p.index >= points_.size()) throw Error("dangling point id");
}

BodyId Frame::register_body(std::string name) {
    uint32_t idx = static_cast<uint32_t>(parent_.size());
    parent_.push_back(idx);
    rank_.push_back(0);
    body_names_.push_back(name.empty() ? "body" + std::to_string(idx) : std::move(name));
    return BodyId{tag_, idx};
}

void Frame::check_body(BodyId b) const {
    if (b.frame != tag_) throw UnknownBody("body belongs to a different frame");
    if (b.index >= parent_.size()) throw UnknownBody("unregistered body id");
}

uint32_t Frame::find(uint32_t i) const {
    uint32_t root = i;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[i] != root) {
        uint32_t up = parent_[i];
        parent_[i] = root;
        i = up;
    }
    return root;
}

void Frame::steady_union(BodyId a, BodyId b) {
    check_body(a);
    check_body(b);
    uint32_t ra = find(a.index);
    uint32_t rb = find(b.index);
    if (ra == rb) return;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
}

bool Frame::same_frame(BodyId a, BodyId b) const {
    check_body(a);
    check_body(b);
    return find(a.index) == find(b.index);
}

const std::string& Frame::body_name(BodyId b) const {
    check_body(b);
    return body_names_[b.index];
}

bool Frame::partition_consistent() const {
    for (uint32_t i = 0; i < parent_.size(); ++i) {
        if (parent_[i] >= parent_.size()) return false;
        uint32_t seen = 0;
        uint32_t j = i;
        while (parent_[j] != j) {
            j = parent_[j];
            if (++seen > parent_.size()) return false;  // cycle
        }
    }
    return true;
}

}  // namespace opgeo
