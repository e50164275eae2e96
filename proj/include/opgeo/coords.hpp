#pragma once

#include "opgeo/frame.hpp"

namespace opgeo {

/// Exact coordinate-tuple arithmetic shared by the instrument modules.

inline Coords coords_add(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Coords coords_sub(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Coords coords_scale(const Coords& a, const Scalar& q) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * q;
    return r;
}

inline Scalar dot(const Coords& a, const Coords& b) {
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Scalar squared_norm(const Coords& a) { return dot(a, a); }

inline Scalar cross2(const Coords& a, const Coords& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Coords cross3(const Coords& a, const Coords& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool coords_all_zero(const Coords& a) {
    for (const auto& c : a) {
        if (sign(c) != Cmp::Equal) return false;
    }
    return true;
}

inline bool coords_equal(const Coords& a, const Coords& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (compare(a[i], b[i]) != Cmp::Equal) return false;
    }
    return true;
}

}  // namespace opgeo
