#pragma once

#include <string>

namespace opgeo {

/// Three-valued verdict. Uncertain means the configured precision ceiling
/// was reached without a decision (only possible for comparisons involving
/// transcendental enclosures, or when symbolic decision is switched off).
enum class Tri { False, True, Uncertain };

/// Result of an exact comparison.
enum class Cmp { Less, Equal, Greater, Uncertain };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Uncertain;
}

inline Tri tri_or(Tri a, Tri b) {
    if (a == Tri::True || b == Tri::True) return Tri::True;
    if (a == Tri::False && b == Tri::False) return Tri::False;
    return Tri::Uncertain;
}

inline Tri tri_not(Tri a) {
    if (a == Tri::True) return Tri::False;
    if (a == Tri::False) return Tri::True;
    return Tri::Uncertain;
}

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        default: return "uncertain";
    }
}

inline const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "less";
        case Cmp::Equal: return "equal";
        case Cmp::Greater: return "greater";
        default: return "uncertain";
    }
}

}  // namespace opgeo
