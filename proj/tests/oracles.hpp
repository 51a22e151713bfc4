#pragma once

// Test-only oracles: independent brute-force routes used to freeze expected
// values.  They work from the order relation and raw tables alone and must
// stay independent of the library's own implementations.

#include <optional>
#include <vector>

#include <doctest.h>

#include "latprim/lattice.hpp"

namespace oracles {

using latprim::ElementId;
using latprim::Lattice;

inline ElementId id_of(const Lattice& L, const std::string& name) {
    std::optional<ElementId> id = L.element_by_name(name);
    REQUIRE_MESSAGE(id.has_value(), "no element named " << name);
    return *id;
}

// Least upper bound by scanning all upper bounds; nullopt when none is least.
inline std::optional<ElementId> brute_join(const Lattice& L, ElementId a, ElementId b) {
    for (ElementId c = 0; c < L.order(); ++c) {
        if (!L.leq(a, c) || !L.leq(b, c)) continue;
        bool least = true;
        for (ElementId d = 0; d < L.order(); ++d)
            if (L.leq(a, d) && L.leq(b, d) && !L.leq(c, d)) { least = false; break; }
        if (least) return c;
    }
    return std::nullopt;
}

// The residual as a right adjoint: the leq-greatest x with x*b <= a, checked
// to dominate every solution.  nullopt when no greatest solution exists.
inline std::optional<ElementId> brute_residual(const Lattice& L, ElementId a, ElementId b) {
    std::optional<ElementId> best;
    for (ElementId x = 0; x < L.order(); ++x) {
        if (!L.leq(L.mul(x, b), a)) continue;
        if (!best || L.leq(*best, x)) best = x;
    }
    if (!best) return std::nullopt;
    for (ElementId x = 0; x < L.order(); ++x)
        if (L.leq(L.mul(x, b), a) && !L.leq(x, *best)) return std::nullopt;
    return best;
}

// Radical by scanning powers x^1..x^order (pigeonhole: a longer power chain
// would have to repeat).
inline ElementId brute_radical(const Lattice& L, ElementId a) {
    ElementId acc = L.bottom;
    for (ElementId x = 0; x < L.order(); ++x) {
        ElementId p = x;
        for (int k = 1; k <= L.order(); ++k) {
            if (L.leq(p, a)) {
                acc = L.join(acc, x);
                break;
            }
            p = L.mul(p, x);
        }
    }
    return acc;
}

}  // namespace oracles
