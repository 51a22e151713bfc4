#pragma once

// Residuation, radicals, and the unary map families used by the primary-to
// predicates: expansion maps (delta position, a <= d(a), monotone) and
// reduction maps (phi position, f(p) <= p).
//
// A UnaryMapSpec names a map symbolically; PreparedMap materializes it on a
// concrete lattice as a value table, validating it for the position it will
// occupy.  The special kind `none` denotes the absence of an exclusion
// clause in the predicates and has no value.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latprim/lattice.hpp"

namespace latprim {

// (a : b) = join of all x with x*b <= a.
ElementId residual(const Lattice& L, ElementId a, ElementId b);

// Radical of a: join of all x some power of which lies below a.  The power
// search stops at the first repeated power (orbits are finite).
ElementId radical(const Lattice& L, ElementId a);

// Distinct powers a^1, a^2, ... up to (excluding) the first repetition.
std::vector<ElementId> power_orbit(const Lattice& L, ElementId a);

enum class MapKind {
    Delta0,    // identity
    Delta1,    // radical
    PhiNone,   // no exclusion clause; not evaluable
    Phi0,      // constant bottom
    Phi1,      // identity
    Phi2,      // p^2
    PhiN,      // p^n, n >= 2
    PhiOmega,  // meet of the full power orbit of p
    Table,     // explicit value table
};

struct UnaryMapSpec {
    MapKind kind = MapKind::Delta0;
    int exponent = 0;               // PhiN only
    std::vector<ElementId> table;   // Table only

    static UnaryMapSpec delta0() { return {MapKind::Delta0}; }
    static UnaryMapSpec delta1() { return {MapKind::Delta1}; }
    static UnaryMapSpec none() { return {MapKind::PhiNone}; }
    static UnaryMapSpec phi0() { return {MapKind::Phi0}; }
    static UnaryMapSpec phi1() { return {MapKind::Phi1}; }
    static UnaryMapSpec phi2() { return {MapKind::Phi2}; }
    static UnaryMapSpec phi_n(int n);
    static UnaryMapSpec phi_omega() { return {MapKind::PhiOmega}; }
    static UnaryMapSpec from_table(std::vector<ElementId> values);

    bool is_none() const { return kind == MapKind::PhiNone; }

    // CLI-facing name: delta0, delta1, none, phi0, phi1, phi2, phiN:<n>,
    // phiomega, table.
    std::string label() const;

    // Inverse of label(); also accepts phi<k> for k >= 3.  Table maps are
    // not parseable from a plain string (the CLI resolves @file itself).
    static UnaryMapSpec parse(std::string_view s);

    bool operator==(const UnaryMapSpec&) const = default;
};

ElementId eval_map(const Lattice& L, const UnaryMapSpec& m, ElementId p);

struct MapCheck {
    bool ok = true;
    std::string condition;            // violated condition when !ok
    std::vector<ElementId> witness;   // lexicographically first
};

// Expansion check: a <= m(a) for all a, and a <= b implies m(a) <= m(b).
MapCheck is_expansion(const Lattice& L, const UnaryMapSpec& m);

// Reduction check: m(p) <= p for all p.
MapCheck is_reduction(const Lattice& L, const UnaryMapSpec& m);

// Pointwise order on maps: m1(a) <= m2(a) for every a.
bool map_leq(const Lattice& L, const UnaryMapSpec& m1, const UnaryMapSpec& m2);

// Pointwise meet with the identity, yielding a reduction from an arbitrary
// table map.  Builtin reductions are returned unchanged.
UnaryMapSpec normalize_reduction(const Lattice& L, const UnaryMapSpec& m);

// A unary map materialized on one lattice.  `none` prepares to an empty map
// that must not be evaluated.
class PreparedMap {
public:
    // Validates table bounds; semantic validity (expansion/reduction) is the
    // caller's concern (see prepare_delta / prepare_phi).
    static PreparedMap prepare(const Lattice& L, const UnaryMapSpec& spec);

    // Position-checked preparation.  Throws std::invalid_argument naming the
    // failed check.  prepare_phi accepts `none`.
    static PreparedMap prepare_delta(const Lattice& L, const UnaryMapSpec& spec);
    static PreparedMap prepare_phi(const Lattice& L, const UnaryMapSpec& spec);

    bool none() const { return none_; }
    ElementId operator[](ElementId p) const { return values_[static_cast<std::size_t>(p)]; }
    const UnaryMapSpec& spec() const { return spec_; }
    std::string label() const { return spec_.label(); }

private:
    UnaryMapSpec spec_;
    std::vector<ElementId> values_;
    bool none_ = false;
};

}  // namespace latprim
