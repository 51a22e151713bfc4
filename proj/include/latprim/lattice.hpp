#pragma once

// Finite multiplicative lattices as fully materialized tables.
//
// A lattice of order n stores, for elements identified by index 0..n-1:
//   - a partial order (leq table),
//   - binary join/meet tables (derived from leq at assembly time),
//   - a commutative, associative, join-distributive multiplication whose
//     identity is the top element,
//   - the ids of top and bottom.
//
// A Lattice is plain data plus read-only operations.  Nothing here assumes
// the tables are consistent: validate() checks every axiom exhaustively and
// reports the lexicographically first witness per violated axiom.  Instances
// are immutable after construction; all operations are safe to call
// concurrently.

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latprim {

using ElementId = int;

struct ValidationFailure {
    std::string axiom;               // stable token, e.g. "mul-associative"
    std::vector<ElementId> witness;  // minimal (lexicographically first) tuple
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
};

struct Lattice {
    int n = 0;
    std::vector<std::string> names;
    std::vector<std::uint8_t> leq_tab;   // n*n, leq_tab[i*n+j] != 0  <=>  i <= j
    std::vector<ElementId> join_tab;     // n*n binary least upper bounds
    std::vector<ElementId> meet_tab;     // n*n binary greatest lower bounds
    std::vector<ElementId> mul_tab;      // n*n commutative multiplication
    ElementId top = 0;
    ElementId bottom = 0;

    int order() const { return n; }

    bool leq(ElementId a, ElementId b) const {
        assert(valid_id(a) && valid_id(b));
        return leq_tab[static_cast<std::size_t>(a) * n + b] != 0;
    }
    ElementId join(ElementId a, ElementId b) const {
        assert(valid_id(a) && valid_id(b));
        return join_tab[static_cast<std::size_t>(a) * n + b];
    }
    ElementId meet(ElementId a, ElementId b) const {
        assert(valid_id(a) && valid_id(b));
        return meet_tab[static_cast<std::size_t>(a) * n + b];
    }
    ElementId mul(ElementId a, ElementId b) const {
        assert(valid_id(a) && valid_id(b));
        return mul_tab[static_cast<std::size_t>(a) * n + b];
    }

    // n-ary folds; join of nothing is bottom, meet of nothing is top.
    ElementId join_all(std::span<const ElementId> xs) const;
    ElementId meet_all(std::span<const ElementId> xs) const;

    // a^k by repeated multiplication; k must be >= 1.
    ElementId power(ElementId a, int k) const;

    bool is_proper(ElementId a) const { return a != top; }

    const std::string& name(ElementId a) const {
        assert(valid_id(a));
        return names[static_cast<std::size_t>(a)];
    }
    std::optional<ElementId> element_by_name(std::string_view name) const;

    bool valid_id(ElementId a) const { return a >= 0 && a < n; }

    // Elementwise equality of names and all tables.
    bool same_tables(const Lattice& other) const;
};

// Builds a lattice from a partial order and a multiplication table.  Join,
// meet, top and bottom are derived from leq.  Assembly is permissive: where
// a least upper bound (etc.) does not exist, a placeholder is stored and
// validate() will report the violation.  Throws std::invalid_argument only
// for structurally unusable input (ragged rows, out-of-range ids, duplicate
// or empty names, order < 2).
Lattice assemble_lattice(std::vector<std::string> names,
                         const std::vector<std::vector<int>>& leq_rows,
                         const std::vector<std::vector<ElementId>>& mul_rows);

// Exhaustive axiom check.  Structural problems (wrong table dimensions,
// out-of-range ids) are reported as one "structure" failure and short-circuit
// the axiom checks.  Axioms checked, one failure entry per axiom, each with
// the lexicographically first witness:
//   leq-reflexive, leq-antisymmetric, leq-transitive,
//   top-greatest, bottom-least, join-lub, meet-glb,
//   mul-commutative, mul-associative, mul-join-distributive,
//   mul-identity, mul-below-meet.
ValidationReport validate(const Lattice& L);

}  // namespace latprim
