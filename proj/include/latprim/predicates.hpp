#pragma once

// Element- and lattice-level predicates.  One generalized kernel covers the
// whole primary-to family: with exclusion map phi (possibly `none`) and
// expansion delta,
//
//     b is phi-delta-primary to p  iff  for all x:
//         x*b <= p  and  (phi is none  or  x*b not<= phi(p))
//         implies  x <= delta(p)
//
// Specializations: (none, delta0) = prime to, (none, delta1) = primary to,
// (phi0, delta0) = weakly prime to, (phi0, delta1) = weakly primary to,
// (none, d) = d-primary to, (f, delta0) = f-prime to, (f, delta1) =
// f-primary to.  Quantifiers that the general theory restricts to compact
// elements range over the whole lattice here: in a finite lattice every
// element is compact.

#include <cstddef>
#include <vector>

#include "latprim/lattice.hpp"
#include "latprim/maps.hpp"

namespace latprim {

struct PredicateOptions {
    std::size_t witness_cap = 32;  // stored witnesses; scanning is always exhaustive
};

struct PredicateReport {
    bool holds = true;
    // Violating tuples in lexicographic element order, capped at witness_cap.
    // Single-variable predicates report one-element tuples.
    std::vector<std::vector<ElementId>> witnesses;
};

struct PrimaryQuery {
    ElementId b = 0;
    ElementId p = 0;           // must be proper
    UnaryMapSpec phi = UnaryMapSpec::none();
    UnaryMapSpec delta = UnaryMapSpec::delta0();
};

// The kernel.  Validates the query (p proper; delta an expansion; phi a
// reduction or none) and throws std::invalid_argument naming the failed
// check.  Witnesses are the violating x's.
PredicateReport generalized_primary_to(const Lattice& L, const PrimaryQuery& query,
                                       const PredicateOptions& opts = {});

// x*b <= p^n implies x <= delta(p), for n >= 2.
PredicateReport n_potent_primary_to(const Lattice& L, ElementId b, ElementId p, int n,
                                    const UnaryMapSpec& delta, const PredicateOptions& opts = {});

// Fast paths over prepared maps; no validation, no witness collection.
bool primary_to_holds(const Lattice& L, ElementId b, ElementId p, const PreparedMap& phi,
                      const PreparedMap& delta);
bool n_potent_holds(const Lattice& L, ElementId b, ElementId p, int n, const PreparedMap& delta);

// --- element predicates -------------------------------------------------

// p proper; ab <= p implies a <= p or b <= p.  Witnesses are pairs (a, b).
PredicateReport is_prime_element(const Lattice& L, ElementId p, const PredicateOptions& opts = {});
// p proper; ab <= p implies a <= p or b <= radical(p).
PredicateReport is_primary_element(const Lattice& L, ElementId p, const PredicateOptions& opts = {});
// p proper; p < x <= 1 implies x = 1.  Witnesses are the x strictly between.
PredicateReport is_maximal(const Lattice& L, ElementId p, const PredicateOptions& opts = {});
PredicateReport is_idempotent(const Lattice& L, ElementId a);
// ab = 0 for some b != 0.  Bottom plays the role of 0, so bottom itself is a
// zero divisor whenever the order is >= 2.
PredicateReport is_zero_divisor(const Lattice& L, ElementId a);
// Meet principal (a ^ be = ((a:e) ^ b)e) and join principal
// ((ae v b):e = (b:e) v a) for all a, b.  Witnesses are pairs (a, b).
PredicateReport is_principal_element(const Lattice& L, ElementId e, const PredicateOptions& opts = {});
// ab = ac != 0 implies b = c.  Witnesses are pairs (b, c).
PredicateReport satisfies_rcl(const Lattice& L, ElementId a, const PredicateOptions& opts = {});
// Some power of a equals bottom.
PredicateReport is_nilpotent(const Lattice& L, ElementId a);

// --- lattice predicates ---------------------------------------------------

// No nonzero a, b with ab = 0.
PredicateReport is_domain(const Lattice& L, const PredicateOptions& opts = {});
// Exactly one maximal element; on failure the witness lists all of them.
PredicateReport is_quasi_local(const Lattice& L);
// a <= c implies a v (b ^ c) = (a v b) ^ c.  Witnesses are triples (a, b, c).
PredicateReport is_modular(const Lattice& L, const PredicateOptions& opts = {});
// Every element is a join of principal elements.
PredicateReport is_pg(const Lattice& L, const PredicateOptions& opts = {});
// Modular and principally generated (chain conditions are automatic here).
PredicateReport is_noether(const Lattice& L, const PredicateOptions& opts = {});
// Noether with precisely one maximal prime element.
PredicateReport is_local_noether(const Lattice& L, const PredicateOptions& opts = {});

std::vector<ElementId> maximal_elements(const Lattice& L);
std::vector<ElementId> prime_elements(const Lattice& L);
std::vector<ElementId> principal_elements(const Lattice& L);
// Maximal members, under leq, of the set of prime elements.
std::vector<ElementId> maximal_prime_elements(const Lattice& L);

}  // namespace latprim
