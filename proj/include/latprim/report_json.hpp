#pragma once

// JSON rendering of reports.  All documents use insertion-ordered objects so
// identical inputs produce byte-identical output.
//
// Schemas:
//   verdict: {theorem, lattice, status, instances_checked, witnesses[]}
//            probes add confirming/violating counts
//   suite:   {family, phis[], deltas[], results[verdict...], violated,
//             non_vacuous{}, required_non_vacuous[], required_missing[], ok}
//   search:  {claim, family, lattices_scanned,
//             hits[{lattice, total_found, witnesses[]}]}
//   validation: {ok, failures[{axiom, witness[]}]}
//
// Witness tuples are objects of labeled element names, e.g.
// {"b":"(2)","p":"(4)","phi":"phi2"}.

#include <json.hpp>

#include "latprim/lattice.hpp"
#include "latprim/predicates.hpp"
#include "latprim/theorems.hpp"

namespace latprim {

using Json = nlohmann::ordered_json;

Json witness_to_json(const WitnessRecord& w);
Json verdict_to_json(const Verdict& v, const std::string& lattice_label);
Json suite_to_json(const SuiteReport& report, const SearchConfig& cfg);
Json search_to_json(const SearchReport& report);
Json validation_to_json(const ValidationReport& report, const Lattice* names_from);
Json predicate_to_json(const PredicateReport& report, const Lattice& L);

}  // namespace latprim
