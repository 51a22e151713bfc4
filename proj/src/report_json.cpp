#include "latprim/report_json.hpp"

namespace latprim {

Json witness_to_json(const WitnessRecord& w) {
    Json obj = Json::object();
    for (const auto& [key, value] : w.fields) obj[key] = value;
    return obj;
}

Json verdict_to_json(const Verdict& v, const std::string& lattice_label) {
    Json obj = Json::object();
    obj["theorem"] = std::string(theorem_tag(v.theorem));
    obj["lattice"] = lattice_label;
    obj["status"] = std::string(to_string(v.status));
    obj["instances_checked"] = v.instances_checked;
    if (v.status == VerdictStatus::ProbeReport) {
        obj["confirming"] = v.confirming;
        obj["violating"] = v.violating;
    }
    Json witnesses = Json::array();
    for (const WitnessRecord& w : v.witnesses) witnesses.push_back(witness_to_json(w));
    obj["witnesses"] = std::move(witnesses);
    return obj;
}

Json suite_to_json(const SuiteReport& report, const SearchConfig& cfg) {
    Json obj = Json::object();
    obj["family"] = report.family_label;
    Json phis = Json::array();
    for (const UnaryMapSpec& m : cfg.phis) phis.push_back(m.label());
    obj["phis"] = std::move(phis);
    Json deltas = Json::array();
    for (const UnaryMapSpec& m : cfg.deltas) deltas.push_back(m.label());
    obj["deltas"] = std::move(deltas);
    Json results = Json::array();
    for (const SuiteEntry& entry : report.entries)
        results.push_back(verdict_to_json(entry.verdict, entry.lattice));
    obj["results"] = std::move(results);
    obj["violated"] = report.violated;
    Json nv = Json::object();
    for (const auto& [tag, count] : report.non_vacuous) nv[tag] = count;
    obj["non_vacuous"] = std::move(nv);
    obj["required_non_vacuous"] = report.required_non_vacuous;
    obj["required_missing"] = report.required_missing;
    obj["ok"] = report.ok();
    return obj;
}

Json search_to_json(const SearchReport& report) {
    Json obj = Json::object();
    obj["claim"] = report.claim;
    obj["family"] = report.family_label;
    obj["lattices_scanned"] = report.lattices_scanned;
    Json hits = Json::array();
    for (const SearchHit& hit : report.hits) {
        Json h = Json::object();
        h["lattice"] = hit.lattice;
        h["total_found"] = hit.total_found;
        if (hit.confirming > 0) h["confirming"] = hit.confirming;
        Json witnesses = Json::array();
        for (const WitnessRecord& w : hit.witnesses) witnesses.push_back(witness_to_json(w));
        h["witnesses"] = std::move(witnesses);
        hits.push_back(std::move(h));
    }
    obj["hits"] = std::move(hits);
    return obj;
}

Json validation_to_json(const ValidationReport& report, const Lattice* names_from) {
    Json obj = Json::object();
    obj["ok"] = report.ok();
    Json failures = Json::array();
    for (const ValidationFailure& f : report.failures) {
        Json entry = Json::object();
        entry["axiom"] = f.axiom;
        Json witness = Json::array();
        for (ElementId id : f.witness) {
            if (names_from && names_from->valid_id(id))
                witness.push_back(names_from->name(id));
            else
                witness.push_back(id);
        }
        entry["witness"] = std::move(witness);
        failures.push_back(std::move(entry));
    }
    obj["failures"] = std::move(failures);
    return obj;
}

Json predicate_to_json(const PredicateReport& report, const Lattice& L) {
    Json obj = Json::object();
    obj["holds"] = report.holds;
    Json witnesses = Json::array();
    for (const std::vector<ElementId>& tuple : report.witnesses) {
        Json t = Json::array();
        for (ElementId id : tuple) t.push_back(L.name(id));
        witnesses.push_back(std::move(t));
    }
    obj["witnesses"] = std::move(witnesses);
    return obj;
}

}  // namespace latprim
