#include <doctest.h>

#include "latprim/construct.hpp"
#include "latprim/report_json.hpp"
#include "latprim/theorems.hpp"
#include "oracles.hpp"

using namespace latprim;
using oracles::id_of;

namespace {

SearchConfig cfg_for(long long lo, long long hi) {
    return SearchConfig::defaults(FamilySpec::zn_range(lo, hi));
}

const Verdict* find_entry(const SuiteReport& report, const std::string& lattice,
                          std::string_view tag) {
    for (const SuiteEntry& entry : report.entries)
        if (entry.lattice == lattice && theorem_tag(entry.verdict.theorem) == tag)
            return &entry.verdict;
    return nullptr;
}

bool witness_has(const WitnessRecord& w, const std::string& key, const std::string& value) {
    for (const auto& [k, v] : w.fields)
        if (k == key && v == value) return true;
    return false;
}

bool hit_contains(const SearchHit& hit,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
    for (const WitnessRecord& w : hit.witnesses) {
        bool all = true;
        for (const auto& [k, v] : fields)
            if (!witness_has(w, k, v)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("the catalogue is closed and tags are unique") {
    const auto& catalogue = theorem_catalogue();
    CHECK(catalogue.size() == 24);
    for (const TheoremInfo& info : catalogue) {
        CAPTURE(info.tag);
        CHECK(theorem_from_tag(info.tag) == info.id);
        CHECK(theorem_tag(info.id) == info.tag);
    }
    CHECK_FALSE(theorem_from_tag("NOT-A-TAG").has_value());
}

TEST_CASE("characterization checker counts every instance on Z24") {
    SearchConfig cfg = cfg_for(24, 24);
    Verdict v = check(zn_ideal_lattice(24), TheoremId::Characterization, cfg);
    CHECK(v.status == VerdictStatus::Holds);
    // 8 choices of b, 7 proper p, 7 phis (including none), 2 deltas.
    CHECK(v.instances_checked == 8 * 7 * 7 * 2);
    CHECK(v.witnesses.empty());
}

TEST_CASE("idempotent checker covers the idempotent targets of Z30") {
    SearchConfig cfg = cfg_for(30, 30);
    Verdict v = check(zn_ideal_lattice(30), TheoremId::IdempotentVacuous, cfg);
    CHECK(v.status == VerdictStatus::Holds);
    // Proper idempotents of Z30 are (6), (10), (15), (0).
    CHECK(v.instances_checked == 4 * 8 * 2);
}

TEST_CASE("pinned example checkers fire only on their lattice") {
    SearchConfig cfg = cfg_for(24, 24);
    Verdict on_24 = check(zn_ideal_lattice(24), TheoremId::ExampleZ24, cfg);
    CHECK(on_24.status == VerdictStatus::Holds);
    CHECK(on_24.instances_checked == 3);

    Verdict on_30 = check(zn_ideal_lattice(30), TheoremId::ExampleZ24, cfg);
    CHECK(on_30.status == VerdictStatus::Vacuous);

    // The same tables loaded from a file are recognized too.
    Lattice reloaded = lattice_from_text(lattice_to_text(zn_ideal_lattice(24)));
    CHECK(check(reloaded, TheoremId::ExampleZ24, cfg).status == VerdictStatus::Holds);
}

TEST_CASE("quasi-local m-square checker is non-vacuous on Z9") {
    SearchConfig cfg = cfg_for(9, 9);
    Verdict v = check(zn_ideal_lattice(9), TheoremId::QuasilocalMSquare, cfg);
    CHECK(v.status == VerdictStatus::Holds);
    // p ranges over (3) and (0), b over all three elements.
    CHECK(v.instances_checked == 2 * 3);
}

TEST_CASE("local Noether domain checker fires exactly on prime moduli") {
    SearchConfig cfg = cfg_for(2, 12);
    CHECK(check(zn_ideal_lattice(5), TheoremId::LocalNoetherDomain, cfg).status ==
          VerdictStatus::Holds);
    CHECK(check(zn_ideal_lattice(12), TheoremId::LocalNoetherDomain, cfg).status ==
          VerdictStatus::Vacuous);
    CHECK(check(zn_ideal_lattice(9), TheoremId::LocalNoetherDomain, cfg).status ==
          VerdictStatus::Vacuous);  // quasi-local but not a domain
}

TEST_CASE("restricted cancellation hypotheses never fire on finite lattices") {
    SearchConfig cfg = cfg_for(2, 60);
    for (long long n = 2; n <= 60; ++n) {
        CAPTURE(n);
        Lattice L = zn_ideal_lattice(n);
        CHECK(check(L, TheoremId::RclPhi2, cfg).status == VerdictStatus::Vacuous);
        CHECK(check(L, TheoremId::RclPhiN, cfg).status == VerdictStatus::Vacuous);
    }
}

TEST_CASE("every non-probe checker holds or is vacuous on a spread of lattices") {
    SearchConfig cfg = cfg_for(2, 40);
    for (long long n : {2, 4, 8, 9, 12, 24, 30, 36}) {
        Lattice L = zn_ideal_lattice(n);
        for (const TheoremInfo& info : theorem_catalogue()) {
            if (info.probe) continue;
            Verdict v = check(L, info.id, cfg);
            CAPTURE(n);
            CAPTURE(info.tag);
            CHECK((v.status == VerdictStatus::Holds || v.status == VerdictStatus::Vacuous));
            CHECK(v.violating == 0);
        }
    }
}

TEST_CASE("the probe reports violations without asserting them") {
    SearchConfig cfg = cfg_for(8, 8);
    Verdict v = check(zn_ideal_lattice(8), TheoremId::RemarkNPotentProbe, cfg);
    CHECK(v.status == VerdictStatus::ProbeReport);
    CHECK(v.instances_checked == v.confirming + v.violating);
    CHECK(v.violating > 0);  // e.g. b=(4), p=(2), n=3, delta0
    bool found = false;
    for (const WitnessRecord& w : v.witnesses)
        if (witness_has(w, "b", "(4)") && witness_has(w, "p", "(2)") && witness_has(w, "n", "3"))
            found = true;
    CHECK(found);
}

TEST_CASE("run_suite over zn:2..40 is clean and deterministic") {
    SearchConfig cfg = cfg_for(2, 40);
    SuiteReport report = run_suite(cfg);
    CHECK(report.violated == 0);
    CHECK(report.required_missing.empty());
    CHECK(report.ok());

    // 23 non-probe checkers per lattice.
    CHECK(report.entries.size() == 39 * 23);

    CHECK(report.non_vacuous.at("CHARACTERIZATION") == 39);
    CHECK(report.non_vacuous.at("EXAMPLE-Z24") == 1);
    CHECK(report.non_vacuous.at("EXAMPLE-Z30") == 1);
    CHECK(report.non_vacuous.at("EXAMPLE-Z8") == 1);
    CHECK(report.non_vacuous.at("RCL-PHI2") == 0);
    CHECK(report.non_vacuous.at("RCL-PHIN") == 0);
    CHECK(report.non_vacuous.at("LOCAL-NOETHER-DOMAIN") > 0);

    const Verdict* q9 = find_entry(report, "zn:9", "QUASILOCAL-MSQUARE");
    REQUIRE(q9 != nullptr);
    CHECK(q9->status == VerdictStatus::Holds);

    SuiteReport again = run_suite(cfg);
    CHECK(suite_to_json(report, cfg).dump() == suite_to_json(again, cfg).dump());
}

TEST_CASE("run_suite on a file family stays holds-or-vacuous") {
    std::string path = std::string(LATPRIM_TEST_DATA_DIR) + "/z2.lat";
    SearchConfig cfg = SearchConfig::defaults(FamilySpec::file_list({path}));
    SuiteReport report = run_suite(cfg);
    CHECK(report.ok());
    for (const SuiteEntry& entry : report.entries) {
        CAPTURE(theorem_tag(entry.verdict.theorem));
        CHECK((entry.verdict.status == VerdictStatus::Holds ||
               entry.verdict.status == VerdictStatus::Vacuous));
    }
}

TEST_CASE("search claims parse and reject garbage") {
    SearchClaim c1 = SearchClaim::parse("CHARACTERIZATION");
    CHECK(c1.theorem == TheoremId::Characterization);
    CHECK_FALSE(c1.converse);
    SearchClaim c2 = SearchClaim::parse("  converse of IMPLICATION-CHAIN ");
    CHECK(c2.theorem == TheoremId::ImplicationChain);
    CHECK(c2.converse);
    CHECK(c2.label() == "converse of IMPLICATION-CHAIN");
    CHECK_THROWS_AS(SearchClaim::parse("converse of NOPE"), std::invalid_argument);
}

TEST_CASE("searching a proved theorem finds nothing") {
    SearchConfig cfg = cfg_for(2, 30);
    SearchReport report = search(SearchClaim::parse("CHARACTERIZATION"), cfg);
    CHECK(report.hits.empty());
    CHECK(report.lattices_scanned == 29);
}

TEST_CASE("the searches recover the documented separations") {
    SearchConfig cfg = cfg_for(2, 30);
    cfg.witness_cap = 100000;

    SUBCASE("phi-delta-primary without delta-primary at Z30") {
        SearchReport r = search(SearchClaim::parse("converse of IMPLICATION-CHAIN"), cfg);
        REQUIRE_FALSE(r.hits.empty());
        const SearchHit* z30 = nullptr;
        for (const SearchHit& hit : r.hits)
            if (hit.lattice == "zn:30") z30 = &hit;
        REQUIRE(z30 != nullptr);
        CHECK(hit_contains(*z30, {{"b", "(2)"}, {"p", "(6)"}, {"delta", "delta1"}}));
    }
    SUBCASE("phi-delta-primary without phi-prime at Z24") {
        SearchReport r = search(SearchClaim::parse("converse of DELTA-MONOTONE"), cfg);
        const SearchHit* z24 = nullptr;
        for (const SearchHit& hit : r.hits)
            if (hit.lattice == "zn:24") z24 = &hit;
        REQUIRE(z24 != nullptr);
        CHECK(hit_contains(*z24, {{"b", "(2)"},
                                  {"p", "(4)"},
                                  {"phi", "phi2"},
                                  {"delta", "delta0"},
                                  {"gamma", "delta1"}}));
    }
    SUBCASE("phi-delta-primary without prime at Z24") {
        SearchReport r = search(SearchClaim::parse("converse of PRIME-IMPLIES-ALL"), cfg);
        const SearchHit* z24 = nullptr;
        for (const SearchHit& hit : r.hits)
            if (hit.lattice == "zn:24") z24 = &hit;
        REQUIRE(z24 != nullptr);
        CHECK(hit_contains(*z24, {{"b", "(2)"}, {"p", "(4)"}, {"phi", "phi2"}}));
    }
    SUBCASE("phi2-delta-primary without idempotent target at Z8") {
        SearchReport r = search(SearchClaim::parse("converse of IDEMPOTENT-VACUOUS"), cfg);
        const SearchHit* z8 = nullptr;
        for (const SearchHit& hit : r.hits)
            if (hit.lattice == "zn:8") z8 = &hit;
        REQUIRE(z8 != nullptr);
        CHECK(hit_contains(*z8, {{"b", "(2)"}, {"p", "(4)"}, {"delta", "delta1"}}));
    }
}

TEST_CASE("converse search is rejected where no separation semantics exist") {
    SearchConfig cfg = cfg_for(2, 10);
    CHECK_THROWS_AS(search(SearchClaim::parse("converse of EXAMPLE-Z24"), cfg),
                    std::invalid_argument);
}

TEST_CASE("verdict JSON carries the stable schema") {
    SearchConfig cfg = cfg_for(24, 24);
    Verdict v = check(zn_ideal_lattice(24), TheoremId::ExampleZ24, cfg);
    Json j = verdict_to_json(v, "zn:24");
    CHECK(j["theorem"] == "EXAMPLE-Z24");
    CHECK(j["lattice"] == "zn:24");
    CHECK(j["status"] == "holds");
    CHECK(j["instances_checked"] == 3);
    CHECK(j["witnesses"].is_array());
}
