// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its runtime.  Every tolerance is pinned in code.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "latprim/construct.hpp"
#include "latprim/predicates.hpp"
#include "latprim/theorems.hpp"

using namespace latprim;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void report(int number, const char* name, bool ok, double secs, double limit) {
    std::printf("ACCEPTANCE %d %-28s %s (%.2fs, limit %.0fs)\n", number, name,
                ok ? "PASS" : "FAIL", secs, limit);
    std::fflush(stdout);
    CHECK(ok);
    CHECK(secs < limit);
}

ElementId el(const Lattice& L, const char* name) { return *L.element_by_name(name); }

bool kernel(const Lattice& L, const char* b, const char* p, UnaryMapSpec phi,
            UnaryMapSpec delta) {
    return generalized_primary_to(L, {el(L, b), el(L, p), phi, delta}).holds;
}

bool witness_matches(const WitnessRecord& w,
                     const std::vector<std::pair<std::string, std::string>>& fields) {
    for (const auto& [k, v] : fields) {
        bool found = false;
        for (const auto& [wk, wv] : w.fields)
            if (wk == k && wv == v) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

const SearchHit* hit_for(const SearchReport& r, const std::string& lattice) {
    for (const SearchHit& hit : r.hits)
        if (hit.lattice == lattice) return &hit;
    return nullptr;
}

}  // namespace

TEST_CASE("criterion 1: Z24 example reproduction") {
    Stopwatch timer;
    Lattice L = zn_ideal_lattice(24);
    bool ok = kernel(L, "(2)", "(4)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1()) == true &&
              kernel(L, "(2)", "(4)", UnaryMapSpec::phi2(), UnaryMapSpec::delta0()) == false &&
              kernel(L, "(2)", "(4)", UnaryMapSpec::none(), UnaryMapSpec::delta0()) == false;
    report(1, "example-z24", ok, timer.seconds(), 1.0);
}

TEST_CASE("criterion 2: Z30 example reproduction") {
    Stopwatch timer;
    Lattice L = zn_ideal_lattice(30);
    bool ok =
        kernel(L, "(2)", "(6)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1()) == true &&
        kernel(L, "(2)", "(6)", UnaryMapSpec::none(), UnaryMapSpec::delta1()) == false &&
        kernel(L, "(3)", "(6)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1()) == true &&
        n_potent_primary_to(L, el(L, "(3)"), el(L, "(6)"), 2, UnaryMapSpec::delta0()).holds ==
            false;
    report(2, "example-z30", ok, timer.seconds(), 1.0);
}

TEST_CASE("criterion 3: Z8 example reproduction") {
    Stopwatch timer;
    Lattice L = zn_ideal_lattice(8);
    bool ok =
        kernel(L, "(2)", "(4)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1()) == true &&
        is_idempotent(L, el(L, "(4)")).holds == false &&
        n_potent_primary_to(L, el(L, "(2)"), el(L, "(4)"), 2, UnaryMapSpec::delta0()).holds ==
            true &&
        kernel(L, "(2)", "(4)", UnaryMapSpec::none(), UnaryMapSpec::delta0()) == false;
    report(3, "example-z8", ok, timer.seconds(), 1.0);
}

TEST_CASE("criterion 4: master regression over zn:2..120") {
    Stopwatch timer;
    SearchConfig cfg = SearchConfig::defaults(FamilySpec::zn_range(2, 120));
    SuiteReport suite = run_suite(cfg);

    bool zero_violated = suite.violated == 0;
    bool ledger = suite.non_vacuous.at("CHARACTERIZATION") > 0 &&
                  suite.non_vacuous.at("IMPLICATION-CHAIN") > 0 &&
                  suite.non_vacuous.at("IDEMPOTENT-VACUOUS") > 0 &&
                  suite.non_vacuous.at("PB-NOT-UNDER-PHI") > 0;
    bool q9 = false;
    for (const SuiteEntry& entry : suite.entries)
        if (entry.lattice == "zn:9" &&
            theorem_tag(entry.verdict.theorem) == std::string_view("QUASILOCAL-MSQUARE"))
            q9 = entry.verdict.status == VerdictStatus::Holds;
    bool ok = zero_violated && ledger && q9 && suite.required_missing.empty();
    report(4, "master-regression", ok, timer.seconds(), 60.0);
}

TEST_CASE("criterion 5: characterization agrees with the definitional oracle") {
    Stopwatch timer;
    std::vector<UnaryMapSpec> phis = {UnaryMapSpec::none(), UnaryMapSpec::phi0(),
                                      UnaryMapSpec::phi1(), UnaryMapSpec::phi2(),
                                      UnaryMapSpec::phi_n(3), UnaryMapSpec::phi_n(4),
                                      UnaryMapSpec::phi_omega()};
    std::vector<UnaryMapSpec> deltas = {UnaryMapSpec::delta0(), UnaryMapSpec::delta1()};
    long long disagreements = 0;
    for (long long n : {24, 30, 8}) {
        Lattice L = zn_ideal_lattice(n);
        for (const UnaryMapSpec& phi_spec : phis)
            for (const UnaryMapSpec& delta_spec : deltas) {
                PreparedMap phi = PreparedMap::prepare_phi(L, phi_spec);
                PreparedMap delta = PreparedMap::prepare_delta(L, delta_spec);
                for (ElementId b = 0; b < L.order(); ++b)
                    for (ElementId p = 0; p < L.order(); ++p) {
                        if (!L.is_proper(p)) continue;
                        // Definitional route, written out in full.
                        bool definitional = true;
                        for (ElementId x = 0; x < L.order(); ++x) {
                            ElementId xb = L.mul(x, b);
                            if (!L.leq(xb, p)) continue;
                            if (!phi.none() && L.leq(xb, phi[p])) continue;
                            if (!L.leq(x, delta[p])) { definitional = false; break; }
                        }
                        // Residual route.
                        ElementId pb = residual(L, p, b);
                        bool residual_route =
                            L.leq(pb, delta[p]) ||
                            (!phi.none() && pb == residual(L, phi[p], b));
                        if (definitional != residual_route) ++disagreements;
                    }
            }
    }
    report(5, "characterization-oracle", disagreements == 0, timer.seconds(), 60.0);
}

TEST_CASE("criterion 6: Galois residuation on every zn up to 120") {
    Stopwatch timer;
    long long violations = 0;
    for (long long n = 2; n <= 120; ++n) {
        Lattice L = zn_ideal_lattice(n);
        for (ElementId a = 0; a < L.order(); ++a)
            for (ElementId b = 0; b < L.order(); ++b) {
                ElementId r = residual(L, a, b);
                for (ElementId x = 0; x < L.order(); ++x)
                    if (L.leq(x, r) != L.leq(L.mul(x, b), a)) ++violations;
            }
    }
    report(6, "galois-residuation", violations == 0, timer.seconds(), 60.0);
}

TEST_CASE("criterion 7: pointwise map chain on every zn up to 120") {
    Stopwatch timer;
    long long violations = 0;
    for (long long n = 2; n <= 120; ++n) {
        Lattice L = zn_ideal_lattice(n);
        const UnaryMapSpec chain[] = {UnaryMapSpec::phi0(),   UnaryMapSpec::phi_omega(),
                                      UnaryMapSpec::phi_n(4), UnaryMapSpec::phi_n(3),
                                      UnaryMapSpec::phi2(),   UnaryMapSpec::phi1(),
                                      UnaryMapSpec::delta0(), UnaryMapSpec::delta1()};
        for (std::size_t i = 0; i + 1 < std::size(chain); ++i)
            if (!map_leq(L, chain[i], chain[i + 1])) ++violations;
    }
    report(7, "map-order-chain", violations == 0, timer.seconds(), 60.0);
}

TEST_CASE("criterion 8: searches recover the documented separations") {
    Stopwatch timer;
    SearchConfig cfg = SearchConfig::defaults(FamilySpec::zn_range(2, 30));
    cfg.witness_cap = 1000000;

    auto ascending = [](const SearchReport& r) {
        long long last = 0;
        for (const SearchHit& hit : r.hits) {
            long long n = std::stoll(hit.lattice.substr(3));
            if (n <= last) return false;
            last = n;
        }
        return true;
    };

    SearchReport not_delta_primary =
        search(SearchClaim::parse("converse of IMPLICATION-CHAIN"), cfg);
    const SearchHit* z30 = hit_for(not_delta_primary, "zn:30");
    bool sep1 = z30 && ascending(not_delta_primary);
    if (sep1) {
        bool found = false;
        for (const WitnessRecord& w : z30->witnesses)
            if (witness_matches(w, {{"b", "(2)"}, {"p", "(6)"}, {"delta", "delta1"}}))
                found = true;
        sep1 = found;
    }

    SearchReport not_phi_prime = search(SearchClaim::parse("converse of DELTA-MONOTONE"), cfg);
    const SearchHit* z24a = hit_for(not_phi_prime, "zn:24");
    bool sep2 = z24a && ascending(not_phi_prime);
    if (sep2) {
        bool found = false;
        for (const WitnessRecord& w : z24a->witnesses)
            if (witness_matches(w, {{"b", "(2)"},
                                    {"p", "(4)"},
                                    {"phi", "phi2"},
                                    {"delta", "delta0"},
                                    {"gamma", "delta1"}}))
                found = true;
        sep2 = found;
    }

    SearchReport not_prime = search(SearchClaim::parse("converse of PRIME-IMPLIES-ALL"), cfg);
    const SearchHit* z24b = hit_for(not_prime, "zn:24");
    bool sep3 = z24b && ascending(not_prime);
    if (sep3) {
        bool found = false;
        for (const WitnessRecord& w : z24b->witnesses)
            if (witness_matches(w, {{"b", "(2)"}, {"p", "(4)"}, {"phi", "phi2"},
                                    {"delta", "delta1"}}))
                found = true;
        sep3 = found;
    }

    SearchReport not_idempotent =
        search(SearchClaim::parse("converse of IDEMPOTENT-VACUOUS"), cfg);
    const SearchHit* z8 = hit_for(not_idempotent, "zn:8");
    bool sep4 = z8 && ascending(not_idempotent);
    if (sep4) {
        bool found = false;
        for (const WitnessRecord& w : z8->witnesses)
            if (witness_matches(w, {{"b", "(2)"}, {"p", "(4)"}, {"delta", "delta1"}}))
                found = true;
        sep4 = found;
    }

    report(8, "separation-searches", sep1 && sep2 && sep3 && sep4, timer.seconds(), 60.0);
}

TEST_CASE("criterion 9: validator accepts zn up to 200 and rejects perturbations") {
    Stopwatch timer;
    bool all_valid = true;
    for (long long n = 2; n <= 200; ++n)
        if (!validate(zn_ideal_lattice(n)).ok()) all_valid = false;

    Lattice base = zn_ideal_lattice(24);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> pick(0, base.order() - 1);
    int rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Lattice L = base;
        int i = pick(rng), j = pick(rng);
        ElementId replacement = pick(rng);
        while (replacement == L.mul(i, j)) replacement = pick(rng);
        L.mul_tab[static_cast<std::size_t>(i) * L.order() + j] = replacement;
        ValidationReport r = validate(L);
        if (!r.ok() && !r.failures.empty() && !r.failures.front().witness.empty()) ++rejected;
    }
    report(9, "axiom-validator", all_valid && rejected == 100, timer.seconds(), 60.0);
}
