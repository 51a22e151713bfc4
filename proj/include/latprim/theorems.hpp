#pragma once

// A catalogue of executable theorem checkers over finite multiplicative
// lattices, plus a suite runner and a counterexample search harness.
//
// Each catalogue entry reifies one statement as explicit hypothesis and
// conclusion closures: check() enumerates every instance of the quantifiers
// within the configured map lists, verifies the conclusion on each instance
// whose hypotheses hold, and reports holds / violated / vacuous with exact
// instance counts.  Probe entries map where an unproved implication holds or
// fails empirically; they are reported, never asserted, and run_suite skips
// them.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latprim/lattice.hpp"
#include "latprim/maps.hpp"

namespace latprim {

enum class TheoremId {
    EqDelta0PhiPrime,     // phi-delta0-primary coincides with phi-prime
    EqDelta1PhiPrimary,   // phi-delta1-primary coincides with phi-primary
    DeltaMonotone,        // d <= g: phi-d-primary implies phi-g-primary
    PrimeImpliesAll,      // prime to p implies phi-delta-primary to p
    Characterization,     // kernel iff (p:b) <= d(p) or (p:b) = (phi(p):b)
    QuasilocalMSquare,    // quasi-local Noether, p^2 = m^2 <= p <= m
    PhiMonotone,          // g1 <= g2: g1-delta-primary implies g2-delta-primary
    ImplicationChain,     // none => phi0 => phiomega => phi(n+1) => phin => phi2
    OmegaIffAllN,         // phiomega-delta-primary iff phin-delta-primary for all n
    LocalNoetherDomain,   // local Noether domain: all-n iff delta-primary
    RclPhi2,              // restricted cancellation, some phi <= phi2
    RclPhiN,              // restricted cancellation, some phi <= phin for all n
    TwoPotent,            // 2-potent delta-primary: some phi <= phi2 iff delta-primary
    KPotent,              // k-potent delta-primary, k <= n: some phi <= phin iff delta-primary
    PbNotUnderPhi,        // pb not<= phi(p): phi-delta-primary implies delta-primary
    Phi0PbZero,           // weakly but not delta-primary forces pb = 0
    DeltaPrimaryToPhi,    // delta-primary to phi(p) promotes to delta-primary to p
    ResidualTransfer,     // phi-delta-primary transfers to (p:q) under side conditions
    PowerRadical,         // all b^k phi-delta1-primary: b is phi-prime to radical(p)
    IdempotentVacuous,    // idempotent p: every b is phiomega/phin-delta-primary
    RemarkNPotentProbe,   // probe: n-potent delta0-primary vs 2-potent delta-primary
    ExampleZ24,           // pinned verdicts on the ideal lattice of Z_24
    ExampleZ30,           // pinned verdicts on the ideal lattice of Z_30
    ExampleZ8,            // pinned verdicts on the ideal lattice of Z_8
};

struct TheoremInfo {
    TheoremId id;
    std::string_view tag;   // stable CLI/JSON name, e.g. "CHARACTERIZATION"
    bool probe;
};

const std::vector<TheoremInfo>& theorem_catalogue();
std::string_view theorem_tag(TheoremId id);
std::optional<TheoremId> theorem_from_tag(std::string_view tag);

enum class VerdictStatus { Holds, Violated, Vacuous, ProbeReport };
std::string_view to_string(VerdictStatus s);

// One labeled witness tuple, e.g. {("b","(2)"), ("p","(4)"), ("phi","phi2")}.
struct WitnessRecord {
    std::vector<std::pair<std::string, std::string>> fields;
};

struct Verdict {
    TheoremId theorem;
    VerdictStatus status = VerdictStatus::Vacuous;
    long long instances_checked = 0;  // instances whose hypotheses held
    long long confirming = 0;
    long long violating = 0;
    std::vector<WitnessRecord> witnesses;  // violating instances, capped
};

struct FamilySpec {
    enum class Kind { ZnRange, FileList };
    Kind kind = Kind::ZnRange;
    long long lo = 2, hi = 2;
    std::vector<std::string> files;

    static FamilySpec zn_range(long long lo, long long hi);
    static FamilySpec file_list(std::vector<std::string> files);
    std::string label() const;
    bool contains_zn(long long n) const;
};

struct SearchConfig {
    FamilySpec family;
    std::vector<UnaryMapSpec> phis;    // may include none
    std::vector<UnaryMapSpec> deltas;  // expansions
    int n_lo = 2, n_hi = 4;            // exponent range for phin / potency
    std::size_t witness_cap = 32;

    // phis = {none, phi0, phi1, phi2, phiN:3, phiN:4, phiomega},
    // deltas = {delta0, delta1}.
    static SearchConfig defaults(FamilySpec family);
};

// Runs one checker on one lattice.  cfg.family is ignored here.
Verdict check(const Lattice& L, TheoremId id, const SearchConfig& cfg);

struct SuiteEntry {
    std::string lattice;  // "zn:24" or a file path
    Verdict verdict;
};

struct SuiteReport {
    std::string family_label;
    std::vector<SuiteEntry> entries;  // family order, then catalogue order
    long long violated = 0;           // total violating instances
    // tag -> number of family lattices where the checker was non-vacuous
    std::map<std::string, long long> non_vacuous;
    // Non-vacuity requirements evaluated for this family ("TAG" must fire
    // somewhere; "TAG@zn:9" must fire on that lattice) and those that failed.
    std::vector<std::string> required_non_vacuous;
    std::vector<std::string> required_missing;
    bool ok() const { return violated == 0 && required_missing.empty(); }
};

// Runs every non-probe checker over the family.  Deterministic: identical
// configs yield identical reports.
SuiteReport run_suite(const SearchConfig& cfg);

// A search claim is `<TAG>` (hunt violations of the statement; empty for the
// proved ones), `converse of <TAG>` (hunt instances separating conclusion
// from hypothesis; defined for DELTA-MONOTONE, PRIME-IMPLIES-ALL,
// PHI-MONOTONE, IMPLICATION-CHAIN and IDEMPOTENT-VACUOUS), or the probe tag.
struct SearchClaim {
    TheoremId theorem;
    bool converse = false;
    static SearchClaim parse(std::string_view text);
    std::string label() const;
};

struct SearchHit {
    std::string lattice;
    long long total_found = 0;
    long long confirming = 0;  // probe claims only
    std::vector<WitnessRecord> witnesses;
};

struct SearchReport {
    std::string claim;
    std::string family_label;
    long long lattices_scanned = 0;
    std::vector<SearchHit> hits;  // family order (ascending n first)
};

SearchReport search(const SearchClaim& claim, const SearchConfig& cfg);

// Family materialization, shared with the CLI.  Labels are "zn:<n>" or the
// file path; construction errors are rethrown with the label attached.
std::vector<std::pair<std::string, Lattice>> build_family(const FamilySpec& family);

}  // namespace latprim
