#include "latprim/theorems.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "latprim/construct.hpp"
#include "latprim/predicates.hpp"

namespace latprim {

namespace {

const std::vector<TheoremInfo> kCatalogue = {
    {TheoremId::EqDelta0PhiPrime, "EQ-DELTA0-PHI-PRIME", false},
    {TheoremId::EqDelta1PhiPrimary, "EQ-DELTA1-PHI-PRIMARY", false},
    {TheoremId::DeltaMonotone, "DELTA-MONOTONE", false},
    {TheoremId::PrimeImpliesAll, "PRIME-IMPLIES-ALL", false},
    {TheoremId::Characterization, "CHARACTERIZATION", false},
    {TheoremId::QuasilocalMSquare, "QUASILOCAL-MSQUARE", false},
    {TheoremId::PhiMonotone, "PHI-MONOTONE", false},
    {TheoremId::ImplicationChain, "IMPLICATION-CHAIN", false},
    {TheoremId::OmegaIffAllN, "OMEGA-IFF-ALL-N", false},
    {TheoremId::LocalNoetherDomain, "LOCAL-NOETHER-DOMAIN", false},
    {TheoremId::RclPhi2, "RCL-PHI2", false},
    {TheoremId::RclPhiN, "RCL-PHIN", false},
    {TheoremId::TwoPotent, "TWO-POTENT", false},
    {TheoremId::KPotent, "K-POTENT", false},
    {TheoremId::PbNotUnderPhi, "PB-NOT-UNDER-PHI", false},
    {TheoremId::Phi0PbZero, "PHI0-PB-ZERO", false},
    {TheoremId::DeltaPrimaryToPhi, "DELTA-PRIMARY-TO-PHI", false},
    {TheoremId::ResidualTransfer, "RESIDUAL-TRANSFER", false},
    {TheoremId::PowerRadical, "POWER-RADICAL", false},
    {TheoremId::IdempotentVacuous, "IDEMPOTENT-VACUOUS", false},
    {TheoremId::RemarkNPotentProbe, "REMARK-NPOTENT-PROBE", true},
    {TheoremId::ExampleZ24, "EXAMPLE-Z24", false},
    {TheoremId::ExampleZ30, "EXAMPLE-Z30", false},
    {TheoremId::ExampleZ8, "EXAMPLE-Z8", false},
};

}  // namespace

const std::vector<TheoremInfo>& theorem_catalogue() { return kCatalogue; }

std::string_view theorem_tag(TheoremId id) {
    for (const TheoremInfo& info : kCatalogue)
        if (info.id == id) return info.tag;
    return "?";
}

std::optional<TheoremId> theorem_from_tag(std::string_view tag) {
    for (const TheoremInfo& info : kCatalogue)
        if (info.tag == tag) return info.id;
    return std::nullopt;
}

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Violated: return "violated";
        case VerdictStatus::Vacuous: return "vacuous";
        case VerdictStatus::ProbeReport: return "probe-report";
    }
    return "?";
}

FamilySpec FamilySpec::zn_range(long long lo, long long hi) {
    if (lo < 2 || hi < lo) throw std::invalid_argument("zn family range requires 2 <= lo <= hi");
    FamilySpec f;
    f.kind = Kind::ZnRange;
    f.lo = lo;
    f.hi = hi;
    return f;
}

FamilySpec FamilySpec::file_list(std::vector<std::string> files) {
    if (files.empty()) throw std::invalid_argument("file family must be nonempty");
    FamilySpec f;
    f.kind = Kind::FileList;
    f.files = std::move(files);
    return f;
}

std::string FamilySpec::label() const {
    if (kind == Kind::ZnRange)
        return "zn:" + std::to_string(lo) + ".." + std::to_string(hi);
    std::string out = "files:";
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (i) out += ',';
        out += files[i];
    }
    return out;
}

bool FamilySpec::contains_zn(long long n) const {
    return kind == Kind::ZnRange && lo <= n && n <= hi;
}

SearchConfig SearchConfig::defaults(FamilySpec family) {
    SearchConfig cfg;
    cfg.family = std::move(family);
    cfg.phis = {UnaryMapSpec::none(),     UnaryMapSpec::phi0(),  UnaryMapSpec::phi1(),
                UnaryMapSpec::phi2(),     UnaryMapSpec::phi_n(3), UnaryMapSpec::phi_n(4),
                UnaryMapSpec::phi_omega()};
    cfg.deltas = {UnaryMapSpec::delta0(), UnaryMapSpec::delta1()};
    return cfg;
}

std::vector<std::pair<std::string, Lattice>> build_family(const FamilySpec& family) {
    std::vector<std::pair<std::string, Lattice>> out;
    if (family.kind == FamilySpec::Kind::ZnRange) {
        for (long long n = family.lo; n <= family.hi; ++n)
            out.emplace_back("zn:" + std::to_string(n), zn_ideal_lattice(n));
        return out;
    }
    for (const std::string& path : family.files) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(path + ": cannot open");
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            out.emplace_back(path, lattice_from_text(buf.str()));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }
    return out;
}

namespace {

// Per-lattice evaluation context: prepared maps, cached structure facts, and
// memoized predicate evaluations shared by all checkers.
class Ctx {
public:
    Ctx(const Lattice& L, const SearchConfig& cfg) : L_(L), cfg_(cfg) {
        if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo)
            throw std::invalid_argument("n range requires 2 <= lo <= hi");
        for (const UnaryMapSpec& spec : cfg.phis)
            phis_.push_back(PreparedMap::prepare_phi(L, spec));
        for (const UnaryMapSpec& spec : cfg.deltas)
            deltas_.push_back(PreparedMap::prepare_delta(L, spec));
        none_ = PreparedMap::prepare(L, UnaryMapSpec::none());
        phi0_ = PreparedMap::prepare(L, UnaryMapSpec::phi0());
        phi2_ = PreparedMap::prepare(L, UnaryMapSpec::phi2());
        phiomega_ = PreparedMap::prepare(L, UnaryMapSpec::phi_omega());
        delta0_ = PreparedMap::prepare(L, UnaryMapSpec::delta0());
        delta1_ = PreparedMap::prepare(L, UnaryMapSpec::delta1());

        const int m = L.order();
        res_tab_.resize(static_cast<std::size_t>(m) * m);
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                res_tab_[static_cast<std::size_t>(a) * m + b] = residual(L, a, b);

        stab_.resize(static_cast<std::size_t>(m));
        idempotent_.resize(static_cast<std::size_t>(m));
        nilpotent_.resize(static_cast<std::size_t>(m));
        rcl_.resize(static_cast<std::size_t>(m));
        global_stab_ = 1;
        for (ElementId a = 0; a < m; ++a) {
            std::vector<ElementId> orbit = power_orbit(L, a);
            stab_[static_cast<std::size_t>(a)] = static_cast<int>(orbit.size());
            global_stab_ = std::max(global_stab_, static_cast<int>(orbit.size()));
            idempotent_[static_cast<std::size_t>(a)] = L.mul(a, a) == a;
            nilpotent_[static_cast<std::size_t>(a)] =
                std::find(orbit.begin(), orbit.end(), L.bottom) != orbit.end();
            rcl_[static_cast<std::size_t>(a)] = satisfies_rcl(L, a, {1}).holds;
            if (L.is_proper(a)) proper_.push_back(a);
        }

        quasi_local_ = is_quasi_local(L).holds;
        maximal_ = maximal_elements(L);
        noether_ = is_noether(L, {1}).holds;
        domain_ = is_domain(L, {1}).holds;
        local_noether_ = noether_ && maximal_prime_elements(L).size() == 1;
    }

    const Lattice& L() const { return L_; }
    const SearchConfig& cfg() const { return cfg_; }
    const std::vector<PreparedMap>& phis() const { return phis_; }
    const std::vector<PreparedMap>& deltas() const { return deltas_; }
    const PreparedMap& none() const { return none_; }
    const PreparedMap& phi0() const { return phi0_; }
    const PreparedMap& phi2() const { return phi2_; }
    const PreparedMap& phiomega() const { return phiomega_; }
    const PreparedMap& delta0() const { return delta0_; }
    const PreparedMap& delta1() const { return delta1_; }

    const PreparedMap& phi_n(int n) {
        if (n == 2) return phi2_;
        auto it = phi_n_cache_.find(n);
        if (it == phi_n_cache_.end())
            it = phi_n_cache_.emplace(n, PreparedMap::prepare(L_, UnaryMapSpec::phi_n(n))).first;
        return it->second;
    }

    ElementId res(ElementId a, ElementId b) const {
        return res_tab_[static_cast<std::size_t>(a) * L_.order() + b];
    }
    ElementId rad(ElementId p) const { return delta1_[p]; }
    int stab(ElementId p) const { return stab_[static_cast<std::size_t>(p)]; }
    int global_stab() const { return global_stab_; }
    bool idempotent(ElementId a) const { return idempotent_[static_cast<std::size_t>(a)]; }
    bool nilpotent(ElementId a) const { return nilpotent_[static_cast<std::size_t>(a)]; }
    bool rcl(ElementId a) const { return rcl_[static_cast<std::size_t>(a)]; }
    const std::vector<ElementId>& proper() const { return proper_; }
    const std::vector<ElementId>& maximal() const { return maximal_; }
    bool quasi_local() const { return quasi_local_; }
    bool noether() const { return noether_; }
    bool domain() const { return domain_; }
    bool local_noether() const { return local_noether_; }

    bool P(ElementId b, ElementId p, const PreparedMap& phi, const PreparedMap& delta) {
        std::vector<signed char>& memo = memo_for(&phi, &delta);
        signed char& slot = memo[static_cast<std::size_t>(b) * L_.order() + p];
        if (slot < 0) slot = primary_to_holds(L_, b, p, phi, delta) ? 1 : 0;
        return slot == 1;
    }

    bool npotent(ElementId b, ElementId p, int n, const PreparedMap& delta) {
        auto key = std::make_pair(&delta, n);
        auto it = npotent_memo_.find(key);
        if (it == npotent_memo_.end()) {
            it = npotent_memo_
                     .emplace(key, std::vector<signed char>(
                                       static_cast<std::size_t>(L_.order()) * L_.order(), -1))
                     .first;
        }
        signed char& slot = it->second[static_cast<std::size_t>(b) * L_.order() + p];
        if (slot < 0) slot = n_potent_holds(L_, b, p, n, delta) ? 1 : 0;
        return slot == 1;
    }

    // Pointwise order of two prepared maps.
    bool pm_leq(const PreparedMap& a, const PreparedMap& b) const {
        for (ElementId x = 0; x < L_.order(); ++x)
            if (!L_.leq(a[x], b[x])) return false;
        return true;
    }

private:
    std::vector<signed char>& memo_for(const PreparedMap* phi, const PreparedMap* delta) {
        auto key = std::make_pair(phi, delta);
        auto it = p_memo_.find(key);
        if (it == p_memo_.end())
            it = p_memo_
                     .emplace(key, std::vector<signed char>(
                                       static_cast<std::size_t>(L_.order()) * L_.order(), -1))
                     .first;
        return it->second;
    }

    const Lattice& L_;
    const SearchConfig& cfg_;
    std::vector<PreparedMap> phis_, deltas_;
    PreparedMap none_, phi0_, phi2_, phiomega_, delta0_, delta1_;
    std::map<int, PreparedMap> phi_n_cache_;
    std::vector<ElementId> res_tab_;
    std::vector<int> stab_;
    int global_stab_ = 1;
    std::vector<char> idempotent_, nilpotent_, rcl_;
    std::vector<ElementId> proper_, maximal_;
    bool quasi_local_ = false, noether_ = false, domain_ = false, local_noether_ = false;
    std::map<std::pair<const PreparedMap*, const PreparedMap*>, std::vector<signed char>> p_memo_;
    std::map<std::pair<const PreparedMap*, int>, std::vector<signed char>> npotent_memo_;
};

class VerdictBuilder {
public:
    VerdictBuilder(TheoremId id, std::size_t cap, bool probe = false)
        : probe_(probe), cap_(cap) {
        v_.theorem = id;
    }

    void pass() {
        ++v_.instances_checked;
        ++v_.confirming;
    }
    void fail(WitnessRecord w) {
        ++v_.instances_checked;
        ++v_.violating;
        if (v_.witnesses.size() < cap_) v_.witnesses.push_back(std::move(w));
    }
    void outcome(bool ok, WitnessRecord w) {
        if (ok)
            pass();
        else
            fail(std::move(w));
    }

    Verdict finish() {
        if (probe_)
            v_.status = VerdictStatus::ProbeReport;
        else if (v_.violating > 0)
            v_.status = VerdictStatus::Violated;
        else if (v_.instances_checked > 0)
            v_.status = VerdictStatus::Holds;
        else
            v_.status = VerdictStatus::Vacuous;
        return std::move(v_);
    }

private:
    Verdict v_;
    bool probe_;
    std::size_t cap_;
};

WitnessRecord wit(const Lattice& L, std::initializer_list<std::pair<const char*, std::string>> fields) {
    WitnessRecord w;
    (void)L;
    for (const auto& [k, v] : fields) w.fields.emplace_back(k, v);
    return w;
}

// --- individual checkers --------------------------------------------------

Verdict check_eq_delta0_phi_prime(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::EqDelta0PhiPrime, cap);
    for (const PreparedMap& phi : ctx.phis()) {
        if (phi.none()) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId p : ctx.proper()) {
                // Direct transcription of the phi-prime condition.
                bool direct = true;
                for (ElementId x = 0; x < L.order(); ++x) {
                    ElementId xb = L.mul(x, b);
                    if (L.leq(xb, p) && !L.leq(xb, phi[p]) && !L.leq(x, p)) {
                        direct = false;
                        break;
                    }
                }
                bool kernel = ctx.P(b, p, phi, ctx.delta0());
                out.outcome(kernel == direct,
                            wit(L, {{"b", L.name(b)}, {"p", L.name(p)}, {"phi", phi.label()}}));
            }
    }
    return out.finish();
}

Verdict check_eq_delta1_phi_primary(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::EqDelta1PhiPrimary, cap);
    for (const PreparedMap& phi : ctx.phis()) {
        if (phi.none()) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId p : ctx.proper()) {
                ElementId root = ctx.rad(p);
                bool direct = true;
                for (ElementId x = 0; x < L.order(); ++x) {
                    ElementId xb = L.mul(x, b);
                    if (L.leq(xb, p) && !L.leq(xb, phi[p]) && !L.leq(x, root)) {
                        direct = false;
                        break;
                    }
                }
                bool kernel = ctx.P(b, p, phi, ctx.delta1());
                out.outcome(kernel == direct,
                            wit(L, {{"b", L.name(b)}, {"p", L.name(p)}, {"phi", phi.label()}}));
            }
    }
    return out.finish();
}

Verdict check_delta_monotone(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::DeltaMonotone, cap);
    const auto& deltas = ctx.deltas();
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t j = 0; j < deltas.size(); ++j) {
            if (i == j || !ctx.pm_leq(deltas[i], deltas[j])) continue;
            for (const PreparedMap& phi : ctx.phis())
                for (ElementId b = 0; b < L.order(); ++b)
                    for (ElementId p : ctx.proper()) {
                        if (!ctx.P(b, p, phi, deltas[i])) continue;
                        out.outcome(ctx.P(b, p, phi, deltas[j]),
                                    wit(L, {{"b", L.name(b)},
                                            {"p", L.name(p)},
                                            {"phi", phi.label()},
                                            {"delta", deltas[i].label()},
                                            {"gamma", deltas[j].label()}}));
                    }
        }
    return out.finish();
}

Verdict check_prime_implies_all(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::PrimeImpliesAll, cap);
    for (ElementId b = 0; b < L.order(); ++b)
        for (ElementId p : ctx.proper()) {
            if (!ctx.P(b, p, ctx.none(), ctx.delta0())) continue;
            for (const PreparedMap& phi : ctx.phis())
                for (const PreparedMap& delta : ctx.deltas())
                    out.outcome(ctx.P(b, p, phi, delta),
                                wit(L, {{"b", L.name(b)},
                                        {"p", L.name(p)},
                                        {"phi", phi.label()},
                                        {"delta", delta.label()}}));
        }
    return out.finish();
}

Verdict check_characterization(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::Characterization, cap);
    for (const PreparedMap& phi : ctx.phis())
        for (const PreparedMap& delta : ctx.deltas())
            for (ElementId b = 0; b < L.order(); ++b)
                for (ElementId p : ctx.proper()) {
                    bool definitional = ctx.P(b, p, phi, delta);
                    ElementId pb = ctx.res(p, b);
                    bool residual_route = L.leq(pb, delta[p]) ||
                                          (!phi.none() && pb == ctx.res(phi[p], b));
                    out.outcome(definitional == residual_route,
                                wit(L, {{"b", L.name(b)},
                                        {"p", L.name(p)},
                                        {"phi", phi.label()},
                                        {"delta", delta.label()}}));
                }
    return out.finish();
}

Verdict check_quasilocal_msquare(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::QuasilocalMSquare, cap);
    if (!ctx.quasi_local() || !ctx.noether()) return out.finish();
    ElementId m = ctx.maximal().front();
    ElementId m2 = L.mul(m, m);
    for (ElementId p : ctx.proper()) {
        if (L.mul(p, p) != m2 || !L.leq(m2, p) || !L.leq(p, m)) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            out.outcome(ctx.P(b, p, ctx.phi2(), ctx.delta1()) || L.leq(b, p),
                        wit(L, {{"p", L.name(p)}, {"b", L.name(b)}, {"m", L.name(m)}}));
    }
    return out.finish();
}

Verdict check_phi_monotone(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::PhiMonotone, cap);
    const auto& phis = ctx.phis();
    for (std::size_t i = 0; i < phis.size(); ++i)
        for (std::size_t j = 0; j < phis.size(); ++j) {
            if (i == j || phis[i].none() || phis[j].none()) continue;
            if (!ctx.pm_leq(phis[i], phis[j])) continue;
            for (const PreparedMap& delta : ctx.deltas())
                for (ElementId b = 0; b < L.order(); ++b)
                    for (ElementId p : ctx.proper()) {
                        if (!ctx.P(b, p, phis[i], delta)) continue;
                        out.outcome(ctx.P(b, p, phis[j], delta),
                                    wit(L, {{"b", L.name(b)},
                                            {"p", L.name(p)},
                                            {"gamma1", phis[i].label()},
                                            {"gamma2", phis[j].label()},
                                            {"delta", delta.label()}}));
                    }
        }
    return out.finish();
}

Verdict check_implication_chain(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::ImplicationChain, cap);
    static const char* stage_names[] = {"none", "phi0", "phiomega", "phi(n+1)", "phi(n)", "phi2"};
    for (int n = ctx.cfg().n_lo; n <= ctx.cfg().n_hi; ++n) {
        const PreparedMap* stages[] = {&ctx.none(),     &ctx.phi0(),    &ctx.phiomega(),
                                       &ctx.phi_n(n + 1), &ctx.phi_n(n), &ctx.phi2()};
        for (const PreparedMap& delta : ctx.deltas())
            for (ElementId b = 0; b < L.order(); ++b)
                for (ElementId p : ctx.proper())
                    for (int s = 0; s + 1 < 6; ++s) {
                        if (!ctx.P(b, p, *stages[s], delta)) continue;
                        out.outcome(ctx.P(b, p, *stages[s + 1], delta),
                                    wit(L, {{"b", L.name(b)},
                                            {"p", L.name(p)},
                                            {"delta", delta.label()},
                                            {"n", std::to_string(n)},
                                            {"from", stage_names[s]},
                                            {"to", stage_names[s + 1]}}));
                    }
    }
    return out.finish();
}

Verdict check_omega_iff_all_n(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::OmegaIffAllN, cap);
    for (const PreparedMap& delta : ctx.deltas())
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId p : ctx.proper()) {
                // Powers of p repeat after stab(p), so the finite range below
                // decides "for every n >= 2".
                bool all_n = true;
                for (int n = 2; n <= std::max(2, ctx.stab(p)); ++n)
                    if (!ctx.P(b, p, ctx.phi_n(n), delta)) {
                        all_n = false;
                        break;
                    }
                bool omega = ctx.P(b, p, ctx.phiomega(), delta);
                out.outcome(omega == all_n,
                            wit(L, {{"b", L.name(b)},
                                    {"p", L.name(p)},
                                    {"delta", delta.label()}}));
            }
    return out.finish();
}

Verdict check_local_noether_domain(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::LocalNoetherDomain, cap);
    if (!ctx.local_noether() || !ctx.domain()) return out.finish();
    for (ElementId b = 0; b < L.order(); ++b) {
        if (b == L.bottom) continue;
        for (ElementId p : ctx.proper())
            for (const PreparedMap& delta : ctx.deltas()) {
                bool all_n = true;
                for (int n = 2; n <= std::max(2, ctx.stab(p)); ++n)
                    if (!ctx.P(b, p, ctx.phi_n(n), delta)) {
                        all_n = false;
                        break;
                    }
                bool plain = ctx.P(b, p, ctx.none(), delta);
                out.outcome(all_n == plain,
                            wit(L, {{"b", L.name(b)},
                                    {"p", L.name(p)},
                                    {"delta", delta.label()}}));
            }
    }
    return out.finish();
}

// Shared by the two restricted-cancellation checkers: phis from the config
// that lie pointwise below `bound`.
std::vector<const PreparedMap*> phis_below(Ctx& ctx, const PreparedMap& bound) {
    std::vector<const PreparedMap*> out;
    for (const PreparedMap& phi : ctx.phis())
        if (!phi.none() && ctx.pm_leq(phi, bound)) out.push_back(&phi);
    return out;
}

Verdict check_rcl_phi2(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::RclPhi2, cap);
    if (!ctx.noether()) return out.finish();
    std::vector<const PreparedMap*> candidates = phis_below(ctx, ctx.phi2());
    if (candidates.empty()) return out.finish();
    for (ElementId p : ctx.proper()) {
        if (p == L.bottom || ctx.nilpotent(p) || !ctx.rcl(p)) continue;
        for (ElementId b = 0; b < L.order(); ++b) {
            if (!L.leq(p, b) || p == b) continue;
            for (const PreparedMap& delta : ctx.deltas()) {
                bool some_phi = false;
                for (const PreparedMap* phi : candidates)
                    if (ctx.P(b, p, *phi, delta)) {
                        some_phi = true;
                        break;
                    }
                bool plain = ctx.P(b, p, ctx.none(), delta);
                out.outcome(some_phi == plain,
                            wit(L, {{"p", L.name(p)},
                                    {"b", L.name(b)},
                                    {"delta", delta.label()}}));
            }
        }
    }
    return out.finish();
}

Verdict check_rcl_phin(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::RclPhiN, cap);
    if (!ctx.noether()) return out.finish();
    for (ElementId p : ctx.proper()) {
        if (p == L.bottom || ctx.nilpotent(p) || !ctx.rcl(p)) continue;
        for (ElementId b = 0; b < L.order(); ++b) {
            if (!L.leq(p, b) || p == b) continue;
            for (const PreparedMap& delta : ctx.deltas()) {
                // Maps and predicates repeat beyond the longest power orbit,
                // so this finite range decides "for all n >= 2".
                bool all_n = true;
                bool instantiable = true;
                for (int n = 2; n <= std::max(2, ctx.global_stab()); ++n) {
                    std::vector<const PreparedMap*> candidates = phis_below(ctx, ctx.phi_n(n));
                    if (candidates.empty()) {
                        instantiable = false;
                        break;
                    }
                    bool some_phi = false;
                    for (const PreparedMap* phi : candidates)
                        if (ctx.P(b, p, *phi, delta)) {
                            some_phi = true;
                            break;
                        }
                    if (!some_phi) {
                        all_n = false;
                        break;
                    }
                }
                if (!instantiable) continue;
                bool plain = ctx.P(b, p, ctx.none(), delta);
                out.outcome(all_n == plain,
                            wit(L, {{"p", L.name(p)},
                                    {"b", L.name(b)},
                                    {"delta", delta.label()}}));
            }
        }
    }
    return out.finish();
}

Verdict check_two_potent(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::TwoPotent, cap);
    std::vector<const PreparedMap*> candidates = phis_below(ctx, ctx.phi2());
    if (candidates.empty()) return out.finish();
    for (ElementId b = 0; b < L.order(); ++b)
        for (ElementId p : ctx.proper())
            for (const PreparedMap& delta : ctx.deltas()) {
                if (!ctx.npotent(b, p, 2, delta)) continue;
                bool some_phi = false;
                for (const PreparedMap* phi : candidates)
                    if (ctx.P(b, p, *phi, delta)) {
                        some_phi = true;
                        break;
                    }
                bool plain = ctx.P(b, p, ctx.none(), delta);
                out.outcome(some_phi == plain,
                            wit(L, {{"b", L.name(b)},
                                    {"p", L.name(p)},
                                    {"delta", delta.label()}}));
            }
    return out.finish();
}

Verdict check_k_potent(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::KPotent, cap);
    for (int n = ctx.cfg().n_lo; n <= ctx.cfg().n_hi; ++n) {
        std::vector<const PreparedMap*> candidates = phis_below(ctx, ctx.phi_n(n));
        if (candidates.empty()) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId p : ctx.proper())
                for (const PreparedMap& delta : ctx.deltas()) {
                    bool some_k = false;
                    for (int k = 2; k <= n; ++k)
                        if (ctx.npotent(b, p, k, delta)) {
                            some_k = true;
                            break;
                        }
                    if (!some_k) continue;
                    bool some_phi = false;
                    for (const PreparedMap* phi : candidates)
                        if (ctx.P(b, p, *phi, delta)) {
                            some_phi = true;
                            break;
                        }
                    bool plain = ctx.P(b, p, ctx.none(), delta);
                    out.outcome(some_phi == plain,
                                wit(L, {{"b", L.name(b)},
                                        {"p", L.name(p)},
                                        {"delta", delta.label()},
                                        {"n", std::to_string(n)}}));
                }
    }
    return out.finish();
}

Verdict check_pb_not_under_phi(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::PbNotUnderPhi, cap);
    for (const PreparedMap& phi : ctx.phis()) {
        if (phi.none()) continue;
        for (const PreparedMap& delta : ctx.deltas())
            for (ElementId b = 0; b < L.order(); ++b)
                for (ElementId p : ctx.proper()) {
                    if (L.leq(L.mul(p, b), phi[p])) continue;
                    if (!ctx.P(b, p, phi, delta)) continue;
                    out.outcome(ctx.P(b, p, ctx.none(), delta),
                                wit(L, {{"b", L.name(b)},
                                        {"p", L.name(p)},
                                        {"phi", phi.label()},
                                        {"delta", delta.label()}}));
                }
    }
    return out.finish();
}

Verdict check_phi0_pb_zero(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::Phi0PbZero, cap);
    for (const PreparedMap& delta : ctx.deltas())
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId p : ctx.proper()) {
                if (!ctx.P(b, p, ctx.phi0(), delta)) continue;
                if (ctx.P(b, p, ctx.none(), delta)) continue;
                out.outcome(L.mul(p, b) == L.bottom,
                            wit(L, {{"b", L.name(b)},
                                    {"p", L.name(p)},
                                    {"delta", delta.label()}}));
            }
    return out.finish();
}

Verdict check_delta_primary_to_phi(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::DeltaPrimaryToPhi, cap);
    for (const PreparedMap& phi : ctx.phis()) {
        if (phi.none()) continue;
        for (const PreparedMap& delta : ctx.deltas())
            for (ElementId b = 0; b < L.order(); ++b)
                for (ElementId p : ctx.proper()) {
                    ElementId fp = phi[p];
                    if (!L.is_proper(fp)) continue;
                    if (!ctx.P(b, p, phi, delta)) continue;
                    if (!ctx.P(b, fp, ctx.none(), delta)) continue;
                    out.outcome(ctx.P(b, p, ctx.none(), delta),
                                wit(L, {{"b", L.name(b)},
                                        {"p", L.name(p)},
                                        {"phi", phi.label()},
                                        {"delta", delta.label()}}));
                }
    }
    return out.finish();
}

Verdict check_residual_transfer(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::ResidualTransfer, cap);
    for (const PreparedMap& phi : ctx.phis())
        for (const PreparedMap& delta : ctx.deltas())
            for (ElementId b = 0; b < L.order(); ++b)
                for (ElementId p : ctx.proper()) {
                    if (!ctx.P(b, p, phi, delta)) continue;
                    for (ElementId q = 0; q < L.order(); ++q) {
                        ElementId pq = ctx.res(p, q);
                        if (!L.is_proper(pq)) continue;
                        if (!L.leq(ctx.res(delta[p], q), delta[pq])) continue;
                        if (!phi.none() && !L.leq(ctx.res(phi[p], q), phi[pq])) continue;
                        out.outcome(ctx.P(b, pq, phi, delta),
                                    wit(L, {{"b", L.name(b)},
                                            {"p", L.name(p)},
                                            {"q", L.name(q)},
                                            {"phi", phi.label()},
                                            {"delta", delta.label()}}));
                    }
                }
    return out.finish();
}

Verdict check_power_radical(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::PowerRadical, cap);
    for (const PreparedMap& phi : ctx.phis()) {
        if (phi.none()) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId p : ctx.proper()) {
                ElementId root = ctx.rad(p);
                if (!L.is_proper(root)) continue;
                if (ctx.rad(phi[p]) != phi[root]) continue;
                // b^k cycles after stab(b) distinct powers, so this finite
                // range decides "for all k >= 1".
                bool all_powers = true;
                ElementId bk = b;
                for (int k = 1; k <= ctx.stab(b); ++k) {
                    if (!ctx.P(bk, p, phi, ctx.delta1())) {
                        all_powers = false;
                        break;
                    }
                    bk = L.mul(bk, b);
                }
                if (!all_powers) continue;
                out.outcome(ctx.P(b, root, phi, ctx.delta0()),
                            wit(L, {{"b", L.name(b)},
                                    {"p", L.name(p)},
                                    {"phi", phi.label()}}));
            }
    }
    return out.finish();
}

Verdict check_idempotent_vacuous(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::IdempotentVacuous, cap);
    for (ElementId p : ctx.proper()) {
        if (!ctx.idempotent(p)) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            for (const PreparedMap& delta : ctx.deltas()) {
                bool ok = ctx.P(b, p, ctx.phiomega(), delta) && ctx.P(b, p, ctx.phi2(), delta);
                for (int n = ctx.cfg().n_lo; ok && n <= ctx.cfg().n_hi; ++n)
                    ok = ctx.P(b, p, ctx.phi_n(n), delta);
                out.outcome(ok, wit(L, {{"p", L.name(p)},
                                        {"b", L.name(b)},
                                        {"delta", delta.label()}}));
            }
    }
    return out.finish();
}

Verdict check_remark_npotent_probe(Ctx& ctx, std::size_t cap) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(TheoremId::RemarkNPotentProbe, cap, /*probe=*/true);
    for (int n = ctx.cfg().n_lo; n <= ctx.cfg().n_hi; ++n)
        for (const PreparedMap& delta : ctx.deltas())
            for (ElementId b = 0; b < L.order(); ++b)
                for (ElementId p : ctx.proper()) {
                    if (!ctx.npotent(b, p, n, ctx.delta0())) continue;
                    out.outcome(ctx.npotent(b, p, 2, delta),
                                wit(L, {{"b", L.name(b)},
                                        {"p", L.name(p)},
                                        {"n", std::to_string(n)},
                                        {"delta", delta.label()}}));
                }
    return out.finish();
}

// Pinned verdicts for the worked examples.  The checker fires only when the
// lattice is table-identical to the corresponding ideal lattice of Z_n, so
// it also recognizes the same lattice loaded from a file.
struct PinnedAssertion {
    const char* b;
    const char* p;
    UnaryMapSpec phi;
    UnaryMapSpec delta;
    int npotent_n = 0;        // when > 0, an n-potent check instead
    bool idempotent = false;  // when set, an idempotency check of p
    bool expected;
};

Verdict check_pinned_example(Ctx& ctx, std::size_t cap, TheoremId id, long long n,
                             const std::vector<PinnedAssertion>& pins) {
    const Lattice& L = ctx.L();
    VerdictBuilder out(id, cap);
    if (!L.same_tables(zn_ideal_lattice(n))) return out.finish();
    for (const PinnedAssertion& pin : pins) {
        ElementId b = *L.element_by_name(pin.b);
        ElementId p = *L.element_by_name(pin.p);
        bool got;
        std::string kind;
        if (pin.idempotent) {
            got = is_idempotent(L, p).holds;
            kind = "idempotent";
        } else if (pin.npotent_n > 0) {
            got = n_potent_primary_to(L, b, p, pin.npotent_n, pin.delta).holds;
            kind = std::to_string(pin.npotent_n) + "-potent " + pin.delta.label() + "-primary";
        } else {
            got = generalized_primary_to(L, {b, p, pin.phi, pin.delta}).holds;
            kind = pin.phi.label() + "-" + pin.delta.label() + "-primary";
        }
        out.outcome(got == pin.expected,
                    wit(L, {{"b", pin.b},
                            {"p", pin.p},
                            {"check", kind},
                            {"expected", pin.expected ? "true" : "false"}}));
    }
    return out.finish();
}

Verdict check_example_z24(Ctx& ctx, std::size_t cap) {
    static const std::vector<PinnedAssertion> pins = {
        {"(2)", "(4)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1(), 0, false, true},
        {"(2)", "(4)", UnaryMapSpec::phi2(), UnaryMapSpec::delta0(), 0, false, false},
        {"(2)", "(4)", UnaryMapSpec::none(), UnaryMapSpec::delta0(), 0, false, false},
    };
    return check_pinned_example(ctx, cap, TheoremId::ExampleZ24, 24, pins);
}

Verdict check_example_z30(Ctx& ctx, std::size_t cap) {
    static const std::vector<PinnedAssertion> pins = {
        {"(2)", "(6)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1(), 0, false, true},
        {"(2)", "(6)", UnaryMapSpec::none(), UnaryMapSpec::delta1(), 0, false, false},
        {"(3)", "(6)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1(), 0, false, true},
        {"(3)", "(6)", UnaryMapSpec::none(), UnaryMapSpec::delta0(), 2, false, false},
    };
    return check_pinned_example(ctx, cap, TheoremId::ExampleZ30, 30, pins);
}

Verdict check_example_z8(Ctx& ctx, std::size_t cap) {
    static const std::vector<PinnedAssertion> pins = {
        {"(2)", "(4)", UnaryMapSpec::phi2(), UnaryMapSpec::delta1(), 0, false, true},
        {"(2)", "(4)", UnaryMapSpec::none(), UnaryMapSpec::delta0(), 0, true, false},
        {"(2)", "(4)", UnaryMapSpec::none(), UnaryMapSpec::delta0(), 2, false, true},
        {"(2)", "(4)", UnaryMapSpec::none(), UnaryMapSpec::delta0(), 0, false, false},
    };
    return check_pinned_example(ctx, cap, TheoremId::ExampleZ8, 8, pins);
}

Verdict run_checker(Ctx& ctx, TheoremId id) {
    const std::size_t cap = ctx.cfg().witness_cap;
    switch (id) {
        case TheoremId::EqDelta0PhiPrime: return check_eq_delta0_phi_prime(ctx, cap);
        case TheoremId::EqDelta1PhiPrimary: return check_eq_delta1_phi_primary(ctx, cap);
        case TheoremId::DeltaMonotone: return check_delta_monotone(ctx, cap);
        case TheoremId::PrimeImpliesAll: return check_prime_implies_all(ctx, cap);
        case TheoremId::Characterization: return check_characterization(ctx, cap);
        case TheoremId::QuasilocalMSquare: return check_quasilocal_msquare(ctx, cap);
        case TheoremId::PhiMonotone: return check_phi_monotone(ctx, cap);
        case TheoremId::ImplicationChain: return check_implication_chain(ctx, cap);
        case TheoremId::OmegaIffAllN: return check_omega_iff_all_n(ctx, cap);
        case TheoremId::LocalNoetherDomain: return check_local_noether_domain(ctx, cap);
        case TheoremId::RclPhi2: return check_rcl_phi2(ctx, cap);
        case TheoremId::RclPhiN: return check_rcl_phin(ctx, cap);
        case TheoremId::TwoPotent: return check_two_potent(ctx, cap);
        case TheoremId::KPotent: return check_k_potent(ctx, cap);
        case TheoremId::PbNotUnderPhi: return check_pb_not_under_phi(ctx, cap);
        case TheoremId::Phi0PbZero: return check_phi0_pb_zero(ctx, cap);
        case TheoremId::DeltaPrimaryToPhi: return check_delta_primary_to_phi(ctx, cap);
        case TheoremId::ResidualTransfer: return check_residual_transfer(ctx, cap);
        case TheoremId::PowerRadical: return check_power_radical(ctx, cap);
        case TheoremId::IdempotentVacuous: return check_idempotent_vacuous(ctx, cap);
        case TheoremId::RemarkNPotentProbe: return check_remark_npotent_probe(ctx, cap);
        case TheoremId::ExampleZ24: return check_example_z24(ctx, cap);
        case TheoremId::ExampleZ30: return check_example_z30(ctx, cap);
        case TheoremId::ExampleZ8: return check_example_z8(ctx, cap);
    }
    throw std::invalid_argument("unknown theorem id");
}

}  // namespace

Verdict check(const Lattice& L, TheoremId id, const SearchConfig& cfg) {
    Ctx ctx(L, cfg);
    return run_checker(ctx, id);
}

SuiteReport run_suite(const SearchConfig& cfg) {
    SuiteReport report;
    report.family_label = cfg.family.label();
    std::vector<std::pair<std::string, Lattice>> family = build_family(cfg.family);

    for (const TheoremInfo& info : kCatalogue)
        if (!info.probe) report.non_vacuous[std::string(info.tag)] = 0;

    std::map<std::string, bool> fired_at;  // "TAG@lattice" -> non-vacuous there

    for (const auto& [label, lattice] : family) {
        Ctx ctx = [&]() {
            try {
                return Ctx(lattice, cfg);
            } catch (const std::exception& e) {
                throw std::runtime_error(label + ": " + e.what());
            }
        }();
        for (const TheoremInfo& info : kCatalogue) {
            if (info.probe) continue;
            Verdict v = run_checker(ctx, info.id);
            if (v.status != VerdictStatus::Vacuous) {
                ++report.non_vacuous[std::string(info.tag)];
                fired_at[std::string(info.tag) + "@" + label] = true;
            }
            report.violated += v.violating;
            report.entries.push_back({label, std::move(v)});
        }
    }

    // Non-vacuity requirements; they target the zn regression families (file
    // lists carry no expectations).  RCL-PHI2 / RCL-PHIN are deliberately
    // absent: in a finite multiplicative lattice the power orbit of a
    // non-nilpotent proper element stabilizes at a nonzero idempotent, which
    // defeats the restricted cancellation law, so their hypotheses can never
    // fire here.
    if (cfg.family.kind == FamilySpec::Kind::ZnRange) {
        auto require_somewhere = [&](std::string_view tag) {
            report.required_non_vacuous.push_back(std::string(tag));
            if (report.non_vacuous[std::string(tag)] == 0)
                report.required_missing.push_back(std::string(tag));
        };
        auto require_at = [&](std::string_view tag, const std::string& label) {
            std::string rule = std::string(tag) + "@" + label;
            report.required_non_vacuous.push_back(rule);
            if (!fired_at.count(rule)) report.required_missing.push_back(rule);
        };

        require_somewhere("CHARACTERIZATION");
        require_somewhere("IMPLICATION-CHAIN");
        require_somewhere("IDEMPOTENT-VACUOUS");
        require_somewhere("PB-NOT-UNDER-PHI");
        if (cfg.family.contains_zn(9)) require_at("QUASILOCAL-MSQUARE", "zn:9");
        if (cfg.family.contains_zn(24)) require_at("EXAMPLE-Z24", "zn:24");
        if (cfg.family.contains_zn(30)) require_at("EXAMPLE-Z30", "zn:30");
        if (cfg.family.contains_zn(8)) require_at("EXAMPLE-Z8", "zn:8");
        auto is_prime = [](long long v) {
            if (v < 2) return false;
            for (long long d = 2; d * d <= v; ++d)
                if (v % d == 0) return false;
            return true;
        };
        for (long long n = cfg.family.lo; n <= cfg.family.hi; ++n)
            if (is_prime(n)) {
                require_somewhere("LOCAL-NOETHER-DOMAIN");
                break;
            }
    }

    return report;
}

SearchClaim SearchClaim::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    SearchClaim claim;
    constexpr std::string_view kConverse = "converse of ";
    if (body.rfind(kConverse, 0) == 0) {
        claim.converse = true;
        body = trim(body.substr(kConverse.size()));
    }
    std::optional<TheoremId> id = theorem_from_tag(body);
    if (!id) throw std::invalid_argument("unknown theorem tag '" + std::string(body) + "'");
    claim.theorem = *id;
    return claim;
}

std::string SearchClaim::label() const {
    std::string out = converse ? "converse of " : "";
    out += theorem_tag(theorem);
    return out;
}

namespace {

// Converse hunts: instances where the conclusion of an implication holds
// while its hypothesis fails, i.e. the separations the implication does not
// close.  Defined only for the implications with documented separations.
std::optional<SearchHit> converse_hit(Ctx& ctx, TheoremId id, const std::string& label,
                                      std::size_t cap) {
    const Lattice& L = ctx.L();
    SearchHit hit;
    hit.lattice = label;
    auto record = [&](WitnessRecord w) {
        ++hit.total_found;
        if (hit.witnesses.size() < cap) hit.witnesses.push_back(std::move(w));
    };

    switch (id) {
        case TheoremId::ImplicationChain:
            // phi2-delta-primary without delta-primary: both ends of the chain.
            for (const PreparedMap& delta : ctx.deltas())
                for (ElementId b = 0; b < L.order(); ++b)
                    for (ElementId p : ctx.proper())
                        if (ctx.P(b, p, ctx.phi2(), delta) && !ctx.P(b, p, ctx.none(), delta))
                            record(wit(L, {{"b", L.name(b)},
                                           {"p", L.name(p)},
                                           {"phi", "phi2"},
                                           {"delta", delta.label()}}));
            break;
        case TheoremId::PrimeImpliesAll:
            for (const PreparedMap& phi : ctx.phis())
                for (const PreparedMap& delta : ctx.deltas())
                    for (ElementId b = 0; b < L.order(); ++b)
                        for (ElementId p : ctx.proper())
                            if (ctx.P(b, p, phi, delta) && !ctx.P(b, p, ctx.none(), ctx.delta0()))
                                record(wit(L, {{"b", L.name(b)},
                                               {"p", L.name(p)},
                                               {"phi", phi.label()},
                                               {"delta", delta.label()}}));
            break;
        case TheoremId::DeltaMonotone: {
            const auto& deltas = ctx.deltas();
            for (std::size_t i = 0; i < deltas.size(); ++i)
                for (std::size_t j = 0; j < deltas.size(); ++j) {
                    if (i == j || !ctx.pm_leq(deltas[i], deltas[j])) continue;
                    for (const PreparedMap& phi : ctx.phis())
                        for (ElementId b = 0; b < L.order(); ++b)
                            for (ElementId p : ctx.proper())
                                if (ctx.P(b, p, phi, deltas[j]) && !ctx.P(b, p, phi, deltas[i]))
                                    record(wit(L, {{"b", L.name(b)},
                                                   {"p", L.name(p)},
                                                   {"phi", phi.label()},
                                                   {"delta", deltas[i].label()},
                                                   {"gamma", deltas[j].label()}}));
                }
            break;
        }
        case TheoremId::PhiMonotone: {
            const auto& phis = ctx.phis();
            for (std::size_t i = 0; i < phis.size(); ++i)
                for (std::size_t j = 0; j < phis.size(); ++j) {
                    if (i == j || phis[i].none() || phis[j].none()) continue;
                    if (!ctx.pm_leq(phis[i], phis[j])) continue;
                    for (const PreparedMap& delta : ctx.deltas())
                        for (ElementId b = 0; b < L.order(); ++b)
                            for (ElementId p : ctx.proper())
                                if (ctx.P(b, p, phis[j], delta) && !ctx.P(b, p, phis[i], delta))
                                    record(wit(L, {{"b", L.name(b)},
                                                   {"p", L.name(p)},
                                                   {"gamma1", phis[i].label()},
                                                   {"gamma2", phis[j].label()},
                                                   {"delta", delta.label()}}));
                }
            break;
        }
        case TheoremId::IdempotentVacuous:
            for (const PreparedMap& delta : ctx.deltas())
                for (ElementId b = 0; b < L.order(); ++b)
                    for (ElementId p : ctx.proper())
                        if (ctx.P(b, p, ctx.phi2(), delta) && !ctx.idempotent(p))
                            record(wit(L, {{"b", L.name(b)},
                                           {"p", L.name(p)},
                                           {"delta", delta.label()}}));
            break;
        default:
            throw std::invalid_argument("no converse semantics for tag '" +
                                        std::string(theorem_tag(id)) + "'");
    }

    if (hit.total_found == 0) return std::nullopt;
    return hit;
}

}  // namespace

SearchReport search(const SearchClaim& claim, const SearchConfig& cfg) {
    SearchReport report;
    report.claim = claim.label();
    report.family_label = cfg.family.label();

    std::vector<std::pair<std::string, Lattice>> family = build_family(cfg.family);
    for (const auto& [label, lattice] : family) {
        ++report.lattices_scanned;
        Ctx ctx = [&]() {
            try {
                return Ctx(lattice, cfg);
            } catch (const std::exception& e) {
                throw std::runtime_error(label + ": " + e.what());
            }
        }();

        if (claim.converse) {
            if (std::optional<SearchHit> hit =
                    converse_hit(ctx, claim.theorem, label, cfg.witness_cap))
                report.hits.push_back(std::move(*hit));
            continue;
        }

        Verdict v = run_checker(ctx, claim.theorem);
        if (v.status == VerdictStatus::ProbeReport) {
            if (v.instances_checked > 0) {
                SearchHit hit;
                hit.lattice = label;
                hit.total_found = v.violating;
                hit.confirming = v.confirming;
                hit.witnesses = std::move(v.witnesses);
                report.hits.push_back(std::move(hit));
            }
        } else if (v.status == VerdictStatus::Violated) {
            SearchHit hit;
            hit.lattice = label;
            hit.total_found = v.violating;
            hit.witnesses = std::move(v.witnesses);
            report.hits.push_back(std::move(hit));
        }
    }
    return report;
}

}  // namespace latprim
