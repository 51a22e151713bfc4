#include "latprim/predicates.hpp"

#include <stdexcept>

namespace latprim {

namespace {

void require_proper(const Lattice& L, ElementId p, const char* who) {
    if (!L.is_proper(p))
        throw std::invalid_argument(std::string(who) + ": p must be proper (got the top element)");
}

void push_witness(PredicateReport& r, std::vector<ElementId> tuple, std::size_t cap) {
    r.holds = false;
    if (r.witnesses.size() < cap) r.witnesses.push_back(std::move(tuple));
}

}  // namespace

bool primary_to_holds(const Lattice& L, ElementId b, ElementId p, const PreparedMap& phi,
                      const PreparedMap& delta) {
    const ElementId dp = delta[p];
    const ElementId fp = phi.none() ? 0 : phi[p];
    for (ElementId x = 0; x < L.order(); ++x) {
        ElementId xb = L.mul(x, b);
        if (!L.leq(xb, p)) continue;
        if (!phi.none() && L.leq(xb, fp)) continue;
        if (!L.leq(x, dp)) return false;
    }
    return true;
}

bool n_potent_holds(const Lattice& L, ElementId b, ElementId p, int n, const PreparedMap& delta) {
    const ElementId pn = L.power(p, n);
    const ElementId dp = delta[p];
    for (ElementId x = 0; x < L.order(); ++x)
        if (L.leq(L.mul(x, b), pn) && !L.leq(x, dp)) return false;
    return true;
}

PredicateReport generalized_primary_to(const Lattice& L, const PrimaryQuery& query,
                                       const PredicateOptions& opts) {
    require_proper(L, query.p, "generalized_primary_to");
    PreparedMap phi = PreparedMap::prepare_phi(L, query.phi);
    PreparedMap delta = PreparedMap::prepare_delta(L, query.delta);

    PredicateReport report;
    const ElementId dp = delta[query.p];
    const ElementId fp = phi.none() ? 0 : phi[query.p];
    for (ElementId x = 0; x < L.order(); ++x) {
        ElementId xb = L.mul(x, query.b);
        if (!L.leq(xb, query.p)) continue;
        if (!phi.none() && L.leq(xb, fp)) continue;
        if (!L.leq(x, dp)) push_witness(report, {x}, opts.witness_cap);
    }
    return report;
}

PredicateReport n_potent_primary_to(const Lattice& L, ElementId b, ElementId p, int n,
                                    const UnaryMapSpec& delta, const PredicateOptions& opts) {
    require_proper(L, p, "n_potent_primary_to");
    if (n < 2) throw std::invalid_argument("n_potent_primary_to: n must be >= 2");
    PreparedMap d = PreparedMap::prepare_delta(L, delta);

    PredicateReport report;
    const ElementId pn = L.power(p, n);
    const ElementId dp = d[p];
    for (ElementId x = 0; x < L.order(); ++x)
        if (L.leq(L.mul(x, b), pn) && !L.leq(x, dp)) push_witness(report, {x}, opts.witness_cap);
    return report;
}

PredicateReport is_prime_element(const Lattice& L, ElementId p, const PredicateOptions& opts) {
    require_proper(L, p, "is_prime_element");
    PredicateReport report;
    for (ElementId a = 0; a < L.order(); ++a)
        for (ElementId b = 0; b < L.order(); ++b)
            if (L.leq(L.mul(a, b), p) && !L.leq(a, p) && !L.leq(b, p))
                push_witness(report, {a, b}, opts.witness_cap);
    return report;
}

PredicateReport is_primary_element(const Lattice& L, ElementId p, const PredicateOptions& opts) {
    require_proper(L, p, "is_primary_element");
    PredicateReport report;
    const ElementId rad = radical(L, p);
    for (ElementId a = 0; a < L.order(); ++a)
        for (ElementId b = 0; b < L.order(); ++b)
            if (L.leq(L.mul(a, b), p) && !L.leq(a, p) && !L.leq(b, rad))
                push_witness(report, {a, b}, opts.witness_cap);
    return report;
}

PredicateReport is_maximal(const Lattice& L, ElementId p, const PredicateOptions& opts) {
    require_proper(L, p, "is_maximal");
    PredicateReport report;
    for (ElementId x = 0; x < L.order(); ++x)
        if (L.leq(p, x) && x != p && x != L.top) push_witness(report, {x}, opts.witness_cap);
    return report;
}

PredicateReport is_idempotent(const Lattice& L, ElementId a) {
    PredicateReport report;
    if (L.mul(a, a) != a) push_witness(report, {a}, 1);
    return report;
}

PredicateReport is_zero_divisor(const Lattice& L, ElementId a) {
    PredicateReport report;
    report.holds = false;
    for (ElementId b = 0; b < L.order(); ++b)
        if (b != L.bottom && L.mul(a, b) == L.bottom) {
            report.holds = true;
            report.witnesses.push_back({b});
            return report;
        }
    return report;
}

PredicateReport is_principal_element(const Lattice& L, ElementId e, const PredicateOptions& opts) {
    PredicateReport report;
    for (ElementId a = 0; a < L.order(); ++a)
        for (ElementId b = 0; b < L.order(); ++b) {
            bool meet_principal =
                L.meet(a, L.mul(b, e)) == L.mul(L.meet(residual(L, a, e), b), e);
            bool join_principal =
                residual(L, L.join(L.mul(a, e), b), e) == L.join(residual(L, b, e), a);
            if (!meet_principal || !join_principal) push_witness(report, {a, b}, opts.witness_cap);
        }
    return report;
}

PredicateReport satisfies_rcl(const Lattice& L, ElementId a, const PredicateOptions& opts) {
    PredicateReport report;
    for (ElementId b = 0; b < L.order(); ++b)
        for (ElementId c = 0; c < L.order(); ++c) {
            if (b == c) continue;
            ElementId ab = L.mul(a, b);
            if (ab != L.bottom && ab == L.mul(a, c)) push_witness(report, {b, c}, opts.witness_cap);
        }
    return report;
}

PredicateReport is_nilpotent(const Lattice& L, ElementId a) {
    PredicateReport report;
    for (ElementId p : power_orbit(L, a))
        if (p == L.bottom) return report;
    push_witness(report, {a}, 1);
    return report;
}

PredicateReport is_domain(const Lattice& L, const PredicateOptions& opts) {
    PredicateReport report;
    for (ElementId a = 0; a < L.order(); ++a) {
        if (a == L.bottom) continue;
        for (ElementId b = 0; b < L.order(); ++b)
            if (b != L.bottom && L.mul(a, b) == L.bottom)
                push_witness(report, {a, b}, opts.witness_cap);
    }
    return report;
}

std::vector<ElementId> maximal_elements(const Lattice& L) {
    std::vector<ElementId> out;
    for (ElementId m = 0; m < L.order(); ++m) {
        if (!L.is_proper(m)) continue;
        bool maximal = true;
        for (ElementId x = 0; x < L.order(); ++x)
            if (L.leq(m, x) && x != m && x != L.top) { maximal = false; break; }
        if (maximal) out.push_back(m);
    }
    return out;
}

PredicateReport is_quasi_local(const Lattice& L) {
    PredicateReport report;
    std::vector<ElementId> maxes = maximal_elements(L);
    if (maxes.size() != 1) {
        report.holds = false;
        report.witnesses.push_back(std::move(maxes));
    }
    return report;
}

PredicateReport is_modular(const Lattice& L, const PredicateOptions& opts) {
    PredicateReport report;
    for (ElementId a = 0; a < L.order(); ++a)
        for (ElementId b = 0; b < L.order(); ++b)
            for (ElementId c = 0; c < L.order(); ++c)
                if (L.leq(a, c) && L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c))
                    push_witness(report, {a, b, c}, opts.witness_cap);
    return report;
}

std::vector<ElementId> principal_elements(const Lattice& L) {
    std::vector<ElementId> out;
    for (ElementId e = 0; e < L.order(); ++e)
        if (is_principal_element(L, e, {1}).holds) out.push_back(e);
    return out;
}

PredicateReport is_pg(const Lattice& L, const PredicateOptions& opts) {
    PredicateReport report;
    std::vector<ElementId> principal = principal_elements(L);
    for (ElementId x = 0; x < L.order(); ++x) {
        ElementId acc = L.bottom;
        for (ElementId e : principal)
            if (L.leq(e, x)) acc = L.join(acc, e);
        if (acc != x) push_witness(report, {x}, opts.witness_cap);
    }
    return report;
}

PredicateReport is_noether(const Lattice& L, const PredicateOptions& opts) {
    PredicateReport report = is_modular(L, opts);
    if (!report.holds) return report;
    return is_pg(L, opts);
}

std::vector<ElementId> prime_elements(const Lattice& L) {
    std::vector<ElementId> out;
    for (ElementId p = 0; p < L.order(); ++p)
        if (L.is_proper(p) && is_prime_element(L, p, {1}).holds) out.push_back(p);
    return out;
}

std::vector<ElementId> maximal_prime_elements(const Lattice& L) {
    std::vector<ElementId> primes = prime_elements(L);
    std::vector<ElementId> out;
    for (ElementId p : primes) {
        bool maximal = true;
        for (ElementId q : primes)
            if (q != p && L.leq(p, q)) { maximal = false; break; }
        if (maximal) out.push_back(p);
    }
    return out;
}

PredicateReport is_local_noether(const Lattice& L, const PredicateOptions& opts) {
    PredicateReport report = is_noether(L, opts);
    if (!report.holds) return report;
    std::vector<ElementId> maxprimes = maximal_prime_elements(L);
    if (maxprimes.size() != 1) {
        report.holds = false;
        report.witnesses.push_back(std::move(maxprimes));
    }
    return report;
}

}  // namespace latprim
