#include "latprim/maps.hpp"

#include <charconv>
#include <stdexcept>

namespace latprim {

ElementId residual(const Lattice& L, ElementId a, ElementId b) {
    ElementId acc = L.bottom;
    for (ElementId x = 0; x < L.order(); ++x)
        if (L.leq(L.mul(x, b), a)) acc = L.join(acc, x);
    return acc;
}

std::vector<ElementId> power_orbit(const Lattice& L, ElementId a) {
    std::vector<ElementId> orbit;
    std::vector<char> seen(static_cast<std::size_t>(L.order()), 0);
    ElementId cur = a;
    while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        orbit.push_back(cur);
        cur = L.mul(cur, a);
    }
    return orbit;
}

ElementId radical(const Lattice& L, ElementId a) {
    ElementId acc = L.bottom;
    for (ElementId x = 0; x < L.order(); ++x)
        for (ElementId p : power_orbit(L, x))
            if (L.leq(p, a)) {
                acc = L.join(acc, x);
                break;
            }
    return acc;
}

UnaryMapSpec UnaryMapSpec::phi_n(int n) {
    if (n < 2) throw std::invalid_argument("phi_n: exponent must be >= 2");
    UnaryMapSpec m;
    m.kind = MapKind::PhiN;
    m.exponent = n;
    return m;
}

UnaryMapSpec UnaryMapSpec::from_table(std::vector<ElementId> values) {
    UnaryMapSpec m;
    m.kind = MapKind::Table;
    m.table = std::move(values);
    return m;
}

std::string UnaryMapSpec::label() const {
    switch (kind) {
        case MapKind::Delta0: return "delta0";
        case MapKind::Delta1: return "delta1";
        case MapKind::PhiNone: return "none";
        case MapKind::Phi0: return "phi0";
        case MapKind::Phi1: return "phi1";
        case MapKind::Phi2: return "phi2";
        case MapKind::PhiN: return "phiN:" + std::to_string(exponent);
        case MapKind::PhiOmega: return "phiomega";
        case MapKind::Table: return "table";
    }
    return "?";
}

UnaryMapSpec UnaryMapSpec::parse(std::string_view s) {
    if (s == "delta0") return delta0();
    if (s == "delta1") return delta1();
    if (s == "none") return none();
    if (s == "phi0") return phi0();
    if (s == "phi1") return phi1();
    if (s == "phi2") return phi2();
    if (s == "phiomega") return phi_omega();
    auto parse_int = [&](std::string_view digits) -> std::optional<int> {
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
        return value;
    };
    if (s.rfind("phiN:", 0) == 0) {
        if (auto n = parse_int(s.substr(5)); n && *n >= 2) return phi_n(*n);
        throw std::invalid_argument("invalid map spec '" + std::string(s) + "': phiN needs an exponent >= 2");
    }
    if (s.rfind("phi", 0) == 0) {
        if (auto n = parse_int(s.substr(3)); n && *n >= 3) return phi_n(*n);
    }
    throw std::invalid_argument("unknown map spec '" + std::string(s) + "'");
}

ElementId eval_map(const Lattice& L, const UnaryMapSpec& m, ElementId p) {
    switch (m.kind) {
        case MapKind::Delta0:
        case MapKind::Phi1:
            return p;
        case MapKind::Delta1:
            return radical(L, p);
        case MapKind::Phi0:
            return L.bottom;
        case MapKind::Phi2:
            return L.mul(p, p);
        case MapKind::PhiN:
            return L.power(p, m.exponent);
        case MapKind::PhiOmega: {
            std::vector<ElementId> orbit = power_orbit(L, p);
            return L.meet_all(orbit);
        }
        case MapKind::Table: {
            if (m.table.size() != static_cast<std::size_t>(L.order()))
                throw std::invalid_argument("table map size does not match lattice order");
            ElementId v = m.table[static_cast<std::size_t>(p)];
            if (!L.valid_id(v)) throw std::invalid_argument("table map value out of range");
            return v;
        }
        case MapKind::PhiNone:
            break;
    }
    throw std::invalid_argument("eval_map: 'none' has no value");
}

MapCheck is_expansion(const Lattice& L, const UnaryMapSpec& m) {
    if (m.is_none()) throw std::invalid_argument("is_expansion: 'none' is not a map");
    std::vector<ElementId> v(static_cast<std::size_t>(L.order()));
    for (ElementId a = 0; a < L.order(); ++a) v[static_cast<std::size_t>(a)] = eval_map(L, m, a);
    for (ElementId a = 0; a < L.order(); ++a)
        if (!L.leq(a, v[static_cast<std::size_t>(a)]))
            return {false, "a <= m(a)", {a}};
    for (ElementId a = 0; a < L.order(); ++a)
        for (ElementId b = 0; b < L.order(); ++b)
            if (L.leq(a, b) && !L.leq(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]))
                return {false, "a <= b implies m(a) <= m(b)", {a, b}};
    return {};
}

MapCheck is_reduction(const Lattice& L, const UnaryMapSpec& m) {
    if (m.is_none()) throw std::invalid_argument("is_reduction: 'none' is not a map");
    for (ElementId p = 0; p < L.order(); ++p)
        if (!L.leq(eval_map(L, m, p), p))
            return {false, "m(p) <= p", {p}};
    return {};
}

bool map_leq(const Lattice& L, const UnaryMapSpec& m1, const UnaryMapSpec& m2) {
    if (m1.is_none() || m2.is_none())
        throw std::invalid_argument("map_leq: 'none' is not comparable");
    for (ElementId a = 0; a < L.order(); ++a)
        if (!L.leq(eval_map(L, m1, a), eval_map(L, m2, a))) return false;
    return true;
}

UnaryMapSpec normalize_reduction(const Lattice& L, const UnaryMapSpec& m) {
    if (m.is_none()) return m;
    if (is_reduction(L, m).ok) return m;
    std::vector<ElementId> values(static_cast<std::size_t>(L.order()));
    for (ElementId p = 0; p < L.order(); ++p)
        values[static_cast<std::size_t>(p)] = L.meet(eval_map(L, m, p), p);
    return UnaryMapSpec::from_table(std::move(values));
}

PreparedMap PreparedMap::prepare(const Lattice& L, const UnaryMapSpec& spec) {
    PreparedMap pm;
    pm.spec_ = spec;
    if (spec.is_none()) {
        pm.none_ = true;
        return pm;
    }
    pm.values_.resize(static_cast<std::size_t>(L.order()));
    for (ElementId p = 0; p < L.order(); ++p)
        pm.values_[static_cast<std::size_t>(p)] = eval_map(L, spec, p);
    return pm;
}

PreparedMap PreparedMap::prepare_delta(const Lattice& L, const UnaryMapSpec& spec) {
    if (spec.is_none())
        throw std::invalid_argument("delta position requires a map, got 'none'");
    // delta0/delta1 (and phi1, the identity) are expansions on any valid
    // lattice; everything else gets the exhaustive check.
    if (spec.kind != MapKind::Delta0 && spec.kind != MapKind::Delta1 && spec.kind != MapKind::Phi1) {
        MapCheck c = is_expansion(L, spec);
        if (!c.ok)
            throw std::invalid_argument("map '" + spec.label() +
                                        "' fails is_expansion (condition: " + c.condition + ")");
    }
    return prepare(L, spec);
}

PreparedMap PreparedMap::prepare_phi(const Lattice& L, const UnaryMapSpec& spec) {
    if (spec.is_none()) return prepare(L, spec);
    if (spec.kind == MapKind::Table || spec.kind == MapKind::Delta1) {
        MapCheck c = is_reduction(L, spec);
        if (!c.ok)
            throw std::invalid_argument("map '" + spec.label() +
                                        "' fails is_reduction (condition: " + c.condition + ")");
    }
    return prepare(L, spec);
}

}  // namespace latprim
