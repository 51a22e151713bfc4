#include "latprim/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace latprim {

ElementId Lattice::join_all(std::span<const ElementId> xs) const {
    ElementId acc = bottom;
    for (ElementId x : xs) acc = join(acc, x);
    return acc;
}

ElementId Lattice::meet_all(std::span<const ElementId> xs) const {
    ElementId acc = top;
    for (ElementId x : xs) acc = meet(acc, x);
    return acc;
}

ElementId Lattice::power(ElementId a, int k) const {
    if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
    ElementId acc = a;
    for (int i = 1; i < k; ++i) acc = mul(acc, a);
    return acc;
}

std::optional<ElementId> Lattice::element_by_name(std::string_view name) const {
    for (int i = 0; i < n; ++i)
        if (names[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

bool Lattice::same_tables(const Lattice& other) const {
    return n == other.n && names == other.names && leq_tab == other.leq_tab &&
           join_tab == other.join_tab && meet_tab == other.meet_tab &&
           mul_tab == other.mul_tab && top == other.top && bottom == other.bottom;
}

namespace {

// Unique least element of `candidates` under leq, if it exists.
std::optional<ElementId> least_of(const Lattice& L, const std::vector<ElementId>& candidates) {
    for (ElementId c : candidates) {
        bool below_all = true;
        for (ElementId d : candidates)
            if (!L.leq(c, d)) { below_all = false; break; }
        if (below_all) return c;  // unique by antisymmetry
    }
    return std::nullopt;
}

std::optional<ElementId> greatest_of(const Lattice& L, const std::vector<ElementId>& candidates) {
    for (ElementId c : candidates) {
        bool above_all = true;
        for (ElementId d : candidates)
            if (!L.leq(d, c)) { above_all = false; break; }
        if (above_all) return c;
    }
    return std::nullopt;
}

}  // namespace

Lattice assemble_lattice(std::vector<std::string> names,
                         const std::vector<std::vector<int>>& leq_rows,
                         const std::vector<std::vector<ElementId>>& mul_rows) {
    const std::size_t n = names.size();
    if (n < 2) throw std::invalid_argument("assemble_lattice: order must be >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        if (names[i].empty()) throw std::invalid_argument("assemble_lattice: empty element name");
        for (std::size_t j = i + 1; j < n; ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("assemble_lattice: duplicate element name '" + names[i] + "'");
    }
    if (leq_rows.size() != n || mul_rows.size() != n)
        throw std::invalid_argument("assemble_lattice: table row count != order");
    for (std::size_t i = 0; i < n; ++i) {
        if (leq_rows[i].size() != n || mul_rows[i].size() != n)
            throw std::invalid_argument("assemble_lattice: table row width != order");
        for (ElementId v : mul_rows[i])
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("assemble_lattice: mul entry out of range");
    }

    Lattice L;
    L.n = static_cast<int>(n);
    L.names = std::move(names);
    L.leq_tab.resize(n * n);
    L.mul_tab.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            L.leq_tab[i * n + j] = leq_rows[i][j] ? 1 : 0;
            L.mul_tab[i * n + j] = mul_rows[i][j];
        }

    // Derive top/bottom; fall back to 0 so validate() can report the defect.
    std::vector<ElementId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<ElementId>(i);
    L.top = greatest_of(L, all).value_or(0);
    L.bottom = least_of(L, all).value_or(0);

    // Derive binary join/meet from leq.  Missing bounds get a placeholder
    // that validate() will flag against the lub/glb property.
    L.join_tab.resize(n * n);
    L.meet_tab.resize(n * n);
    std::vector<ElementId> bounds;
    for (ElementId i = 0; i < L.n; ++i)
        for (ElementId j = 0; j < L.n; ++j) {
            bounds.clear();
            for (ElementId c = 0; c < L.n; ++c)
                if (L.leq(i, c) && L.leq(j, c)) bounds.push_back(c);
            L.join_tab[static_cast<std::size_t>(i) * n + j] = least_of(L, bounds).value_or(i);
            bounds.clear();
            for (ElementId c = 0; c < L.n; ++c)
                if (L.leq(c, i) && L.leq(c, j)) bounds.push_back(c);
            L.meet_tab[static_cast<std::size_t>(i) * n + j] = greatest_of(L, bounds).value_or(i);
        }
    return L;
}

ValidationReport validate(const Lattice& L) {
    ValidationReport report;
    auto fail = [&report](const char* axiom, std::initializer_list<ElementId> witness) {
        report.failures.push_back({axiom, std::vector<ElementId>(witness)});
    };

    // Structural checks first; anything wrong here makes axiom checks unsafe.
    const std::size_t n = static_cast<std::size_t>(L.n);
    bool structural_ok = L.n >= 2 && L.names.size() == n && L.leq_tab.size() == n * n &&
                         L.join_tab.size() == n * n && L.meet_tab.size() == n * n &&
                         L.mul_tab.size() == n * n && L.valid_id(L.top) && L.valid_id(L.bottom);
    if (structural_ok) {
        for (ElementId v : L.join_tab)
            if (!L.valid_id(v)) { structural_ok = false; break; }
        if (structural_ok)
            for (ElementId v : L.meet_tab)
                if (!L.valid_id(v)) { structural_ok = false; break; }
        if (structural_ok)
            for (ElementId v : L.mul_tab)
                if (!L.valid_id(v)) { structural_ok = false; break; }
    }
    if (!structural_ok) {
        fail("structure", {});
        return report;
    }

    const int m = L.n;

    for (ElementId a = 0; a < m; ++a)
        if (!L.leq(a, a)) { fail("leq-reflexive", {a}); break; }

    [&] {
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                if (a != b && L.leq(a, b) && L.leq(b, a)) {
                    fail("leq-antisymmetric", {a, b});
                    return;
                }
    }();

    [&] {
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                for (ElementId c = 0; c < m; ++c)
                    if (L.leq(a, b) && L.leq(b, c) && !L.leq(a, c)) {
                        fail("leq-transitive", {a, b, c});
                        return;
                    }
    }();

    for (ElementId a = 0; a < m; ++a)
        if (!L.leq(a, L.top)) { fail("top-greatest", {a}); break; }
    for (ElementId a = 0; a < m; ++a)
        if (!L.leq(L.bottom, a)) { fail("bottom-least", {a}); break; }

    // join_tab[i][j] must be the unique least upper bound of {i, j}.
    [&] {
        for (ElementId i = 0; i < m; ++i)
            for (ElementId j = 0; j < m; ++j) {
                ElementId v = L.join(i, j);
                if (!L.leq(i, v) || !L.leq(j, v)) {
                    fail("join-lub", {i, j});
                    return;
                }
                for (ElementId c = 0; c < m; ++c)
                    if (L.leq(i, c) && L.leq(j, c) && !L.leq(v, c)) {
                        fail("join-lub", {i, j, c});
                        return;
                    }
            }
    }();

    [&] {
        for (ElementId i = 0; i < m; ++i)
            for (ElementId j = 0; j < m; ++j) {
                ElementId v = L.meet(i, j);
                if (!L.leq(v, i) || !L.leq(v, j)) {
                    fail("meet-glb", {i, j});
                    return;
                }
                for (ElementId c = 0; c < m; ++c)
                    if (L.leq(c, i) && L.leq(c, j) && !L.leq(c, v)) {
                        fail("meet-glb", {i, j, c});
                        return;
                    }
            }
    }();

    [&] {
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                if (L.mul(a, b) != L.mul(b, a)) {
                    fail("mul-commutative", {a, b});
                    return;
                }
    }();

    [&] {
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                for (ElementId c = 0; c < m; ++c)
                    if (L.mul(L.mul(a, b), c) != L.mul(a, L.mul(b, c))) {
                        fail("mul-associative", {a, b, c});
                        return;
                    }
    }();

    [&] {
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                for (ElementId c = 0; c < m; ++c)
                    if (L.mul(a, L.join(b, c)) != L.join(L.mul(a, b), L.mul(a, c))) {
                        fail("mul-join-distributive", {a, b, c});
                        return;
                    }
    }();

    for (ElementId a = 0; a < m; ++a)
        if (L.mul(L.top, a) != a) { fail("mul-identity", {a}); break; }

    // Consequence of the axioms; checked rather than assumed.
    [&] {
        for (ElementId a = 0; a < m; ++a)
            for (ElementId b = 0; b < m; ++b)
                if (!L.leq(L.mul(a, b), L.meet(a, b))) {
                    fail("mul-below-meet", {a, b});
                    return;
                }
    }();

    return report;
}

}  // namespace latprim
