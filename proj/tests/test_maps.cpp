#include <doctest.h>

#include "latprim/construct.hpp"
#include "latprim/maps.hpp"
#include "oracles.hpp"

using namespace latprim;
using oracles::id_of;

TEST_CASE("residuals match hand-computed values on Z24") {
    Lattice L = zn_ideal_lattice(24);
    CHECK(residual(L, id_of(L, "(4)"), id_of(L, "(2)")) == id_of(L, "(2)"));
    CHECK(residual(L, id_of(L, "(4)"), id_of(L, "(3)")) == id_of(L, "(4)"));
    for (ElementId a = 0; a < L.order(); ++a) CHECK(residual(L, a, L.top) == a);
}

TEST_CASE("residual is the right adjoint of multiplication") {
    for (long long n : {2, 6, 8, 12, 24, 30, 97}) {
        Lattice L = zn_ideal_lattice(n);
        CAPTURE(n);
        for (ElementId a = 0; a < L.order(); ++a)
            for (ElementId b = 0; b < L.order(); ++b) {
                auto oracle = oracles::brute_residual(L, a, b);
                REQUIRE(oracle.has_value());
                ElementId r = residual(L, a, b);
                CHECK(r == *oracle);
                for (ElementId x = 0; x < L.order(); ++x)
                    CHECK(L.leq(x, r) == L.leq(L.mul(x, b), a));
            }
    }
}

TEST_CASE("radicals match hand-computed values") {
    Lattice z8 = zn_ideal_lattice(8);
    CHECK(radical(z8, id_of(z8, "(4)")) == id_of(z8, "(2)"));
    Lattice z24 = zn_ideal_lattice(24);
    CHECK(radical(z24, id_of(z24, "(8)")) == id_of(z24, "(2)"));
    CHECK(radical(z24, id_of(z24, "(0)")) == id_of(z24, "(6)"));
    CHECK(radical(z24, z24.top) == z24.top);
    Lattice z30 = zn_ideal_lattice(30);
    CHECK(radical(z30, id_of(z30, "(6)")) == id_of(z30, "(6)"));
}

TEST_CASE("radical agrees with the bounded-power oracle and is an idempotent expansion") {
    for (long long n : {4, 8, 24, 30, 36, 60}) {
        Lattice L = zn_ideal_lattice(n);
        CAPTURE(n);
        for (ElementId a = 0; a < L.order(); ++a) {
            ElementId r = radical(L, a);
            CHECK(r == oracles::brute_radical(L, a));
            CHECK(radical(L, r) == r);
        }
        CHECK(is_expansion(L, UnaryMapSpec::delta1()).ok);
    }
}

TEST_CASE("power orbits stop at the first repetition") {
    Lattice L = zn_ideal_lattice(24);
    std::vector<ElementId> orbit = power_orbit(L, id_of(L, "(2)"));
    std::vector<ElementId> expected = {id_of(L, "(2)"), id_of(L, "(4)"), id_of(L, "(8)")};
    CHECK(orbit == expected);
    CHECK(power_orbit(L, L.top) == std::vector<ElementId>{L.top});
}

TEST_CASE("eval_map computes the catalogue") {
    Lattice z24 = zn_ideal_lattice(24);
    ElementId four = id_of(z24, "(4)");
    CHECK(eval_map(z24, UnaryMapSpec::phi2(), four) == id_of(z24, "(8)"));
    CHECK(eval_map(z24, UnaryMapSpec::phi_omega(), four) == id_of(z24, "(8)"));
    CHECK(eval_map(z24, UnaryMapSpec::phi_n(3), id_of(z24, "(2)")) == id_of(z24, "(8)"));
    CHECK(eval_map(z24, UnaryMapSpec::phi0(), four) == z24.bottom);
    CHECK(eval_map(z24, UnaryMapSpec::delta1(), four) == id_of(z24, "(2)"));

    Lattice z30 = zn_ideal_lattice(30);
    CHECK(eval_map(z30, UnaryMapSpec::phi2(), id_of(z30, "(6)")) == id_of(z30, "(6)"));

    for (ElementId p = 0; p < z24.order(); ++p) {
        CHECK(eval_map(z24, UnaryMapSpec::delta0(), p) == p);
        CHECK(eval_map(z24, UnaryMapSpec::phi1(), p) == p);
    }

    CHECK_THROWS_AS(eval_map(z24, UnaryMapSpec::none(), four), std::invalid_argument);
}

TEST_CASE("phiomega equals the meet of the first `order` powers") {
    for (long long n : {8, 24, 30, 36}) {
        Lattice L = zn_ideal_lattice(n);
        CAPTURE(n);
        for (ElementId p = 0; p < L.order(); ++p) {
            ElementId acc = L.top;
            ElementId pk = p;
            for (int k = 1; k <= L.order(); ++k) {
                acc = L.meet(acc, pk);
                pk = L.mul(pk, p);
            }
            CHECK(eval_map(L, UnaryMapSpec::phi_omega(), p) == acc);
        }
    }
}

TEST_CASE("expansion and reduction checks report witnesses") {
    Lattice z24 = zn_ideal_lattice(24);
    CHECK(is_expansion(z24, UnaryMapSpec::delta1()).ok);
    CHECK(is_expansion(z24, UnaryMapSpec::delta0()).ok);

    MapCheck c = is_expansion(z24, UnaryMapSpec::phi0());
    CHECK_FALSE(c.ok);
    REQUIRE(c.witness.size() == 1);
    CHECK(c.witness[0] == z24.top);

    Lattice z8 = zn_ideal_lattice(8);
    std::vector<ElementId> identity(static_cast<std::size_t>(z8.order()));
    for (ElementId i = 0; i < z8.order(); ++i) identity[static_cast<std::size_t>(i)] = i;
    CHECK(is_expansion(z8, UnaryMapSpec::from_table(identity)).ok);

    CHECK(is_reduction(z24, UnaryMapSpec::phi2()).ok);
    CHECK(is_reduction(z24, UnaryMapSpec::phi1()).ok);
    MapCheck r = is_reduction(z8, UnaryMapSpec::delta1());
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == id_of(z8, "(4)"));
}

TEST_CASE("the map families are totally ordered pointwise") {
    Lattice z24 = zn_ideal_lattice(24);
    CHECK(map_leq(z24, UnaryMapSpec::phi0(), UnaryMapSpec::phi_omega()));
    CHECK(map_leq(z24, UnaryMapSpec::phi_n(3), UnaryMapSpec::phi2()));
    CHECK_FALSE(map_leq(z24, UnaryMapSpec::phi2(), UnaryMapSpec::phi0()));

    for (long long n : {2, 8, 24, 30, 45}) {
        Lattice L = zn_ideal_lattice(n);
        CAPTURE(n);
        CHECK(map_leq(L, UnaryMapSpec::phi0(), UnaryMapSpec::phi_omega()));
        for (int k = 2; k <= 6; ++k)
            CHECK(map_leq(L, UnaryMapSpec::phi_omega(), UnaryMapSpec::phi_n(k + 1)));
        for (int k = 2; k <= 6; ++k)
            CHECK(map_leq(L, UnaryMapSpec::phi_n(k + 1), UnaryMapSpec::phi_n(k)));
        CHECK(map_leq(L, UnaryMapSpec::phi2(), UnaryMapSpec::phi1()));
        // phi below delta, for every builtin pairing.
        for (UnaryMapSpec phi : {UnaryMapSpec::phi0(), UnaryMapSpec::phi1(), UnaryMapSpec::phi2(),
                                 UnaryMapSpec::phi_n(3), UnaryMapSpec::phi_omega()})
            for (UnaryMapSpec delta : {UnaryMapSpec::delta0(), UnaryMapSpec::delta1()})
                CHECK(map_leq(L, phi, delta));
    }

    CHECK_THROWS_AS(map_leq(z24, UnaryMapSpec::none(), UnaryMapSpec::phi0()),
                    std::invalid_argument);
}

TEST_CASE("map spec labels parse back to themselves") {
    for (const char* label : {"delta0", "delta1", "none", "phi0", "phi1", "phi2", "phiomega"})
        CHECK(UnaryMapSpec::parse(label).label() == label);
    CHECK(UnaryMapSpec::parse("phiN:5").label() == "phiN:5");
    CHECK(UnaryMapSpec::parse("phi3") == UnaryMapSpec::phi_n(3));
    CHECK(UnaryMapSpec::parse("phi7") == UnaryMapSpec::phi_n(7));
    CHECK_THROWS_AS(UnaryMapSpec::parse("phiN:1"), std::invalid_argument);
    CHECK_THROWS_AS(UnaryMapSpec::parse("delta2"), std::invalid_argument);
    CHECK_THROWS_AS(UnaryMapSpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(UnaryMapSpec::phi_n(1), std::invalid_argument);
}

TEST_CASE("prepared maps enforce their position") {
    Lattice z8 = zn_ideal_lattice(8);
    CHECK_THROWS_AS(PreparedMap::prepare_delta(z8, UnaryMapSpec::phi0()), std::invalid_argument);
    CHECK_THROWS_AS(PreparedMap::prepare_delta(z8, UnaryMapSpec::none()), std::invalid_argument);
    CHECK_THROWS_AS(PreparedMap::prepare_phi(z8, UnaryMapSpec::delta1()), std::invalid_argument);
    CHECK(PreparedMap::prepare_phi(z8, UnaryMapSpec::none()).none());

    PreparedMap d1 = PreparedMap::prepare_delta(z8, UnaryMapSpec::delta1());
    CHECK(d1[id_of(z8, "(4)")] == id_of(z8, "(2)"));

    // A table that is not an expansion is rejected in delta position.
    std::vector<ElementId> to_bottom(static_cast<std::size_t>(z8.order()), z8.bottom);
    CHECK_THROWS_AS(PreparedMap::prepare_delta(z8, UnaryMapSpec::from_table(to_bottom)),
                    std::invalid_argument);
    // ...and accepted in phi position (constant bottom is a reduction).
    CHECK(PreparedMap::prepare_phi(z8, UnaryMapSpec::from_table(to_bottom))[z8.top] == z8.bottom);

    // Wrong-sized tables are caught at materialization.
    CHECK_THROWS_AS(PreparedMap::prepare_phi(z8, UnaryMapSpec::from_table({0, 0})),
                    std::invalid_argument);
}

TEST_CASE("normalize_reduction meets a table with the identity") {
    Lattice z8 = zn_ideal_lattice(8);
    // Constant top is not a reduction; its normalization is the identity.
    std::vector<ElementId> to_top(static_cast<std::size_t>(z8.order()), z8.top);
    UnaryMapSpec fixed = normalize_reduction(z8, UnaryMapSpec::from_table(to_top));
    CHECK(is_reduction(z8, fixed).ok);
    for (ElementId p = 0; p < z8.order(); ++p) CHECK(eval_map(z8, fixed, p) == p);
    // Reductions are returned unchanged.
    CHECK(normalize_reduction(z8, UnaryMapSpec::phi2()) == UnaryMapSpec::phi2());
}
