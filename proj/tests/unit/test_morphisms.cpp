#include "doctest.h"

#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/morphisms.hpp"
#include "polyadika/properties.hpp"
#include "polyadika/quivers.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;

TEST_SUITE("morphisms") {
    TEST_CASE("arity shape parameters satisfy both arity relations") {
        for (int k = 2; k <= 5; ++k)
            for (int lid = 1; lid < k; ++lid)
                for (int n = 2; n <= 15; ++n) {
                    ShapeParams sp;
                    try {
                        sp = shape_params_lid(n, k, lid);
                    } catch (const DomainError&) {
                        continue;
                    }
                    CHECK(sp.lmu + sp.lid == k);
                    CHECK(sp.n_prime * k == sp.lmu * n + sp.lid);
                    CHECK(sp.n_prime >= 2);
                    CHECK(sp.n_prime <= n);
                }
    }

    TEST_CASE("lid and lmu parametrizations agree") {
        const ShapeParams a = shape_params_lid(3, 2, 1);
        const ShapeParams b = shape_params_lmu(3, 2, 1);
        CHECK(a.n_prime == 2);
        CHECK(b.n_prime == 2);
        CHECK(a.cls == b.cls);
    }

    TEST_CASE("inadmissible parameters throw") {
        CHECK_THROWS_AS(shape_params_lid(4, 2, 1), DomainError);
        CHECK_THROWS_AS(shape_params_lmu(5, 3, 1), DomainError);
    }

    TEST_CASE("k = 1 homomorphism check") {
        const System z4 = fx::derived_cyclic(4, 2);
        const System z2 = fx::derived_cyclic(2, 2);
        const MultiplaceMap mod2 = MultiplaceMap::tabulate(z4, z2, 1, [](const Elem* x) { return Elem(x[0] % 2); });
        CHECK(verify_homomorphism(mod2).ok);
        const MultiplaceMap bad = MultiplaceMap::tabulate(z4, z2, 1, [](const Elem* x) { return Elem(x[0] == 1); });
        CHECK(!verify_homomorphism(bad).ok);
    }

    TEST_CASE("map text round trip") {
        const MultiplaceMap m = fx::antidiagonal_map();
        const MultiplaceMap back = load_map(save_map(m), m.source, m.target);
        CHECK(back.table == m.table);
        CHECK(back.k == 2);
    }

    TEST_CASE("hetero shape text round trip") {
        const HeteroShape s = binarizing_ternary_shape();
        CHECK(HeteroShape::parse(s.str(), s.n, s.n_prime, s.k) == s);
    }

    TEST_CASE("binarizing shape rejects a non-morphism") {
        const System z3 = fx::z3_ternary();
        const System z3b = fx::derived_cyclic(3, 2);
        const MultiplaceMap sum = MultiplaceMap::tabulate(z3, z3b, 2, [](const Elem* x) { return Elem((x[0] + x[1]) % 3); });
        const auto r = verify_heteromorphism(sum, binarizing_ternary_shape());
        CHECK(!r.ok);
        CHECK(r.witness.size() == 4);
    }

    TEST_CASE("symmetric verification agrees with the plain check") {
        const MultiplaceMap m = fx::grassmann_map(3);
        const auto gens = fx::grassmann_symmetry(3);
        for (const char* name : {"post-like", "vertical"}) {
            const HeteroShape shape = quiver_to_shape(named_quiver(name));
            const auto plain = verify_heteromorphism(m, shape);
            const auto sym = verify_heteromorphism_symmetric(m, shape, gens);
            CHECK(plain.ok == sym.ok);
            CHECK(sym.orbit_representatives <= plain.assignments);
        }
    }

    TEST_CASE("census of binarizing maps from Z3 ternary") {
        const Census c = enumerate_heteromorphisms(fx::z3_ternary(), fx::derived_cyclic(3, 2), binarizing_ternary_shape());
        CHECK(c.complete);
        CHECK(!c.maps.empty());
        for (const MultiplaceMap& m : c.maps) CHECK(verify_heteromorphism(m, binarizing_ternary_shape()).ok);
    }

    TEST_CASE("derived maps are detected") {
        const auto phi = is_derived(fx::antidiagonal_map());
        REQUIRE(phi.has_value());
        CHECK(phi->size() == 4);
    }
}
