#include "doctest.h"

#include <random>

#include "polyadika/core.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/properties.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;

namespace {

System random_system(std::mt19937_64& rng, int m, int n) {
    return System::tabulate(m, n, [&](const Elem*) { return Elem(rng() % unsigned(m)); });
}

} // namespace

TEST_SUITE("properties") {
    TEST_CASE("derived cyclic systems are commutative groups") {
        for (int m = 2; m <= 4; ++m)
            for (int n = 2; n <= 4; ++n) {
                const System s = fx::derived_cyclic(m, n);
                CHECK(is_totally_associative(s).ok);
                CHECK(is_commutative(s).ok);
                // Mediality scans m^(n^2) entries.
                if (m * n <= 12 && !(m == 3 && n == 4)) CHECK(is_medial(s).ok);
                CHECK(classify(s) == Kind::Group);
            }
    }

    TEST_CASE("alternating sum is a non-commutative, semicommutative group") {
        const System s = fx::alternating5(3);
        CHECK(is_totally_associative(s).ok);
        CHECK(!is_commutative(s).ok);
        CHECK(is_semicommutative(s).ok);
    }

    TEST_CASE("S3 derived is associative and not medial") {
        const System s = fx::s3_derived(3);
        CHECK(is_totally_associative(s).ok);
        const auto med = is_medial(s);
        CHECK(!med.ok);
        CHECK(med.witness.size() == 9);
    }

    TEST_CASE("non-associative witness is a real violation") {
        std::mt19937_64 rng(11);
        int found = 0;
        for (int i = 0; i < 30; ++i) {
            const System s = random_system(rng, 3, 3);
            const auto r = is_totally_associative(s);
            if (r.ok) continue;
            ++found;
            REQUIRE(r.witness.size() == 5);
            // Evaluate the two reported placements directly.
            Elem vals[2];
            for (int k = 0; k < 2; ++k) {
                const int p = k == 0 ? r.place_a : r.place_b;
                Elem inner[3] = {r.witness[std::size_t(p)], r.witness[std::size_t(p) + 1], r.witness[std::size_t(p) + 2]};
                Tuple outer;
                for (int j = 0; j < p; ++j) outer.push_back(r.witness[std::size_t(j)]);
                outer.push_back(s(inner));
                for (int j = p + 3; j < 5; ++j) outer.push_back(r.witness[std::size_t(j)]);
                vals[k] = s(outer.data());
            }
            CHECK(vals[0] != vals[1]);
        }
        CHECK(found > 0);
    }

    TEST_CASE("zero and identities") {
        const System null = fx::null_system(3, 3);
        REQUIRE(find_zero(null).has_value());
        CHECK(*find_zero(null) == 0);
        CHECK(is_lmu_nilpotent(null, 1));
        CHECK(nilpotency_index(null) == 1);
        // 2e = 0 in Z4.
        CHECK(find_identities(fx::derived_cyclic(4, 3)) == std::vector<Elem>{0, 2});
        // [e g e] = 2e - g is never g for g != e.
        CHECK(find_identities(fx::z3_ternary()).empty());
        CHECK(find_identities(fx::z3_ternary(), PlaceMode::Ends).size() == 3);
        // 1 + 1 = 0 in Z2, so both elements are units of the ternary sum.
        CHECK(find_identities(fx::derived_cyclic(2, 3)).size() == 2);
    }

    TEST_CASE("left zero band has relaxed but not strict structure") {
        const System s = fx::left_zero_band();
        CHECK(is_totally_associative(s).ok);
        CHECK(!is_commutative(s).ok);
        CHECK(!find_zero(s).has_value());
    }

    TEST_CASE("groups are cancellative and uniquely solvable everywhere") {
        for (const System& s : {fx::z3_ternary(), fx::z4_ternary(), fx::s3_derived(4)}) {
            const PlaceReport r = place_report(s);
            for (int i = 0; i < s.arity(); ++i) {
                CHECK(r.cancellative[std::size_t(i)]);
                CHECK(r.unique[std::size_t(i)]);
            }
        }
    }

    TEST_CASE("neutral polyads of a ternary group") {
        const System s = fx::z3_ternary();
        const auto np = neutral_polyads(s, NeutralConvention::Ends);
        CHECK(!np.empty());
        for (const Tuple& t : np) CHECK(is_neutral_polyad(s, t, NeutralConvention::Ends));
        // (h, h) is neutral for g - h + u.
        for (Elem h = 0; h < 3; ++h) CHECK(is_neutral_polyad(s, Tuple{h, h}, NeutralConvention::Ends));
    }

    TEST_CASE("sigma commutativity with the identity permutation is trivial") {
        std::mt19937_64 rng(3);
        const System s = random_system(rng, 3, 3);
        CHECK(sigma_commutative(s, {0, 1, 2}).ok);
    }

    TEST_CASE("semicommutative semigroups are medial on random 2-element ternary tables") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 200; ++i) {
            const System s = random_system(rng, 2, 3);
            if (is_totally_associative(s).ok && is_semicommutative(s).ok) CHECK(is_medial(s).ok);
        }
    }

    TEST_CASE("analyze agrees with the individual checks") {
        const System s = fx::z4_ternary();
        const PropertyReport r = analyze(s);
        CHECK(r.associative.ok);
        CHECK(r.group);
        CHECK(r.kind == Kind::Group);
        REQUIRE(r.medial.has_value());
        CHECK(r.medial->ok);
    }
}
