#include "doctest.h"

#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/properties.hpp"
#include "polyadika/quivers.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;

TEST_SUITE("quivers") {
    TEST_CASE("every named arrangement is valid and round trips") {
        for (const std::string& name : named_quivers()) {
            CAPTURE(name);
            const Quiver q = named_quiver(name);
            CHECK_NOTHROW(q.validate());
            CHECK(Quiver::parse_compact(q.compact()) == q);
            CHECK(load_quiver(save_quiver(q)) == q);
            CHECK(quiver_to_shape(q).n_prime == q.n_prime);
        }
        CHECK_THROWS_AS(named_quiver("no-such-quiver"), DomainError);
    }

    TEST_CASE("coverage violations are rejected") {
        CHECK_THROWS(Quiver::parse_compact("g1 g2 g3 | h1 h2 g3"));
        CHECK_THROWS(Quiver::parse_compact("g1 g2 | h1 h2 h3"));
    }

    TEST_CASE("free-word check separates the known arrangements") {
        for (const char* name : {"vertical", "vertical-flipped", "post-like", "post-like-4", "non-post-4", "k3-4to2"})
            CHECK(free_word_check(named_quiver(name)).ok);
        const WordCheck crossed = free_word_check(named_quiver("k3-4to2-crossed"));
        CHECK(!crossed.ok);
        CHECK(crossed.placement == 1);
    }

    TEST_CASE("the three wider intermediate arrangements fail concretely") {
        for (const char* name : {"k3-7to3", "k3-4to3", "k4-5to4"}) {
            CAPTURE(name);
            const Quiver q = named_quiver(name);
            CHECK(!free_word_check(q).ok);
            const QuiverTest t = is_associative_quiver(q, {{"z2", fx::derived_cyclic(2, q.n)}});
            REQUIRE(t.systems.size() == 1);
            if (std::string(name) != "k3-4to3") {
                CHECK(t.systems[0].status == VerdictStatus::Fail);
                CHECK(t.systems[0].witness.size() == std::size_t((2 * q.n_prime - 1) * q.k));
            }
        }
    }

    TEST_CASE("reported witnesses violate associativity of the induced operation") {
        const Quiver q = named_quiver("k3-7to3");
        const QuiverTest t = is_associative_quiver(q, standard_test_set(q.n));
        for (const SystemVerdict& v : t.systems) {
            CAPTURE(v.name);
            REQUIRE(v.status == VerdictStatus::Fail);
            const int m = v.name[1] - '0';
            const System ind = induced_tuple_operation(q, fx::derived_cyclic(m, q.n));
            std::vector<Elem> x;
            for (int c = 0; c < 2 * q.n_prime - 1; ++c) x.push_back(Elem(encode_tuple(v.witness.data() + c * q.k, q.k, m)));
            auto at = [&](int pos) {
                std::vector<Elem> outer(x.begin(), x.begin() + pos);
                outer.push_back(ind(x.data() + pos));
                outer.insert(outer.end(), x.begin() + pos + q.n_prime, x.end());
                return ind(outer.data());
            };
            bool differs = false;
            for (int pos = 1; pos < q.n_prime; ++pos) differs = differs || at(pos) != at(0);
            CHECK(differs);
        }
    }

    TEST_CASE("free-word pass implies associativity on the test set") {
        for (const std::string& name : named_quivers()) {
            const Quiver q = named_quiver(name);
            if (!free_word_check(q).ok) continue;
            CAPTURE(name);
            for (const NamedSystem& s : standard_test_set(q.n)) {
                const System induced = induced_tuple_operation(q, s.system);
                if (double(induced.table().size()) * induced.size() * induced.size() > 5e6) continue;
                CHECK(is_totally_associative(induced).ok);
            }
        }
    }

    TEST_CASE("induced vertical operation acts componentwise") {
        const System z3 = fx::derived_cyclic(3, 3);
        const System ind = induced_tuple_operation(named_quiver("vertical"), z3);
        CHECK(ind.size() == 9);
        CHECK(ind.arity() == 3);
        // Pairs (a, b) are encoded as 3a + b.
        CHECK(ind({3 * 1 + 2, 3 * 1 + 0, 3 * 2 + 2}) == Elem(3 * ((1 + 1 + 2) % 3) + (2 + 0 + 2) % 3));
    }

    TEST_CASE("test-set verdicts agree with the universal check on the crossed arrangement") {
        const QuiverTest t = is_associative_quiver(named_quiver("k3-4to2-crossed"), standard_test_set(4));
        CHECK(!t.universal.ok);
        for (const SystemVerdict& v : t.systems) CHECK(v.status != VerdictStatus::Fail);
    }

    TEST_CASE("generated vertical family is associative") {
        const GeneratedQuivers g = generate_quivers(3, 3, 2, 2, 0, QuiverFamily::Vertical);
        CHECK(g.complete);
        REQUIRE(!g.quivers.empty());
        for (const Quiver& q : g.quivers) CHECK(free_word_check(q).ok);
    }

    TEST_CASE("displacement quivers") {
        CHECK(displacement_quiver(3, 0) == named_quiver("vertical"));
        CHECK(free_word_check(displacement_quiver(3, 1)).ok);
        CHECK(free_word_check(displacement_quiver(4, 1)).ok);
    }

    TEST_CASE("family names round trip") {
        for (QuiverFamily f : {QuiverFamily::Vertical, QuiverFamily::PostLike, QuiverFamily::NonPost,
                               QuiverFamily::Intermediate})
            CHECK(parse_quiver_family(to_string(f)) == f);
    }
}
