#include "doctest.h"

#include "polyadika/arity.hpp"
#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/group.hpp"
#include "polyadika/properties.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;

TEST_SUITE("arity") {
    TEST_CASE("iteration arity") {
        for (int n = 2; n <= 6; ++n)
            for (int l = 1; l <= 4; ++l) CHECK(predict_arity(n, ArityMode::Iterate, l, 0) == l * (n - 1) + 1);
        for (int n = 3; n <= 6; ++n) CHECK(predict_arity(n, ArityMode::Reduce, 1, 1) == n - 1);
        CHECK_THROWS(predict_arity(2, ArityMode::Reduce, 1, 1));
    }

    TEST_CASE("apply_plan matches the predicted arity") {
        const System s = fx::derived_cyclic(3, 3);
        for (int l = 1; l <= 3; ++l) {
            ArityPlan plan;
            plan.mode = ArityMode::Iterate;
            plan.lmu = l;
            const System out = apply_plan(s, plan);
            CHECK(out.arity() == predict_arity(3, plan));
            CHECK(is_totally_associative(out).ok);
        }
    }

    TEST_CASE("iteration of a cyclic sum is the longer sum") {
        ArityPlan plan;
        plan.mode = ArityMode::Iterate;
        plan.lmu = 2;
        const System out = apply_plan(fx::derived_cyclic(4, 3), plan);
        CHECK(out == fx::derived_cyclic(4, 5));
    }

    TEST_CASE("reduction with constants fixes trailing slots") {
        ArityPlan plan;
        plan.mode = ArityMode::Reduce;
        plan.constants = trailing_constants(4, {1});
        const System out = apply_plan(fx::derived_cyclic(5, 4), plan);
        REQUIRE(out.arity() == 3);
        CHECK(out({1, 2, 3}) == (1 + 2 + 3 + 1) % 5);
    }

    TEST_CASE("mode names round trip") {
        for (ArityMode m : {ArityMode::Iterate, ArityMode::Reduce, ArityMode::IterateThenReduce,
                            ArityMode::ReduceThenIterate})
            CHECK(parse_arity_mode(to_string(m)) == m);
        CHECK_THROWS(parse_arity_mode("sideways"));
    }

    TEST_CASE("b-derived ternary from Z3") {
        const System t = b_derived_ternary(fx::derived_cyclic(3, 2), 1);
        CHECK(t({0, 0, 0}) == 1);
        CHECK(is_totally_associative(t).ok);
    }
}

TEST_SUITE("group") {
    TEST_CASE("querelement of a derived sum") {
        for (int n = 3; n <= 5; ++n) {
            const System s = fx::derived_cyclic(7, n);
            for (Elem g = 0; g < 7; ++g) {
                const Elem q = querelement(s, g);
                CHECK((Elem(n - 1) * g + q) % 7 == g);
            }
        }
    }

    TEST_CASE("querelement requires a unique solution") {
        CHECK_THROWS_AS(querelement(fx::null_system(3, 3), 1), DomainError);
    }

    TEST_CASE("powers are additive in the exponent") {
        const System s = fx::derived_cyclic(5, 3);
        for (Elem g = 0; g < 5; ++g)
            for (long long a = -3; a <= 3; ++a) {
                // g^<a> is a long product of a(n-1)+1 copies of g.
                const long long copies = a * 2 + 1;
                const Elem want = Elem(((copies % 5) * g % 5 + 5) % 5);
                CHECK(power(s, g, a) == want);
            }
    }

    TEST_CASE("querpower of an idempotent ternary group is periodic") {
        const QuerTable qt(fx::z3_ternary());
        for (Elem g = 0; g < 3; ++g) {
            CHECK(querpower(qt, g, 0) == g);
            CHECK(querpower(qt, g, 2) == g);
        }
    }

    TEST_CASE("Dornte identities hold in ternary groups") {
        for (const System& s : {fx::z3_ternary(), fx::z4_ternary(), fx::s3_derived(3), fx::s3_derived(4)})
            CHECK(check_dornte(QuerTable(s)).empty());
    }

    TEST_CASE("querpower exponent for n = 3 alternates") {
        // [[k]]_{-1} is 1, 0, 1, 0, ...
        CHECK(querpower_exponent(3, 1) == -1);
        CHECK(querpower_exponent(3, 2) == 0);
        CHECK(querpower_exponent(3, 3) == -1);
    }
}
