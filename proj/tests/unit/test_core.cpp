#include "doctest.h"

#include <random>

#include "polyadika/core.hpp"
#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/scalar.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;

TEST_SUITE("core") {
    TEST_CASE("tuple encoding round trips in lexicographic order") {
        for (int m = 1; m <= 4; ++m)
            for (int len = 1; len <= 4; ++len) {
                Tuple t(std::size_t(len), 0);
                Tuple d(std::size_t(len), 0);
                std::uint64_t idx = 0;
                do {
                    CHECK(encode_tuple(t.data(), len, m) == idx);
                    decode_tuple(idx, d.data(), len, m);
                    CHECK(d == t);
                    ++idx;
                } while (next_tuple(t.data(), len, m));
                CHECK(idx == tuple_count(m, len));
            }
    }

    TEST_CASE("first argument is most significant") {
        const Elem t[] = {1, 0, 0};
        CHECK(encode_tuple(t, 3, 3) == 9);
    }

    TEST_CASE("tuple_count overflow raises a budget error") {
        CHECK_THROWS_AS(tuple_count(1000, 20), BudgetExceeded);
    }

    TEST_CASE("operation text round trip") {
        const System s = fx::z4_ternary();
        const System back = load_system(save_operation(s));
        CHECK(back == s);
    }

    TEST_CASE("labels survive the round trip") {
        System s = fx::derived_cyclic(2, 2);
        s.set_labels({"e", "a"});
        const System back = load_system(save_operation(s));
        CHECK(back.carrier().label(1) == "a");
    }

    TEST_CASE("malformed text is a format error") {
        CHECK_THROWS_AS(load_system("polyop 1\narity 2\nsize 2\n0 1 1\n"), FormatError);
        CHECK_THROWS_AS(load_system("polyop 1\narity 2\nsize 2\n0 1 1 2\n"), FormatError);
        CHECK_THROWS_AS(load_system("nonsense\n"), FormatError);
    }

    TEST_CASE("comments are ignored") {
        const System s = load_system("# a comment\npolyop 1\narity 2\nsize 2\n0 1 # row\n1 0\n");
        CHECK(s({1, 1}) == 0);
    }

    TEST_CASE("evaluate checks the polyad") {
        const System s = fx::z3_ternary();
        const Elem ok[] = {2, 1, 0};
        CHECK(s.evaluate(ok) == 1);
        const Elem bad[] = {2, 1};
        CHECK_THROWS_AS(s.evaluate(bad), DomainError);
        const Elem out[] = {3, 0, 0};
        CHECK_THROWS_AS(s.evaluate(out), DomainError);
    }

    TEST_CASE("trees count leaves and nodes") {
        for (int n = 2; n <= 4; ++n)
            for (int l = 1; l <= 3; ++l) {
                const auto trees = all_trees(n, l);
                CHECK(!trees.empty());
                for (const Tree& t : trees) {
                    CHECK(t.leaves() == l * (n - 1) + 1);
                    CHECK(t.internal_nodes() == l);
                    CHECK(Tree::parse(t.str()) == t);
                }
            }
        CHECK(all_trees(2, 3).size() == 5);
    }

    TEST_CASE("iterated evaluation of an associative operation ignores placement") {
        const System s = fx::derived_cyclic(5, 3);
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            Tuple polyad(7);
            for (Elem& e : polyad) e = Elem(rng() % 5);
            Elem sum = 0;
            for (Elem e : polyad) sum = (sum + e) % 5;
            for (const Tree& t : all_trees(3, 3)) CHECK(evaluate_iterated(s, polyad, t) == sum);
        }
    }

    TEST_CASE("scalar arithmetic over Q and GF(p)") {
        CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
        CHECK(Scalar::rational(1, 3) + Scalar::rational(1, 6) == Scalar::rational(1, 2));
        const Scalar a = Scalar::mod(2, 5);
        CHECK(a * a.inverse() == Scalar::mod(1, 5));
        CHECK(-Scalar::mod(1, 3) == Scalar::mod(2, 3));
        CHECK(parse_scalar("-2/5") == Scalar::rational(-2, 5));
        CHECK(heine(3, Scalar(2)) == Scalar(7));
        CHECK(heine(4, Scalar(1)) == Scalar(4));
        CHECK_THROWS(Scalar::mod(1, 3) + Scalar::mod(1, 5));
    }
}
