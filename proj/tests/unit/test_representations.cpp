#include "doctest.h"

#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/matrix.hpp"
#include "polyadika/representations.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;

TEST_SUITE("representations") {
    TEST_CASE("matrix basics") {
        const Matrix p = Matrix::permutation({1, 2, 0});
        CHECK(p(1, 0) == Scalar(1));
        CHECK((p * p * p).is_identity());
        CHECK(p.inverse() == p.transpose());
        CHECK(p.determinant() == Scalar(1));
        CHECK(Matrix::permutation({1, 0}).determinant() == Scalar(-1));
        CHECK_THROWS_AS(Matrix(2, 2).inverse(), DomainError);
    }

    TEST_CASE("exact linear solve") {
        Matrix a(2, 2);
        a(0, 0) = 1;
        a(0, 1) = 2;
        a(1, 0) = 3;
        a(1, 1) = 4;
        const auto s = solve_linear(a, {5, 6});
        REQUIRE(s.has_value());
        CHECK(s->unique);
        CHECK(s->x[0] == Scalar(-4));
        CHECK(s->x[1] == Scalar::rational(9, 2));
        Matrix z(1, 2);
        CHECK(!solve_linear(z, {1}).has_value());
    }

    TEST_CASE("regular ternary representations satisfy their composition laws") {
        for (const System& g : {fx::z3_ternary(), fx::z4_ternary(), fx::s3_derived(3)})
            for (TernaryKind k : {TernaryKind::Left, TernaryKind::Right, TernaryKind::Middle})
                CHECK(verify_ternary_rep(regular_ternary(g, k)).ok);
    }

    TEST_CASE("the induced right representation inverts the left one") {
        for (const System& g : {fx::z3_ternary(), fx::z4_ternary(), fx::s3_derived(3)}) {
            const TernaryRep l = regular_ternary(g, TernaryKind::Left);
            const TernaryRep r = right_from_left(l);
            for (Elem a = 0; a < Elem(g.size()); ++a)
                for (Elem b = 0; b < Elem(g.size()); ++b) CHECK((l(a, b) * r(a, b)).is_identity());
        }
    }

    TEST_CASE("mixed identities and commutation") {
        for (const System& g : {fx::z3_ternary(), fx::z4_ternary(), fx::s3_derived(3)}) {
            CHECK(check_middle_left_right(g).ok);
            CHECK(check_left_right_commute(g).ok);
            CHECK(check_middle_trace_invariance(g).ok);
        }
    }

    TEST_CASE("non-associative systems have no regular representation") {
        const System bad = System::tabulate(2, 3, [](const Elem* x) { return Elem(x[0] == 0 && x[1] == 1); });
        CHECK_THROWS_AS(i_regular_representation(bad, 1), DomainError);
    }

    TEST_CASE("i-regular representations at every slot") {
        for (int n = 3; n <= 4; ++n) {
            const System s = fx::derived_cyclic(3, n);
            for (int slot = 1; slot <= n; ++slot) {
                CAPTURE(n);
                CAPTURE(slot);
                CHECK(verify_multiplace_rep(i_regular_representation(s, slot)).ok);
                CHECK(verify_multiaction(regular_multiaction_table(s, slot)).ok);
            }
        }
    }

    TEST_CASE("retract representation") {
        const System s = fx::derived_cyclic(3, 4);
        const RetractRep r = retract_representation(s, 1);
        CHECK(verify_retract_rep(r).ok);
        CHECK(r.ret.arity() == 2);
    }

    TEST_CASE("kron dimensions and identity") {
        const Matrix a = Matrix::identity(2);
        const Matrix b = Matrix::permutation({1, 2, 0});
        const Matrix k = kron(a, b);
        CHECK(k.rows() == 6);
        CHECK(kron(a, Matrix::identity(3)).is_identity());
        CHECK(kron(b, b) * kron(b, b) == kron(b * b, b * b));
    }

    TEST_CASE("permutation spectra lie on the unit circle") {
        const auto ev = spectral_check(Matrix::permutation({1, 2, 3, 0}));
        REQUIRE(ev.size() == 4);
        for (const auto& z : ev) CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    }

    TEST_CASE("derived left representation from a permutation action") {
        const System z3 = fx::derived_cyclic(3, 2);
        const std::vector<std::vector<Elem>> images = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        const TernaryRep l = derived_left_rep(z3, images);
        CHECK(l.group.arity() == 3);
        CHECK(verify_ternary_rep(l).ok);
    }
}
