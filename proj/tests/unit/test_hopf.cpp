#include "doctest.h"

#include "polyadika/fixtures.hpp"
#include "polyadika/hopf.hpp"

using namespace polyadika;
namespace fx = polyadika::fixtures;
namespace hf = polyadika::hopf_fixtures;

TEST_SUITE("hopf") {
    TEST_CASE("tensor text round trip") {
        for (const TernaryHopf& h : {hf::sweedler(), hf::sweedler(3), hf::group_algebra(fx::z3_ternary())}) {
            const TernaryHopf back = load_tensors(save_tensors(h));
            CHECK(back.dim == h.dim);
            CHECK(back.p == h.p);
            CHECK(back.mu3 == h.mu3);
            CHECK(back.delta3 == h.delta3);
            CHECK(back.eps == h.eps);
        }
    }

    TEST_CASE("group algebras are ternary Hopf algebras") {
        for (const System& g : {fx::z3_ternary(), fx::z4_ternary(), fx::s3_derived(3)}) {
            const TernaryHopf h = hf::group_algebra(g);
            CHECK(check_ternary_associativity(h).ok);
            CHECK(check_coassociativity(h, Coassociativity::Standard).ok);
            CHECK(all_ok(check_counits(h)));
            CHECK(check_bialgebra(h).ok);
            REQUIRE(h.S.has_value());
            CHECK(all_ok(check_antipode(h, *h.S, AntipodeKind::Skew)));
            CHECK(check_skew_involutive(h, *h.S).ok);
        }
    }

    TEST_CASE("the solved skew antipode of a group algebra is the querelement map") {
        const TernaryHopf h = hf::group_algebra(fx::z4_ternary());
        const auto sol = solve_skew_antipode(h);
        REQUIRE(sol.has_value());
        CHECK(sol->unique);
        CHECK(sol->s == *h.S);
    }

    TEST_CASE("function algebras") {
        const TernaryHopf h = hf::function_algebra(fx::z3_ternary(), hf::FunctionCounit::Evaluation);
        CHECK(check_ternary_associativity(h).ok);
        CHECK(check_bialgebra(h).ok);
        // Evaluation at the unit 0 is a counit in the outer slots only: [0 c 0] = -c.
        for (const HopfCheck& c : check_counits(h)) CHECK(c.ok == (c.name != "counit (e id e)"));
    }

    TEST_CASE("a wrong antipode fails") {
        const TernaryHopf h = hf::group_algebra(fx::z3_ternary());
        CHECK(!all_ok(check_antipode(h, Matrix::identity(3) + Matrix::identity(3), AntipodeKind::Skew)));
    }

    TEST_CASE("convolution with the identity reproduces the skew antipode relation") {
        const TernaryHopf h = hf::group_algebra(fx::z3_ternary());
        const Matrix id = Matrix::identity(3);
        const Matrix c = convolution(h, id, id, *h.S);
        // mu3(g, g, g-bar) = g, so the convolution is the identity.
        CHECK(c.is_identity());
    }

    TEST_CASE("permute_factors follows the stated convention") {
        const TernaryHopf h = hf::group_algebra(fx::z3_ternary());
        const Vec x = tensor(h, tensor(h, h.basis(0), h.basis(1)), h.basis(2));
        const Vec y = permute_factors(h, x, {2, 0, 1});
        CHECK(y == tensor(h, tensor(h, h.basis(2), h.basis(0)), h.basis(1)));
        CHECK(residual(h, x, x) == 0);
        CHECK(residual(h, x, y) == 1);
    }

    TEST_CASE("matrix algebra and its antidiagonal part are associative") {
        CHECK(check_ternary_associativity(hf::matrix_m2()).ok);
        CHECK(check_ternary_associativity(hf::antidiagonal()).ok);
        CHECK(check_ternary_associativity(hf::dual_numbers()).ok);
    }

    TEST_CASE("derivedness") {
        CHECK(classify_derived(hf::sweedler()).kind() == "derived");
        CHECK(classify_derived(hf::dual_numbers()).kind() == "mu-derived");
        CHECK(classify_derived(hf::group_algebra(fx::derived_cyclic(2, 3))).mu == "found");
    }

    TEST_CASE("Nambu brackets of commutative algebras vanish") {
        const TernaryHopf h = hf::group_algebra(fx::z3_ternary());
        CHECK(check_abelian(h).ok);
        CHECK(check_q_deformed(h, Scalar(1)).ok);
    }

    TEST_CASE("unit triple R is a quasifiveangular solution") {
        const TernaryHopf h = hf::z2_group_algebra();
        const Vec r = tensor(h, tensor(h, h.unit, h.unit), h.unit);
        const YbeResidual y = check_quasifiveangular(h, r);
        CHECK(y.r1 == 0);
        CHECK(y.r5 == 0);
        CHECK(check_ternary_ybe(h, r) == 0);
    }

    TEST_CASE("place_r puts R in the requested factors") {
        const TernaryHopf h = hf::z2_group_algebra();
        const Vec r = tensor(h, tensor(h, h.basis(1), h.basis(1)), h.basis(1));
        const Vec placed = place_r(h, r, 1, 3, 5);
        Vec want = h.basis(1);
        for (int t = 2; t <= 5; ++t) want = tensor(h, want, t % 2 == 1 ? h.basis(1) : h.unit);
        CHECK(placed == want);
    }

    TEST_CASE("random R is deterministic in the seed") {
        CHECK(random_r(2, 3, 5) == random_r(2, 3, 5));
        CHECK(random_r(2, 3, 5).size() == 8);
    }

    TEST_CASE("sl_n coproduct on an upper unitriangular matrix") {
        Matrix a = Matrix::identity(2);
        a(0, 1) = 1;
        CHECK(sl_n_ternary_coproduct(a).ok());
    }

    TEST_CASE("two-unit primitive coproduct on M2") {
        CHECK(all_ok(exx_product_check()));
    }

    TEST_CASE("tensor cube of group algebras is a group algebra") {
        const TernaryHopf a = hf::group_algebra(fx::derived_cyclic(2, 3));
        const TernaryHopf c = tensor_cube(a, a, a);
        CHECK(c.dim == 8);
        CHECK(check_ternary_associativity(c).ok);
    }
}
