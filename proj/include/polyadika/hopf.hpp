#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/matrix.hpp"
#include "polyadika/scalar.hpp"

namespace polyadika {

using Vec = std::vector<Scalar>;

// Finite-dimensional ternary (co)algebra data over Q (p = 0) or GF(p).
// Tensors are dense and row-major over the listed index order; absent
// structure is an empty vector.
struct TernaryHopf {
    int dim = 0;
    int p = 0;
    std::vector<std::string> labels;
    Vec mu3;    // [a][b][c][r]: coefficient of e_r in [e_a e_b e_c]
    Vec delta3; // [a][i][j][k]: coefficient of e_i (x) e_j (x) e_k in D(e_a)
    Vec mu2;    // [a][b][r], optional binary factor
    Vec delta2; // [a][i][j]
    Vec eps, eps2;   // counit, second sequential counit
    Vec unit, unit2; // unit vector, second sequential unit
    std::optional<Matrix> S; // S(e_c) = sum_r S(r, c) e_r
    Vec R;                   // [i][j][k]

    void validate() const;
    Scalar zero() const;
    Scalar one() const;
    Vec basis(int a) const;
};

// "polytns 1", "dim d", "field Q" or "field F<p>", optional "labels ...",
// then any of mu3 delta3 mu2 delta2 eps eps2 unit unit2 S R, each followed
// by its flat coefficients.
TernaryHopf load_tensors(const std::string& text);
std::string save_tensors(const TernaryHopf& h);

struct HopfCheck {
    std::string name;
    bool ok = true;
    std::string detail; // first failing basis indices
};

using HopfReport = std::vector<HopfCheck>;
bool all_ok(const HopfReport& r);

// ---- tensor arithmetic ----

// Ternary product on H^(x)k, factor-wise.
Vec mul3(const TernaryHopf& h, int k, const Vec& x, const Vec& y, const Vec& z);
// D applied to one element of H.
Vec coproduct(const TernaryHopf& h, const Vec& x);
// Output factor t is input factor perm[t] (0-based), for X in H^(x)k.
Vec permute_factors(const TernaryHopf& h, const Vec& x, const std::vector<int>& perm);
Vec tensor(const TernaryHopf& h, const Vec& a, const Vec& b);
// Largest coefficient difference: absolute value over Q, centred residue over GF(p).
double residual(const TernaryHopf& h, const Vec& a, const Vec& b);

// ---- checks ----

HopfCheck check_ternary_associativity(const TernaryHopf& h);
HopfReport check_units(const TernaryHopf& h);   // strong unit, or the sequential pair
HopfReport check_counits(const TernaryHopf& h); // strong counit, or the sequential pair
// Strong units among all vectors over GF(p), or with coefficients in {-1, 0, 1} over Q.
std::vector<Vec> find_strong_units(const TernaryHopf& h);

enum class Coassociativity { Standard, Sigma, Permutational, Comedial };
// sigma in S3 or pi in S5, 0-based images; ignored for Standard/Comedial.
HopfCheck check_coassociativity(const TernaryHopf& h, Coassociativity variant, const std::vector<int>& perm = {});

// mu3 o (f (x) g (x) h) o D with maps given as column-action matrices.
Matrix convolution(const TernaryHopf& h, const Matrix& f, const Matrix& g, const Matrix& k);

// D([abc]) = [D(a) D(b) D(c)] on all basis triples.
HopfCheck check_bialgebra(const TernaryHopf& h);

enum class AntipodeKind { Skew, Strong };
// Skew: one line per placement. Strong needs mu2 and a unit.
HopfReport check_antipode(const TernaryHopf& h, const Matrix& s, AntipodeKind kind);
// Solves the three skew placement identities for S; nullopt if inconsistent.
struct AntipodeSolution {
    Matrix s;
    bool unique = false;
};
std::optional<AntipodeSolution> solve_skew_antipode(const TernaryHopf& h);
// D o S = tau13 o (S (x) S (x) S) o D.
HopfCheck check_skew_involutive(const TernaryHopf& h, const Matrix& s);

struct Derivedness {
    std::string mu;    // "declared", "found", "none", "not found within budget"
    std::string delta;
    std::string kind() const; // derived, mu-derived, delta-derived, non-derived, undetermined
};
Derivedness classify_derived(const TernaryHopf& h);

// ---- Nambu structure ----

// [a,b,c]_N on basis triples, laid out like mu3.
Vec nambu_bracket(const TernaryHopf& h);
HopfCheck check_abelian(const TernaryHopf& h);
// [abc]+[bca]+[cab] = q([cba]+[acb]+[bac]) on all basis triples.
HopfCheck check_q_deformed(const TernaryHopf& h, const Scalar& q);
// mu3 o omega(+/-) = sigma(+/-) o mu3, with both sides built independently.
HopfCheck check_omega_identity(const TernaryHopf& h);
// The same relation for three elements of H^(x)k.
bool q_relation(const TernaryHopf& h, int k, const Vec& a, const Vec& b, const Vec& c, const Scalar& q);

// ---- quasifiveangular structure ----

struct YbeResidual {
    double r1 = 0, r2 = 0, r3 = 0, r5 = 0;
};
// R placed at positions (a, b, c) of H^(x)5, unit elsewhere (1-based).
Vec place_r(const TernaryHopf& h, const Vec& r, int a, int b, int c);
YbeResidual check_quasifiveangular(const TernaryHopf& h, const Vec& r);
double check_ternary_ybe(const TernaryHopf& h, const Vec& r);

struct SlnReport {
    bool contraction[3] = {false, false, false}; // skew antipode, each placement
    bool counit = false;
    bool derived = false;
    bool ok() const { return contraction[0] && contraction[1] && contraction[2] && counit && derived; }
};
// Evaluates the matrix-coefficient coproduct on a concrete invertible A.
SlnReport sl_n_ternary_coproduct(const Matrix& a);

// Tensor product of three ternary algebras with the factor-wise product.
TernaryHopf tensor_cube(const TernaryHopf& a, const TernaryHopf& b, const TernaryHopf& c);

// ---- fixtures ----

namespace hopf_fixtures {

// k(G): group-like basis, eps = 1, S(g) = g-bar.
TernaryHopf group_algebra(const System& g, int p = 0);
enum class FunctionCounit { Evaluation, Sequential };
// F(G) on the delta basis; the counit evaluates at `at` (and `at2`).
TernaryHopf function_algebra(const System& g, FunctionCounit counit, Elem at = 0, Elem at2 = 0, int p = 0);
// Binary data promoted to mu3 = mu2(mu2 (x) id), D3 = (id (x) D2) D2.
TernaryHopf derived_from_binary(int dim, const Vec& mu2, const Vec& delta2, const Vec& eps, const Vec& unit, int p);
// Basis 1, x, y, xy with x^2 = 1, y^2 = 0, yx = -xy.
TernaryHopf sweedler(int p = 0);
// 2x2 matrices, basis E11 E12 E21 E22, triple product, unit = identity.
TernaryHopf matrix_m2(int p = 0);
// Basis E12, E21 with the triple matrix product.
TernaryHopf antidiagonal(int p = 0);
// K[t]/(t^2), derived.
TernaryHopf dual_numbers(int p = 0);
// span{e1, e2, x} with e1, e2 group-like and x primitive in the two-unit sense.
TernaryHopf exx_coalgebra(int p = 0);
// k(Z2 derived ternary) with unit 0.
TernaryHopf z2_group_algebra(int p = 0);

} // namespace hopf_fixtures

// Primitive coproduct on M2 with e1 = E11, e2 = E22; checks semiorthogonality
// and D([x1 x2 x3]) = [D(x1) D(x2) D(x3)] on all basis triples.
HopfReport exx_product_check(int p = 0);

// Derived Woronowicz-type relation at q: checks sigma+([x e y]) = q sigma-([x e y])
// in H and for the coproduct images in H^(x)3.
HopfReport woronowicz_check(const TernaryHopf& h, int x, int e, int y, const Scalar& q);

// Uniform coefficients in GF(p).
Vec random_r(int dim, int p, std::uint64_t seed);

} // namespace polyadika
