#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/matrix.hpp"
#include "polyadika/morphisms.hpp"
#include "polyadika/properties.hpp"

namespace polyadika {

// Argument pattern of a multiplace representation:
//   Pi(slot_1, ..., slot_k) = Pi(col 0) o Pi(col 1) o ... o Pi(col n'-1)
// Variable v belongs to column v / k at place v % k. A slot with n
// variables is their product, a slot with one variable is intact.
struct RepShape {
    int n = 0, k = 0, n_prime = 2;
    std::vector<std::vector<int>> slots;

    void validate() const;
    int lmu() const;
    int lid() const { return k - lmu(); }
    std::string str() const;
    static RepShape from_hetero(const HeteroShape& s);
};

// Shape satisfied by the regular representation that inserts the acted-on
// element at `slot` (1..n). Slots 1 and n compose two maps, inner slots n.
RepShape regular_shape(int n, int slot);

// mu with h inserted at `slot` (1..n) among the n-1 arguments.
Elem regular_multiaction(const System& sys, int slot, const Elem* args, Elem h);

enum class Normalization { None, Unity, Quer };

struct MultiplaceRep {
    System system;
    RepShape shape;
    int dim = 0;
    std::vector<Matrix> table; // indexed by the k-tuple rank
    Normalization norm = Normalization::None;

    const Matrix& operator()(const Elem* args) const { return table[encode_tuple(args, shape.k, system.size())]; }
};

// Permutation matrices on the span of the carrier; column-action convention.
// Throws DomainError for a non-associative system.
MultiplaceRep i_regular_representation(const System& sys, int slot);

struct RepResult : CheckResult {
    std::string failed; // name of the failing relation
};

RepResult verify_multiplace_rep(const MultiplaceRep& rep);

// k-place action on a finite set of `points` elements.
struct Multiaction {
    System system;
    RepShape shape;
    int points = 0;
    std::vector<Elem> table; // (k-tuple rank) * points + x

    Elem operator()(const Elem* args, Elem x) const {
        return table[encode_tuple(args, shape.k, system.size()) * points + x];
    }
};

Multiaction regular_multiaction_table(const System& sys, int slot);
// Composition law of the shape, plus rho(e..e) x = x for every unity e.
RepResult verify_multiaction(const Multiaction& act);

// ---- ternary groups ----

enum class TernaryKind { Left, Right, Middle };
std::string to_string(TernaryKind k);
TernaryKind parse_ternary_kind(const std::string& s);

struct TernaryRep {
    TernaryKind kind = TernaryKind::Left;
    System group;
    std::vector<Matrix> table; // g * m + h

    const Matrix& operator()(Elem g, Elem h) const { return table[std::size_t(g) * group.size() + h]; }
};

// Left [g h u], right [u g h], middle [g u h].
TernaryRep regular_ternary(const System& group, TernaryKind kind);
// Pi^R(g, h) = Pi^L(h-bar, g-bar).
TernaryRep right_from_left(const TernaryRep& left);
// Pi^L(g, h) = pi(g) o pi(h) for a permutation representation pi of a binary
// group; `images[g]` is the permutation of pi(g).
TernaryRep derived_left_rep(const System& binary, const std::vector<std::vector<Elem>>& images);

RepResult verify_ternary_rep(const TernaryRep& rep);

// Pairs grouped by equal matrices; classes and members in increasing order.
std::vector<std::vector<std::pair<Elem, Elem>>> equivalence_classes(const TernaryRep& rep);

// Mixed identities between middle, left and right regular representations.
RepResult check_middle_left_right(const System& group);
// Left and right regular actions commute.
RepResult check_left_right_commute(const System& group);
// (a,b) ~ (a',b') when a = [g a' g-bar] and b = [h b' h-bar]; equivalent
// pairs must have middle matrices of equal trace.
RepResult check_middle_trace_invariance(const System& group);

struct GammaReport {
    int left_total = 0, left_ok = 0;
    int middle_total = 0, middle_ok = 0;
    bool ok() const { return left_ok == left_total && middle_ok == middle_total; }
};

// For a ternary group on Z_m: gamma^L_i = Pi^L(0, i) with
// gamma^L_i gamma^L_j = gamma^L_{i+j}, and gamma^M_s = Pi^M(0, s) with
// gamma^M_i gamma^M_j gamma^M_k = gamma^M_[ijk].
GammaReport gamma_algebra_check(const System& group);

// g1 (*) g2 = mu[g1, g^(n-2), g2].
System retract(const System& sys, Elem g);

struct RetractRep {
    System ret;
    std::vector<Matrix> table; // Pi2(g1, g2), g1 * m + g2
};

// Two-place representation of the retract: the tensor product of left
// regular matrices with arguments (g^(n-2), g1) and (g^(n-2), g2).
RetractRep retract_representation(const System& sys, Elem g);
// Pi2(g1,g2) Pi2(g1',g2') = Pi2(g1 (*) g1', g2 (*) g2').
RepResult verify_retract_rep(const RetractRep& rep);

Matrix kron(const Matrix& a, const Matrix& b);

// Floating eigenvalues for comparison with stated spectra.
std::vector<std::complex<double>> spectral_check(const Matrix& m);

} // namespace polyadika
