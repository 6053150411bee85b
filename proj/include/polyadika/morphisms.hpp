#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/properties.hpp"

namespace polyadika {

// k-place map G^k -> G', dense over source k-tuples in lexicographic order.
struct MultiplaceMap {
    System source;
    System target;
    int k = 1;
    std::vector<Elem> table;

    MultiplaceMap() = default;
    MultiplaceMap(System src, System dst, int places, std::vector<Elem> tab);
    static MultiplaceMap tabulate(const System& src, const System& dst, int places,
                                  const std::function<Elem(const Elem*)>& f);

    Elem operator()(const Elem* args) const { return table[encode_tuple(args, k, source.size())]; }
};

// "polymap 1", "k <k>", then m_src^k target indices.
MultiplaceMap load_map(const std::string& text, const System& src, const System& dst);
std::string save_map(const MultiplaceMap& map);

// ---- equiary maps ----

CheckResult verify_homomorphism(const MultiplaceMap& map);
// phi[0..n-1] act on the arguments, phi[n] on the result.
CheckResult verify_homotopy(const System& src, const System& dst, const std::vector<std::vector<Elem>>& phis);

struct WeakResult {
    CheckResult wh1; // phi(mu_n[g]) = nu'_n[phi g]
    CheckResult wh2; // phi(nu_n'[g]) = mu'_n'[phi g]
    bool weak() const { return wh1.ok && wh2.ok; }
    bool semi_weak() const { return wh1.ok != wh2.ok; }
};

WeakResult verify_weak_homomorphism(const std::vector<Elem>& phi, const System& src, const System& nu_src,
                                    const System& dst, const System& nu_dst);

// ---- heteromorphism shapes ----

enum class HeteroClass { MultiplaceHomomorphism, Intermediate, Binarizing };
std::string to_string(HeteroClass c);

struct ShapeParams {
    int n = 0, n_prime = 0, k = 0, lmu = 0, lid = 0;
    HeteroClass cls = HeteroClass::MultiplaceHomomorphism;
};

// Given n, k and the intact count; or n, k and the multiplication count.
// Throws DomainError ("not admissible") when the arity fractions are not
// integers or a bound fails.
ShapeParams shape_params_lid(int n, int k, int lid);
ShapeParams shape_params_lmu(int n, int k, int lmu);

struct Table1Row {
    int k = 0, lmu = 0, lid = 0;
    std::vector<std::pair<int, int>> series; // (n, n') pairs, smallest n first
};

// Every (k, lmu, lid) with 2 <= k <= k_max and lid >= 1, with the first
// `count` admissible initial arities.
std::vector<Table1Row> quantization_table(int k_max, int count = 3);

// Left side of the heteromorphism equation: `lmu` rows of n variables, then
// `lid` intact variables. Variable v sits in column v / k at place v % k of
// the right side, where column c is the argument of the c-th Phi.
struct HeteroShape {
    int n = 0, n_prime = 0, k = 0, lmu = 0, lid = 0;
    std::vector<int> assign; // n*lmu + lid variable indices

    void validate() const;
    // "lmu=1,lid=1,assign=0.1.2.3"
    std::string str() const;
    static HeteroShape parse(const std::string& text, int n, int n_prime, int k);
    bool operator==(const HeteroShape&) const = default;
};

// Phi(mu3[g1,g2,g3], g4) = mu2'[Phi(g1,g2), Phi(g3,g4)].
HeteroShape binarizing_ternary_shape();

struct HeteroResult : CheckResult {
    std::uint64_t assignments = 0;
};

// witness: the k*n' variable values of the first violating assignment.
HeteroResult verify_heteromorphism(const MultiplaceMap& map, const HeteroShape& shape);

// Paired carrier permutations (source, target) acting as automorphisms.
struct SymmetryGenerator {
    std::vector<Elem> on_source;
    std::vector<Elem> on_target;
};

struct SymmetricHeteroResult : HeteroResult {
    std::size_t group_order = 0;
    std::uint64_t orbit_representatives = 0;
};

// Same answer as verify_heteromorphism, visiting one assignment per orbit of
// the group generated by `gens`. Each generator is first checked to be an
// automorphism of source and target that commutes with the map; DomainError
// otherwise.
SymmetricHeteroResult verify_heteromorphism_symmetric(const MultiplaceMap& map, const HeteroShape& shape,
                                                      const std::vector<SymmetryGenerator>& gens,
                                                      std::size_t max_group = 200000);

struct Census {
    std::vector<MultiplaceMap> maps;
    bool complete = true;
    std::uint64_t nodes = 0;
};

Census enumerate_heteromorphisms(const System& src, const System& dst, const HeteroShape& shape);

// phi with Phi(g1..gk) = mu'-product of phi(g1)..phi(gk), right-nested.
std::optional<std::vector<Elem>> is_derived(const MultiplaceMap& map);

} // namespace polyadika
