#pragma once

#include <string>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/morphisms.hpp"
#include "polyadika/quivers.hpp"

namespace polyadika::fixtures {

// [g h u] = g - h + u mod 3.
System z3_ternary();
// [g h u] = g + h + u + 1 mod 4.
System z4_ternary();
// mu[g1..gn] = g1 + ... + gn mod m.
System derived_cyclic(int m, int n);
// n-ary product derived from a binary one, right-nested.
System derived_from_binary(const System& binary, int n);
// Permutations of {0,1,2} in lexicographic order, (a b)(x) = a(b(x)).
System s3();
System s3_derived(int n);
// g1 - g2 + g3 - g4 + g5 mod m.
System alternating5(int m);
// Binary x.y = x on two elements.
System left_zero_band();
// Every product is 0.
System null_system(int m, int n);

// Antidiagonal 2x2 matrices over GF(3) with entries in {1,2}; element
// 2(a-1) + (b-1) is [[0,a],[b,0]]; triple matrix product.
System antidiagonal_gf3();
// {1, 2} under multiplication mod 3, element i is i + 1.
System gf3_units();
// Phi(g1, g2) = a1 a2 b1 b2 into gf3_units().
MultiplaceMap antidiagonal_map();

// Signed monomials of an exterior algebra on `gens` generators, restricted
// to odd (or even) degree, with the ternary product. Element 0 is zero;
// element 1 + 2r + s is (-1)^s e_S for the r-th mask S of that parity.
System grassmann_odd(int gens);
System grassmann_even(int gens);
// Phi(a, b) = ab from the odd part to the even part.
MultiplaceMap grassmann_map(int gens);
// A transposition, a full cycle and one sign flip of the generators, acting
// on both parts.
std::vector<SymmetryGenerator> grassmann_symmetry(int gens);

// Fixtures by name, as file text. Throws DomainError for an unknown name.
std::string fixture_text(const std::string& name);
std::vector<std::string> fixture_names();

// Small systems for exhaustive property runs.
std::vector<NamedSystem> corpus();

} // namespace polyadika::fixtures
