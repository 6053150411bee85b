#pragma once

#include <string>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/scalar.hpp"

namespace polyadika {

// Unique x with mu[g, ..., g, x] = g, tested with x at every position.
// Throws DomainError when there is no solution or more than one.
Elem querelement(const System& sys, Elem g);

struct QuerTable {
    System system;
    std::vector<Elem> quer; // g -> querelement of g

    explicit QuerTable(const System& sys); // requires a group
    Elem operator[](Elem g) const { return quer[g]; }
};

// Long product of lmu(n-1)+1 copies of g; lmu = 0 gives g itself.
Elem polyadic_power(const System& sys, Elem g, int lmu);
// Unique x with mu[g^<lmu-1>, g^(n-2), x] = g.
Elem negative_power(const System& sys, Elem g, int lmu);
// Any integer exponent: positive, zero or negative.
Elem power(const System& sys, Elem g, long long exponent);

// k-fold queroperation.
Elem querpower(const System& sys, Elem g, int k);
Elem querpower(const QuerTable& qt, Elem g, int k);

// Exponent -[[k]]_{2-n} of the negative deformed power matching the k-th querpower.
long long querpower_exponent(int n, int k);

struct DornteViolation {
    Elem g = 0, h = 0;
    int quer_position = 0; // position of h-bar inside the neutral polyad
    bool polyad_on_right = true;
};

// mu[g, n_h] = mu[n_h, g] = g with n_h = (h^(n-2), h-bar) and h-bar
// at every position of the polyad.
std::vector<DornteViolation> check_dornte(const QuerTable& qt);

} // namespace polyadika
