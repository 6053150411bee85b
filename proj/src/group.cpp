#include "polyadika/group.hpp"

#include "polyadika/error.hpp"
#include "polyadika/properties.hpp"

namespace polyadika {

Elem querelement(const System& sys, Elem g) {
    const int n = sys.arity(), m = sys.size();
    if (g >= Elem(m)) throw DomainError("element out of range");
    std::vector<Elem> args(n);
    std::vector<Elem> sols;
    for (Elem x = 0; x < Elem(m); ++x) {
        bool ok = true;
        for (int p = 0; ok && p < n; ++p) {
            std::fill(args.begin(), args.end(), g);
            args[p] = x;
            ok = sys(args.data()) == g;
        }
        if (ok) sols.push_back(x);
    }
    if (sols.size() != 1)
        throw DomainError("element " + std::to_string(g) + " has " + std::to_string(sols.size()) +
                          " querelement candidates; not a polyadic group");
    return sols[0];
}

QuerTable::QuerTable(const System& sys) : system(sys) {
    if (classify(sys) != Kind::Group) throw DomainError("querelements need a polyadic group");
    quer.resize(sys.size());
    for (Elem g = 0; g < Elem(sys.size()); ++g) quer[g] = querelement(sys, g);
}

Elem polyadic_power(const System& sys, Elem g, int lmu) {
    if (lmu < 0) throw DomainError("use negative_power for negative exponents");
    if (g >= Elem(sys.size())) throw DomainError("element out of range");
    const int n = sys.arity();
    // Right-nested long product: r <- mu[g^(n-1), r].
    Elem r = g;
    std::vector<Elem> args(n, g);
    for (int i = 0; i < lmu; ++i) {
        args[n - 1] = r;
        r = sys(args.data());
    }
    return r;
}

Elem negative_power(const System& sys, Elem g, int lmu) {
    if (lmu < 1) throw DomainError("negative_power needs lmu >= 1");
    const int n = sys.arity(), m = sys.size();
    std::vector<Elem> args(n, g);
    args[0] = polyadic_power(sys, g, lmu - 1);
    std::vector<Elem> sols;
    for (Elem x = 0; x < Elem(m); ++x) {
        args[n - 1] = x;
        if (sys(args.data()) == g) sols.push_back(x);
    }
    if (sols.size() != 1)
        throw DomainError("negative power equation has " + std::to_string(sols.size()) + " solutions");
    return sols[0];
}

Elem power(const System& sys, Elem g, long long exponent) {
    if (exponent >= 0) return polyadic_power(sys, g, static_cast<int>(exponent));
    return negative_power(sys, g, static_cast<int>(-exponent));
}

Elem querpower(const System& sys, Elem g, int k) {
    if (k < 0) throw DomainError("querpower needs k >= 0");
    for (int i = 0; i < k; ++i) g = querelement(sys, g);
    return g;
}

Elem querpower(const QuerTable& qt, Elem g, int k) {
    if (k < 0) throw DomainError("querpower needs k >= 0");
    for (int i = 0; i < k; ++i) g = qt[g];
    return g;
}

long long querpower_exponent(int n, int k) {
    Scalar h = heine(k, Scalar(2 - n));
    if (!h.is_integer()) throw DomainError("Heine number is not an integer");
    return -h.num();
}

std::vector<DornteViolation> check_dornte(const QuerTable& qt) {
    const System& sys = qt.system;
    const int n = sys.arity(), m = sys.size();
    std::vector<DornteViolation> bad;
    std::vector<Elem> args(n);
    for (Elem g = 0; g < Elem(m); ++g)
        for (Elem h = 0; h < Elem(m); ++h)
            for (int i = 0; i < n - 1; ++i)
                for (int side = 0; side < 2; ++side) {
                    // Polyad occupies slots 1..n-1 (right) or 0..n-2 (left).
                    const int off = side == 0 ? 1 : 0;
                    for (int j = 0; j < n - 1; ++j) args[off + j] = j == i ? qt[h] : h;
                    args[side == 0 ? 0 : n - 1] = g;
                    if (sys(args.data()) != g) bad.push_back({g, h, i, side == 0});
                }
    return bad;
}

} // namespace polyadika
