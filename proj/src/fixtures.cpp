#include "polyadika/fixtures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <regex>

#include "polyadika/arity.hpp"
#include "polyadika/error.hpp"

namespace polyadika::fixtures {

System z3_ternary() {
    return System::tabulate(3, 3, [](const Elem* x) { return Elem((x[0] + 3 - x[1] + x[2]) % 3); });
}

System z4_ternary() {
    return System::tabulate(4, 3, [](const Elem* x) { return Elem((x[0] + x[1] + x[2] + 1) % 4); });
}

System derived_cyclic(int m, int n) {
    return System::tabulate(m, n, [m, n](const Elem* x) {
        Elem s = 0;
        for (int i = 0; i < n; ++i) s += x[i];
        return Elem(s % m);
    });
}

System derived_from_binary(const System& binary, int n) {
    if (binary.arity() != 2) throw DomainError("derived_from_binary needs a binary system");
    System sys = System::tabulate(binary.size(), n, [&](const Elem* x) {
        Elem r = x[n - 1];
        for (int i = n - 2; i >= 0; --i) r = binary({x[i], r});
        return r;
    });
    if (!binary.carrier().labels.empty()) sys.set_labels(binary.carrier().labels);
    return sys;
}

System s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return Elem(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    System sys = System::tabulate(6, 2, [&](const Elem* x) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[x[0]][perms[x[1]][i]];
        return index(c);
    });
    std::vector<std::string> labels;
    for (const auto& q : perms) labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    sys.set_labels(labels);
    return sys;
}

System s3_derived(int n) { return derived_from_binary(s3(), n); }

System alternating5(int m) {
    return System::tabulate(m, 5, [m](const Elem* x) {
        long long s = 0;
        for (int i = 0; i < 5; ++i) s += (i % 2 ? -1 : 1) * static_cast<long long>(x[i]);
        return Elem(((s % m) + m) % m);
    });
}

System left_zero_band() {
    return System::tabulate(2, 2, [](const Elem* x) { return x[0]; });
}

System null_system(int m, int n) {
    return System::tabulate(m, n, [](const Elem*) { return Elem(0); });
}

namespace {

struct Anti {
    int a, b;
};

Anti anti(Elem e) { return {int(e / 2) + 1, int(e % 2) + 1}; }
Elem anti_index(int a, int b) { return Elem(2 * (a - 1) + (b - 1)); }

} // namespace

System antidiagonal_gf3() {
    return System::tabulate(4, 3, [](const Elem* x) {
        Anti g = anti(x[0]), h = anti(x[1]), u = anti(x[2]);
        // [[0,a1],[b1,0]][[0,a2],[b2,0]][[0,a3],[b3,0]] = [[0,a1 b2 a3],[b1 a2 b3,0]]
        return anti_index(g.a * h.b * u.a % 3, g.b * h.a * u.b % 3);
    });
}

System gf3_units() {
    return System::tabulate(2, 2, [](const Elem* x) { return Elem(((x[0] + 1) * (x[1] + 1) % 3) - 1); });
}

MultiplaceMap antidiagonal_map() {
    return MultiplaceMap::tabulate(antidiagonal_gf3(), gf3_units(), 2, [](const Elem* x) {
        Anti g = anti(x[0]), h = anti(x[1]);
        return Elem(g.a * h.a * g.b * h.b % 3 - 1);
    });
}

// ---- exterior algebra monomials ----

namespace {

struct Monomial {
    int sign = 0; // 0 for the zero element
    unsigned mask = 0;
};

struct GrassmannPart {
    int gens;
    std::vector<unsigned> masks; // masks of the chosen parity, increasing
    std::vector<int> rank;       // mask -> position, or -1

    GrassmannPart(int g, bool odd) : gens(g), rank(1u << g, -1) {
        if (g < 1 || g > 10) throw DomainError("Grassmann fixtures take 1..10 generators");
        for (unsigned s = 0; s < (1u << g); ++s)
            if ((std::popcount(s) % 2 == 1) == odd) {
                rank[s] = static_cast<int>(masks.size());
                masks.push_back(s);
            }
    }
    int size() const { return 1 + 2 * static_cast<int>(masks.size()); }
    Monomial get(Elem e) const {
        if (e == 0) return {};
        return {(e - 1) % 2 ? -1 : 1, masks[(e - 1) / 2]};
    }
    Elem put(Monomial m) const {
        if (m.sign == 0) return 0;
        return Elem(1 + 2 * rank[m.mask] + (m.sign < 0 ? 1 : 0));
    }
    std::vector<std::string> labels() const {
        std::vector<std::string> out{"0"};
        for (unsigned s : masks)
            for (char sg : {'+', '-'}) {
                std::string l(1, sg);
                l += "e";
                for (int i = 0; i < gens; ++i)
                    if (s >> i & 1u) l += std::to_string(i + 1);
                out.push_back(l);
            }
        return out;
    }
};

Monomial wedge(Monomial x, Monomial y) {
    if (x.sign == 0 || y.sign == 0 || (x.mask & y.mask)) return {};
    // Each pair (a in x, b in y) with a > b costs one transposition.
    int swaps = 0;
    for (unsigned a = x.mask; a; a &= a - 1) {
        const int ia = std::countr_zero(a);
        swaps += std::popcount(y.mask & ((1u << ia) - 1));
    }
    return {x.sign * y.sign * (swaps % 2 ? -1 : 1), x.mask | y.mask};
}

System grassmann_part(int gens, bool odd) {
    GrassmannPart part(gens, odd);
    System sys = System::tabulate(part.size(), 3, [&](const Elem* x) {
        return part.put(wedge(wedge(part.get(x[0]), part.get(x[1])), part.get(x[2])));
    });
    sys.set_labels(part.labels());
    return sys;
}

// Image of a monomial under e_i -> sign[i] e_perm[i].
Monomial act(Monomial m, const std::vector<int>& perm, const std::vector<int>& sign) {
    if (m.sign == 0) return m;
    Monomial r{m.sign, 0};
    for (unsigned a = m.mask; a; a &= a - 1) {
        const int i = std::countr_zero(a);
        r = wedge(r, Monomial{sign[i], 1u << perm[i]});
    }
    return r;
}

std::vector<Elem> part_action(const GrassmannPart& part, const std::vector<int>& perm, const std::vector<int>& sign) {
    std::vector<Elem> out(part.size());
    for (Elem e = 0; e < Elem(part.size()); ++e) out[e] = part.put(act(part.get(e), perm, sign));
    return out;
}

} // namespace

System grassmann_odd(int gens) { return grassmann_part(gens, true); }
System grassmann_even(int gens) { return grassmann_part(gens, false); }

MultiplaceMap grassmann_map(int gens) {
    GrassmannPart odd(gens, true), even(gens, false);
    return MultiplaceMap::tabulate(grassmann_odd(gens), grassmann_even(gens), 2, [&](const Elem* x) {
        return even.put(wedge(odd.get(x[0]), odd.get(x[1])));
    });
}

std::vector<SymmetryGenerator> grassmann_symmetry(int gens) {
    GrassmannPart odd(gens, true), even(gens, false);
    std::vector<int> id(gens), plus(gens, 1);
    for (int i = 0; i < gens; ++i) id[i] = i;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> moves;
    if (gens >= 2) {
        auto swap01 = id;
        std::swap(swap01[0], swap01[1]);
        moves.emplace_back(swap01, plus);
        std::vector<int> cyc(gens);
        for (int i = 0; i < gens; ++i) cyc[i] = (i + 1) % gens;
        moves.emplace_back(cyc, plus);
    }
    auto flip = plus;
    flip[0] = -1;
    moves.emplace_back(id, flip);
    std::vector<SymmetryGenerator> out;
    for (const auto& [perm, sign] : moves) out.push_back({part_action(odd, perm, sign), part_action(even, perm, sign)});
    return out;
}

// ---- named fixtures ----

namespace {

struct Entry {
    std::string name;
    std::string (*make)();
};

std::string op(const System& s) { return save_operation(s); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"z3-ternary", [] { return op(z3_ternary()); }},
        {"z4-ternary", [] { return op(z4_ternary()); }},
        {"z2-ternary", [] { return op(derived_cyclic(2, 3)); }},
        {"z3-binary", [] { return op(derived_cyclic(3, 2)); }},
        {"z5-ternary", [] { return op(derived_cyclic(5, 3)); }},
        {"s3", [] { return op(s3()); }},
        {"s3-ternary", [] { return op(s3_derived(3)); }},
        {"s3-4ary", [] { return op(s3_derived(4)); }},
        {"alternating5-z3", [] { return op(alternating5(3)); }},
        {"left-zero-band", [] { return op(left_zero_band()); }},
        {"null-ternary", [] { return op(null_system(2, 3)); }},
        {"antidiagonal-gf3", [] { return op(antidiagonal_gf3()); }},
        {"gf3-units", [] { return op(gf3_units()); }},
        {"antidiagonal-map", [] { return save_map(antidiagonal_map()); }},
        {"grassmann3-odd", [] { return op(grassmann_odd(3)); }},
        {"grassmann6-odd", [] { return op(grassmann_odd(6)); }},
        {"grassmann6-even", [] { return op(grassmann_even(6)); }},
        {"grassmann6-map", [] { return save_map(grassmann_map(6)); }},
    };
    return list;
}

} // namespace

std::string fixture_text(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e.make();
    // derived-z<m>-<n>: n-ary sum mod m
    std::smatch mt;
    static const std::regex derived(R"(derived-z(\d+)-(\d+))");
    if (std::regex_match(name, mt, derived)) {
        int m = std::stoi(mt[1]), n = std::stoi(mt[2]);
        if (m < 1 || m > 64 || n < 2 || n > 8) throw DomainError("derived fixture parameters out of range");
        return op(derived_cyclic(m, n));
    }
    throw DomainError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    out.push_back("derived-z<m>-<n>");
    return out;
}

std::vector<NamedSystem> corpus() {
    return {
        {"z3-ternary", z3_ternary()},
        {"z4-ternary", z4_ternary()},
        {"z2-ternary", derived_cyclic(2, 3)},
        {"z3-4ary", derived_cyclic(3, 4)},
        {"z5-ternary", derived_cyclic(5, 3)},
        {"s3", s3()},
        {"s3-ternary", s3_derived(3)},
        {"alternating5-z2", alternating5(2)},
        {"left-zero-band", left_zero_band()},
        {"left-zero-ternary", derived_from_binary(left_zero_band(), 3)},
        {"null-ternary", null_system(2, 3)},
        {"antidiagonal-gf3", antidiagonal_gf3()},
        {"gf3-units", gf3_units()},
        {"grassmann3-odd", grassmann_odd(3)},
        {"b-derived-z3", b_derived_ternary(derived_cyclic(3, 2), 1)},
    };
}

} // namespace polyadika::fixtures
