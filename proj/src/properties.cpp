#include "polyadika/properties.hpp"

#include <algorithm>
#include <numeric>

#include "polyadika/config.hpp"
#include "polyadika/error.hpp"

namespace polyadika {

namespace {

// Positions checked for a distinguished element under `mode`.
std::vector<int> positions(int n, PlaceMode mode) {
    if (mode == PlaceMode::Ends) return n == 1 ? std::vector<int>{0} : std::vector<int>{0, n - 1};
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

} // namespace

AssocResult is_totally_associative(const System& sys) {
    const int n = sys.arity(), m = sys.size(), len = 2 * n - 1;
    const std::uint64_t total = tuple_count(m, len);
    require_budget(double(total) * 2 * n, "associativity scan");

    auto chunk = [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
        std::vector<Elem> t(len), args(n);
        decode_tuple(b, t.data(), len, m);
        for (std::uint64_t i = b; i < e; ++i, next_tuple(t.data(), len, m)) {
            const Elem first = sys(t.data());
            args[0] = first;
            std::copy(t.begin() + n, t.end(), args.begin() + 1);
            const Elem ref = sys(args.data());
            for (int p = 1; p < n; ++p) {
                std::copy(t.begin(), t.begin() + p, args.begin());
                args[p] = sys(t.data() + p);
                std::copy(t.begin() + p + n, t.end(), args.begin() + p + 1);
                if (sys(args.data()) != ref) return i;
            }
        }
        return std::nullopt;
    };

    AssocResult r;
    auto bad = find_first_parallel(total, chunk);
    if (!bad) return r;
    r.ok = false;
    r.witness.resize(len);
    decode_tuple(*bad, r.witness.data(), len, m);
    // Recover which placement disagrees with the leftmost one.
    std::vector<Elem> args(n);
    const auto& t = r.witness;
    args[0] = sys(t.data());
    std::copy(t.begin() + n, t.end(), args.begin() + 1);
    const Elem ref = sys(args.data());
    for (int p = 1; p < n; ++p) {
        std::copy(t.begin(), t.begin() + p, args.begin());
        args[p] = sys(t.data() + p);
        std::copy(t.begin() + p + n, t.end(), args.begin() + p + 1);
        if (sys(args.data()) != ref) {
            r.place_b = p;
            break;
        }
    }
    r.detail = "inner product at position 0 vs " + std::to_string(r.place_b);
    return r;
}

std::optional<Elem> find_zero(const System& sys, PlaceMode mode) {
    const int n = sys.arity(), m = sys.size();
    const auto pos = positions(n, mode);
    const std::uint64_t others = tuple_count(m, n - 1);
    require_budget(double(m) * double(others) * double(pos.size()), "zero scan");
    std::vector<Elem> rest(n - 1), args(n);
    std::vector<Elem> found;
    for (Elem z = 0; z < Elem(m); ++z) {
        bool ok = true;
        for (int p : pos) {
            std::fill(rest.begin(), rest.end(), 0);
            for (std::uint64_t i = 0; ok && i < others; ++i, next_tuple(rest.data(), n - 1, m)) {
                for (int j = 0, k = 0; j < n; ++j) args[j] = j == p ? z : rest[k++];
                if (sys(args.data()) != z) ok = false;
            }
            if (!ok) break;
        }
        if (ok) found.push_back(z);
    }
    // A zero absorbs everything, so two zeros would have to coincide.
    if (found.size() > 1)
        throw DomainError("more than one absorbing element found; placement mode too weak");
    if (found.empty()) return std::nullopt;
    return found[0];
}

std::vector<Elem> find_identities(const System& sys, PlaceMode mode) {
    const int n = sys.arity(), m = sys.size();
    const auto pos = positions(n, mode);
    std::vector<Elem> out, args(n);
    for (Elem e = 0; e < Elem(m); ++e) {
        bool ok = true;
        for (Elem g = 0; ok && g < Elem(m); ++g)
            for (int p : pos) {
                std::fill(args.begin(), args.end(), e);
                args[p] = g;
                if (sys(args.data()) != g) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(e);
    }
    return out;
}

std::vector<Elem> idempotents(const System& sys) {
    std::vector<Elem> out, args(sys.arity());
    for (Elem g = 0; g < Elem(sys.size()); ++g) {
        std::fill(args.begin(), args.end(), g);
        if (sys(args.data()) == g) out.push_back(g);
    }
    return out;
}

bool is_neutral_polyad(const System& sys, const Tuple& polyad, NeutralConvention conv) {
    const int n = sys.arity();
    if (static_cast<int>(polyad.size()) != n - 1) throw DomainError("neutral polyad must have n-1 entries");
    const auto pos = positions(n, conv == NeutralConvention::Ends ? PlaceMode::Ends : PlaceMode::All);
    std::vector<Elem> args(n);
    for (Elem g = 0; g < Elem(sys.size()); ++g)
        for (int p : pos) {
            for (int j = 0, k = 0; j < n; ++j) args[j] = j == p ? g : polyad[k++];
            if (sys(args.data()) != g) return false;
        }
    return true;
}

std::vector<Tuple> neutral_polyads(const System& sys, NeutralConvention conv) {
    const int n = sys.arity(), m = sys.size();
    const std::uint64_t total = tuple_count(m, n - 1);
    require_budget(double(total) * m * n, "neutral polyad scan");
    std::vector<Tuple> out;
    Tuple t(n - 1, 0);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), n - 1, m))
        if (is_neutral_polyad(sys, t, conv)) out.push_back(t);
    return out;
}

CheckResult is_medial(const System& sys) {
    const int n = sys.arity(), m = sys.size(), len = n * n;
    const std::uint64_t total = tuple_count(m, len);
    require_budget(double(total) * (2 * n + 2), "mediality scan");
    auto chunk = [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
        std::vector<Elem> a(len), rows(n), cols(n), col(n);
        decode_tuple(b, a.data(), len, m);
        for (std::uint64_t i = b; i < e; ++i, next_tuple(a.data(), len, m)) {
            for (int r = 0; r < n; ++r) rows[r] = sys(a.data() + r * n);
            for (int c = 0; c < n; ++c) {
                for (int r = 0; r < n; ++r) col[r] = a[r * n + c];
                cols[c] = sys(col.data());
            }
            if (sys(rows.data()) != sys(cols.data())) return i;
        }
        return std::nullopt;
    };
    CheckResult r;
    if (auto bad = find_first_parallel(total, chunk)) {
        r.ok = false;
        r.witness.resize(len);
        decode_tuple(*bad, r.witness.data(), len, m);
        r.detail = "row products vs column products differ";
    }
    return r;
}

CheckResult sigma_commutative(const System& sys, const std::vector<int>& sigma) {
    const int n = sys.arity(), m = sys.size();
    if (static_cast<int>(sigma.size()) != n) throw DomainError("permutation length must equal arity");
    std::vector<int> seen(sigma);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n; ++i)
        if (seen[i] != i) throw DomainError("not a permutation of 0..n-1");
    const std::uint64_t total = tuple_count(m, n);
    Tuple t(n, 0), s(n);
    CheckResult r;
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), n, m)) {
        for (int j = 0; j < n; ++j) s[j] = t[sigma[j]];
        if (sys(t.data()) != sys(s.data())) {
            r.ok = false;
            r.witness = t;
            r.detail = "permuted polyad gives a different value";
            return r;
        }
    }
    return r;
}

CheckResult is_commutative(const System& sys) {
    // A transposition and an n-cycle generate the symmetric group.
    const int n = sys.arity();
    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    auto r = sigma_commutative(sys, swap01);
    if (!r) {
        r.detail = "swap of positions 0,1";
        return r;
    }
    r = sigma_commutative(sys, cycle);
    if (!r) r.detail = "cyclic shift";
    return r;
}

CheckResult is_semicommutative(const System& sys) {
    const int n = sys.arity();
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[0], s[n - 1]);
    return sigma_commutative(sys, s);
}

PlaceReport place_report(const System& sys) {
    const int n = sys.arity(), m = sys.size();
    const std::uint64_t others = tuple_count(m, n - 1);
    require_budget(double(others) * m * n, "cancellation scan");
    PlaceReport rep;
    rep.cancellative.assign(n, true);
    rep.solvable.assign(n, true);
    std::vector<Elem> rest(n - 1), args(n);
    std::vector<int> hits(m);
    for (int p = 0; p < n; ++p) {
        std::fill(rest.begin(), rest.end(), 0);
        for (std::uint64_t i = 0; i < others; ++i, next_tuple(rest.data(), n - 1, m)) {
            std::fill(hits.begin(), hits.end(), 0);
            for (int j = 0, k = 0; j < n; ++j)
                if (j != p) args[j] = rest[k++];
            for (Elem h = 0; h < Elem(m); ++h) {
                args[p] = h;
                ++hits[sys(args.data())];
            }
            for (int v = 0; v < m; ++v) {
                if (hits[v] > 1) rep.cancellative[p] = false;
                if (hits[v] == 0) rep.solvable[p] = false;
            }
        }
    }
    rep.unique.resize(n);
    for (int p = 0; p < n; ++p) rep.unique[p] = rep.solvable[p] && rep.cancellative[p];
    return rep;
}

std::vector<bool> cancellativity(const System& sys) { return place_report(sys).cancellative; }
std::vector<bool> solvability(const System& sys) { return place_report(sys).solvable; }

std::string to_string(Kind k) {
    switch (k) {
    case Kind::System: return "n-ary system";
    case Kind::Semigroup: return "semigroup";
    case Kind::Quasigroup: return "quasigroup";
    case Kind::Monoid: return "monoid";
    case Kind::Group: return "group";
    }
    return "?";
}

namespace {

Kind kind_of(bool assoc, bool quasi, bool has_identity) {
    if (assoc && quasi) return Kind::Group;
    if (assoc && has_identity) return Kind::Monoid;
    if (quasi) return Kind::Quasigroup;
    if (assoc) return Kind::Semigroup;
    return Kind::System;
}

bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

} // namespace

Kind classify(const System& sys) {
    const bool assoc = is_totally_associative(sys).ok;
    const bool quasi = all_true(place_report(sys).unique);
    return kind_of(assoc, quasi, !find_identities(sys).empty());
}

PropertyReport analyze(const System& sys, bool with_medial) {
    PropertyReport r;
    r.arity = sys.arity();
    r.size = sys.size();
    r.associative = is_totally_associative(sys);
    r.commutative = is_commutative(sys);
    r.semicommutative = is_semicommutative(sys);
    if (with_medial) {
        try {
            r.medial = is_medial(sys);
        } catch (const BudgetExceeded&) {
        }
    }
    r.places = place_report(sys);
    r.zero = find_zero(sys);
    r.identities = find_identities(sys);
    r.idempotent_elements = idempotents(sys);
    if (r.zero) {
        try {
            r.nilpotency = nilpotency_index(sys);
        } catch (const BudgetExceeded&) {
        }
    }
    r.quasigroup = all_true(r.places.unique);
    r.group = r.quasigroup && r.associative.ok;
    r.kind = kind_of(r.associative.ok, r.quasigroup, !r.identities.empty());
    return r;
}

bool is_lmu_nilpotent(const System& sys, int lmu) {
    auto z = find_zero(sys);
    if (!z) throw DomainError("nilpotency needs a zero element");
    const int n = sys.arity(), m = sys.size();
    const int len = lmu * (n - 1) + 1;
    const auto trees = all_trees(n, lmu);
    const std::uint64_t total = tuple_count(m, len);
    require_budget(double(total) * double(trees.size()) * lmu, "nilpotency scan");
    Tuple t(len, 0);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), len, m))
        for (const auto& tr : trees)
            if (evaluate_iterated(sys, t, tr) != *z) return false;
    return true;
}

std::optional<int> nilpotency_index(const System& sys, int max_lmu) {
    for (int l = 1; l <= max_lmu; ++l)
        if (is_lmu_nilpotent(sys, l)) return l;
    return std::nullopt;
}

} // namespace polyadika
