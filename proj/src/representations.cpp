#include "polyadika/representations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polyadika/config.hpp"
#include "polyadika/error.hpp"
#include "polyadika/group.hpp"

namespace polyadika {

// ---- shapes ----

void RepShape::validate() const {
    if (n < 2 || k < 1 || n_prime < 1) throw DomainError("representation shape needs n >= 2, k >= 1");
    if (static_cast<int>(slots.size()) != k) throw DomainError("representation shape needs k slots");
    std::vector<int> seen(std::size_t(k) * n_prime, 0);
    int used = 0;
    for (const auto& s : slots) {
        if (static_cast<int>(s.size()) != n && s.size() != 1) throw DomainError("slot must hold 1 or n variables");
        for (int v : s) {
            if (v < 0 || v >= k * n_prime) throw DomainError("slot variable out of range");
            if (seen[v]++) throw DomainError("slot variable used twice");
            ++used;
        }
    }
    if (used != k * n_prime) throw DomainError("every variable must appear in exactly one slot");
}

int RepShape::lmu() const {
    int c = 0;
    for (const auto& s : slots) c += static_cast<int>(s.size()) == n && n > 1 ? 1 : 0;
    return c;
}

std::string RepShape::str() const {
    std::string s;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ' ';
        if (slots[i].size() > 1) s += '[';
        for (std::size_t j = 0; j < slots[i].size(); ++j) s += (j ? "." : "") + std::to_string(slots[i][j]);
        if (slots[i].size() > 1) s += ']';
    }
    return s;
}

RepShape RepShape::from_hetero(const HeteroShape& h) {
    h.validate();
    RepShape r{h.n, h.k, h.n_prime, {}};
    for (int row = 0; row < h.lmu; ++row)
        r.slots.emplace_back(h.assign.begin() + row * h.n, h.assign.begin() + (row + 1) * h.n);
    for (int t = 0; t < h.lid; ++t) r.slots.push_back({h.assign[h.lmu * h.n + t]});
    r.validate();
    return r;
}

RepShape regular_shape(int n, int slot) {
    if (n < 2 || slot < 1 || slot > n) throw DomainError("slot must lie in 1..n");
    const int k = n - 1, left = slot - 1, right = n - slot;
    const int np = (slot == 1 || slot == n) ? 2 : n;
    // Composition Pi(col 0) o ... o Pi(col n'-1) applied to u is one long
    // product: left arguments of every column, u, right arguments reversed.
    std::vector<int> lseq, rseq;
    for (int c = 0; c < np; ++c)
        for (int p = 0; p < left; ++p) lseq.push_back(c * k + p);
    for (int c = np - 1; c >= 0; --c)
        for (int p = left; p < k; ++p) rseq.push_back(c * k + p);
    RepShape s{n, k, np, {}};
    const int pl = left * (np - 1) / (n - 1), pr = right * (np - 1) / (n - 1);
    std::size_t at = 0;
    for (int i = 0; i < left; ++i) {
        const int len = i < pl ? n : 1;
        s.slots.emplace_back(lseq.begin() + at, lseq.begin() + at + len);
        at += len;
    }
    at = 0;
    for (int i = 0; i < right; ++i) {
        const int len = i >= right - pr ? n : 1;
        s.slots.emplace_back(rseq.begin() + at, rseq.begin() + at + len);
        at += len;
    }
    s.validate();
    return s;
}

Elem regular_multiaction(const System& sys, int slot, const Elem* args, Elem h) {
    const int n = sys.arity();
    if (slot < 1 || slot > n) throw DomainError("slot must lie in 1..n");
    std::vector<Elem> full(n);
    for (int i = 0, j = 0; i < n; ++i) full[i] = (i == slot - 1) ? h : args[j++];
    return sys(full.data());
}

namespace {

void require_associative(const System& sys) {
    auto a = is_totally_associative(sys);
    if (!a.ok) throw DomainError("regular representations need a totally associative system");
}

Normalization regular_norm(const System& sys, int slot) {
    if ((slot == 1 || slot == sys.arity()) && classify(sys) == Kind::Group) return Normalization::Quer;
    if (!find_identities(sys).empty()) return Normalization::Unity;
    return Normalization::None;
}

// Arguments of the left side for variable values x.
void lhs_args(const System& sys, const RepShape& s, const Elem* x, Elem* out) {
    std::vector<Elem> row(s.n);
    for (int i = 0; i < s.k; ++i) {
        const auto& sl = s.slots[i];
        if (sl.size() == 1) {
            out[i] = x[sl[0]];
            continue;
        }
        for (int j = 0; j < s.n; ++j) row[j] = x[sl[j]];
        out[i] = sys(row.data());
    }
}

} // namespace

MultiplaceRep i_regular_representation(const System& sys, int slot) {
    require_associative(sys);
    const int n = sys.arity(), m = sys.size(), k = n - 1;
    MultiplaceRep rep{sys, regular_shape(n, slot), m, {}, regular_norm(sys, slot)};
    const std::uint64_t total = tuple_count(m, k);
    require_budget(double(total) * m, "regular representation table");
    std::vector<Elem> args(k, 0), image(m);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(args.data(), k, m)) {
        for (Elem h = 0; h < Elem(m); ++h) image[h] = regular_multiaction(sys, slot, args.data(), h);
        rep.table.push_back(Matrix::permutation(image));
    }
    return rep;
}

RepResult verify_multiplace_rep(const MultiplaceRep& rep) {
    const RepShape& s = rep.shape;
    s.validate();
    const System& sys = rep.system;
    const int m = sys.size(), vars = s.k * s.n_prime;
    if (s.n != sys.arity()) throw DomainError("shape arity does not match the system");
    if (rep.table.size() != tuple_count(m, s.k)) throw DomainError("representation table has the wrong size");
    const std::uint64_t total = tuple_count(m, vars);
    require_budget(double(total) * s.n_prime * fpow(rep.dim, 3), "multiplace representation scan");
    RepResult r;
    std::vector<Elem> x(vars, 0), args(s.k);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(x.data(), vars, m)) {
        lhs_args(sys, s, x.data(), args.data());
        Matrix rhs = rep(x.data());
        for (int c = 1; c < s.n_prime; ++c) rhs = rhs * rep(x.data() + c * s.k);
        if (rep(args.data()) != rhs) {
            r.ok = false;
            r.failed = "composition";
            r.witness = x;
            return r;
        }
    }
    if (rep.norm == Normalization::Unity) {
        for (Elem e : find_identities(sys)) {
            std::vector<Elem> a(s.k, e);
            if (!rep(a.data()).is_identity()) {
                r.ok = false;
                r.failed = "unity normalization";
                r.witness = a;
                return r;
            }
        }
    } else if (rep.norm == Normalization::Quer) {
        QuerTable qt(sys);
        for (Elem h = 0; h < Elem(m); ++h) {
            std::vector<Elem> a(s.k);
            for (int i = 0; i < s.k; ++i) a[i] = s.slots[i].size() > 1 ? qt[h] : h;
            if (!rep(a.data()).is_identity()) {
                r.ok = false;
                r.failed = "querelement normalization";
                r.witness = a;
                return r;
            }
        }
    }
    return r;
}

Multiaction regular_multiaction_table(const System& sys, int slot) {
    require_associative(sys);
    const int n = sys.arity(), m = sys.size(), k = n - 1;
    Multiaction act{sys, regular_shape(n, slot), m, {}};
    const std::uint64_t total = tuple_count(m, k);
    require_budget(double(total) * m, "multiaction table");
    std::vector<Elem> args(k, 0);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(args.data(), k, m))
        for (Elem h = 0; h < Elem(m); ++h) act.table.push_back(regular_multiaction(sys, slot, args.data(), h));
    return act;
}

RepResult verify_multiaction(const Multiaction& act) {
    const RepShape& s = act.shape;
    s.validate();
    const System& sys = act.system;
    const int m = sys.size(), vars = s.k * s.n_prime;
    const std::uint64_t total = tuple_count(m, vars);
    require_budget(double(total) * act.points * (s.n_prime + 1), "multiaction scan");
    RepResult r;
    std::vector<Elem> x(vars, 0), args(s.k);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(x.data(), vars, m)) {
        lhs_args(sys, s, x.data(), args.data());
        for (Elem p = 0; p < Elem(act.points); ++p) {
            Elem y = p;
            for (int c = s.n_prime - 1; c >= 0; --c) y = act(x.data() + c * s.k, y);
            if (act(args.data(), p) != y) {
                r.ok = false;
                r.failed = "composition";
                r.witness = x;
                r.witness.push_back(p);
                return r;
            }
        }
    }
    for (Elem e : find_identities(sys)) {
        std::vector<Elem> a(s.k, e);
        for (Elem p = 0; p < Elem(act.points); ++p)
            if (act(a.data(), p) != p) {
                r.ok = false;
                r.failed = "unity acts trivially";
                r.witness = a;
                return r;
            }
    }
    return r;
}

// ---- ternary groups ----

std::string to_string(TernaryKind k) {
    switch (k) {
    case TernaryKind::Left: return "left";
    case TernaryKind::Right: return "right";
    case TernaryKind::Middle: return "middle";
    }
    return "?";
}

TernaryKind parse_ternary_kind(const std::string& s) {
    if (s == "left") return TernaryKind::Left;
    if (s == "right") return TernaryKind::Right;
    if (s == "middle") return TernaryKind::Middle;
    throw FormatError("kind must be left, right or middle");
}

namespace {

void require_ternary(const System& g) {
    if (g.arity() != 3) throw DomainError("ternary representations need a ternary system");
}

} // namespace

TernaryRep regular_ternary(const System& group, TernaryKind kind) {
    require_ternary(group);
    const int m = group.size();
    TernaryRep rep{kind, group, {}};
    std::vector<Elem> image(m);
    for (Elem g = 0; g < Elem(m); ++g)
        for (Elem h = 0; h < Elem(m); ++h) {
            for (Elem u = 0; u < Elem(m); ++u) {
                switch (kind) {
                case TernaryKind::Left: image[u] = group({g, h, u}); break;
                case TernaryKind::Right: image[u] = group({u, g, h}); break;
                case TernaryKind::Middle: image[u] = group({g, u, h}); break;
                }
            }
            rep.table.push_back(Matrix::permutation(image));
        }
    return rep;
}

TernaryRep right_from_left(const TernaryRep& left) {
    if (left.kind != TernaryKind::Left) throw DomainError("right_from_left needs a left representation");
    QuerTable qt(left.group);
    const int m = left.group.size();
    TernaryRep r{TernaryKind::Right, left.group, {}};
    for (Elem g = 0; g < Elem(m); ++g)
        for (Elem h = 0; h < Elem(m); ++h) r.table.push_back(left(qt[h], qt[g]));
    return r;
}

TernaryRep derived_left_rep(const System& binary, const std::vector<std::vector<Elem>>& images) {
    if (binary.arity() != 2) throw DomainError("derived_left_rep needs a binary group");
    const int m = binary.size();
    if (static_cast<int>(images.size()) != m) throw DomainError("need one permutation per element");
    std::vector<Matrix> pi;
    for (const auto& p : images) pi.push_back(Matrix::permutation(p));
    // pi must be a homomorphism of the binary group.
    for (Elem a = 0; a < Elem(m); ++a)
        for (Elem b = 0; b < Elem(m); ++b)
            if (pi[a] * pi[b] != pi[binary({a, b})]) throw DomainError("images do not form a representation");
    TernaryRep r{TernaryKind::Left, System::tabulate(m, 3, [&](const Elem* x) {
                     return binary({x[0], binary({x[1], x[2]})});
                 }),
                 {}};
    for (Elem g = 0; g < Elem(m); ++g)
        for (Elem h = 0; h < Elem(m); ++h) r.table.push_back(pi[g] * pi[h]);
    return r;
}

RepResult verify_ternary_rep(const TernaryRep& rep) {
    const System& G = rep.group;
    require_ternary(G);
    const int m = G.size();
    if (rep.table.size() != std::size_t(m) * m) throw DomainError("ternary representation table has the wrong size");
    QuerTable qt(G);
    RepResult r;
    auto fail = [&](const std::string& what, Tuple w) {
        r.ok = false;
        r.failed = what;
        r.witness = std::move(w);
        return r;
    };
    const auto& P = rep;
    switch (rep.kind) {
    case TernaryKind::Left:
        for (Elem a = 0; a < Elem(m); ++a)
            for (Elem b = 0; b < Elem(m); ++b)
                for (Elem c = 0; c < Elem(m); ++c)
                    for (Elem d = 0; d < Elem(m); ++d)
                        if (P(a, b) * P(c, d) != P(G({a, b, c}), d)) return fail("left composition", {a, b, c, d});
        for (Elem g = 0; g < Elem(m); ++g)
            if (!P(g, qt[g]).is_identity()) return fail("left normalization", {g});
        // Consequences, spot-checked on every triple.
        for (Elem g = 0; g < Elem(m); ++g)
            for (Elem h = 0; h < Elem(m); ++h)
                for (Elem u = 0; u < Elem(m); ++u) {
                    if (P(g, h) != P(g, u) * P(qt[u], h)) return fail("left splitting", {g, h, u});
                    if (!(P(g, u) * P(qt[u], qt[g])).is_identity() || !(P(qt[u], qt[g]) * P(g, u)).is_identity())
                        return fail("left inverse", {g, u});
                }
        break;
    case TernaryKind::Right:
        for (Elem a = 0; a < Elem(m); ++a)
            for (Elem b = 0; b < Elem(m); ++b)
                for (Elem c = 0; c < Elem(m); ++c)
                    for (Elem d = 0; d < Elem(m); ++d)
                        if (P(c, d) * P(a, b) != P(a, G({b, c, d}))) return fail("right composition", {a, b, c, d});
        for (Elem g = 0; g < Elem(m); ++g)
            if (!P(g, qt[g]).is_identity()) return fail("right normalization", {g});
        break;
    case TernaryKind::Middle: {
        std::vector<Elem> x(6, 0);
        const std::uint64_t total = tuple_count(m, 6);
        for (std::uint64_t i = 0; i < total; ++i, next_tuple(x.data(), 6, m)) {
            const Elem g1 = x[0], h1 = x[1], g2 = x[2], h2 = x[3], g3 = x[4], h3 = x[5];
            if (P(g3, h3) * P(g2, h2) * P(g1, h1) != P(G({g3, g2, g1}), G({h1, h2, h3})))
                return fail("middle composition", x);
        }
        for (Elem g = 0; g < Elem(m); ++g)
            for (Elem h = 0; h < Elem(m); ++h)
                if (!(P(g, h) * P(qt[g], qt[h])).is_identity() || !(P(qt[g], qt[h]) * P(g, h)).is_identity())
                    return fail("middle inverse", {g, h});
        break;
    }
    }
    return r;
}

std::vector<std::vector<std::pair<Elem, Elem>>> equivalence_classes(const TernaryRep& rep) {
    const int m = rep.group.size();
    std::vector<std::vector<std::pair<Elem, Elem>>> classes;
    std::vector<const Matrix*> reps;
    for (Elem g = 0; g < Elem(m); ++g)
        for (Elem h = 0; h < Elem(m); ++h) {
            const Matrix& x = rep(g, h);
            std::size_t c = 0;
            while (c < reps.size() && *reps[c] != x) ++c;
            if (c == reps.size()) {
                reps.push_back(&x);
                classes.emplace_back();
            }
            classes[c].emplace_back(g, h);
        }
    return classes;
}

RepResult check_middle_left_right(const System& group) {
    auto L = regular_ternary(group, TernaryKind::Left);
    auto R = regular_ternary(group, TernaryKind::Right);
    auto M = regular_ternary(group, TernaryKind::Middle);
    const int m = group.size();
    RepResult r;
    std::vector<Elem> x(4, 0);
    for (std::uint64_t i = 0; i < tuple_count(m, 4); ++i, next_tuple(x.data(), 4, m)) {
        const Elem g1 = x[0], h1 = x[1], g2 = x[2], h2 = x[3];
        if (M(g1, h1) * R(g2, h2) != R(h2, h1) * M(g1, g2)) {
            r.ok = false;
            r.failed = "middle-right interchange";
            r.witness = x;
            return r;
        }
        if (M(g1, h1) * L(g2, h2) != L(g1, g2) * M(h2, h1)) {
            r.ok = false;
            r.failed = "middle-left interchange";
            r.witness = x;
            return r;
        }
    }
    return r;
}

RepResult check_left_right_commute(const System& group) {
    auto L = regular_ternary(group, TernaryKind::Left);
    auto R = regular_ternary(group, TernaryKind::Right);
    const int m = group.size();
    RepResult r;
    std::vector<Elem> x(4, 0);
    for (std::uint64_t i = 0; i < tuple_count(m, 4); ++i, next_tuple(x.data(), 4, m))
        if (L(x[0], x[1]) * R(x[2], x[3]) != R(x[2], x[3]) * L(x[0], x[1])) {
            r.ok = false;
            r.failed = "left-right commutation";
            r.witness = x;
            return r;
        }
    return r;
}

RepResult check_middle_trace_invariance(const System& group) {
    auto M = regular_ternary(group, TernaryKind::Middle);
    QuerTable qt(group);
    const int m = group.size();
    RepResult r;
    std::vector<Elem> x(4, 0);
    for (std::uint64_t i = 0; i < tuple_count(m, 4); ++i, next_tuple(x.data(), 4, m)) {
        const Elem a1 = x[0], b1 = x[1], g = x[2], h = x[3];
        const Elem a = group({g, a1, qt[g]}), b = group({h, b1, qt[h]});
        if (M(a, b).trace() != M(a1, b1).trace()) {
            r.ok = false;
            r.failed = "middle trace invariance";
            r.witness = x;
            return r;
        }
    }
    return r;
}

GammaReport gamma_algebra_check(const System& group) {
    require_ternary(group);
    auto L = regular_ternary(group, TernaryKind::Left);
    auto M = regular_ternary(group, TernaryKind::Middle);
    const int m = group.size();
    GammaReport g;
    for (Elem i = 0; i < Elem(m); ++i)
        for (Elem j = 0; j < Elem(m); ++j) {
            ++g.left_total;
            if (L(0, i) * L(0, j) == L(0, (i + j) % m)) ++g.left_ok;
        }
    for (Elem i = 0; i < Elem(m); ++i)
        for (Elem j = 0; j < Elem(m); ++j)
            for (Elem k = 0; k < Elem(m); ++k) {
                ++g.middle_total;
                if (M(0, i) * M(0, j) * M(0, k) == M(0, group({i, j, k}))) ++g.middle_ok;
            }
    return g;
}

System retract(const System& sys, Elem g) {
    const int n = sys.arity();
    if (g >= Elem(sys.size())) throw DomainError("element out of range");
    return System::tabulate(sys.size(), 2, [&](const Elem* x) {
        std::vector<Elem> a(n, g);
        a[0] = x[0];
        a[n - 1] = x[1];
        return sys(a.data());
    });
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

RetractRep retract_representation(const System& sys, Elem g) {
    require_associative(sys);
    const int n = sys.arity(), m = sys.size();
    RetractRep rep{retract(sys, g), {}};
    std::vector<Matrix> left(m);
    std::vector<Elem> a(n, g), image(m);
    for (Elem x = 0; x < Elem(m); ++x) {
        a[n - 2] = x;
        for (Elem u = 0; u < Elem(m); ++u) {
            a[n - 1] = u;
            image[u] = sys(a.data());
        }
        a[n - 2] = g;
        left[x] = Matrix::permutation(image);
    }
    for (Elem g1 = 0; g1 < Elem(m); ++g1)
        for (Elem g2 = 0; g2 < Elem(m); ++g2) rep.table.push_back(kron(left[g1], left[g2]));
    return rep;
}

RepResult verify_retract_rep(const RetractRep& rep) {
    const int m = rep.ret.size();
    auto P = [&](Elem a, Elem b) -> const Matrix& { return rep.table[std::size_t(a) * m + b]; };
    RepResult r;
    std::vector<Elem> x(4, 0);
    for (std::uint64_t i = 0; i < tuple_count(m, 4); ++i, next_tuple(x.data(), 4, m))
        if (P(x[0], x[1]) * P(x[2], x[3]) != P(rep.ret({x[0], x[2]}), rep.ret({x[1], x[3]}))) {
            r.ok = false;
            r.failed = "retract composition";
            r.witness = x;
            return r;
        }
    return r;
}

std::vector<std::complex<double>> spectral_check(const Matrix& m) { return eigenvalues(m); }

} // namespace polyadika
