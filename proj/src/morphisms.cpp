#include "polyadika/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "polyadika/config.hpp"
#include "polyadika/error.hpp"
#include "polyadika/textio.hpp"

namespace polyadika {

MultiplaceMap::MultiplaceMap(System src, System dst, int places, std::vector<Elem> tab)
    : source(std::move(src)), target(std::move(dst)), k(places), table(std::move(tab)) {
    if (k < 1) throw DomainError("a multiplace map needs k >= 1");
    const std::uint64_t expect = tuple_count(source.size(), k);
    if (table.size() != expect)
        throw FormatError("expected " + std::to_string(expect) + " map entries, got " + std::to_string(table.size()));
    for (Elem v : table)
        if (v >= Elem(target.size())) throw FormatError("map value " + std::to_string(v) + " outside target");
}

MultiplaceMap MultiplaceMap::tabulate(const System& src, const System& dst, int places,
                                      const std::function<Elem(const Elem*)>& f) {
    const std::uint64_t total = tuple_count(src.size(), places);
    std::vector<Elem> tab(total);
    std::vector<Elem> t(places, 0);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), places, src.size())) tab[i] = f(t.data());
    return MultiplaceMap(src, dst, places, std::move(tab));
}

MultiplaceMap load_map(const std::string& text, const System& src, const System& dst) {
    auto ls = textio::lines(text);
    if (ls.empty() || ls[0].size() != 2 || ls[0][0] != "polymap" || ls[0][1] != "1")
        throw FormatError("missing 'polymap 1' header");
    if (ls.size() < 2) throw FormatError("missing 'k' line");
    const long long k = textio::keyed_int(ls[1], "k");
    if (k < 1 || k > 32) throw FormatError("k out of range");
    std::vector<Elem> tab;
    for (std::size_t i = 2; i < ls.size(); ++i)
        for (const auto& tok : ls[i]) {
            long long v = textio::to_int(tok, "map entry");
            if (v < 0 || v >= dst.size()) throw FormatError("map entry " + tok + " outside target carrier");
            tab.push_back(static_cast<Elem>(v));
        }
    return MultiplaceMap(src, dst, int(k), std::move(tab));
}

std::string save_map(const MultiplaceMap& map) {
    std::ostringstream os;
    os << "polymap 1\nk " << map.k << "\n";
    const std::size_t row = std::size_t(map.source.size());
    for (std::size_t i = 0; i < map.table.size(); ++i) os << map.table[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    return os.str();
}

// ---- equiary maps ----

CheckResult verify_homomorphism(const MultiplaceMap& map) {
    if (map.k != 1) throw DomainError("homomorphism check needs a 1-place map");
    const int n = map.source.arity();
    if (map.target.arity() != n) throw DomainError("homomorphism needs equal arities");
    std::vector<std::vector<Elem>> phis(n + 1, map.table);
    return verify_homotopy(map.source, map.target, phis);
}

CheckResult verify_homotopy(const System& src, const System& dst, const std::vector<std::vector<Elem>>& phis) {
    const int n = src.arity(), m = src.size();
    if (dst.arity() != n) throw DomainError("homotopy needs equal arities");
    if (static_cast<int>(phis.size()) != n + 1) throw DomainError("homotopy needs n+1 maps");
    for (const auto& p : phis) {
        if (static_cast<int>(p.size()) != m) throw DomainError("map length must equal source size");
        for (Elem v : p)
            if (v >= Elem(dst.size())) throw DomainError("map value outside target");
    }
    const std::uint64_t total = tuple_count(m, n);
    require_budget(double(total) * 2, "homotopy scan");
    Tuple t(n, 0), img(n);
    CheckResult r;
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), n, m)) {
        for (int j = 0; j < n; ++j) img[j] = phis[j][t[j]];
        if (phis[n][src(t.data())] != dst(img.data())) {
            r.ok = false;
            r.witness = t;
            r.detail = "image of the product differs from the product of images";
            return r;
        }
    }
    return r;
}

namespace {

CheckResult weak_rel(const std::vector<Elem>& phi, const System& left, const System& right) {
    // phi(left[g]) = right[phi g]
    const int n = left.arity(), m = left.size();
    if (right.arity() != n) throw DomainError("auxiliary operation has the wrong arity");
    const std::uint64_t total = tuple_count(m, n);
    Tuple t(n, 0), img(n);
    CheckResult r;
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), n, m)) {
        for (int j = 0; j < n; ++j) img[j] = phi[t[j]];
        if (phi[left(t.data())] != right(img.data())) {
            r.ok = false;
            r.witness = t;
            return r;
        }
    }
    return r;
}

} // namespace

WeakResult verify_weak_homomorphism(const std::vector<Elem>& phi, const System& src, const System& nu_src,
                                    const System& dst, const System& nu_dst) {
    if (static_cast<int>(phi.size()) != src.size() || nu_src.size() != src.size() || nu_dst.size() != dst.size())
        throw DomainError("carrier sizes do not match");
    for (Elem v : phi)
        if (v >= Elem(dst.size())) throw DomainError("map value outside target");
    if (nu_src.arity() != dst.arity() || nu_dst.arity() != src.arity())
        throw DomainError("auxiliary operations need the opposite arities");
    WeakResult w;
    w.wh1 = weak_rel(phi, src, nu_dst);
    w.wh2 = weak_rel(phi, nu_src, dst);
    return w;
}

// ---- shapes ----

std::string to_string(HeteroClass c) {
    switch (c) {
    case HeteroClass::MultiplaceHomomorphism: return "multiplace-homomorphism";
    case HeteroClass::Intermediate: return "intermediate";
    case HeteroClass::Binarizing: return "binarizing";
    }
    return "?";
}

namespace {

ShapeParams finish_params(int n, int k, int lmu, int lid) {
    auto fail = [&](const std::string& why) {
        throw DomainError("not admissible (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", lmu=" +
                          std::to_string(lmu) + ", lid=" + std::to_string(lid) + "): " + why);
    };
    if (n < 2) fail("n < 2");
    if (lmu < 1 || lmu > k) fail("need 1 <= lmu <= k");
    if (lid < 0 || lid > k - 1) fail("need 0 <= lid <= k-1");
    if (k > (n - 1) * lmu) fail("need k <= (n-1) lmu");
    if (((n - 1) * lid) % k != 0 || ((n - 1) * lmu) % k != 0) fail("arity fraction is not an integer");
    ShapeParams p;
    p.n = n;
    p.k = k;
    p.lmu = lmu;
    p.lid = lid;
    p.n_prime = n - (n - 1) * lid / k;
    if (p.n_prime != (n - 1) * lmu / k + 1) fail("arity formulas disagree");
    if (p.n_prime < 2 || p.n_prime > n) fail("need 2 <= n' <= n");
    if (p.n_prime == n) p.cls = HeteroClass::MultiplaceHomomorphism;
    else if (p.n_prime == 2) p.cls = HeteroClass::Binarizing;
    else p.cls = HeteroClass::Intermediate;
    return p;
}

} // namespace

ShapeParams shape_params_lid(int n, int k, int lid) { return finish_params(n, k, k - lid, lid); }
ShapeParams shape_params_lmu(int n, int k, int lmu) { return finish_params(n, k, lmu, k - lmu); }

std::vector<Table1Row> quantization_table(int k_max, int count) {
    std::vector<Table1Row> rows;
    for (int k = 2; k <= k_max; ++k)
        for (int lmu = 1; lmu <= k - 1; ++lmu) {
            Table1Row row{k, lmu, k - lmu, {}};
            for (int n = 2; static_cast<int>(row.series.size()) < count && n < 1000; ++n) {
                try {
                    auto p = shape_params_lmu(n, k, lmu);
                    row.series.emplace_back(n, p.n_prime);
                } catch (const DomainError&) {
                }
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

void HeteroShape::validate() const {
    finish_params(n, k, lmu, lid);
    if (k * n_prime != n * lmu + lid) throw DomainError("shape violates k n' = n lmu + lid");
    if (static_cast<int>(assign.size()) != n * lmu + lid)
        throw DomainError("shape assignment needs " + std::to_string(n * lmu + lid) + " entries");
    std::vector<int> seen(k * n_prime, 0);
    for (int v : assign) {
        if (v < 0 || v >= k * n_prime) throw DomainError("shape variable out of range");
        if (seen[v]++) throw DomainError("shape variable " + std::to_string(v) + " used twice");
    }
}

std::string HeteroShape::str() const {
    std::string s = "lmu=" + std::to_string(lmu) + ",lid=" + std::to_string(lid) + ",assign=";
    for (std::size_t i = 0; i < assign.size(); ++i) s += (i ? "." : "") + std::to_string(assign[i]);
    return s;
}

HeteroShape HeteroShape::parse(const std::string& text, int n, int n_prime, int k) {
    HeteroShape s;
    s.n = n;
    s.n_prime = n_prime;
    s.k = k;
    s.lmu = -1;
    s.lid = -1;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw FormatError("shape item '" + item + "' lacks '='");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "lmu") s.lmu = int(textio::to_int(val, "lmu"));
        else if (key == "lid") s.lid = int(textio::to_int(val, "lid"));
        else if (key == "assign") {
            std::istringstream vs(val);
            std::string v;
            while (std::getline(vs, v, '.')) s.assign.push_back(int(textio::to_int(v, "assign")));
        } else throw FormatError("unknown shape key '" + key + "'");
    }
    if (s.lmu < 0 && s.lid >= 0) s.lmu = k - s.lid;
    if (s.lid < 0 && s.lmu >= 0) s.lid = k - s.lmu;
    if (s.lmu < 0) throw FormatError("shape needs lmu or lid");
    if (s.assign.empty())
        for (int v = 0; v < n * s.lmu + s.lid; ++v) s.assign.push_back(v);
    s.validate();
    return s;
}

HeteroShape binarizing_ternary_shape() { return HeteroShape{3, 2, 2, 1, 1, {0, 1, 2, 3}}; }

namespace {

void check_map_shape(const MultiplaceMap& map, const HeteroShape& shape) {
    shape.validate();
    if (shape.n != map.source.arity() || shape.n_prime != map.target.arity() || shape.k != map.k)
        throw DomainError("shape (n=" + std::to_string(shape.n) + ", n'=" + std::to_string(shape.n_prime) +
                          ", k=" + std::to_string(shape.k) + ") does not match the map");
}

// Both sides of the heteromorphism equation for the variables x.
struct HeteroEval {
    const MultiplaceMap& map;
    const HeteroShape& shape;
    std::vector<Elem> row, lhs, col, rhs;

    HeteroEval(const MultiplaceMap& mp, const HeteroShape& sh)
        : map(mp), shape(sh), row(sh.n), lhs(sh.k), col(sh.k), rhs(sh.n_prime) {}

    bool holds(const Elem* x) {
        const int n = shape.n, k = shape.k;
        for (int r = 0; r < shape.lmu; ++r) {
            for (int j = 0; j < n; ++j) row[j] = x[shape.assign[r * n + j]];
            lhs[r] = map.source(row.data());
        }
        for (int i = 0; i < shape.lid; ++i) lhs[shape.lmu + i] = x[shape.assign[shape.lmu * n + i]];
        for (int c = 0; c < shape.n_prime; ++c) rhs[c] = map(x + c * k);
        return map(lhs.data()) == map.target(rhs.data());
    }
};

} // namespace

HeteroResult verify_heteromorphism(const MultiplaceMap& map, const HeteroShape& shape) {
    check_map_shape(map, shape);
    const int vars = shape.k * shape.n_prime, m = map.source.size();
    const std::uint64_t total = tuple_count(m, vars);
    require_budget(double(total) * (shape.lmu + shape.n_prime + 1), "heteromorphism scan");
    auto chunk = [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
        HeteroEval ev(map, shape);
        std::vector<Elem> x(vars);
        decode_tuple(b, x.data(), vars, m);
        for (std::uint64_t i = b; i < e; ++i, next_tuple(x.data(), vars, m))
            if (!ev.holds(x.data())) return i;
        return std::nullopt;
    };
    HeteroResult r;
    r.assignments = total;
    if (auto bad = find_first_parallel(total, chunk)) {
        r.ok = false;
        r.witness.resize(vars);
        decode_tuple(*bad, r.witness.data(), vars, m);
        r.detail = "heteromorphism equation fails";
    }
    return r;
}

// ---- symmetry-reduced verification ----

namespace {

bool is_permutation_of(const std::vector<Elem>& p, int m) {
    if (static_cast<int>(p.size()) != m) return false;
    std::vector<char> seen(m, 0);
    for (Elem v : p) {
        if (v >= Elem(m) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool is_automorphism(const System& s, const std::vector<Elem>& p) {
    const int n = s.arity(), m = s.size();
    const std::uint64_t total = tuple_count(m, n);
    require_budget(double(total) * 2, "automorphism check");
    Tuple t(n, 0), img(n);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), n, m)) {
        for (int j = 0; j < n; ++j) img[j] = p[t[j]];
        if (p[s(t.data())] != s(img.data())) return false;
    }
    return true;
}

bool is_equivariant(const MultiplaceMap& map, const SymmetryGenerator& g) {
    const int k = map.k, m = map.source.size();
    const std::uint64_t total = tuple_count(m, k);
    Tuple t(k, 0), img(k);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), k, m)) {
        for (int j = 0; j < k; ++j) img[j] = g.on_source[t[j]];
        if (map(img.data()) != g.on_target[map(t.data())]) return false;
    }
    return true;
}

struct OrbitSearch {
    const std::vector<std::vector<Elem>>& group; // source permutations only
    HeteroEval ev;
    int vars, m;
    std::vector<Elem> x;
    std::uint64_t leaves = 0;
    double limit;
    bool failed = false;

    OrbitSearch(const std::vector<std::vector<Elem>>& g, const MultiplaceMap& map, const HeteroShape& shape)
        : group(g), ev(map, shape), vars(shape.k * shape.n_prime), m(map.source.size()), x(vars),
          limit(double(scan_config().budget)) {}

    // Remaining variables from `level` on, with no symmetry left.
    void plain(int level) {
        if (failed) return;
        if (level == vars) {
            if (++leaves > limit) throw BudgetExceeded("symmetric heteromorphism scan exceeded the budget");
            if (!ev.holds(x.data())) failed = true;
            return;
        }
        for (Elem v = 0; v < Elem(m) && !failed; ++v) {
            x[level] = v;
            plain(level + 1);
        }
    }

    void run(int level, const std::vector<std::uint32_t>& stab) {
        if (failed) return;
        if (stab.size() <= 1) {
            plain(level);
            return;
        }
        if (level == vars) {
            plain(level);
            return;
        }
        std::vector<char> seen(m, 0);
        std::vector<std::uint32_t> next;
        for (Elem a = 0; a < Elem(m) && !failed; ++a) {
            if (seen[a]) continue;
            for (auto h : stab) seen[group[h][a]] = 1;
            next.clear();
            for (auto h : stab)
                if (group[h][a] == a) next.push_back(h);
            x[level] = a;
            run(level + 1, next);
        }
    }
};

} // namespace

SymmetricHeteroResult verify_heteromorphism_symmetric(const MultiplaceMap& map, const HeteroShape& shape,
                                                      const std::vector<SymmetryGenerator>& gens,
                                                      std::size_t max_group) {
    check_map_shape(map, shape);
    const int ms = map.source.size(), mt = map.target.size();
    for (const auto& g : gens) {
        if (!is_permutation_of(g.on_source, ms) || !is_permutation_of(g.on_target, mt))
            throw DomainError("symmetry generator is not a pair of carrier permutations");
        if (!is_automorphism(map.source, g.on_source)) throw DomainError("generator is not a source automorphism");
        if (!is_automorphism(map.target, g.on_target)) throw DomainError("generator is not a target automorphism");
        if (!is_equivariant(map, g)) throw DomainError("map does not commute with a generator");
    }
    // Closure of the source permutations. Target parts are not needed for
    // the search: the checks above make every group element compatible.
    std::vector<std::vector<Elem>> group;
    std::set<std::vector<Elem>> seen;
    std::vector<Elem> id(ms);
    for (int i = 0; i < ms; ++i) id[i] = Elem(i);
    group.push_back(id);
    seen.insert(id);
    for (std::size_t at = 0; at < group.size(); ++at)
        for (const auto& g : gens) {
            std::vector<Elem> c(ms);
            for (int i = 0; i < ms; ++i) c[i] = g.on_source[group[at][i]];
            if (seen.insert(c).second) {
                group.push_back(std::move(c));
                if (group.size() > max_group) throw BudgetExceeded("symmetry group larger than the cap");
            }
        }
    OrbitSearch s(group, map, shape);
    std::vector<std::uint32_t> all(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) all[i] = std::uint32_t(i);
    s.run(0, all);
    SymmetricHeteroResult r;
    r.group_order = group.size();
    r.orbit_representatives = s.leaves;
    r.assignments = s.leaves;
    if (s.failed) {
        r.ok = false;
        r.witness = s.x;
        r.detail = "heteromorphism equation fails";
    }
    return r;
}

// ---- enumeration ----

namespace {

struct Constraint {
    std::uint32_t lhs;
    std::vector<std::uint32_t> cols;
};

} // namespace

Census enumerate_heteromorphisms(const System& src, const System& dst, const HeteroShape& shape) {
    shape.validate();
    if (shape.n != src.arity() || shape.n_prime != dst.arity()) throw DomainError("shape does not match systems");
    const int k = shape.k, vars = k * shape.n_prime, ms = src.size(), mt = dst.size();
    const std::uint64_t entries = tuple_count(ms, k);
    const std::uint64_t total = tuple_count(ms, vars);
    require_budget(double(total) * (shape.lmu + shape.n_prime), "heteromorphism census constraints");

    // One constraint per assignment, bucketed by the last table entry it reads.
    std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> uniq;
    std::vector<Elem> x(vars, 0), row(shape.n), lhs(k);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(x.data(), vars, ms)) {
        for (int r = 0; r < shape.lmu; ++r) {
            for (int j = 0; j < shape.n; ++j) row[j] = x[shape.assign[r * shape.n + j]];
            lhs[r] = src(row.data());
        }
        for (int t = 0; t < shape.lid; ++t) lhs[shape.lmu + t] = x[shape.assign[shape.lmu * shape.n + t]];
        std::vector<std::uint32_t> cols(shape.n_prime);
        for (int c = 0; c < shape.n_prime; ++c) cols[c] = std::uint32_t(encode_tuple(x.data() + c * k, k, ms));
        uniq.emplace(std::uint32_t(encode_tuple(lhs.data(), k, ms)), std::move(cols));
    }
    std::vector<std::vector<Constraint>> bucket(entries);
    for (const auto& [l, cols] : uniq) {
        std::uint32_t top = l;
        for (auto c : cols) top = std::max(top, c);
        bucket[top].push_back({l, cols});
    }

    Census census;
    std::vector<Elem> tab(entries, 0), args(shape.n_prime);
    const double limit = double(scan_config().budget);
    // Iterative depth-first search over table entries.
    std::int64_t d = 0;
    std::vector<int> val(entries, -1);
    while (d >= 0) {
        if (d == std::int64_t(entries)) {
            census.maps.emplace_back(src, dst, k, tab);
            --d;
            continue;
        }
        if (++val[d] >= mt) {
            val[d] = -1;
            --d;
            continue;
        }
        if (++census.nodes > limit) {
            census.complete = false;
            break;
        }
        tab[d] = Elem(val[d]);
        bool ok = true;
        for (const auto& c : bucket[d]) {
            for (int j = 0; j < shape.n_prime; ++j) args[j] = tab[c.cols[j]];
            if (tab[c.lhs] != dst(args.data())) {
                ok = false;
                break;
            }
        }
        if (ok) ++d;
    }
    return census;
}

std::optional<std::vector<Elem>> is_derived(const MultiplaceMap& map) {
    const int k = map.k, np = map.target.arity(), ms = map.source.size(), mt = map.target.size();
    if (k != 1 && (k - 1) % (np - 1) != 0)
        throw DomainError("k = " + std::to_string(k) + " values cannot be multiplied by an " + std::to_string(np) +
                          "-ary operation");
    const int lmu = (k - 1) / (np - 1);
    // Bucket each k-tuple by its largest element.
    const std::uint64_t total = tuple_count(ms, k);
    std::vector<std::vector<std::uint64_t>> bucket(ms);
    std::vector<Elem> t(k, 0);
    for (std::uint64_t i = 0; i < total; ++i, next_tuple(t.data(), k, ms))
        bucket[*std::max_element(t.begin(), t.end())].push_back(i);

    std::vector<Elem> phi(ms, 0), img(k);
    std::vector<int> val(ms, -1);
    const double limit = double(scan_config().budget);
    double nodes = 0;
    int d = 0;
    while (d >= 0) {
        if (d == ms) return phi;
        if (++val[d] >= mt) {
            val[d] = -1;
            --d;
            continue;
        }
        if (++nodes > limit) throw BudgetExceeded("derivedness search exceeded the budget");
        phi[d] = Elem(val[d]);
        bool ok = true;
        for (auto idx : bucket[d]) {
            decode_tuple(idx, t.data(), k, ms);
            for (int j = 0; j < k; ++j) img[j] = phi[t[j]];
            Elem prod = lmu == 0 ? img[0] : evaluate_iterated(map.target, img, Nesting::Right);
            if (prod != map.table[idx]) {
                ok = false;
                break;
            }
        }
        if (ok) ++d;
    }
    return std::nullopt;
}

} // namespace polyadika
