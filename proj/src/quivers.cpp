#include "polyadika/quivers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polyadika/config.hpp"
#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/properties.hpp"
#include "polyadika/textio.hpp"

namespace polyadika {

namespace {

const std::string kPlaceLetters = "ghuvwxyz";

} // namespace

void Quiver::validate() const {
    if (n < 2 || n_prime < 2 || k < 1) throw DomainError("quiver needs n >= 2, n' >= 2, k >= 1");
    if (lmu + lid != k) throw DomainError("quiver needs k = lmu + lid");
    if (k * n_prime != n * lmu + lid) throw DomainError("quiver needs k n' = n lmu + lid");
    if (static_cast<int>(rows.size()) != lmu || static_cast<int>(intact.size()) != lid)
        throw DomainError("quiver row or intact count does not match lmu/lid");
    std::set<Cell> seen;
    auto take = [&](const Cell& c) {
        if (c.place < 1 || c.place > k || c.column < 1 || c.column > n_prime)
            throw DomainError("cell " + std::to_string(c.place) + ":" + std::to_string(c.column) + " out of range");
        if (!seen.insert(c).second)
            throw DomainError("cell " + std::to_string(c.place) + ":" + std::to_string(c.column) + " used twice");
    };
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw DomainError("every quiver row needs n cells");
        for (const auto& c : r) take(c);
    }
    for (const auto& c : intact) take(c);
}

std::string Quiver::compact() const {
    auto cell = [&](const Cell& c) {
        std::string s = c.place <= int(kPlaceLetters.size()) ? std::string(1, kPlaceLetters[c.place - 1])
                                                            : "p" + std::to_string(c.place) + "_";
        return s + std::to_string(c.column);
    };
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += " | ";
        for (std::size_t i = 0; i < rows[r].size(); ++i) s += (i ? " " : "") + cell(rows[r][i]);
    }
    if (!intact.empty()) {
        s += " ;";
        for (const auto& c : intact) s += " " + cell(c);
    }
    return s;
}

Quiver Quiver::parse_compact(const std::string& text) {
    Quiver q;
    std::vector<Cell>* cur = nullptr;
    q.rows.emplace_back();
    cur = &q.rows.back();
    bool in_intact = false;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        auto pos = kPlaceLetters.find(tok[0]);
        if (pos == std::string::npos || tok.size() < 2) throw FormatError("bad quiver cell '" + tok + "'");
        Cell c{int(pos) + 1, int(textio::to_int(tok.substr(1), "column"))};
        cur->push_back(c);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t') flush();
        else if (ch == '|') {
            flush();
            if (in_intact) throw FormatError("rows must precede the intact cells");
            q.rows.emplace_back();
            cur = &q.rows.back();
        } else if (ch == ';') {
            flush();
            if (in_intact) throw FormatError("more than one ';' in a quiver");
            in_intact = true;
            cur = &q.intact;
        } else tok += ch;
    }
    flush();
    if (q.rows.empty() || q.rows[0].empty()) throw FormatError("empty quiver");
    q.n = static_cast<int>(q.rows[0].size());
    q.lmu = static_cast<int>(q.rows.size());
    q.lid = static_cast<int>(q.intact.size());
    q.k = q.lmu + q.lid;
    for (const auto& r : q.rows)
        for (const auto& c : r) q.n_prime = std::max(q.n_prime, c.column);
    for (const auto& c : q.intact) q.n_prime = std::max(q.n_prime, c.column);
    q.validate();
    return q;
}

Quiver load_quiver(const std::string& text) {
    auto ls = textio::lines(text);
    if (ls.empty() || ls[0].size() != 2 || ls[0][0] != "polyqvr" || ls[0][1] != "1")
        throw FormatError("missing 'polyqvr 1' header");
    if (ls.size() < 2) throw FormatError("missing parameter line");
    Quiver q;
    const auto& p = ls[1];
    if (p.size() % 2) throw FormatError("parameter line needs key value pairs");
    std::map<std::string, int*> keys{{"n", &q.n}, {"nprime", &q.n_prime}, {"k", &q.k}, {"lmu", &q.lmu}, {"lid", &q.lid}};
    std::set<std::string> got;
    for (std::size_t i = 0; i < p.size(); i += 2) {
        auto it = keys.find(p[i]);
        if (it == keys.end()) throw FormatError("unknown quiver parameter '" + p[i] + "'");
        *it->second = int(textio::to_int(p[i + 1], p[i]));
        got.insert(p[i]);
    }
    if (got.size() != keys.size()) throw FormatError("parameter line needs n, nprime, k, lmu and lid");
    auto cell = [](const std::string& tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw FormatError("cell '" + tok + "' is not place:column");
        return Cell{int(textio::to_int(tok.substr(0, colon), "place")), int(textio::to_int(tok.substr(colon + 1), "column"))};
    };
    bool intact_seen = false;
    for (std::size_t i = 2; i < ls.size(); ++i) {
        const auto& l = ls[i];
        if (l[0].rfind("intact:", 0) == 0) {
            if (intact_seen) throw FormatError("duplicate intact line");
            intact_seen = true;
            std::string rest = l[0].substr(7);
            if (!rest.empty()) q.intact.push_back(cell(rest));
            for (std::size_t j = 1; j < l.size(); ++j) q.intact.push_back(cell(l[j]));
            continue;
        }
        if (intact_seen) throw FormatError("rows must precede the intact line");
        std::vector<Cell> row;
        for (const auto& tok : l) row.push_back(cell(tok));
        q.rows.push_back(std::move(row));
    }
    if (!intact_seen) throw FormatError("missing 'intact:' line");
    try {
        q.validate();
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    return q;
}

std::string save_quiver(const Quiver& q) {
    std::ostringstream os;
    os << "polyqvr 1\n";
    os << "n " << q.n << " nprime " << q.n_prime << " k " << q.k << " lmu " << q.lmu << " lid " << q.lid << "\n";
    for (const auto& r : q.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i].place << ':' << r[i].column;
        os << "\n";
    }
    os << "intact:";
    for (const auto& c : q.intact) os << ' ' << c.place << ':' << c.column;
    os << "\n";
    return os.str();
}

namespace {

const std::vector<std::pair<std::string, std::string>>& named_table() {
    static const std::vector<std::pair<std::string, std::string>> t = {
        {"k3-4to2-crossed", "g1 h2 g2 u1 ; h1 u2"},
        {"k3-4to2", "g1 h2 u1 g2 ; h1 u2"},
        {"vertical", "g1 g2 g3 | h1 h2 h3"},
        {"vertical-flipped", "g1 g2 g3 | h3 h2 h1"},
        {"post-like", "g1 h2 g3 | h1 g2 h3"},
        {"post-like-4", "g1 h2 u3 g4 | h1 u2 g3 h4 | u1 g2 h3 u4"},
        {"non-post-4", "g1 u2 h3 g4 | h1 g2 u3 h4 | u1 h2 g3 u4"},
        {"k2-5to3-a", "g1 h1 g2 h2 g3 ; h3"},
        {"k2-5to3-b", "g1 h2 g2 h3 g3 ; h1"},
        {"k3-7to3", "g1 h1 u2 g2 h3 u3 g3 ; h2 u1"},
        {"k3-4to3", "g1 u2 h2 g3 | h1 u1 g2 h3 ; u3"},
        {"k4-5to4", "g1 h2 u3 g3 g4 | h1 v2 u2 v3 h4 | v1 u1 g2 h3 v4 ; u4"},
        {"binarizing-ternary", "g1 h1 g2 ; h2"},
    };
    return t;
}

} // namespace

Quiver named_quiver(const std::string& name) {
    for (const auto& [n, text] : named_table())
        if (n == name) return Quiver::parse_compact(text);
    throw DomainError("unknown quiver '" + name + "'");
}

std::vector<std::string> named_quivers() {
    std::vector<std::string> out;
    for (const auto& e : named_table()) out.push_back(e.first);
    return out;
}

namespace {

// Applies the induced operation to n' k-tuples given as one flat array.
template <class Value, class Mul>
void apply_induced(const Quiver& q, const Value* x, Value* out, const Mul& mul) {
    std::vector<Value> row(q.n);
    for (int r = 0; r < q.lmu; ++r) {
        for (int j = 0; j < q.n; ++j) row[j] = x[(q.rows[r][j].column - 1) * q.k + q.rows[r][j].place - 1];
        out[r] = mul(row);
    }
    for (int t = 0; t < q.lid; ++t) out[q.lmu + t] = x[(q.intact[t].column - 1) * q.k + q.intact[t].place - 1];
}

// Evaluates the induced operation on 2n'-1 arguments with the inner product
// at position `pos`; returns the k output components.
template <class Value, class Mul>
std::vector<Value> composite(const Quiver& q, const std::vector<Value>& x, int pos, const Mul& mul) {
    const int k = q.k, np = q.n_prime;
    std::vector<Value> inner(k), args(std::size_t(np) * k), out(k);
    apply_induced(q, x.data() + std::size_t(pos) * k, inner.data(), mul);
    for (int c = 0; c < np; ++c)
        for (int p = 0; p < k; ++p) {
            Value v;
            if (c < pos) v = x[std::size_t(c) * k + p];
            else if (c == pos) v = inner[p];
            else v = x[std::size_t(c + np - 1) * k + p];
            args[std::size_t(c) * k + p] = v;
        }
    apply_induced(q, args.data(), out.data(), mul);
    return out;
}

} // namespace

System induced_tuple_operation(const Quiver& q, const System& sys) {
    q.validate();
    if (sys.arity() != q.n) throw DomainError("quiver row length does not match the system arity");
    const int m = sys.size();
    const std::uint64_t big = tuple_count(m, q.k);
    if (big > (1u << 20)) throw BudgetExceeded("tuple carrier too large");
    const std::uint64_t entries = tuple_count(int(big), q.n_prime);
    require_budget(double(entries) * q.k, "induced operation table");
    std::vector<Elem> flat(std::size_t(q.n_prime) * q.k), out(q.k);
    auto mul = [&](const std::vector<Elem>& row) { return sys(row.data()); };
    return System::tabulate(int(big), q.n_prime, [&](const Elem* x) {
        for (int c = 0; c < q.n_prime; ++c) decode_tuple(x[c], flat.data() + std::size_t(c) * q.k, q.k, m);
        apply_induced(q, flat.data(), out.data(), mul);
        return Elem(encode_tuple(out.data(), q.k, m));
    });
}

HeteroShape quiver_to_shape(const Quiver& q) {
    q.validate();
    HeteroShape s;
    s.n = q.n;
    s.n_prime = q.n_prime;
    s.k = q.k;
    s.lmu = q.lmu;
    s.lid = q.lid;
    auto var = [&](const Cell& c) { return (c.column - 1) * q.k + (c.place - 1); };
    for (const auto& r : q.rows)
        for (const auto& c : r) s.assign.push_back(var(c));
    for (const auto& c : q.intact) s.assign.push_back(var(c));
    s.validate();
    return s;
}

WordCheck free_word_check(const Quiver& q) {
    q.validate();
    using Word = std::vector<int>;
    const int vars = (2 * q.n_prime - 1) * q.k;
    std::vector<Word> x(vars);
    for (int v = 0; v < vars; ++v) x[v] = {v};
    auto concat = [](const std::vector<Word>& row) {
        Word w;
        for (const auto& p : row) w.insert(w.end(), p.begin(), p.end());
        return w;
    };
    WordCheck r;
    const auto base = composite(q, x, 0, concat);
    for (int pos = 1; pos < q.n_prime; ++pos) {
        const auto other = composite(q, x, pos, concat);
        for (int i = 0; i < q.k; ++i)
            if (other[i] != base[i]) {
                r.ok = false;
                r.placement = pos;
                r.component = i;
                return r;
            }
    }
    return r;
}

std::vector<NamedSystem> standard_test_set(int n) {
    std::vector<NamedSystem> out;
    for (int m : {2, 3, 4}) out.push_back({"z" + std::to_string(m) + "-sum-" + std::to_string(n), fixtures::derived_cyclic(m, n)});
    if (n == 3) out.push_back({"z4-shifted-ternary", fixtures::z4_ternary()});
    return out;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Skipped: return "skipped-budget";
    }
    return "?";
}

bool QuiverTest::ok() const {
    if (!universal.ok) return false;
    for (const auto& s : systems)
        if (s.status == VerdictStatus::Fail) return false;
    return true;
}

namespace {

// mu(x) = c + sum a_i x_i mod m, when the table has that form.
struct Affine {
    int m = 0;
    long long c = 0;
    std::vector<long long> a;
};

std::optional<Affine> detect_affine(const System& sys) {
    const int n = sys.arity(), m = sys.size();
    Affine f;
    f.m = m;
    Tuple t(n, 0);
    f.c = sys(t.data());
    for (int i = 0; i < n; ++i) {
        t.assign(n, 0);
        t[i] = m > 1 ? 1 : 0;
        f.a.push_back(((long long)sys(t.data()) - f.c + m) % m);
    }
    const std::uint64_t total = tuple_count(m, n);
    t.assign(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx, next_tuple(t.data(), n, m)) {
        long long v = f.c;
        for (int i = 0; i < n; ++i) v += f.a[i] * t[i];
        if (v % m != (long long)sys(t.data())) return std::nullopt;
    }
    return f;
}

// Total associativity of an affine operation, compared as affine forms in
// the 2n-1 variables.
bool affine_associative(const Affine& f, int n) {
    const int vars = 2 * n - 1, m = f.m;
    using Form = std::vector<long long>; // vars coefficients, then the constant
    auto placement = [&](int pos) {
        Form out(vars + 1, 0);
        out[vars] = f.c;
        for (int i = 0; i < n; ++i) {
            if (i == pos) {
                out[vars] = (out[vars] + f.a[i] * f.c) % m;
                for (int j = 0; j < n; ++j) out[pos + j] = (out[pos + j] + f.a[i] * f.a[j]) % m;
            } else {
                const int v = i < pos ? i : i + n - 1;
                out[v] = (out[v] + f.a[i]) % m;
            }
        }
        return out;
    };
    const Form base = placement(0);
    for (int pos = 1; pos < n; ++pos)
        if (placement(pos) != base) return false;
    return true;
}

SystemVerdict test_one(const Quiver& q, const NamedSystem& ns) {
    SystemVerdict v;
    v.name = ns.name;
    const System& sys = ns.system;
    const int m = sys.size(), k = q.k, np = q.n_prime;
    const int vars = (2 * np - 1) * k;
    const double cost = fpow(m, vars) * np * (q.lmu * 2 + 1);
    if (cost <= double(scan_config().budget)) {
        v.method = "scan";
        auto mul = [&](const std::vector<Elem>& row) { return sys(row.data()); };
        const std::uint64_t total = tuple_count(m, vars);
        auto chunk = [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
            std::vector<Elem> x(vars);
            decode_tuple(b, x.data(), vars, m);
            for (std::uint64_t i = b; i < e; ++i, next_tuple(x.data(), vars, m)) {
                const auto base = composite(q, x, 0, mul);
                for (int pos = 1; pos < np; ++pos)
                    if (composite(q, x, pos, mul) != base) return i;
            }
            return std::nullopt;
        };
        if (auto bad = find_first_parallel(total, chunk)) {
            v.status = VerdictStatus::Fail;
            v.witness.resize(vars);
            decode_tuple(*bad, v.witness.data(), vars, m);
        }
        return v;
    }
    auto aff = detect_affine(sys);
    if (!aff) {
        v.status = VerdictStatus::Skipped;
        v.method = "budget";
        return v;
    }
    // Symbolic evaluation: each value is an affine form in the variables.
    v.method = "affine";
    using Form = std::vector<long long>; // vars coefficients, then the constant
    std::vector<Form> x(vars, Form(vars + 1, 0));
    for (int i = 0; i < vars; ++i) x[i][i] = 1;
    auto mul = [&](const std::vector<Form>& row) {
        Form f(vars + 1, 0);
        f[vars] = aff->c;
        for (int j = 0; j < q.n; ++j)
            for (int i = 0; i <= vars; ++i) f[i] = (f[i] + aff->a[j] * row[j][i]) % m;
        return f;
    };
    const auto base = composite(q, x, 0, mul);
    for (int pos = 1; pos < np; ++pos) {
        const auto other = composite(q, x, pos, mul);
        if (other == base) continue;
        v.status = VerdictStatus::Fail;
        // Setting one variable whose coefficient differs (or none, if only
        // the constants differ) to 1 separates the two sides.
        v.witness.assign(vars, 0);
        for (std::size_t c = 0; c < base.size(); ++c) {
            if (base[c] == other[c]) continue;
            for (int i = 0; i < vars; ++i)
                if (base[c][i] != other[c][i]) {
                    v.witness[i] = 1;
                    break;
                }
            break;
        }
        return v;
    }
    return v;
}

} // namespace

QuiverTest is_associative_quiver(const Quiver& q, const std::vector<NamedSystem>& systems) {
    q.validate();
    QuiverTest t;
    t.universal = free_word_check(q);
    for (const auto& ns : systems) {
        if (ns.system.arity() != q.n) throw DomainError("test system '" + ns.name + "' has the wrong arity");
        const auto aff = detect_affine(ns.system);
        const bool assoc = aff ? affine_associative(*aff, q.n) : is_totally_associative(ns.system).ok;
        if (!assoc)
            throw DomainError("test system '" + ns.name + "' is not totally associative");
        t.systems.push_back(test_one(q, ns));
    }
    return t;
}

std::string to_string(QuiverFamily f) {
    switch (f) {
    case QuiverFamily::Vertical: return "vertical";
    case QuiverFamily::PostLike: return "post";
    case QuiverFamily::NonPost: return "nonpost";
    case QuiverFamily::Intermediate: return "intermediate";
    }
    return "?";
}

QuiverFamily parse_quiver_family(const std::string& s) {
    if (s == "vertical") return QuiverFamily::Vertical;
    if (s == "post" || s == "post-like") return QuiverFamily::PostLike;
    if (s == "nonpost" || s == "non-post") return QuiverFamily::NonPost;
    if (s == "intermediate") return QuiverFamily::Intermediate;
    throw FormatError("unknown quiver family '" + s + "'");
}

Quiver displacement_quiver(int n, int d) {
    const int k = n - 1;
    if (k < 1) throw DomainError("displacement quivers need n >= 2");
    if (d < 0 || d >= k) throw DomainError("displacement must lie in 0..k-1");
    Quiver q{n, n, k, k, 0, {}, {}};
    for (int r = 1; r <= k; ++r) {
        std::vector<Cell> row;
        for (int c = 1; c <= n; ++c) row.push_back({((r - 1) + d * (c - 1)) % k + 1, c});
        q.rows.push_back(row);
    }
    q.validate();
    return q;
}

namespace {

struct IntermediateSearch {
    int n, np, k, lmu, lid;
    std::vector<Cell> cells; // sorted by (column, place)
    std::vector<char> used;
    std::vector<std::vector<Cell>> rows;
    GeneratedQuivers out;
    std::set<std::vector<std::vector<Cell>>> seen;
    double nodes = 0, limit;

    IntermediateSearch(int n_, int np_, int k_, int lmu_, int lid_)
        : n(n_), np(np_), k(k_), lmu(lmu_), lid(lid_), limit(double(scan_config().budget) / 100) {
        for (int c = 1; c <= np; ++c)
            for (int p = 1; p <= k; ++p) cells.push_back({p, c});
        used.assign(cells.size(), 0);
        rows.reserve(lmu); // extend() holds a reference into rows
    }

    void emit() {
        Quiver q{n, np, k, lmu, lid, rows, {}};
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!used[i]) q.intact.push_back(cells[i]);
        if (!seen.insert(q.rows).second) return;
        if (free_word_check(q).ok) out.quivers.push_back(std::move(q));
    }

    // Extends the current row; columns never decrease along a row.
    void extend(std::size_t min_start) {
        if (!out.complete) return;
        if (++nodes > limit) {
            out.complete = false;
            return;
        }
        auto& row = rows.back();
        if (static_cast<int>(row.size()) == n) {
            if (static_cast<int>(rows.size()) == lmu) emit();
            else start_row(min_start);
            return;
        }
        const int col = row.back().column;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (used[i] || cells[i].column < col) continue;
            used[i] = 1;
            row.push_back(cells[i]);
            extend(min_start);
            row.pop_back();
            used[i] = 0;
        }
    }

    // Rows are ordered by their first cell; the first row starts at (1,1).
    void start_row(std::size_t min_start) {
        const std::size_t hi = rows.empty() ? 1 : cells.size();
        for (std::size_t i = min_start; i < hi; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            rows.push_back({cells[i]});
            extend(i + 1);
            rows.pop_back();
            used[i] = 0;
        }
    }
};

} // namespace

GeneratedQuivers generate_quivers(int n, int n_prime, int k, int lmu, int lid, QuiverFamily family) {
    if (lmu + lid != k || k * n_prime != n * lmu + lid || lmu < 1 || lid < 0 || n < 2 || n_prime < 2 ||
        n_prime > n)
        throw DomainError("inadmissible quiver parameters");
    GeneratedQuivers g;
    switch (family) {
    case QuiverFamily::Vertical: {
        if (n_prime != n || lid != 0) throw DomainError("vertical quivers need n' = n and lid = 0");
        if (k > 16) throw DomainError("too many vertical variants");
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Quiver q{n, n, k, k, 0, {}, {}};
            for (int r = 1; r <= k; ++r) {
                std::vector<Cell> row;
                for (int c = 1; c <= n; ++c) row.push_back({r, c});
                if (mask >> (r - 1) & 1u) std::reverse(row.begin(), row.end());
                q.rows.push_back(row);
            }
            g.quivers.push_back(q);
        }
        break;
    }
    case QuiverFamily::PostLike:
        if (!(k == n - 1 && lmu == n - 1 && lid == 0)) throw DomainError("Post-like quivers need k = lmu = n-1");
        g.quivers.push_back(displacement_quiver(n, k > 1 ? 1 : 0));
        break;
    case QuiverFamily::NonPost:
        if (!(k == n - 1 && lmu == n - 1 && lid == 0)) throw DomainError("non-Post quivers need k = lmu = n-1");
        for (int d = 2; d < k; ++d) g.quivers.push_back(displacement_quiver(n, d));
        break;
    case QuiverFamily::Intermediate: {
        IntermediateSearch s(n, n_prime, k, lmu, lid);
        s.start_row(0);
        g = std::move(s.out);
        break;
    }
    }
    return g;
}

} // namespace polyadika
