#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyadika/arity.hpp"
#include "polyadika/config.hpp"
#include "polyadika/core.hpp"
#include "polyadika/error.hpp"
#include "polyadika/fixtures.hpp"
#include "polyadika/group.hpp"
#include "polyadika/hopf.hpp"
#include "polyadika/matrix.hpp"
#include "polyadika/morphisms.hpp"
#include "polyadika/properties.hpp"
#include "polyadika/quivers.hpp"
#include "polyadika/representations.hpp"

using namespace polyadika;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Human lines start with '#'; the machine block is key<TAB>value.
class Report {
public:
    void note(const std::string& text) { human_.push_back(text); }
    void put(const std::string& key, const std::string& value) { kv_.emplace_back(key, value); }
    void check(const std::string& key, bool ok) {
        put(key, ok ? "pass" : "fail");
        ok_ = ok_ && ok;
    }
    void skip(const std::string& key) { put(key, "skipped-budget"); }
    bool ok() const { return ok_; }

    int emit(double ms) const {
        for (const auto& h : human_) std::cout << "# " << h << "\n";
        std::cout << "# elapsed_ms " << static_cast<long long>(ms) << "\n";
        for (const auto& [k, v] : kv_) std::cout << k << "\t" << v << "\n";
        return ok_ ? 0 : kExitFail;
    }

private:
    std::vector<std::string> human_;
    std::vector<std::pair<std::string, std::string>> kv_;
    bool ok_ = true;
};

std::string tuple_str(const Tuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
    return s;
}

std::string bools(const std::vector<bool>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::string(v[i] ? "1" : "0");
    return s;
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty()) {
            try {
                out.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw FormatError("bad integer '" + item + "'");
            }
        }
    return out;
}

System load_system_file(const std::string& path) { return load_system(read_file(path)); }

void output(const std::string& text, const std::string& path) {
    if (path.empty()) std::cout << text;
    else write_file(path, text);
}

// ---- check ----

struct CheckOpts {
    std::string file;
    bool assoc = false, medial = false, commut = false, cancel = false, solve = false, zero = false,
         identity = false, classify = false, relaxed = false, nilpotent = false, neutral = false;
    std::string sigma;
};

void run_check(const CheckOpts& o, Report& rep) {
    const System sys = load_system_file(o.file);
    const PlaceMode mode = o.relaxed ? PlaceMode::Ends : PlaceMode::All;
    const bool any = o.assoc || o.medial || o.commut || o.cancel || o.solve || o.zero || o.identity ||
                     o.classify || o.nilpotent || o.neutral || !o.sigma.empty();
    rep.put("arity", std::to_string(sys.arity()));
    rep.put("size", std::to_string(sys.size()));
    if (!any) {
        const PropertyReport p = analyze(sys);
        rep.put("associative", p.associative.ok ? "yes" : "no");
        if (!p.associative.ok) rep.put("associative.witness", tuple_str(p.associative.witness));
        rep.put("commutative", p.commutative.ok ? "yes" : "no");
        rep.put("semicommutative", p.semicommutative.ok ? "yes" : "no");
        if (p.medial) rep.put("medial", p.medial->ok ? "yes" : "no");
        else rep.skip("medial");
        rep.put("cancellative", bools(p.places.cancellative));
        rep.put("solvable", bools(p.places.solvable));
        rep.put("uniquely_solvable", bools(p.places.unique));
        rep.put("zero", p.zero ? sys.carrier().label(*p.zero) : "none");
        std::string ids;
        for (Elem e : p.identities) ids += (ids.empty() ? "" : " ") + sys.carrier().label(e);
        rep.put("identities", ids.empty() ? "none" : ids);
        rep.put("idempotents", std::to_string(p.idempotent_elements.size()));
        rep.put("nilpotency", p.nilpotency ? std::to_string(*p.nilpotency) : "none");
        rep.put("kind", to_string(p.kind));
        rep.note("kind: " + to_string(p.kind));
        return;
    }
    if (o.assoc) {
        const auto r = is_totally_associative(sys);
        rep.check("associative", r.ok);
        if (!r.ok)
            rep.put("associative.witness", tuple_str(r.witness) + " placements " + std::to_string(r.place_a) + "," +
                                               std::to_string(r.place_b));
    }
    if (o.medial) {
        const auto r = is_medial(sys);
        rep.check("medial", r.ok);
        if (!r.ok) rep.put("medial.witness", tuple_str(r.witness));
    }
    if (o.commut) {
        const auto c = is_commutative(sys);
        rep.check("commutative", c.ok);
        if (!c.ok) rep.put("commutative.witness", tuple_str(c.witness));
        rep.put("semicommutative", is_semicommutative(sys).ok ? "yes" : "no");
    }
    if (!o.sigma.empty()) {
        const auto r = sigma_commutative(sys, int_list(o.sigma));
        rep.check("sigma_commutative", r.ok);
        if (!r.ok) rep.put("sigma_commutative.witness", tuple_str(r.witness));
    }
    if (o.cancel) {
        const auto c = cancellativity(sys);
        rep.put("cancellative.places", bools(c));
        rep.check("cancellative", std::all_of(c.begin(), c.end(), [](bool b) { return b; }));
    }
    if (o.solve) {
        const auto p = place_report(sys);
        rep.put("solvable.places", bools(p.solvable));
        rep.put("uniquely_solvable.places", bools(p.unique));
        rep.check("solvable", std::all_of(p.solvable.begin(), p.solvable.end(), [](bool b) { return b; }));
    }
    if (o.zero) {
        const auto z = find_zero(sys, mode);
        rep.put("zero.value", z ? sys.carrier().label(*z) : "none");
        rep.check("zero", z.has_value());
    }
    if (o.identity) {
        const auto ids = find_identities(sys, mode);
        std::string s;
        for (Elem e : ids) s += (s.empty() ? "" : " ") + sys.carrier().label(e);
        rep.put("identity.values", s.empty() ? "none" : s);
        rep.check("identity", !ids.empty());
    }
    if (o.nilpotent) {
        const auto z = find_zero(sys);
        rep.put("nilpotency", z ? (nilpotency_index(sys) ? std::to_string(*nilpotency_index(sys)) : "none") : "no zero");
    }
    if (o.neutral) {
        rep.put("neutral_polyads.split", std::to_string(neutral_polyads(sys, NeutralConvention::Split).size()));
        rep.put("neutral_polyads.ends", std::to_string(neutral_polyads(sys, NeutralConvention::Ends).size()));
    }
    if (o.classify) {
        const Kind k = classify(sys);
        rep.put("kind", to_string(k));
        rep.note("kind: " + to_string(k));
    }
}

// ---- arity ----

std::vector<FixedConstant> parse_constants(const std::string& text) {
    std::vector<FixedConstant> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw FormatError("constant must be pos:val, got '" + item + "'");
        try {
            out.push_back({std::stoi(item.substr(0, colon)), Elem(std::stoul(item.substr(colon + 1)))});
        } catch (const std::exception&) {
            throw FormatError("bad constant '" + item + "'");
        }
    }
    return out;
}

std::string fraction(long long num, long long den) { return Scalar::rational(num, den).str(); }

void run_arity_table(int n, int lmu, int lid, int kmax, Report& rep) {
    if (n < 2) throw DomainError("need n >= 2");
    if (kmax <= 0) kmax = 2 * (n - 1);
    rep.note("n' = n - (n-1) lid / k for fixed lid; n' = (n-1) lmu / k + 1 for fixed lmu");
    std::cout << "fixed\tvalue\tk\tn_prime\tadmissible\n";
    auto row = [&](const std::string& which, int value, int k, long long num, int den, bool adm) {
        std::cout << which << "\t" << value << "\t" << k << "\t" << fraction(num, den) << "\t" << (adm ? 1 : 0)
                  << "\n";
    };
    int admissible = 0;
    if (lid >= 0)
        for (int k = std::max(1, lid + 1); k <= kmax; ++k) {
            bool adm = true;
            try {
                shape_params_lid(n, k, lid);
            } catch (const DomainError&) {
                adm = false;
            }
            admissible += adm;
            row("lid", lid, k, static_cast<long long>(n) * k - static_cast<long long>(n - 1) * lid, k, adm);
        }
    if (lmu >= 1)
        for (int k = lmu; k <= std::min(kmax, (n - 1) * lmu); ++k) {
            bool adm = true;
            try {
                shape_params_lmu(n, k, lmu);
            } catch (const DomainError&) {
                adm = false;
            }
            admissible += adm;
            row("lmu", lmu, k, static_cast<long long>(n - 1) * lmu + k, k, adm);
        }
    rep.put("admissible_points", std::to_string(admissible));
}

void run_quantization(int kmax, int count, Report& rep) {
    std::cout << "k\tlmu\tlid\tn\tn_prime\tclass\n";
    int rows = 0;
    for (const auto& r : quantization_table(kmax, count))
        for (const auto& [n, np] : r.series) {
            const auto p = shape_params_lmu(n, r.k, r.lmu);
            std::cout << r.k << "\t" << r.lmu << "\t" << r.lid << "\t" << n << "\t" << np << "\t" << to_string(p.cls)
                      << "\n";
            ++rows;
        }
    rep.put("rows", std::to_string(rows));
}

// ---- quer ----

void run_quer(const std::string& file, int element, int k, bool dornte, Report& rep) {
    const System sys = load_system_file(file);
    const QuerTable qt(sys);
    const auto& c = sys.carrier();
    if (element >= 0) {
        if (element >= sys.size()) throw DomainError("element outside the carrier");
        const Elem g = Elem(element);
        rep.put("quer", c.label(qt[g]));
        if (k >= 0) {
            const Elem qp = querpower(qt, g, k);
            const long long e = querpower_exponent(sys.arity(), k);
            rep.put("querpower", c.label(qp));
            rep.put("exponent", std::to_string(e));
            rep.check("heine_identity", qp == power(sys, g, e));
        }
    } else {
        std::string s;
        for (Elem g = 0; g < Elem(sys.size()); ++g) s += (g ? " " : "") + c.label(g) + "->" + c.label(qt[g]);
        rep.put("quer", s);
        if (k >= 0) {
            bool ok = true;
            for (Elem g = 0; g < Elem(sys.size()); ++g)
                ok = ok && querpower(qt, g, k) == power(sys, g, querpower_exponent(sys.arity(), k));
            rep.check("heine_identity", ok);
        }
    }
    if (dornte) {
        const auto v = check_dornte(qt);
        rep.put("dornte_violations", std::to_string(v.size()));
        rep.check("dornte", v.empty());
    }
}

// ---- hetero ----

void run_hetero_verify(const std::string& src, const std::string& dst, const std::string& map_file,
                       const std::string& shape_text, Report& rep) {
    const System s = load_system_file(src), d = load_system_file(dst);
    const MultiplaceMap map = load_map(read_file(map_file), s, d);
    const HeteroShape shape = HeteroShape::parse(shape_text, s.arity(), d.arity(), map.k);
    const auto params = shape_params_lmu(shape.n, shape.k, shape.lmu);
    rep.put("class", to_string(params.cls));
    rep.put("shape", shape.str());
    const auto r = verify_heteromorphism(map, shape);
    rep.put("assignments", std::to_string(r.assignments));
    rep.check("heteromorphism", r.ok);
    if (!r.ok) rep.put("witness", tuple_str(r.witness));
    if (const auto phi = is_derived(map)) {
        std::string t;
        for (Elem e : *phi) t += (t.empty() ? "" : " ") + std::to_string(e);
        rep.put("derived_phi", t);
    } else {
        rep.put("derived_phi", "none");
    }
}

void run_hetero_census(const std::string& src, const std::string& dst, int k, const std::string& shape_text,
                       Report& rep) {
    const System s = load_system_file(src), d = load_system_file(dst);
    const HeteroShape shape = HeteroShape::parse(shape_text, s.arity(), d.arity(), k);
    const Census c = enumerate_heteromorphisms(s, d, shape);
    rep.put("maps", std::to_string(c.maps.size()));
    rep.put("complete", c.complete ? "yes" : "no");
    rep.put("nodes", std::to_string(c.nodes));
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        std::string t;
        for (Elem e : c.maps[i].table) t += (t.empty() ? "" : " ") + std::to_string(e);
        rep.put("map." + std::to_string(i), t);
    }
}

// ---- quiver ----

Quiver quiver_from(const std::string& file, const std::string& named) {
    if (!named.empty()) return named_quiver(named);
    if (file.empty()) throw DomainError("give --quiver FILE or --named NAME");
    return load_quiver(read_file(file));
}

void run_quiver_gen(int n, int np, int k, const std::string& family, Report& rep) {
    if (n < 2 || np < 2 || k < 1) throw DomainError("need n, n' >= 2 and k >= 1");
    if ((np - 1) * k % (n - 1) != 0) throw DomainError("n' - 1 must be a multiple of (n-1)/k");
    const int lmu = (np - 1) * k / (n - 1);
    const int lid = k - lmu;
    shape_params_lmu(n, k, lmu);
    const auto g = generate_quivers(n, np, k, lmu, lid, parse_quiver_family(family));
    rep.put("family", to_string(parse_quiver_family(family)));
    rep.put("lmu", std::to_string(lmu));
    rep.put("lid", std::to_string(lid));
    rep.put("count", std::to_string(g.quivers.size()));
    rep.put("complete", g.complete ? "yes" : "no");
    for (std::size_t i = 0; i < g.quivers.size(); ++i) {
        const auto w = free_word_check(g.quivers[i]);
        rep.put("quiver." + std::to_string(i), g.quivers[i].compact() + "\t" + (w.ok ? "associative" : "not-associative"));
    }
}

void run_quiver_test(const Quiver& q, const std::vector<std::string>& systems, Report& rep) {
    std::vector<NamedSystem> set;
    for (const auto& path : systems) set.push_back({path, load_system_file(path)});
    if (set.empty()) set = standard_test_set(q.n);
    rep.put("quiver", q.compact());
    const QuiverTest t = is_associative_quiver(q, set);
    rep.put("universal", t.universal.ok ? "associative" : "not-associative");
    for (const auto& v : t.systems) {
        rep.put("system." + v.name, to_string(v.status) + "\t" + v.method);
        if (v.status == VerdictStatus::Fail) rep.put("system." + v.name + ".witness", tuple_str(v.witness));
    }
    rep.check("associative_quiver", t.ok());
}

// ---- repr ----

void print_matrix(const std::string& title, const Matrix& m) {
    std::cout << title << "\n" << m.str();
}

void run_repr_regular(const std::string& file, const std::string& kind, int slot, Report& rep) {
    const System sys = load_system_file(file);
    if (slot > 0) {
        const MultiplaceRep r = i_regular_representation(sys, slot);
        rep.put("shape", r.shape.str());
        std::vector<Elem> t(r.shape.k);
        for (std::size_t idx = 0; idx < r.table.size(); ++idx) {
            decode_tuple(idx, t.data(), r.shape.k, sys.size());
            print_matrix("args " + tuple_str(t), r.table[idx]);
        }
        rep.put("matrices", std::to_string(r.table.size()));
        return;
    }
    const TernaryRep r = regular_ternary(sys, parse_ternary_kind(kind));
    const auto classes = equivalence_classes(r);
    for (const auto& cl : classes) {
        std::string members;
        for (const auto& [a, b] : cl)
            members += (members.empty() ? "" : " ") + std::string("(") + std::to_string(a) + "," + std::to_string(b) + ")";
        print_matrix("class " + members, r(cl.front().first, cl.front().second));
    }
    rep.put("kind", to_string(r.kind));
    rep.put("classes", std::to_string(classes.size()));
}

void run_repr_verify(const std::string& file, const std::string& kind, int slot, Report& rep) {
    const System sys = load_system_file(file);
    if (slot > 0) {
        const auto r = verify_multiplace_rep(i_regular_representation(sys, slot));
        rep.check("representation", r.ok);
        if (!r.ok) rep.put("failed", r.failed + " " + tuple_str(r.witness));
        const auto a = verify_multiaction(regular_multiaction_table(sys, slot));
        rep.check("multiaction", a.ok);
        return;
    }
    const TernaryRep r = regular_ternary(sys, parse_ternary_kind(kind));
    const auto v = verify_ternary_rep(r);
    rep.check("representation", v.ok);
    if (!v.ok) rep.put("failed", v.failed + " " + tuple_str(v.witness));
    if (sys.arity() == 3) {
        rep.check("left_right_commute", check_left_right_commute(sys).ok);
        rep.check("middle_trace_invariance", check_middle_trace_invariance(sys).ok);
        const auto mixed = check_middle_left_right(sys);
        rep.put("middle_left_right", mixed.ok ? std::string("yes") : "no: " + mixed.failed);
        const auto g = gamma_algebra_check(sys);
        rep.put("gamma_left", std::to_string(g.left_ok) + "/" + std::to_string(g.left_total));
        rep.put("gamma_middle", std::to_string(g.middle_ok) + "/" + std::to_string(g.middle_total));
    }
}

void run_repr_spectrum(const std::string& file, const std::string& kind, const std::string& args, Report& rep) {
    const System sys = load_system_file(file);
    const auto a = int_list(args);
    if (a.size() != 2) throw FormatError("--args takes two elements g,h");
    for (int x : a)
        if (x < 0 || x >= sys.size()) throw DomainError("argument outside the carrier");
    const TernaryRep r = regular_ternary(sys, parse_ternary_kind(kind));
    const auto ev = spectral_check(r(Elem(a[0]), Elem(a[1])));
    std::cout << "re\tim\n";
    std::cout.precision(15);
    for (const auto& z : ev) std::cout << std::fixed << z.real() << "\t" << z.imag() << "\n";
    std::cout.unsetf(std::ios::floatfield);
    rep.put("eigenvalues", std::to_string(ev.size()));
}

// ---- hopf ----

struct HopfOpts {
    std::string file, antipode, ybe, coassoc, q;
    int random_ybe = 0;
};

void put_checks(Report& rep, const HopfReport& r) {
    for (const auto& c : r) {
        rep.check(c.name, c.ok);
        if (!c.ok && !c.detail.empty()) rep.put(c.name + ".witness", c.detail);
    }
}

void run_hopf_check(const HopfOpts& o, std::uint64_t seed, Report& rep) {
    TernaryHopf h = load_tensors(read_file(o.file));
    rep.put("dim", std::to_string(h.dim));
    rep.put("field", h.p ? "F" + std::to_string(h.p) : "Q");
    if (!h.mu3.empty()) {
        put_checks(rep, {check_ternary_associativity(h)});
        if (!h.unit.empty()) put_checks(rep, check_units(h));
        rep.put("abelian", check_abelian(h).ok ? "yes" : "no");
        put_checks(rep, {check_omega_identity(h)});
        if (!o.q.empty()) put_checks(rep, {check_q_deformed(h, parse_scalar(o.q, h.p))});
    }
    if (!h.delta3.empty()) {
        if (o.coassoc.empty() || o.coassoc == "standard") {
            put_checks(rep, {check_coassociativity(h, Coassociativity::Standard)});
        } else if (o.coassoc == "comedial") {
            put_checks(rep, {check_coassociativity(h, Coassociativity::Comedial)});
        } else {
            const auto colon = o.coassoc.find(':');
            const std::string kind = o.coassoc.substr(0, colon);
            if (colon == std::string::npos) throw FormatError("coassociativity variant needs ':perm'");
            const auto perm = int_list(o.coassoc.substr(colon + 1));
            if (kind == "sigma") put_checks(rep, {check_coassociativity(h, Coassociativity::Sigma, perm)});
            else if (kind == "perm") put_checks(rep, {check_coassociativity(h, Coassociativity::Permutational, perm)});
            else throw FormatError("unknown coassociativity variant '" + kind + "'");
        }
        if (!h.eps.empty()) put_checks(rep, check_counits(h));
    }
    if (!h.mu3.empty() && !h.delta3.empty()) put_checks(rep, {check_bialgebra(h)});
    if (!o.antipode.empty()) {
        if (o.antipode != "skew" && o.antipode != "strong") throw FormatError("--antipode takes skew or strong");
        if (!h.S) {
            const auto sol = solve_skew_antipode(h);
            if (!sol) {
                rep.check("antipode_solvable", false);
            } else {
                h.S = sol->s;
                rep.put("antipode_solved", sol->unique ? "unique" : "not unique");
            }
        }
        if (h.S) {
            std::string grid = h.S->str();
            for (auto& ch : grid)
                if (ch == '\n') ch = ';';
            rep.put("antipode", grid);
            put_checks(rep, check_antipode(h, *h.S, o.antipode == "skew" ? AntipodeKind::Skew : AntipodeKind::Strong));
        }
    }
    if (!h.mu3.empty() || !h.delta3.empty()) {
        const Derivedness d = classify_derived(h);
        rep.put("derived.mu", d.mu);
        rep.put("derived.delta", d.delta);
        rep.put("derivedness", d.kind());
    }
    if (!o.ybe.empty()) {
        const TernaryHopf rt = load_tensors(read_file(o.ybe));
        if (rt.R.empty()) throw FormatError("R file has no R tensor");
        if (rt.dim != h.dim) throw DomainError("R dimension does not match the algebra");
        Vec r;
        for (const auto& s : rt.R) r.push_back(h.p ? s.in_field(h.p) : s);
        const YbeResidual y = check_quasifiveangular(h, r);
        auto res = [](double v) {
            std::ostringstream os;
            os << v;
            return os.str();
        };
        rep.put("residual.r1a", res(y.r1));
        rep.put("residual.r2a", res(y.r2));
        rep.put("residual.r3a", res(y.r3));
        rep.put("residual.r5", res(y.r5));
        rep.check("quasifiveangular", y.r1 == 0 && y.r2 == 0 && y.r3 == 0);
        rep.check("ternary_ybe", y.r5 == 0);
    }
    if (o.random_ybe > 0) {
        if (!h.p) throw DomainError("random R sampling needs a prime field");
        int nonzero = 0;
        for (int i = 0; i < o.random_ybe; ++i)
            nonzero += check_ternary_ybe(h, random_r(h.dim, h.p, seed + std::uint64_t(i))) != 0;
        rep.put("random_ybe.samples", std::to_string(o.random_ybe));
        rep.put("random_ybe.nonzero", std::to_string(nonzero));
    }
}

void run_hopf_sln(int p, const std::string& rows, Report& rep) {
    std::vector<std::vector<Scalar>> m;
    std::istringstream is(rows);
    std::string row;
    while (std::getline(is, row, ';')) {
        std::istringstream rs(row);
        std::vector<Scalar> r;
        std::string tok;
        while (rs >> tok) r.push_back(parse_scalar(tok, p));
        if (!r.empty()) m.push_back(r);
    }
    const int n = static_cast<int>(m.size());
    if (n == 0) throw FormatError("empty matrix");
    Matrix a(n, n, p ? Scalar::mod(0, p) : Scalar(0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw FormatError("matrix must be square");
        for (int j = 0; j < n; ++j) a(i, j) = m[i][j];
    }
    const SlnReport r = sl_n_ternary_coproduct(a);
    rep.check("contraction (S id id)", r.contraction[0]);
    rep.check("contraction (id S id)", r.contraction[1]);
    rep.check("contraction (id id S)", r.contraction[2]);
    rep.check("counit", r.counit);
    rep.check("derived", r.derived);
}

// ---- fixtures ----

const std::map<std::string, TernaryHopf (*)()>& hopf_fixture_table() {
    using namespace hopf_fixtures;
    static const std::map<std::string, TernaryHopf (*)()> table = {
        {"hopf-k-z3-ternary", [] { return group_algebra(fixtures::z3_ternary()); }},
        {"hopf-k-z4-ternary", [] { return group_algebra(fixtures::z4_ternary()); }},
        {"hopf-f-z3-ternary", [] { return function_algebra(fixtures::z3_ternary(), FunctionCounit::Evaluation); }},
        {"hopf-sweedler", [] { return sweedler(); }},
        {"hopf-sweedler-gf3", [] { return sweedler(3); }},
        {"hopf-matrix-m2", [] { return matrix_m2(); }},
        {"hopf-antidiagonal", [] { return antidiagonal(); }},
        {"hopf-antidiagonal-gf3", [] { return antidiagonal(3); }},
        {"hopf-dual-numbers", [] { return dual_numbers(); }},
        {"hopf-exx", [] { return exx_coalgebra(); }},
        {"hopf-k-z2-ternary", [] { return z2_group_algebra(); }},
        {"hopf-k-z2-ternary-gf3", [] { return z2_group_algebra(3); }},
        {"r-unit-z2", [] {
             TernaryHopf h = z2_group_algebra();
             TernaryHopf r;
             r.dim = h.dim;
             r.R = Vec(8, Scalar(0));
             r.R[0] = 1;
             return r;
         }},
    };
    return table;
}

int run_fixtures(const std::string& name, bool list, const std::string& out) {
    if (list || name.empty()) {
        for (const auto& n : fixtures::fixture_names()) std::cout << n << "\n";
        for (const auto& [n, f] : hopf_fixture_table()) std::cout << n << "\n";
        return 0;
    }
    const auto& table = hopf_fixture_table();
    if (auto it = table.find(name); it != table.end()) {
        output(save_tensors(it->second()), out);
        return 0;
    }
    output(fixtures::fixture_text(name), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for finite polyadic systems"};
    app.require_subcommand(1);
    std::uint64_t budget = scan_config().budget;
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
    app.add_option("--budget", budget, "Table probes allowed per scan")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", seed, "Seed for random sampling");

    Report rep;
    std::function<void()> action;
    std::function<int()> raw_action; // commands that write files instead of a report

    // check
    CheckOpts co;
    auto* check = app.add_subcommand("check", "Structural properties of a system");
    check->add_option("file", co.file)->required();
    check->add_flag("--assoc", co.assoc);
    check->add_flag("--medial", co.medial);
    check->add_flag("--commut", co.commut);
    check->add_option("--sigma", co.sigma, "Permutation of 0..n-1, e.g. 2,1,0");
    check->add_flag("--cancel", co.cancel);
    check->add_flag("--solve", co.solve);
    check->add_flag("--zero", co.zero);
    check->add_flag("--identity", co.identity);
    check->add_flag("--classify", co.classify);
    check->add_flag("--nilpotent", co.nilpotent);
    check->add_flag("--neutral", co.neutral);
    check->add_flag("--relaxed", co.relaxed, "Zero/identity only at the end positions");
    check->callback([&] { action = [&] { run_check(co, rep); }; });

    // derive / reduce
    std::string dfile, dtree, dout, dconst, dmode = "reduce";
    int dlmu = 1;
    auto* derive = app.add_subcommand("derive", "Iterate the operation");
    derive->add_option("file", dfile)->required();
    derive->add_option("--iterate", dlmu)->required()->check(CLI::PositiveNumber);
    derive->add_option("--tree", dtree, "Placement tree, e.g. [x x [x x x]]");
    derive->add_option("-o,--out", dout);
    derive->callback([&] {
        raw_action = [&] {
            ArityPlan plan;
            plan.mode = ArityMode::Iterate;
            plan.lmu = dlmu;
            if (!dtree.empty()) plan.tree = Tree::parse(dtree);
            output(save_operation(apply_plan(load_system_file(dfile), plan)), dout);
            return 0;
        };
    });
    auto* reduce = app.add_subcommand("reduce", "Fix constants in some slots");
    reduce->add_option("file", dfile)->required();
    reduce->add_option("--const", dconst, "pos:val,... (0-based positions)")->required();
    reduce->add_option("--iterate", dlmu, "Iterations for the mixed modes");
    reduce->add_option("--mode", dmode, "reduce, iterate-then-reduce or reduce-then-iterate");
    reduce->add_option("-o,--out", dout);
    reduce->callback([&] {
        raw_action = [&] {
            ArityPlan plan;
            plan.mode = parse_arity_mode(dmode);
            plan.lmu = dlmu;
            plan.constants = parse_constants(dconst);
            output(save_operation(apply_plan(load_system_file(dfile), plan)), dout);
            return 0;
        };
    });

    // arity-table
    int an = 0, almu = -1, alid = -1, akmax = 0, acount = 3;
    bool aquant = false;
    auto* arity = app.add_subcommand("arity-table", "Final arity against the number of places");
    arity->add_option("--n", an);
    arity->add_option("--lmu", almu);
    arity->add_option("--lid", alid);
    arity->add_option("--kmax", akmax);
    arity->add_flag("--quantization", aquant, "Admissible (k, lmu, lid, n, n') rows instead");
    arity->add_option("--count", acount, "Initial arities per quantization row");
    arity->callback([&] {
        action = [&] {
            if (aquant) run_quantization(akmax > 0 ? akmax : 4, acount, rep);
            else run_arity_table(an, almu, alid, akmax, rep);
        };
    });

    // quer
    std::string qfile;
    int qel = -1, qpow = -1;
    bool qdornte = false;
    auto* quer = app.add_subcommand("quer", "Querelements, querpowers, Dornte relations");
    quer->add_option("file", qfile)->required();
    quer->add_option("--element", qel);
    quer->add_option("--power", qpow);
    quer->add_flag("--check-dornte", qdornte);
    quer->callback([&] { action = [&] { run_quer(qfile, qel, qpow, qdornte, rep); }; });

    // hetero
    std::string hsrc, hdst, hmap, hshape;
    int hk = 1;
    auto* hetero = app.add_subcommand("hetero", "Heteromorphisms");
    hetero->require_subcommand(1);
    auto* hverify = hetero->add_subcommand("verify", "Check the heteromorphism equation");
    hverify->add_option("--src", hsrc)->required();
    hverify->add_option("--dst", hdst)->required();
    hverify->add_option("--map", hmap)->required();
    hverify->add_option("--shape", hshape)->required();
    hverify->callback([&] { action = [&] { run_hetero_verify(hsrc, hdst, hmap, hshape, rep); }; });
    auto* hcensus = hetero->add_subcommand("census", "Enumerate all heteromorphisms of a shape");
    hcensus->add_option("--src", hsrc)->required();
    hcensus->add_option("--dst", hdst)->required();
    hcensus->add_option("--k", hk)->required();
    hcensus->add_option("--shape", hshape)->required();
    hcensus->callback([&] { action = [&] { run_hetero_census(hsrc, hdst, hk, hshape, rep); }; });

    // quiver
    int qn = 0, qnp = 0, qk = 0;
    std::string qfamily = "vertical", qquiver, qnamed, qout;
    std::vector<std::string> qsystems;
    auto* quiver = app.add_subcommand("quiver", "Associativity quivers");
    quiver->require_subcommand(1);
    auto* qgen = quiver->add_subcommand("gen", "Generate a quiver family");
    qgen->add_option("--n", qn)->required();
    qgen->add_option("--nprime", qnp)->required();
    qgen->add_option("--k", qk)->required();
    qgen->add_option("--family", qfamily);
    qgen->callback([&] { action = [&] { run_quiver_gen(qn, qnp, qk, qfamily, rep); }; });
    auto* qtest = quiver->add_subcommand("test", "Test a quiver for associativity");
    qtest->add_option("--quiver", qquiver);
    qtest->add_option("--named", qnamed);
    qtest->add_option("--system", qsystems, "Test systems (default: the standard set)");
    qtest->callback([&] { action = [&] { run_quiver_test(quiver_from(qquiver, qnamed), qsystems, rep); }; });
    auto* qshow = quiver->add_subcommand("show", "Write a named quiver file");
    qshow->add_option("--named", qnamed);
    qshow->add_option("-o,--out", qout);
    qshow->callback([&] {
        raw_action = [&] {
            if (qnamed.empty()) {
                for (const auto& n : named_quivers()) std::cout << n << "\t" << named_quiver(n).compact() << "\n";
                return 0;
            }
            output(save_quiver(named_quiver(qnamed)), qout);
            return 0;
        };
    });

    // repr
    std::string rfile, rkind = "left", rargs;
    int rslot = 0;
    auto* repr = app.add_subcommand("repr", "Regular representations");
    repr->require_subcommand(1);
    auto* rreg = repr->add_subcommand("regular", "Print regular representation matrices");
    auto* rver = repr->add_subcommand("verify", "Check representation relations");
    auto* rspec = repr->add_subcommand("spectrum", "Eigenvalues of one matrix");
    for (auto* sc : {rreg, rver, rspec}) {
        sc->add_option("file", rfile)->required();
        sc->add_option("--kind", rkind, "left, right or middle");
    }
    rreg->add_option("--i", rslot, "Slot of the i-regular representation");
    rver->add_option("--i", rslot, "Slot of the i-regular representation");
    rspec->add_option("--args", rargs, "g,h")->required();
    rreg->callback([&] { action = [&] { run_repr_regular(rfile, rkind, rslot, rep); }; });
    rver->callback([&] { action = [&] { run_repr_verify(rfile, rkind, rslot, rep); }; });
    rspec->callback([&] { action = [&] { run_repr_spectrum(rfile, rkind, rargs, rep); }; });

    // hopf
    HopfOpts ho;
    int sp = 5;
    std::string srows;
    auto* hopf = app.add_subcommand("hopf", "Ternary Hopf structure checks");
    hopf->require_subcommand(1);
    auto* hcheck = hopf->add_subcommand("check", "Check the axioms present in a tensor file");
    hcheck->add_option("file", ho.file)->required();
    hcheck->add_option("--antipode", ho.antipode, "skew or strong; solved when S is absent");
    hcheck->add_option("--ybe", ho.ybe, "Tensor file holding R");
    hcheck->add_option("--coassoc", ho.coassoc, "standard, comedial, sigma:a,b,c or perm:a,b,c,d,e");
    hcheck->add_option("--q", ho.q, "Check the q-deformed relation");
    hcheck->add_option("--random-ybe", ho.random_ybe, "Random R samples over the file's field");
    hcheck->callback([&] { action = [&] { run_hopf_check(ho, seed, rep); }; });
    auto* hsln = hopf->add_subcommand("sln", "Matrix-coefficient coproduct on a sample matrix");
    hsln->add_option("--p", sp);
    hsln->add_option("--matrix", srows, "Rows separated by ';'")->required();
    hsln->callback([&] { action = [&] { run_hopf_sln(sp, srows, rep); }; });

    // fixtures
    std::string fname, fout;
    bool flist = false;
    auto* fix = app.add_subcommand("fixtures", "Write a named fixture");
    fix->add_option("name", fname);
    fix->add_flag("--list", flist);
    fix->add_option("-o,--out", fout);
    fix->callback([&] { raw_action = [&] { return run_fixtures(fname, flist, fout); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    scan_config().budget = budget;
    scan_config().threads = threads;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (raw_action) return raw_action();
        action();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep.emit(ms);
}
