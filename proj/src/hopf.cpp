#include "polyadika/hopf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "polyadika/config.hpp"
#include "polyadika/error.hpp"
#include "polyadika/group.hpp"

namespace polyadika {

namespace {

std::size_t ipow(int d, int k) {
    std::size_t r = 1;
    for (int i = 0; i < k; ++i) r *= std::size_t(d);
    return r;
}

Scalar in(int p, long long v) { return p ? Scalar::mod(v, p) : Scalar(v); }

Vec zeros(int p, std::size_t n) { return Vec(n, in(p, 0)); }

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = s * x;
    return r;
}

std::string join(std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
    }
    return s;
}

// Nonzero coefficients of [e_a e_b e_c], indexed by (a d + b) d + c.
struct SparseProduct {
    int d;
    std::vector<std::vector<std::pair<int, Scalar>>> terms;

    explicit SparseProduct(const TernaryHopf& h) : d(h.dim), terms(ipow(h.dim, 3)) {
        if (h.mu3.empty()) throw DomainError("no ternary product (mu3) given");
        for (std::size_t abc = 0; abc < terms.size(); ++abc)
            for (int r = 0; r < d; ++r) {
                const Scalar& s = h.mu3[abc * d + r];
                if (!s.is_zero()) terms[abc].emplace_back(r, s);
            }
    }
    const auto& operator()(int a, int b, int c) const { return terms[(std::size_t(a) * d + b) * d + c]; }
};

void require_coproduct(const TernaryHopf& h) {
    if (h.delta3.empty()) throw DomainError("no ternary coproduct (delta3) given");
}

// Applies a linear map H -> H^(x)r at factor `pos` of X in H^(x)k.
Vec apply_at(const TernaryHopf& h, const Vec& x, int k, int pos, int r, const std::function<Vec(int)>& image) {
    const int d = h.dim;
    const std::size_t post = ipow(d, k - pos - 1), dr = ipow(d, r);
    const std::size_t pre = ipow(d, pos);
    Vec out = zeros(h.p, pre * dr * post);
    std::vector<Vec> cache(d);
    std::vector<bool> have(d, false);
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (x[idx].is_zero()) continue;
        const std::size_t lo = idx % post;
        const int i = int(idx / post % d);
        const std::size_t hi = idx / post / d;
        if (!have[i]) {
            cache[i] = image(i);
            have[i] = true;
        }
        const Vec& im = cache[i];
        for (std::size_t j = 0; j < dr; ++j)
            if (!im[j].is_zero()) out[(hi * dr + j) * post + lo] += x[idx] * im[j];
    }
    return out;
}

Vec apply_matrix_at(const TernaryHopf& h, const Vec& x, int k, int pos, const Matrix& m) {
    return apply_at(h, x, k, pos, 1, [&](int c) {
        Vec v(h.dim);
        for (int r = 0; r < h.dim; ++r) v[r] = m(r, c);
        return v;
    });
}

Vec apply_counit_at(const TernaryHopf& h, const Vec& x, int k, int pos, const Vec& eps) {
    return apply_at(h, x, k, pos, 0, [&](int i) { return Vec{eps[i]}; });
}

Vec apply_coproduct_at(const TernaryHopf& h, const Vec& x, int k, int pos) {
    return apply_at(h, x, k, pos, 3, [&](int i) { return coproduct(h, h.basis(i)); });
}

// mu3 applied to an element of H^(x)3.
Vec contract3(const TernaryHopf& h, const SparseProduct& sp, const Vec& x) {
    const int d = h.dim;
    Vec out = zeros(h.p, d);
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (x[idx].is_zero()) continue;
        const int a = int(idx / (d * d)), b = int(idx / d % d), c = int(idx % d);
        for (const auto& [r, s] : sp(a, b, c)) out[r] += x[idx] * s;
    }
    return out;
}

Vec column(const Matrix& m, int c) {
    Vec v(m.rows());
    for (int r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

} // namespace

// ---- TernaryHopf ----

Scalar TernaryHopf::zero() const { return in(p, 0); }
Scalar TernaryHopf::one() const { return in(p, 1); }

Vec TernaryHopf::basis(int a) const {
    Vec v = zeros(p, dim);
    v[a] = one();
    return v;
}

void TernaryHopf::validate() const {
    if (dim < 1) throw FormatError("dimension must be positive");
    if (p != 0 && !is_prime(p)) throw FormatError("field characteristic must be 0 or prime");
    if (!labels.empty() && int(labels.size()) != dim) throw FormatError("labels must name every basis vector");
    auto check = [&](const Vec& v, std::size_t n, const char* what) {
        if (!v.empty() && v.size() != n)
            throw FormatError(std::string(what) + " needs " + std::to_string(n) + " coefficients, got " +
                              std::to_string(v.size()));
    };
    check(mu3, ipow(dim, 4), "mu3");
    check(delta3, ipow(dim, 4), "delta3");
    check(mu2, ipow(dim, 3), "mu2");
    check(delta2, ipow(dim, 3), "delta2");
    check(eps, dim, "eps");
    check(eps2, dim, "eps2");
    check(unit, dim, "unit");
    check(unit2, dim, "unit2");
    check(R, ipow(dim, 3), "R");
    if (S && (S->rows() != dim || S->cols() != dim)) throw FormatError("S must be dim x dim");
    if (!eps2.empty() && eps.empty()) throw FormatError("eps2 without eps");
    if (!unit2.empty() && unit.empty()) throw FormatError("unit2 without unit");
}

TernaryHopf load_tensors(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok) || tok != "polytns") throw FormatError("expected 'polytns' header");
    if (!(is >> tok) || tok != "1") throw FormatError("unsupported polytns version");
    TernaryHopf h;
    bool have_dim = false, have_field = false;
    Vec* target = nullptr;
    std::vector<Scalar> s_entries;
    bool reading_s = false, reading_labels = false;
    static const std::set<std::string> keys = {"dim", "field", "labels", "mu3", "delta3", "mu2", "delta2",
                                               "eps", "eps2", "unit", "unit2", "S", "R"};
    std::set<std::string> seen;
    while (is >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(is, rest);
            continue;
        }
        if (keys.count(tok)) {
            if (!seen.insert(tok).second) throw FormatError("duplicate section '" + tok + "'");
            target = nullptr;
            reading_s = reading_labels = false;
            if (tok == "dim") {
                if (!(is >> h.dim)) throw FormatError("bad dim");
                have_dim = true;
            } else if (tok == "field") {
                std::string f;
                if (!(is >> f)) throw FormatError("missing field");
                if (f == "Q") {
                    h.p = 0;
                } else if (f.size() > 1 && f[0] == 'F') {
                    try {
                        h.p = std::stoi(f.substr(1));
                    } catch (const std::exception&) {
                        throw FormatError("bad field '" + f + "'");
                    }
                    if (!is_prime(h.p)) throw FormatError("field F" + std::to_string(h.p) + " is not prime");
                } else {
                    throw FormatError("field must be Q or F<p>");
                }
                have_field = true;
            } else {
                if (!have_dim || !have_field) throw FormatError("dim and field must precede tensor data");
                if (tok == "labels") reading_labels = true;
                else if (tok == "S") reading_s = true;
                else if (tok == "mu3") target = &h.mu3;
                else if (tok == "delta3") target = &h.delta3;
                else if (tok == "mu2") target = &h.mu2;
                else if (tok == "delta2") target = &h.delta2;
                else if (tok == "eps") target = &h.eps;
                else if (tok == "eps2") target = &h.eps2;
                else if (tok == "unit") target = &h.unit;
                else if (tok == "unit2") target = &h.unit2;
                else if (tok == "R") target = &h.R;
            }
            continue;
        }
        if (reading_labels) {
            h.labels.push_back(tok);
            continue;
        }
        if (!target && !reading_s) throw FormatError("unexpected token '" + tok + "'");
        Scalar v;
        try {
            v = parse_scalar(tok, h.p);
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw FormatError("bad coefficient '" + tok + "': " + e.what());
        }
        (reading_s ? s_entries : *target).push_back(v);
    }
    if (!have_dim || !have_field) throw FormatError("missing dim or field");
    if (seen.count("S")) {
        if (s_entries.size() != ipow(h.dim, 2)) throw FormatError("S needs dim^2 coefficients");
        Matrix s(h.dim, h.dim, h.zero());
        for (int r = 0; r < h.dim; ++r)
            for (int c = 0; c < h.dim; ++c) s(r, c) = s_entries[std::size_t(r) * h.dim + c];
        h.S = s;
    }
    h.validate();
    return h;
}

std::string save_tensors(const TernaryHopf& h) {
    std::ostringstream os;
    os << "polytns 1\ndim " << h.dim << "\nfield " << (h.p ? "F" + std::to_string(h.p) : std::string("Q")) << "\n";
    if (!h.labels.empty()) {
        os << "labels";
        for (const auto& l : h.labels) os << ' ' << l;
        os << "\n";
    }
    auto put = [&](const char* name, const Vec& v) {
        if (v.empty()) return;
        os << name;
        for (const auto& s : v) os << ' ' << s.str();
        os << "\n";
    };
    put("mu3", h.mu3);
    put("delta3", h.delta3);
    put("mu2", h.mu2);
    put("delta2", h.delta2);
    put("eps", h.eps);
    put("eps2", h.eps2);
    put("unit", h.unit);
    put("unit2", h.unit2);
    if (h.S) {
        os << "S";
        for (int r = 0; r < h.dim; ++r)
            for (int c = 0; c < h.dim; ++c) os << ' ' << (*h.S)(r, c).str();
        os << "\n";
    }
    put("R", h.R);
    return os.str();
}

bool all_ok(const HopfReport& r) {
    return std::all_of(r.begin(), r.end(), [](const HopfCheck& c) { return c.ok; });
}

// ---- tensor arithmetic ----

namespace {

Vec mul3_sp(const TernaryHopf& h, const SparseProduct& sp, int k, const Vec& x, const Vec& y, const Vec& z) {
    const int d = h.dim;
    const std::size_t n = ipow(d, k);
    if (x.size() != n || y.size() != n || z.size() != n) throw DomainError("mul3: operand sizes do not match H^k");
    Vec out = zeros(h.p, n);
    auto nonzero = [](const Vec& v) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) idx.push_back(i);
        return idx;
    };
    const auto nx = nonzero(x), ny = nonzero(y), nz = nonzero(z);
    std::vector<std::pair<std::size_t, Scalar>> cur, next;
    for (std::size_t i : nx)
        for (std::size_t j : ny)
            for (std::size_t l : nz) {
                cur.assign(1, {0, x[i] * y[j] * z[l]});
                std::size_t w = n;
                for (int t = 0; t < k && !cur.empty(); ++t) {
                    w /= d;
                    const int a = int(i / w % d), b = int(j / w % d), c = int(l / w % d);
                    next.clear();
                    for (const auto& [idx, coef] : cur)
                        for (const auto& [r, s] : sp(a, b, c)) next.emplace_back(idx * d + r, coef * s);
                    std::swap(cur, next);
                }
                for (const auto& [idx, coef] : cur) out[idx] += coef;
            }
    return out;
}

} // namespace

Vec mul3(const TernaryHopf& h, int k, const Vec& x, const Vec& y, const Vec& z) {
    return mul3_sp(h, SparseProduct(h), k, x, y, z);
}

Vec coproduct(const TernaryHopf& h, const Vec& x) {
    require_coproduct(h);
    const std::size_t n3 = ipow(h.dim, 3);
    Vec out = zeros(h.p, n3);
    for (int a = 0; a < h.dim; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t t = 0; t < n3; ++t) {
            const Scalar& s = h.delta3[a * n3 + t];
            if (!s.is_zero()) out[t] += x[a] * s;
        }
    }
    return out;
}

Vec permute_factors(const TernaryHopf& h, const Vec& x, const std::vector<int>& perm) {
    const int k = int(perm.size()), d = h.dim;
    if (x.size() != ipow(d, k)) throw DomainError("permute_factors: size does not match the permutation");
    std::vector<int> in_digits(k);
    Vec out = zeros(h.p, x.size());
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (x[idx].is_zero()) continue;
        std::size_t rest = idx;
        for (int t = k - 1; t >= 0; --t) {
            in_digits[t] = int(rest % d);
            rest /= d;
        }
        std::size_t o = 0;
        for (int t = 0; t < k; ++t) o = o * d + in_digits[perm[t]];
        out[o] += x[idx];
    }
    return out;
}

Vec tensor(const TernaryHopf& h, const Vec& a, const Vec& b) {
    Vec out = zeros(h.p, a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

double residual(const TernaryHopf& h, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("residual: size mismatch");
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Scalar diff = a[i] - b[i];
        double v;
        if (h.p) {
            const long long r = diff.in_field(h.p).num();
            v = double(std::min(r, h.p - r));
        } else {
            v = std::fabs(diff.to_double());
        }
        worst = std::max(worst, v);
    }
    return worst;
}

// ---- algebra ----

HopfCheck check_ternary_associativity(const TernaryHopf& h) {
    const SparseProduct sp(h);
    const int d = h.dim;
    require_budget(double(ipow(d, 5)) * 3, "ternary associativity");
    HopfCheck out{"associativity", true, ""};
    auto prod = [&](const Vec& x, const Vec& y, const Vec& z) { return mul3_sp(h, sp, 1, x, y, z); };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Vec abc = prod(h.basis(a), h.basis(b), h.basis(c));
                for (int e = 0; e < d; ++e) {
                    const Vec bce = prod(h.basis(b), h.basis(c), h.basis(e));
                    for (int f = 0; f < d; ++f) {
                        const Vec l = prod(abc, h.basis(e), h.basis(f));
                        const Vec m = prod(h.basis(a), bce, h.basis(f));
                        const Vec r = prod(h.basis(a), h.basis(b), prod(h.basis(c), h.basis(e), h.basis(f)));
                        if (!vec_eq(l, m) || !vec_eq(m, r)) {
                            out.ok = false;
                            out.detail = join({a, b, c, e, f});
                            return out;
                        }
                    }
                }
            }
    return out;
}

namespace {

HopfReport unit_checks(const TernaryHopf& h, const Vec& u1, const Vec& u2, const char* names[3]) {
    const SparseProduct sp(h);
    HopfReport rep;
    for (int placement = 0; placement < 3; ++placement) {
        HopfCheck c{names[placement], true, ""};
        for (int a = 0; a < h.dim && c.ok; ++a) {
            const Vec ea = h.basis(a);
            Vec r;
            if (placement == 0) r = mul3_sp(h, sp, 1, u1, u2, ea);
            else if (placement == 1) r = mul3_sp(h, sp, 1, u1, ea, u2);
            else r = mul3_sp(h, sp, 1, ea, u1, u2);
            if (!vec_eq(r, ea)) {
                c.ok = false;
                c.detail = std::to_string(a);
            }
        }
        rep.push_back(c);
    }
    return rep;
}

bool is_strong_unit(const TernaryHopf& h, const Vec& u) {
    const char* names[3] = {"", "", ""};
    return all_ok(unit_checks(h, u, u, names));
}

} // namespace

HopfReport check_units(const TernaryHopf& h) {
    if (h.unit.empty()) return {{"unit", false, "none declared"}};
    if (h.unit2.empty()) {
        const char* names[3] = {"unit [uua]", "unit [uau]", "unit [auu]"};
        return unit_checks(h, h.unit, h.unit, names);
    }
    const char* names[3] = {"unit [u1u2a]", "unit [u1au2]", "unit [au1u2]"};
    return unit_checks(h, h.unit, h.unit2, names);
}

std::vector<Vec> find_strong_units(const TernaryHopf& h) {
    // GF(p): every vector; Q: coefficients in {-1, 0, 1}.
    const int q = h.p ? h.p : 3;
    const double count = fpow(q, h.dim);
    require_budget(count * fpow(h.dim, 4) * 3, "strong unit search");
    std::vector<Vec> out;
    std::vector<int> digits(h.dim, 0);
    for (std::uint64_t i = 0; i < std::uint64_t(count); ++i) {
        Vec u(h.dim);
        for (int t = 0; t < h.dim; ++t) u[t] = h.p ? in(h.p, digits[t]) : Scalar(digits[t] - 1);
        if (is_strong_unit(h, u)) out.push_back(u);
        for (int t = h.dim - 1; t >= 0; --t) {
            if (++digits[t] < q) break;
            digits[t] = 0;
        }
    }
    return out;
}

// ---- coalgebra ----

HopfReport check_counits(const TernaryHopf& h) {
    require_coproduct(h);
    if (h.eps.empty()) return {{"counit", false, "none declared"}};
    const Vec& e1 = h.eps;
    const Vec& e2 = h.eps2.empty() ? h.eps : h.eps2;
    const bool strong = h.eps2.empty();
    const char* names[3];
    if (strong) {
        names[0] = "counit (e e id)";
        names[1] = "counit (e id e)";
        names[2] = "counit (id e e)";
    } else {
        names[0] = "counit (e1 e2 id)";
        names[1] = "counit (e1 id e2)";
        names[2] = "counit (id e1 e2)";
    }
    // Positions of the two counits among the three factors.
    const int place[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    HopfReport rep;
    for (int v = 0; v < 3; ++v) {
        HopfCheck c{names[v], true, ""};
        for (int a = 0; a < h.dim && c.ok; ++a) {
            Vec x = coproduct(h, h.basis(a));
            // Remove the later factor first so the earlier position stays valid.
            x = apply_counit_at(h, x, 3, place[v][1], e2);
            x = apply_counit_at(h, x, 2, place[v][0], e1);
            if (!vec_eq(x, h.basis(a))) {
                c.ok = false;
                c.detail = std::to_string(a);
            }
        }
        rep.push_back(c);
    }
    return rep;
}

HopfCheck check_coassociativity(const TernaryHopf& h, Coassociativity variant, const std::vector<int>& perm) {
    require_coproduct(h);
    const int d = h.dim;
    HopfCheck out;
    if (variant == Coassociativity::Comedial) {
        out.name = "comediality";
        require_budget(double(ipow(d, 9)) * d * 2, "comediality");
        const std::vector<int> med = {0, 3, 6, 1, 4, 7, 2, 5, 8};
        for (int a = 0; a < d; ++a) {
            Vec x = coproduct(h, h.basis(a));
            x = apply_coproduct_at(h, x, 3, 2);
            x = apply_coproduct_at(h, x, 5, 1);
            x = apply_coproduct_at(h, x, 7, 0);
            if (!vec_eq(x, permute_factors(h, x, med))) {
                out.ok = false;
                out.detail = std::to_string(a);
                return out;
            }
        }
        return out;
    }
    if (variant == Coassociativity::Sigma && perm.size() != 3) throw DomainError("sigma must permute 3 factors");
    if (variant == Coassociativity::Permutational && perm.size() != 5) throw DomainError("pi must permute 5 factors");
    if (!perm.empty()) {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < int(sorted.size()); ++i)
            if (sorted[i] != i) throw DomainError("not a permutation");
    }
    out.name = variant == Coassociativity::Standard ? "coassociativity"
               : variant == Coassociativity::Sigma  ? "sigma-coassociativity"
                                                    : "permutational coassociativity";
    for (int a = 0; a < d; ++a) {
        const Vec x = coproduct(h, h.basis(a));
        const Vec left = apply_coproduct_at(h, x, 3, 0);
        Vec mid;
        if (variant == Coassociativity::Sigma) {
            mid = apply_at(h, x, 3, 1, 3, [&](int i) { return permute_factors(h, coproduct(h, h.basis(i)), perm); });
        } else {
            mid = apply_coproduct_at(h, x, 3, 1);
            if (variant == Coassociativity::Permutational) mid = permute_factors(h, mid, perm);
        }
        const Vec right = apply_coproduct_at(h, x, 3, 2);
        if (!vec_eq(left, mid) || !vec_eq(mid, right)) {
            out.ok = false;
            out.detail = std::to_string(a);
            return out;
        }
    }
    return out;
}

Matrix convolution(const TernaryHopf& h, const Matrix& f, const Matrix& g, const Matrix& k) {
    require_coproduct(h);
    const int d = h.dim;
    Matrix out(d, d, h.zero());
    for (int a = 0; a < d; ++a) {
        Vec x = coproduct(h, h.basis(a));
        x = apply_matrix_at(h, x, 3, 0, f);
        x = apply_matrix_at(h, x, 3, 1, g);
        x = apply_matrix_at(h, x, 3, 2, k);
        const Vec col = contract3(h, SparseProduct(h), x);
        for (int r = 0; r < d; ++r) out(r, a) = col[r];
    }
    return out;
}

// ---- bialgebra and antipodes ----

HopfCheck check_bialgebra(const TernaryHopf& h) {
    require_coproduct(h);
    const int d = h.dim;
    require_budget(double(ipow(d, 3)) * double(ipow(d, 3)), "bialgebra check");
    std::vector<Vec> dl(d);
    for (int a = 0; a < d; ++a) dl[a] = coproduct(h, h.basis(a));
    const SparseProduct sp(h);
    HopfCheck out{"bialgebra", true, ""};
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Vec lhs = coproduct(h, mul3_sp(h, sp, 1, h.basis(a), h.basis(b), h.basis(c)));
                const Vec rhs = mul3_sp(h, sp, 3, dl[a], dl[b], dl[c]);
                if (!vec_eq(lhs, rhs)) {
                    out.ok = false;
                    out.detail = join({a, b, c});
                    return out;
                }
            }
    return out;
}

HopfReport check_antipode(const TernaryHopf& h, const Matrix& s, AntipodeKind kind) {
    require_coproduct(h);
    const int d = h.dim;
    if (s.rows() != d || s.cols() != d) throw DomainError("antipode must be dim x dim");
    HopfReport rep;
    if (kind == AntipodeKind::Skew) {
        const SparseProduct sp(h);
        const char* names[3] = {"skew antipode (S id id)", "skew antipode (id S id)", "skew antipode (id id S)"};
        for (int pl = 0; pl < 3; ++pl) {
            HopfCheck c{names[pl], true, ""};
            for (int a = 0; a < d && c.ok; ++a) {
                const Vec x = apply_matrix_at(h, coproduct(h, h.basis(a)), 3, pl, s);
                if (!vec_eq(contract3(h, sp, x), h.basis(a))) {
                    c.ok = false;
                    c.detail = std::to_string(a);
                }
            }
            rep.push_back(c);
        }
        return rep;
    }
    if (h.mu2.empty()) throw DomainError("strong antipode needs a binary product (mu2)");
    if (h.unit.empty()) throw DomainError("strong antipode needs a unit");
    auto mul2 = [&](int a, int b) {
        Vec v(d);
        for (int r = 0; r < d; ++r) v[r] = h.mu2[(std::size_t(a) * d + b) * d + r];
        return v;
    };
    // Contract two adjacent factors (pos, pos+1) of X in H^(x)3 with mu2.
    auto contract2 = [&](const Vec& x, int pos) {
        Vec out = zeros(h.p, ipow(d, 2));
        for (std::size_t idx = 0; idx < x.size(); ++idx) {
            if (x[idx].is_zero()) continue;
            const int i = int(idx / (d * d)), j = int(idx / d % d), k = int(idx % d);
            const Vec m = pos == 0 ? mul2(i, j) : mul2(j, k);
            for (int r = 0; r < d; ++r) {
                if (m[r].is_zero()) continue;
                const std::size_t o = pos == 0 ? std::size_t(r) * d + k : std::size_t(i) * d + r;
                out[o] += x[idx] * m[r];
            }
        }
        return out;
    };
    HopfCheck left{"strong antipode (mu2 id)(id S id)", true, ""};
    HopfCheck right{"strong antipode (id mu2)(id id S)", true, ""};
    for (int a = 0; a < d; ++a) {
        const Vec x = coproduct(h, h.basis(a));
        if (left.ok && !vec_eq(contract2(apply_matrix_at(h, x, 3, 1, s), 0), tensor(h, h.unit, h.basis(a)))) {
            left.ok = false;
            left.detail = std::to_string(a);
        }
        if (right.ok && !vec_eq(contract2(apply_matrix_at(h, x, 3, 2, s), 1), tensor(h, h.basis(a), h.unit))) {
            right.ok = false;
            right.detail = std::to_string(a);
        }
    }
    return {left, right};
}

std::optional<AntipodeSolution> solve_skew_antipode(const TernaryHopf& h) {
    require_coproduct(h);
    const SparseProduct sp(h);
    const int d = h.dim;
    const int rows = 3 * d * d, cols = d * d;
    require_budget(double(rows) * cols * cols, "skew antipode solve");
    Matrix a(rows, cols, h.zero());
    Vec b = zeros(h.p, rows);
    for (int pl = 0; pl < 3; ++pl)
        for (int e = 0; e < d; ++e) {
            const Vec x = coproduct(h, h.basis(e));
            for (std::size_t idx = 0; idx < x.size(); ++idx) {
                if (x[idx].is_zero()) continue;
                const int f[3] = {int(idx / (d * d)), int(idx / d % d), int(idx % d)};
                // S(e_f[pl]) = sum_r S(r, f[pl]) e_r replaces factor pl.
                for (int r = 0; r < d; ++r) {
                    int g[3] = {f[0], f[1], f[2]};
                    g[pl] = r;
                    for (const auto& [t, s] : sp(g[0], g[1], g[2]))
                        a((pl * d + e) * d + t, r * d + f[pl]) += x[idx] * s;
                }
            }
            b[(pl * d + e) * d + e] = h.one();
        }
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;
    Matrix s(d, d, h.zero());
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) s(r, c) = sol->x[std::size_t(r) * d + c];
    return AntipodeSolution{s, sol->unique};
}

HopfCheck check_skew_involutive(const TernaryHopf& h, const Matrix& s) {
    require_coproduct(h);
    HopfCheck out{"skew-involutive", true, ""};
    for (int a = 0; a < h.dim; ++a) {
        const Vec lhs = coproduct(h, column(s, a));
        Vec rhs = coproduct(h, h.basis(a));
        for (int pos = 0; pos < 3; ++pos) rhs = apply_matrix_at(h, rhs, 3, pos, s);
        rhs = permute_factors(h, rhs, {2, 1, 0});
        if (!vec_eq(lhs, rhs)) {
            out.ok = false;
            out.detail = std::to_string(a);
            return out;
        }
    }
    return out;
}

std::string Derivedness::kind() const {
    const bool m = mu == "declared" || mu == "found";
    const bool c = delta == "declared" || delta == "found";
    if (m && c) return "derived";
    if (m) return delta == "none" || delta == "absent" ? "mu-derived" : "undetermined";
    if (c) return mu == "none" || mu == "absent" ? "delta-derived" : "undetermined";
    if ((mu == "none" || mu == "absent") && (delta == "none" || delta == "absent")) return "non-derived";
    return "undetermined";
}

namespace {

bool binary_assoc(int d, const Vec& m) {
    auto at = [&](int a, int b, int r) -> const Scalar& { return m[(std::size_t(a) * d + b) * d + r]; };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r) {
                    Scalar l = 0, rr = 0;
                    for (int s = 0; s < d; ++s) {
                        l += at(a, b, s) * at(s, c, r);
                        rr += at(b, c, s) * at(a, s, r);
                    }
                    if (l != rr) return false;
                }
    return true;
}

// (ab)c from mu2 matches mu3.
bool mu_factors(int d, const Vec& m2, const Vec& m3) {
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r) {
                    Scalar v = 0;
                    for (int s = 0; s < d; ++s) v += m2[(std::size_t(a) * d + b) * d + s] * m2[(std::size_t(s) * d + c) * d + r];
                    if (v != m3[((std::size_t(a) * d + b) * d + c) * d + r]) return false;
                }
    return true;
}

bool binary_coassoc(int d, const Vec& c2) {
    auto at = [&](int a, int i, int j) -> const Scalar& { return c2[(std::size_t(a) * d + i) * d + j]; };
    for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    Scalar l = 0, r = 0;
                    for (int s = 0; s < d; ++s) {
                        l += at(a, s, k) * at(s, i, j);
                        r += at(a, i, s) * at(s, j, k);
                    }
                    if (l != r) return false;
                }
    return true;
}

// (id (x) D2) D2 matches delta3.
bool delta_factors(int d, const Vec& c2, const Vec& c3) {
    for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    Scalar v = 0;
                    for (int s = 0; s < d; ++s) v += c2[(std::size_t(a) * d + i) * d + s] * c2[(std::size_t(s) * d + j) * d + k];
                    if (v != c3[((std::size_t(a) * d + i) * d + j) * d + k]) return false;
                }
    return true;
}

std::string search_factor(const TernaryHopf& h, const Vec& declared, const Vec& target,
                          bool (*lawful)(int, const Vec&), bool (*factors)(int, const Vec&, const Vec&)) {
    const int d = h.dim;
    if (target.empty()) return "absent";
    if (!declared.empty() && lawful(d, declared) && factors(d, declared, target)) return "declared";
    // Over Q only coefficients in {-1, 0, 1} are tried.
    const int alphabet = h.p ? h.p : 3;
    const int shift = h.p ? 0 : -1;
    const int n = int(ipow(d, 3));
    const double cost = fpow(alphabet, n) * fpow(d, 5);
    if (cost > double(scan_config().budget)) return "not found within budget";
    std::vector<int> digits(n, 0);
    Vec cand(n, in(h.p, 0));
    for (std::uint64_t i = 0; i < std::uint64_t(fpow(alphabet, n)); ++i) {
        for (int t = 0; t < n; ++t) cand[t] = in(h.p, digits[t] + shift);
        if (factors(d, cand, target) && lawful(d, cand)) return "found";
        for (int t = n - 1; t >= 0; --t) {
            if (++digits[t] < alphabet) break;
            digits[t] = 0;
        }
    }
    if (!h.p) return "not found within budget";
    return "none";
}

} // namespace

Derivedness classify_derived(const TernaryHopf& h) {
    return {search_factor(h, h.mu2, h.mu3, binary_assoc, mu_factors),
            search_factor(h, h.delta2, h.delta3, binary_coassoc, delta_factors)};
}

// ---- Nambu structure ----

namespace {

Scalar mu_at(const TernaryHopf& h, int a, int b, int c, int r) {
    const int d = h.dim;
    return h.mu3[((std::size_t(a) * d + b) * d + c) * d + r];
}

Scalar sigma_plus(const TernaryHopf& h, int a, int b, int c, int r) {
    return mu_at(h, a, b, c, r) + mu_at(h, b, c, a, r) + mu_at(h, c, a, b, r);
}

Scalar sigma_minus(const TernaryHopf& h, int a, int b, int c, int r) {
    return mu_at(h, b, a, c, r) + mu_at(h, c, b, a, r) + mu_at(h, a, c, b, r);
}

} // namespace

Vec nambu_bracket(const TernaryHopf& h) {
    if (h.mu3.empty()) throw DomainError("no ternary product (mu3) given");
    const int d = h.dim;
    Vec out = zeros(h.p, ipow(d, 4));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r)
                    out[((std::size_t(a) * d + b) * d + c) * d + r] = sigma_plus(h, a, b, c, r) - sigma_minus(h, a, b, c, r);
    return out;
}

HopfCheck check_abelian(const TernaryHopf& h) {
    const Vec n = nambu_bracket(h);
    const int d = h.dim;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (!n[i].is_zero()) {
            const std::size_t t = i / d;
            return {"abelian", false, join({int(t / (d * d)), int(t / d % d), int(t % d)})};
        }
    return {"abelian", true, ""};
}

HopfCheck check_q_deformed(const TernaryHopf& h, const Scalar& q) {
    if (h.mu3.empty()) throw DomainError("no ternary product (mu3) given");
    const int d = h.dim;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r)
                    if (sigma_plus(h, a, b, c, r) != q * sigma_minus(h, a, b, c, r))
                        return {"q-deformed abelian", false, join({a, b, c})};
    return {"q-deformed abelian", true, ""};
}

HopfCheck check_omega_identity(const TernaryHopf& h) {
    const SparseProduct sp(h);
    const int d = h.dim;
    const std::vector<std::vector<int>> plus = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::vector<int>> minus = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Vec abc = tensor(h, tensor(h, h.basis(a), h.basis(b)), h.basis(c));
                for (int sign = 0; sign < 2; ++sign) {
                    Vec w = zeros(h.p, abc.size());
                    for (const auto& p : sign ? minus : plus) w = add(w, permute_factors(h, abc, p));
                    const Vec lhs = contract3(h, sp, w);
                    for (int r = 0; r < d; ++r) {
                        const Scalar rhs = sign ? sigma_minus(h, a, b, c, r) : sigma_plus(h, a, b, c, r);
                        if (lhs[r] != rhs) return {"omega identity", false, join({a, b, c})};
                    }
                }
            }
    return {"omega identity", true, ""};
}

bool q_relation(const TernaryHopf& h, int k, const Vec& a, const Vec& b, const Vec& c, const Scalar& q) {
    const SparseProduct sp(h);
    auto m = [&](const Vec& x, const Vec& y, const Vec& z) { return mul3_sp(h, sp, k, x, y, z); };
    const Vec plus = add(add(m(a, b, c), m(b, c, a)), m(c, a, b));
    const Vec minus = add(add(m(b, a, c), m(c, b, a)), m(a, c, b));
    return vec_eq(plus, scale(q, minus));
}

// ---- quasifiveangular structure ----

Vec place_r(const TernaryHopf& h, const Vec& r, int a, int b, int c) {
    if (h.unit.empty()) throw DomainError("placing R needs a unit");
    const int d = h.dim;
    if (r.size() != ipow(d, 3)) throw DomainError("R must have dim^3 coefficients");
    const int pos[3] = {a - 1, b - 1, c - 1};
    std::vector<int> others;
    for (int t = 0; t < 5; ++t)
        if (t != pos[0] && t != pos[1] && t != pos[2]) others.push_back(t);
    if (others.size() != 2) throw DomainError("R positions must be distinct and in 1..5");
    Vec out = zeros(h.p, ipow(d, 5));
    int digit[5];
    for (std::size_t ijk = 0; ijk < r.size(); ++ijk) {
        if (r[ijk].is_zero()) continue;
        digit[pos[0]] = int(ijk / (d * d));
        digit[pos[1]] = int(ijk / d % d);
        digit[pos[2]] = int(ijk % d);
        for (int u = 0; u < d; ++u) {
            if (h.unit[u].is_zero()) continue;
            for (int v = 0; v < d; ++v) {
                if (h.unit[v].is_zero()) continue;
                digit[others[0]] = u;
                digit[others[1]] = v;
                std::size_t o = 0;
                for (int t = 0; t < 5; ++t) o = o * d + digit[t];
                out[o] += r[ijk] * h.unit[u] * h.unit[v];
            }
        }
    }
    return out;
}

YbeResidual check_quasifiveangular(const TernaryHopf& h, const Vec& r) {
    require_coproduct(h);
    require_budget(fpow(h.dim, 15) * 4, "quasifiveangular check");
    auto R = [&](int a, int b, int c) { return place_r(h, r, a, b, c); };
    const SparseProduct sp(h);
    auto prod = [&](const Vec& x, const Vec& y, const Vec& z) { return mul3_sp(h, sp, 5, x, y, z); };
    YbeResidual out;
    out.r1 = residual(h, apply_coproduct_at(h, r, 3, 0), prod(R(1, 4, 5), R(2, 4, 5), R(3, 4, 5)));
    out.r2 = residual(h, apply_coproduct_at(h, r, 3, 1), prod(R(1, 2, 5), R(1, 4, 5), R(1, 3, 5)));
    out.r3 = residual(h, apply_coproduct_at(h, r, 3, 2), prod(R(1, 2, 5), R(1, 2, 4), R(1, 2, 3)));
    out.r5 = check_ternary_ybe(h, r);
    return out;
}

double check_ternary_ybe(const TernaryHopf& h, const Vec& r) {
    require_budget(fpow(h.dim, 15) * 2, "ternary Yang-Baxter check");
    auto R = [&](int a, int b, int c) { return place_r(h, r, a, b, c); };
    const SparseProduct sp(h);
    auto prod = [&](const Vec& x, const Vec& y, const Vec& z) { return mul3_sp(h, sp, 5, x, y, z); };
    const Vec lhs = prod(prod(R(2, 4, 3), R(3, 4, 2), R(1, 2, 5)), R(1, 4, 5), R(1, 3, 5));
    const Vec rhs = prod(prod(R(1, 2, 3), R(1, 3, 2), R(1, 4, 5)), R(2, 4, 5), R(3, 4, 5));
    return residual(h, lhs, rhs);
}

SlnReport sl_n_ternary_coproduct(const Matrix& a) {
    const int n = a.rows();
    if (n < 1 || a.cols() != n) throw DomainError("sl_n check needs a square matrix");
    const Matrix inv = a.inverse();
    const Matrix id = Matrix::identity(n, a(0, 0).prime());
    // sum_{k,l} x^i_k y^k_l z^l_j
    auto contract = [&](const Matrix& x, const Matrix& y, const Matrix& z) {
        Matrix out(n, n, a(0, 0) - a(0, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) out(i, j) += x(i, k) * y(k, l) * z(l, j);
        return out;
    };
    SlnReport rep;
    rep.contraction[0] = contract(inv, a, a) == a;
    rep.contraction[1] = contract(a, inv, a) == a;
    rep.contraction[2] = contract(a, a, inv) == a;
    rep.counit = contract(id, id, a) == a && contract(id, a, id) == a && contract(a, id, id) == a;
    // Index triples of D3(a^i_j) against (id (x) D2) D2 and (D2 (x) id) D2.
    using Term = std::array<int, 6>;
    rep.derived = true;
    for (int i = 0; i < n && rep.derived; ++i)
        for (int j = 0; j < n && rep.derived; ++j) {
            std::multiset<Term> direct, right, left;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) direct.insert({i, k, k, l, l, j});
            for (int k = 0; k < n; ++k) // D2(a^i_j) = a^i_k (x) a^k_j
                for (int l = 0; l < n; ++l) {
                    right.insert({i, k, k, l, l, j}); // split a^k_j
                    left.insert({i, l, l, k, k, j});  // split a^i_k
                }
            rep.derived = direct == right && direct == left;
        }
    return rep;
}

TernaryHopf tensor_cube(const TernaryHopf& a, const TernaryHopf& b, const TernaryHopf& c) {
    if (a.p != b.p || b.p != c.p) throw DomainError("tensor factors over different fields");
    if (a.mu3.empty() || b.mu3.empty() || c.mu3.empty()) throw DomainError("tensor factors need mu3");
    TernaryHopf t;
    t.p = a.p;
    t.dim = a.dim * b.dim * c.dim;
    require_budget(fpow(t.dim, 4), "tensor cube");
    const TernaryHopf* f[3] = {&a, &b, &c};
    const int dims[3] = {a.dim, b.dim, c.dim};
    auto split = [&](int x, int out[3]) {
        out[2] = x % dims[2];
        out[1] = x / dims[2] % dims[1];
        out[0] = x / dims[2] / dims[1];
    };
    t.mu3 = zeros(t.p, ipow(t.dim, 4));
    const int D = t.dim;
    for (int x = 0; x < D; ++x)
        for (int y = 0; y < D; ++y)
            for (int z = 0; z < D; ++z)
                for (int r = 0; r < D; ++r) {
                    int xs[3], ys[3], zs[3], rs[3];
                    split(x, xs);
                    split(y, ys);
                    split(z, zs);
                    split(r, rs);
                    Scalar v = t.p ? in(t.p, 1) : Scalar(1);
                    for (int q = 0; q < 3 && !v.is_zero(); ++q) v *= mu_at(*f[q], xs[q], ys[q], zs[q], rs[q]);
                    t.mu3[((std::size_t(x) * D + y) * D + z) * D + r] = v;
                }
    if (!a.unit.empty() && !b.unit.empty() && !c.unit.empty()) {
        TernaryHopf tmp = a;
        t.unit = tensor(tmp, tensor(tmp, a.unit, b.unit), c.unit);
    }
    t.validate();
    return t;
}

// ---- fixtures ----

namespace hopf_fixtures {

namespace {

std::vector<std::string> system_labels(const System& g) {
    if (!g.carrier().labels.empty()) return g.carrier().labels;
    std::vector<std::string> out;
    for (int i = 0; i < g.size(); ++i) out.push_back(std::to_string(i));
    return out;
}

} // namespace

TernaryHopf group_algebra(const System& g, int p) {
    if (g.arity() != 3) throw DomainError("k(G) needs a ternary group");
    const QuerTable qt(g);
    const int d = g.size();
    TernaryHopf h;
    h.dim = d;
    h.p = p;
    h.labels = system_labels(g);
    h.mu3 = zeros(p, ipow(d, 4));
    h.delta3 = zeros(p, ipow(d, 4));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Elem r = g({Elem(a), Elem(b), Elem(c)});
                h.mu3[((std::size_t(a) * d + b) * d + c) * d + r] = in(p, 1);
            }
    for (int a = 0; a < d; ++a) h.delta3[((std::size_t(a) * d + a) * d + a) * d + a] = in(p, 1);
    h.eps.assign(d, in(p, 1));
    Matrix s(d, d, in(p, 0));
    for (int a = 0; a < d; ++a) s(int(qt[Elem(a)]), a) = in(p, 1);
    h.S = s;
    for (int e = 0; e < d; ++e)
        if (is_strong_unit(h, h.basis(e))) {
            h.unit = h.basis(e);
            break;
        }
    h.validate();
    return h;
}

TernaryHopf function_algebra(const System& g, FunctionCounit counit, Elem at, Elem at2, int p) {
    if (g.arity() != 3) throw DomainError("F(G) needs a ternary group");
    const QuerTable qt(g);
    const int d = g.size();
    if (int(at) >= d || int(at2) >= d) throw DomainError("counit point outside the carrier");
    TernaryHopf h;
    h.dim = d;
    h.p = p;
    h.labels = system_labels(g);
    for (auto& l : h.labels) l = "d" + l;
    h.mu3 = zeros(p, ipow(d, 4));
    h.delta3 = zeros(p, ipow(d, 4));
    for (int a = 0; a < d; ++a) h.mu3[((std::size_t(a) * d + a) * d + a) * d + a] = in(p, 1);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Elem a = g({Elem(x), Elem(y), Elem(z)});
                h.delta3[((std::size_t(a) * d + x) * d + y) * d + z] += in(p, 1);
            }
    Matrix s(d, d, in(p, 0));
    for (int r = 0; r < d; ++r) s(r, int(qt[Elem(r)])) = in(p, 1);
    h.S = s;
    h.eps = h.basis(int(at));
    if (counit == FunctionCounit::Sequential) h.eps2 = h.basis(int(at2));
    h.unit.assign(d, in(p, 1));
    h.validate();
    return h;
}

TernaryHopf derived_from_binary(int dim, const Vec& mu2, const Vec& delta2, const Vec& eps, const Vec& unit, int p) {
    const int d = dim;
    TernaryHopf h;
    h.dim = d;
    h.p = p;
    auto conv = [&](const Vec& v) {
        Vec out;
        for (const auto& s : v) out.push_back(p ? s.in_field(p) : s);
        return out;
    };
    h.mu2 = conv(mu2);
    h.delta2 = conv(delta2);
    h.eps = conv(eps);
    h.unit = conv(unit);
    if (!h.mu2.empty()) {
        if (h.mu2.size() != ipow(d, 3)) throw DomainError("mu2 needs dim^3 coefficients");
        h.mu3 = zeros(p, ipow(d, 4));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int r = 0; r < d; ++r) {
                        Scalar v = in(p, 0);
                        for (int s = 0; s < d; ++s)
                            v += h.mu2[(std::size_t(a) * d + b) * d + s] * h.mu2[(std::size_t(s) * d + c) * d + r];
                        h.mu3[((std::size_t(a) * d + b) * d + c) * d + r] = v;
                    }
    }
    if (!h.delta2.empty()) {
        if (h.delta2.size() != ipow(d, 3)) throw DomainError("delta2 needs dim^3 coefficients");
        h.delta3 = zeros(p, ipow(d, 4));
        for (int a = 0; a < d; ++a)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) {
                        Scalar v = in(p, 0);
                        for (int s = 0; s < d; ++s)
                            v += h.delta2[(std::size_t(a) * d + i) * d + s] * h.delta2[(std::size_t(s) * d + j) * d + k];
                        h.delta3[((std::size_t(a) * d + i) * d + j) * d + k] = v;
                    }
    }
    h.validate();
    return h;
}

namespace {

// Structure constants from (a, b) -> list of (coefficient, result).
Vec table2(int d, const std::vector<std::vector<std::vector<std::pair<int, int>>>>& t) {
    Vec out(ipow(d, 3), Scalar(0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (const auto& [coef, r] : t[a][b]) out[(std::size_t(a) * d + b) * d + r] += Scalar(coef);
    return out;
}

} // namespace

TernaryHopf sweedler(int p) {
    enum { One, X, Y, XY };
    const std::vector<std::vector<std::vector<std::pair<int, int>>>> mul = {
        {{{1, One}}, {{1, X}}, {{1, Y}}, {{1, XY}}},
        {{{1, X}}, {{1, One}}, {{1, XY}}, {{1, Y}}},
        {{{1, Y}}, {{-1, XY}}, {}, {}},
        {{{1, XY}}, {{-1, Y}}, {}, {}},
    };
    Vec delta2(64, Scalar(0));
    auto put = [&](int a, int i, int j, int c) { delta2[(a * 4 + i) * 4 + j] += Scalar(c); };
    put(One, One, One, 1);
    put(X, X, X, 1);
    put(Y, Y, X, 1);
    put(Y, One, Y, 1);
    put(XY, XY, One, 1);
    put(XY, X, XY, 1);
    TernaryHopf h = derived_from_binary(4, table2(4, mul), delta2, {1, 1, 0, 0}, {1, 0, 0, 0}, p);
    h.labels = {"1", "x", "y", "xy"};
    return h;
}

TernaryHopf matrix_m2(int p) {
    // E_ij E_kl = delta_jk E_il with E_ij at index 2i + j (0-based).
    std::vector<std::vector<std::vector<std::pair<int, int>>>> mul(4, std::vector<std::vector<std::pair<int, int>>>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a % 2 == b / 2) mul[a][b] = {{1, (a / 2) * 2 + b % 2}};
    TernaryHopf h = derived_from_binary(4, table2(4, mul), {}, {}, {1, 0, 0, 1}, p);
    h.labels = {"E11", "E12", "E21", "E22"};
    return h;
}

TernaryHopf antidiagonal(int p) {
    TernaryHopf h;
    h.dim = 2;
    h.p = p;
    h.labels = {"E12", "E21"};
    h.mu3 = zeros(p, 16);
    h.mu3[((0 * 2 + 1) * 2 + 0) * 2 + 0] = in(p, 1); // E12 E21 E12 = E12
    h.mu3[((1 * 2 + 0) * 2 + 1) * 2 + 1] = in(p, 1); // E21 E12 E21 = E21
    h.validate();
    return h;
}

TernaryHopf dual_numbers(int p) {
    const std::vector<std::vector<std::vector<std::pair<int, int>>>> mul = {
        {{{1, 0}}, {{1, 1}}},
        {{{1, 1}}, {}},
    };
    TernaryHopf h = derived_from_binary(2, table2(2, mul), {}, {}, {1, 0}, p);
    h.labels = {"1", "t"};
    return h;
}

TernaryHopf exx_coalgebra(int p) {
    enum { E1, E2, X };
    TernaryHopf h;
    h.dim = 3;
    h.p = p;
    h.labels = {"e1", "e2", "x"};
    h.delta3 = zeros(p, 81);
    auto put = [&](int a, int i, int j, int k) { h.delta3[((a * 3 + i) * 3 + j) * 3 + k] += in(p, 1); };
    put(E1, E1, E1, E1);
    put(E2, E2, E2, E2);
    put(X, X, E1, E2);
    put(X, E2, X, E1);
    put(X, E1, E2, X);
    h.validate();
    return h;
}

TernaryHopf z2_group_algebra(int p) {
    const System z2 = System::tabulate(2, 3, [](const Elem* x) { return Elem((x[0] + x[1] + x[2]) % 2); });
    return group_algebra(z2, p);
}

} // namespace hopf_fixtures

HopfReport exx_product_check(int p) {
    const TernaryHopf h = hopf_fixtures::matrix_m2(p);
    const Vec e1 = h.basis(0), e2 = h.basis(3);
    auto prim = [&](const Vec& x) {
        return add(add(tensor(h, tensor(h, x, e1), e2), tensor(h, tensor(h, e2, x), e1)), tensor(h, tensor(h, e1, e2), x));
    };
    const SparseProduct sp(h);
    HopfReport rep;
    rep.push_back({"semiorthogonal [e1e1e2]", is_zero_vec(mul3_sp(h, sp, 1, e1, e1, e2)), ""});
    rep.push_back({"semiorthogonal [e2e2e1]", is_zero_vec(mul3_sp(h, sp, 1, e2, e2, e1)), ""});
    HopfCheck c{"primitive coproduct respects products", true, ""};
    for (int a = 0; a < 4 && c.ok; ++a)
        for (int b = 0; b < 4 && c.ok; ++b)
            for (int d = 0; d < 4 && c.ok; ++d) {
                const Vec lhs = prim(mul3_sp(h, sp, 1, h.basis(a), h.basis(b), h.basis(d)));
                const Vec rhs = mul3_sp(h, sp, 3, prim(h.basis(a)), prim(h.basis(b)), prim(h.basis(d)));
                if (!vec_eq(lhs, rhs)) {
                    c.ok = false;
                    c.detail = join({a, b, d});
                }
            }
    rep.push_back(c);
    return rep;
}

HopfReport woronowicz_check(const TernaryHopf& h, int x, int e, int y, const Scalar& q) {
    require_coproduct(h);
    HopfReport rep;
    rep.push_back({"q-relation in H", q_relation(h, 1, h.basis(x), h.basis(e), h.basis(y), q), ""});
    rep.push_back({"q-relation on coproducts",
                   q_relation(h, 3, coproduct(h, h.basis(x)), coproduct(h, h.basis(e)), coproduct(h, h.basis(y)), q), ""});
    rep.push_back(check_bialgebra(h));
    return rep;
}

Vec random_r(int dim, int p, std::uint64_t seed) {
    if (!is_prime(p)) throw DomainError("random R needs a prime field");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, p - 1);
    Vec out(ipow(dim, 3));
    for (auto& s : out) s = Scalar::mod(pick(rng), p);
    return out;
}

} // namespace polyadika
