#include "polyadika/core.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "polyadika/config.hpp"
#include "polyadika/error.hpp"
#include "polyadika/textio.hpp"

namespace polyadika {

void Carrier::validate() const {
    if (size < 1) throw DomainError("carrier size must be at least 1");
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != size)
            throw FormatError("expected " + std::to_string(size) + " labels, got " +
                              std::to_string(labels.size()));
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != size) throw FormatError("labels are not distinct");
    }
}

std::string Carrier::label(Elem e) const {
    if (!labels.empty() && e < labels.size()) return labels[e];
    return std::to_string(e);
}

std::uint64_t tuple_count(int m, int len) {
    std::uint64_t r = 1;
    for (int i = 0; i < len; ++i) {
        if (r > (std::uint64_t(1) << 62) / std::uint64_t(m))
            throw BudgetExceeded("tuple space " + std::to_string(m) + "^" + std::to_string(len) +
                                 " is too large");
        r *= std::uint64_t(m);
    }
    return r;
}

std::uint64_t encode_tuple(const Elem* t, int len, int m) {
    std::uint64_t r = 0;
    for (int i = 0; i < len; ++i) r = r * std::uint64_t(m) + t[i];
    return r;
}

void decode_tuple(std::uint64_t idx, Elem* out, int len, int m) {
    for (int i = len - 1; i >= 0; --i) {
        out[i] = static_cast<Elem>(idx % std::uint64_t(m));
        idx /= std::uint64_t(m);
    }
}

bool next_tuple(Elem* t, int len, int m) {
    for (int i = len - 1; i >= 0; --i) {
        if (++t[i] < Elem(m)) return true;
        t[i] = 0;
    }
    return false;
}

Operation::Operation(Carrier carrier, int arity, std::vector<Elem> table)
    : carrier_(std::move(carrier)), arity_(arity), table_(std::move(table)) {
    carrier_.validate();
    if (arity_ < 0) throw DomainError("arity must be non-negative");
    const std::uint64_t expect = tuple_count(carrier_.size, arity_);
    if (table_.size() != expect)
        throw FormatError("expected " + std::to_string(expect) + " entries, got " +
                          std::to_string(table_.size()));
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] >= Elem(carrier_.size))
            throw FormatError("entry " + std::to_string(i) + " = " + std::to_string(table_[i]) +
                              " is outside [0, " + std::to_string(carrier_.size) + ")");
}

Operation Operation::tabulate(int m, int arity, const std::function<Elem(const Elem*)>& f) {
    const std::uint64_t total = tuple_count(m, arity);
    require_budget(double(total), "tabulate");
    std::vector<Elem> table(total);
    std::vector<Elem> t(arity, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        table[i] = f(t.data());
        next_tuple(t.data(), arity, m);
    }
    return Operation(Carrier{m, {}}, arity, std::move(table));
}

void Operation::set_labels(std::vector<std::string> labels) {
    Carrier c = carrier_;
    c.labels = std::move(labels);
    c.validate();
    carrier_ = std::move(c);
}

Elem Operation::evaluate(std::span<const Elem> polyad) const {
    if (static_cast<int>(polyad.size()) != arity_)
        throw DomainError("polyad length " + std::to_string(polyad.size()) + " does not match arity " +
                          std::to_string(arity_));
    for (Elem e : polyad)
        if (e >= Elem(carrier_.size)) throw DomainError("element " + std::to_string(e) + " out of range");
    return (*this)(polyad.data());
}

System::System(Operation op) : Operation(std::move(op)) {
    if (arity_ < 2) throw DomainError("a polyadic system needs arity at least 2");
}

System::System(Carrier carrier, int arity, std::vector<Elem> table)
    : System(Operation(std::move(carrier), arity, std::move(table))) {}

System System::tabulate(int m, int arity, const std::function<Elem(const Elem*)>& f) {
    return System(Operation::tabulate(m, arity, f));
}

// ---- placement trees ----

int Tree::leaves() const {
    if (leaf()) return 1;
    int r = 0;
    for (const auto& c : children) r += c.leaves();
    return r;
}

int Tree::internal_nodes() const {
    if (leaf()) return 0;
    int r = 1;
    for (const auto& c : children) r += c.internal_nodes();
    return r;
}

namespace {

Tree parse_tree(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',')) ++pos;
    if (pos >= s.size()) throw FormatError("tree: unexpected end");
    char c = s[pos];
    if (c == 'x' || c == '.' || c == '*') {
        ++pos;
        return Tree{};
    }
    if (c != '[') throw FormatError(std::string("tree: unexpected '") + c + "'");
    ++pos;
    Tree t;
    for (;;) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',')) ++pos;
        if (pos >= s.size()) throw FormatError("tree: missing ']'");
        if (s[pos] == ']') {
            ++pos;
            break;
        }
        t.children.push_back(parse_tree(s, pos));
    }
    if (t.children.empty()) throw FormatError("tree: empty node");
    return t;
}

Elem eval_tree(const System& sys, const Tree& t, const Elem*& next) {
    if (t.leaf()) return *next++;
    Elem args[64];
    if (static_cast<int>(t.children.size()) != sys.arity() || t.children.size() > 64)
        throw DomainError("tree node has " + std::to_string(t.children.size()) + " children, arity is " +
                          std::to_string(sys.arity()));
    for (std::size_t i = 0; i < t.children.size(); ++i) args[i] = eval_tree(sys, t.children[i], next);
    return sys(args);
}

void check_tree_arity(const Tree& t, int n) {
    if (t.leaf()) return;
    if (static_cast<int>(t.children.size()) != n)
        throw DomainError("tree node has " + std::to_string(t.children.size()) + " children, expected " +
                          std::to_string(n));
    for (const auto& c : t.children) check_tree_arity(c, n);
}

} // namespace

Tree Tree::parse(const std::string& text) {
    std::size_t pos = 0;
    Tree t = parse_tree(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) throw FormatError("tree: trailing characters");
    return t;
}

std::string Tree::str() const {
    if (leaf()) return "x";
    std::string r = "[";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) r += ' ';
        r += children[i].str();
    }
    return r + "]";
}

Tree left_nested(int n, int lmu) {
    Tree t;
    for (int i = 0; i < lmu; ++i) {
        Tree node;
        node.children.push_back(i == 0 ? Tree{} : t);
        for (int j = 1; j < n; ++j) node.children.push_back(Tree{});
        t = std::move(node);
    }
    return t;
}

Tree right_nested(int n, int lmu) {
    Tree t;
    for (int i = 0; i < lmu; ++i) {
        Tree node;
        for (int j = 1; j < n; ++j) node.children.push_back(Tree{});
        node.children.push_back(i == 0 ? Tree{} : t);
        t = std::move(node);
    }
    return t;
}

namespace {

// Distribute `count` internal nodes over `slots` children.
void forests(int n, int slots, int count, std::vector<std::vector<Tree>>& out);

std::vector<Tree> trees_with(int n, int internal) {
    if (internal == 0) return {Tree{}};
    std::vector<std::vector<Tree>> fs;
    forests(n, n, internal - 1, fs);
    std::vector<Tree> r;
    for (auto& f : fs) r.push_back(Tree{std::move(f)});
    return r;
}

void forests(int n, int slots, int count, std::vector<std::vector<Tree>>& out) {
    if (slots == 0) {
        if (count == 0) out.push_back({});
        return;
    }
    for (int first = 0; first <= count; ++first) {
        auto heads = trees_with(n, first);
        std::vector<std::vector<Tree>> tails;
        forests(n, slots - 1, count - first, tails);
        for (const auto& h : heads)
            for (const auto& t : tails) {
                std::vector<Tree> f{h};
                f.insert(f.end(), t.begin(), t.end());
                out.push_back(std::move(f));
            }
    }
}

} // namespace

std::vector<Tree> all_trees(int n, int lmu) {
    if (n < 2 || lmu < 1) throw DomainError("all_trees needs n >= 2 and lmu >= 1");
    return trees_with(n, lmu);
}

Elem evaluate_iterated(const System& sys, std::span<const Elem> polyad, const Tree& tree) {
    check_tree_arity(tree, sys.arity());
    const int lmu = tree.internal_nodes();
    const std::size_t expect = std::size_t(lmu) * (sys.arity() - 1) + 1;
    if (polyad.size() != expect)
        throw DomainError("long product needs " + std::to_string(expect) + " arguments, got " +
                          std::to_string(polyad.size()));
    for (Elem e : polyad)
        if (e >= Elem(sys.size())) throw DomainError("element out of range");
    const Elem* next = polyad.data();
    return eval_tree(sys, tree, next);
}

Elem evaluate_iterated(const System& sys, std::span<const Elem> polyad, Nesting nesting) {
    const int n = sys.arity();
    if (polyad.empty() || (polyad.size() - 1) % std::size_t(n - 1) != 0)
        throw DomainError("long product length must be lmu(n-1)+1, got " + std::to_string(polyad.size()));
    const int lmu = static_cast<int>((polyad.size() - 1) / std::size_t(n - 1));
    if (lmu == 0) return polyad[0];
    return evaluate_iterated(sys, polyad, nesting == Nesting::Left ? left_nested(n, lmu) : right_nested(n, lmu));
}

// ---- text format ----

namespace textio {

std::vector<std::vector<std::string>> lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

long long to_int(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw FormatError("");
        return v;
    } catch (const std::exception&) {
        throw FormatError(what + ": '" + tok + "' is not an integer");
    }
}

long long keyed_int(const std::vector<std::string>& line, const std::string& key) {
    if (line.size() != 2 || line[0] != key) throw FormatError("expected '" + key + " <int>'");
    return to_int(line[1], key);
}

} // namespace textio

Operation load_operation(const std::string& text) {
    auto ls = textio::lines(text);
    if (ls.empty() || ls[0].size() != 2 || ls[0][0] != "polyop") throw FormatError("missing 'polyop 1' header");
    if (ls[0][1] != "1") throw FormatError("unsupported polyop version " + ls[0][1]);
    if (ls.size() < 3) throw FormatError("missing arity/size lines");
    const long long n = textio::keyed_int(ls[1], "arity");
    const long long m = textio::keyed_int(ls[2], "size");
    if (n < 0 || n > 64) throw FormatError("arity out of range");
    if (m < 1 || m > 1000000) throw FormatError("size out of range");
    std::size_t at = 3;
    Carrier carrier{static_cast<int>(m), {}};
    if (at < ls.size() && ls[at][0] == "labels") {
        carrier.labels.assign(ls[at].begin() + 1, ls[at].end());
        ++at;
    }
    const std::uint64_t expect = tuple_count(int(m), int(n));
    require_budget(double(expect), "load table");
    std::vector<Elem> table;
    table.reserve(expect);
    for (; at < ls.size(); ++at)
        for (const auto& tok : ls[at]) {
            long long v = textio::to_int(tok, "table entry");
            if (v < 0 || v >= m)
                throw FormatError("entry " + std::to_string(table.size()) + " = " + tok + " is outside [0, " +
                                  std::to_string(m) + ")");
            table.push_back(static_cast<Elem>(v));
        }
    if (table.size() != expect)
        throw FormatError("expected " + std::to_string(expect) + " entries, got " + std::to_string(table.size()));
    return Operation(std::move(carrier), int(n), std::move(table));
}

System load_system(const std::string& text) { return System(load_operation(text)); }

std::string save_operation(const Operation& op) {
    std::ostringstream os;
    os << "polyop 1\narity " << op.arity() << "\nsize " << op.size() << "\n";
    if (!op.carrier().labels.empty()) {
        os << "labels";
        for (const auto& l : op.carrier().labels) os << ' ' << l;
        os << "\n";
    }
    const auto& t = op.table();
    const std::size_t row = op.arity() == 0 ? 1 : std::size_t(op.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << t[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

} // namespace polyadika
