#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace polyadika {

using Elem = std::uint32_t;
using Tuple = std::vector<Elem>;

struct Carrier {
    int size = 1;
    std::vector<std::string> labels; // empty, or exactly `size` distinct names

    void validate() const;
    std::string label(Elem e) const;
    bool operator==(const Carrier&) const = default;
};

// Number of tuples of length `len` over an m-element carrier. Throws
// BudgetExceeded if it does not fit in 62 bits.
std::uint64_t tuple_count(int m, int len);
// Lexicographic rank, first coordinate most significant.
std::uint64_t encode_tuple(const Elem* t, int len, int m);
void decode_tuple(std::uint64_t idx, Elem* out, int len, int m);
// Odometer step in lexicographic order; false after the last tuple.
bool next_tuple(Elem* t, int len, int m);

// n-ary operation on a finite carrier as a dense Cayley table.
// Arity 0 stores one entry: the distinguished constant.
class Operation {
public:
    Operation() = default;
    Operation(Carrier carrier, int arity, std::vector<Elem> table);

    static Operation tabulate(int m, int arity, const std::function<Elem(const Elem*)>& f);

    int arity() const { return arity_; }
    int size() const { return carrier_.size; }
    const Carrier& carrier() const { return carrier_; }
    const std::vector<Elem>& table() const { return table_; }
    void set_labels(std::vector<std::string> labels);

    // Unchecked fast path; `args` must hold arity() valid elements.
    Elem operator()(const Elem* args) const { return table_[encode_tuple(args, arity_, carrier_.size)]; }
    Elem operator()(std::initializer_list<Elem> args) const { return (*this)(args.begin()); }
    // Checked evaluation.
    Elem evaluate(std::span<const Elem> polyad) const;

    bool operator==(const Operation&) const = default;

protected:
    Carrier carrier_;
    int arity_ = 0;
    std::vector<Elem> table_;
};

// The chief operation of a polyadic system; arity at least 2.
class System : public Operation {
public:
    System() = default;
    explicit System(Operation op);
    System(Carrier carrier, int arity, std::vector<Elem> table);
    static System tabulate(int m, int arity, const std::function<Elem(const Elem*)>& f);
};

// Placement tree for long products. A leaf consumes the next argument; an
// internal node applies the operation to its children (exactly n of them).
struct Tree {
    std::vector<Tree> children;

    bool leaf() const { return children.empty(); }
    int leaves() const;
    int internal_nodes() const;
    // "x" is a leaf, "[a b c]" a node, e.g. "[x x [x x x]]".
    static Tree parse(const std::string& text);
    std::string str() const;
    bool operator==(const Tree&) const = default;
};

Tree left_nested(int n, int lmu);
Tree right_nested(int n, int lmu);
// Every placement of lmu n-ary multiplications over lmu(n-1)+1 arguments.
std::vector<Tree> all_trees(int n, int lmu);

enum class Nesting { Left, Right };

Elem evaluate_iterated(const System& sys, std::span<const Elem> polyad, const Tree& tree);
Elem evaluate_iterated(const System& sys, std::span<const Elem> polyad, Nesting nesting = Nesting::Right);

// Text format: "polyop 1", "arity n", "size m", optional "labels ...", then
// m^n entries. '#' starts a comment.
Operation load_operation(const std::string& text);
System load_system(const std::string& text);
std::string save_operation(const Operation& op);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace polyadika
