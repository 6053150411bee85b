#pragma once

#include <string>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/morphisms.hpp"

namespace polyadika {

// One consumed variable: `place` (1..k) of the argument block `column` (1..n').
struct Cell {
    int place = 1;
    int column = 1;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell& o) const {
        if (column != o.column) return column <=> o.column;
        return place <=> o.place;
    }
};

struct Quiver {
    int n = 0, n_prime = 0, k = 0, lmu = 0, lid = 0;
    std::vector<std::vector<Cell>> rows; // lmu rows of n cells
    std::vector<Cell> intact;            // lid cells

    // Throws DomainError on a coverage or count violation.
    void validate() const;
    // Letters g h u v w ... name places 1..k, digits the column:
    // "g1 h2 g3 | h1 g2 h3", intact cells after ';'.
    std::string compact() const;
    static Quiver parse_compact(const std::string& text);
    bool operator==(const Quiver&) const = default;
};

// "polyqvr 1", "n N nprime M k K lmu L lid I", one line of place:column
// cells per row, then "intact:" followed by the intact cells.
Quiver load_quiver(const std::string& text);
std::string save_quiver(const Quiver& q);

// Named arrangements. Throws DomainError on an unknown name.
Quiver named_quiver(const std::string& name);
std::vector<std::string> named_quivers();

// The n'-ary operation on k-tuples (encoded lexicographically) whose row
// outputs come first, then the intact cells.
System induced_tuple_operation(const Quiver& q, const System& sys);

HeteroShape quiver_to_shape(const Quiver& q);

struct WordCheck {
    bool ok = true;
    int placement = 0; // inner product position that disagrees with position 0
    int component = 0;
};

// Associativity of the induced operation over the free n-ary semigroup, with
// the operation read as concatenation. Passing means every associative
// source gives an associative induced operation.
WordCheck free_word_check(const Quiver& q);

struct NamedSystem {
    std::string name;
    System system;
};

// Derived sums on Z2, Z3, Z4 at arity n, plus the shifted Z4 ternary group
// when n = 3.
std::vector<NamedSystem> standard_test_set(int n);

enum class VerdictStatus { Pass, Fail, Skipped };
std::string to_string(VerdictStatus s);

struct SystemVerdict {
    std::string name;
    VerdictStatus status = VerdictStatus::Pass;
    std::string method; // "scan", "affine" or "budget"
    Tuple witness;      // flattened (2n'-1) k-tuples on failure
};

struct QuiverTest {
    WordCheck universal;
    std::vector<SystemVerdict> systems;
    bool ok() const;
};

QuiverTest is_associative_quiver(const Quiver& q, const std::vector<NamedSystem>& systems);

enum class QuiverFamily { Vertical, PostLike, NonPost, Intermediate };
std::string to_string(QuiverFamily f);
QuiverFamily parse_quiver_family(const std::string& s);

struct GeneratedQuivers {
    std::vector<Quiver> quivers;
    bool complete = true;
};

GeneratedQuivers generate_quivers(int n, int n_prime, int k, int lmu, int lid, QuiverFamily family);

// Rows placed by a fixed displacement: row r, column c uses place
// ((r-1) + d(c-1)) mod k + 1. Needs k = lmu = n-1.
Quiver displacement_quiver(int n, int d);

} // namespace polyadika
