#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyadika/core.hpp"

namespace polyadika {

// Outcome of a universally quantified check. When `ok` is false, `witness`
// holds the lexicographically smallest violating tuple.
struct CheckResult {
    bool ok = true;
    Tuple witness;
    std::string detail;
    explicit operator bool() const { return ok; }
};

struct AssocResult : CheckResult {
    int place_a = 0; // the two inner placements that disagree
    int place_b = 0;
};

AssocResult is_totally_associative(const System& sys);

// Where the distinguished element must work: every position (strict) or only
// the first and last positions (relaxed).
enum class PlaceMode { All, Ends };

std::optional<Elem> find_zero(const System& sys, PlaceMode mode = PlaceMode::All);
std::vector<Elem> find_identities(const System& sys, PlaceMode mode = PlaceMode::All);
std::vector<Elem> idempotents(const System& sys);

// Split: the polyad fills the other n-1 slots in order and g takes every one
// of the n positions. Ends: g only at the first or last position.
enum class NeutralConvention { Split, Ends };

bool is_neutral_polyad(const System& sys, const Tuple& polyad, NeutralConvention conv);
std::vector<Tuple> neutral_polyads(const System& sys, NeutralConvention conv);

CheckResult is_medial(const System& sys); // witness: n*n matrix, row-major

// sigma is a permutation of {0..n-1}; checks mu[g] = mu[g o sigma].
CheckResult sigma_commutative(const System& sys, const std::vector<int>& sigma);
CheckResult is_commutative(const System& sys);
CheckResult is_semicommutative(const System& sys);

struct PlaceReport {
    std::vector<bool> cancellative; // injective in that place
    std::vector<bool> solvable;     // a solution always exists
    std::vector<bool> unique;       // ... and it is unique
};

PlaceReport place_report(const System& sys);
std::vector<bool> cancellativity(const System& sys);
std::vector<bool> solvability(const System& sys);

enum class Kind { System, Semigroup, Quasigroup, Monoid, Group };
std::string to_string(Kind k);

struct PropertyReport {
    int arity = 0;
    int size = 0;
    AssocResult associative;
    CheckResult commutative;
    CheckResult semicommutative;
    std::optional<CheckResult> medial; // empty when the scan exceeds the budget
    PlaceReport places;
    std::optional<Elem> zero;
    std::vector<Elem> identities;
    std::vector<Elem> idempotent_elements;
    std::optional<int> nilpotency;
    bool quasigroup = false;
    bool group = false;
    Kind kind = Kind::System;
};

Kind classify(const System& sys);
PropertyReport analyze(const System& sys, bool with_medial = true);

// All placements of the lmu multiplications give z on every polyad of
// length lmu(n-1)+1. Requires a zero.
bool is_lmu_nilpotent(const System& sys, int lmu);
std::optional<int> nilpotency_index(const System& sys, int max_lmu = 8);

} // namespace polyadika
