#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyadika/core.hpp"

namespace polyadika {

enum class ArityMode { Iterate, Reduce, IterateThenReduce, ReduceThenIterate };

std::string to_string(ArityMode m);
ArityMode parse_arity_mode(const std::string& s);

struct FixedConstant {
    int position = 0; // 0-based slot in the operation being reduced
    Elem value = 0;
    bool operator==(const FixedConstant&) const = default;
};

struct ArityPlan {
    ArityMode mode = ArityMode::Iterate;
    int lmu = 1;
    // Constant slots for the reducing phase. Positions refer to the arity of
    // the operation at the moment it is reduced (the iterated arity for
    // iterate-then-reduce). If `constants` is given without positions use
    // trailing_constants().
    std::vector<FixedConstant> constants;
    std::optional<Tree> tree; // iteration placement, right-nested if empty

    int nc() const { return static_cast<int>(constants.size()); }
};

// Constants in the last slots of an operation of arity `arity`.
std::vector<FixedConstant> trailing_constants(int arity, const std::vector<Elem>& values);

int predict_arity(int n, ArityMode mode, int lmu, int nc);
int predict_arity(int n, const ArityPlan& plan);

// Number of constants that brings the final arity back to n.
// Throws DomainError when the count is not an integer.
int compensation_constants(int n, int lmu, ArityMode order);

System apply_plan(const System& sys, const ArityPlan& plan);

// mu'[g, h] = mu_n[g, c..., h] with the (n-2)-polyad c in the middle.
System middle_reduction(const System& sys, const std::vector<Elem>& c);

// mu3[g, h, u] = g.(h.(u.c)) built from a binary system.
System b_derived_ternary(const System& binary, Elem c);

} // namespace polyadika
