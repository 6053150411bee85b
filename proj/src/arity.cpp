#include "polyadika/arity.hpp"

#include <algorithm>
#include <set>

#include "polyadika/error.hpp"

namespace polyadika {

std::string to_string(ArityMode m) {
    switch (m) {
    case ArityMode::Iterate: return "iterate";
    case ArityMode::Reduce: return "reduce";
    case ArityMode::IterateThenReduce: return "iterate-then-reduce";
    case ArityMode::ReduceThenIterate: return "reduce-then-iterate";
    }
    return "?";
}

ArityMode parse_arity_mode(const std::string& s) {
    if (s == "iterate") return ArityMode::Iterate;
    if (s == "reduce") return ArityMode::Reduce;
    if (s == "iterate-then-reduce" || s == "iter-red") return ArityMode::IterateThenReduce;
    if (s == "reduce-then-iterate" || s == "red-iter") return ArityMode::ReduceThenIterate;
    throw FormatError("unknown arity mode '" + s + "'");
}

std::vector<FixedConstant> trailing_constants(int arity, const std::vector<Elem>& values) {
    const int nc = static_cast<int>(values.size());
    if (nc > arity) throw DomainError("more constants than slots");
    std::vector<FixedConstant> r;
    for (int i = 0; i < nc; ++i) r.push_back({arity - nc + i, values[i]});
    return r;
}

int predict_arity(int n, ArityMode mode, int lmu, int nc) {
    if (n < 1) throw DomainError("arity must be positive");
    if (lmu < 1) throw DomainError("lmu must be at least 1");
    if (nc < 0) throw DomainError("constant count must be non-negative");
    int r = 0;
    switch (mode) {
    case ArityMode::Iterate:
        if (nc != 0) throw DomainError("pure iteration takes no constants");
        r = lmu * (n - 1) + 1;
        break;
    case ArityMode::Reduce:
        if (lmu != 1) throw DomainError("pure reduction has lmu = 1");
        r = n - nc;
        break;
    case ArityMode::IterateThenReduce: r = lmu * (n - 1) - nc + 1; break;
    case ArityMode::ReduceThenIterate: r = lmu * (n - 1 - nc) + 1; break;
    }
    if (r < 2)
        throw DomainError("resulting arity " + std::to_string(r) + " is below 2");
    return r;
}

int predict_arity(int n, const ArityPlan& plan) { return predict_arity(n, plan.mode, plan.lmu, plan.nc()); }

int compensation_constants(int n, int lmu, ArityMode order) {
    if (n < 2 || lmu < 1) throw DomainError("need n >= 2 and lmu >= 1");
    if (order == ArityMode::IterateThenReduce) return (n - 1) * (lmu - 1);
    if (order == ArityMode::ReduceThenIterate) {
        if (lmu > n - 1)
            throw DomainError("reduce-then-iterate compensation needs lmu <= n-1");
        const int num = (n - 1) * (lmu - 1);
        if (num % lmu != 0)
            throw DomainError("(n-1)(lmu-1)/lmu = " + std::to_string(num) + "/" + std::to_string(lmu) +
                              " is not an integer");
        return num / lmu;
    }
    throw DomainError("compensation is defined for the mixed orders only");
}

namespace {

System reduce_op(const System& sys, const std::vector<FixedConstant>& consts) {
    const int n = sys.arity(), m = sys.size();
    const int nc = static_cast<int>(consts.size());
    std::set<int> used;
    for (const auto& c : consts) {
        if (c.position < 0 || c.position >= n)
            throw DomainError("constant position " + std::to_string(c.position) + " outside 0.." +
                              std::to_string(n - 1));
        if (!used.insert(c.position).second) throw DomainError("constant position used twice");
        if (c.value >= Elem(m)) throw DomainError("constant value out of range");
    }
    const int np = n - nc;
    if (np < 2) throw DomainError("reduction leaves arity below 2");
    std::vector<int> slot_const(n, -1);
    for (int i = 0; i < nc; ++i) slot_const[consts[i].position] = i;
    return System::tabulate(m, np, [&](const Elem* a) {
        Elem args[128];
        for (int j = 0, k = 0; j < n; ++j) args[j] = slot_const[j] >= 0 ? consts[slot_const[j]].value : a[k++];
        return sys(args);
    });
}

System iterate_op(const System& sys, int lmu, const std::optional<Tree>& tree) {
    const int n = sys.arity();
    if (lmu == 1 && !tree) return sys;
    Tree t = tree ? *tree : right_nested(n, lmu);
    if (t.internal_nodes() != lmu) throw DomainError("placement tree does not have lmu nodes");
    const int np = lmu * (n - 1) + 1;
    return System::tabulate(sys.size(), np, [&](const Elem* a) {
        return evaluate_iterated(sys, std::span<const Elem>(a, np), t);
    });
}

} // namespace

System apply_plan(const System& sys, const ArityPlan& plan) {
    const int expect = predict_arity(sys.arity(), plan);
    System out;
    switch (plan.mode) {
    case ArityMode::Iterate: out = iterate_op(sys, plan.lmu, plan.tree); break;
    case ArityMode::Reduce: out = reduce_op(sys, plan.constants); break;
    case ArityMode::IterateThenReduce:
        out = reduce_op(iterate_op(sys, plan.lmu, plan.tree), plan.constants);
        break;
    case ArityMode::ReduceThenIterate:
        out = iterate_op(reduce_op(sys, plan.constants), plan.lmu, plan.tree);
        break;
    }
    if (out.arity() != expect) throw DomainError("internal: produced arity differs from prediction");
    return out;
}

System middle_reduction(const System& sys, const std::vector<Elem>& c) {
    const int n = sys.arity();
    if (static_cast<int>(c.size()) != n - 2) throw DomainError("middle reduction needs n-2 constants");
    std::vector<FixedConstant> consts;
    for (int i = 0; i < n - 2; ++i) consts.push_back({i + 1, c[i]});
    return reduce_op(sys, consts);
}

System b_derived_ternary(const System& binary, Elem c) {
    if (binary.arity() != 2) throw DomainError("b-derived construction needs a binary system");
    if (c >= Elem(binary.size())) throw DomainError("constant out of range");
    return System::tabulate(binary.size(), 3, [&](const Elem* a) {
        Elem uc = binary({a[2], c});
        Elem huc = binary({a[1], uc});
        return binary({a[0], huc});
    });
}

} // namespace polyadika
