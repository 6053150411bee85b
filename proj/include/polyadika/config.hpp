#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace polyadika {

// Process-wide scan limits. The CLI sets these from --budget / --threads.
struct ScanConfig {
    std::uint64_t budget = 100000000ULL; // table probes per scan
    unsigned threads = 1;
};

ScanConfig& scan_config();

// Throws BudgetExceeded if `cost` probes would exceed the budget.
void require_budget(double cost, const std::string& what);

// Saturating integer power, returned as double so callers can compare
// against the budget without overflow.
double fpow(double base, int exp);

// Runs `chunk(begin, end)` over [0, total) split across the configured
// threads. Each call returns the first failing index in its range, if any.
// The smallest failing index overall is returned, so the answer does not
// depend on scheduling.
std::optional<std::uint64_t> find_first_parallel(
    std::uint64_t total,
    const std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t)>& chunk);

} // namespace polyadika
