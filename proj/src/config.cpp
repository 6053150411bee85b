#include "polyadika/config.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

#include "polyadika/error.hpp"

namespace polyadika {

ScanConfig& scan_config() {
    static ScanConfig cfg;
    return cfg;
}

void require_budget(double cost, const std::string& what) {
    const auto limit = static_cast<double>(scan_config().budget);
    if (cost > limit) {
        std::ostringstream os;
        os << what << ": needs about " << cost << " probes, budget is " << scan_config().budget;
        throw BudgetExceeded(os.str());
    }
}

double fpow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > 1e300) return 1e300;
    }
    return r;
}

std::optional<std::uint64_t> find_first_parallel(
    std::uint64_t total,
    const std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t)>& chunk) {
    unsigned nt = std::max(1u, scan_config().threads);
    if (nt == 1 || total < 4096) return chunk(0, total);

    // Several chunks per thread keeps the early-exit useful: once a failure is
    // known, later chunks are skipped.
    const std::uint64_t nchunks = std::min<std::uint64_t>(total, std::uint64_t(nt) * 8);
    const std::uint64_t step = (total + nchunks - 1) / nchunks;
    std::vector<std::optional<std::uint64_t>> found(nchunks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};

    auto worker = [&] {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::uint64_t b = c * step;
            if (b >= total) return;
            if (b > best.load()) continue;
            std::uint64_t e = std::min(total, b + step);
            found[c] = chunk(b, e);
            if (found[c]) {
                std::uint64_t v = *found[c];
                std::uint64_t cur = best.load();
                while (v < cur && !best.compare_exchange_weak(cur, v)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& f : found)
        if (f) return f;
    return std::nullopt;
}

} // namespace polyadika
