#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "niho/errors.hpp"

namespace niho {

// Execution policy shared by the expensive enumeration routines.
// `budget` is measured in field-element operations and is checked *before*
// running; refusal is a thrown TooLargeError, never silent truncation.
// `workers = 0` means use all hardware threads. Results are required to be
// identical for every worker count; every reduction in this codebase is a
// plain integer/multiset merge, so partitioning cannot change the output.
struct Exec {
    long long budget = 1'000'000'000;
    int workers = 0;

    int resolved_workers() const {
        if (workers > 0) return workers;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }

    void charge(long long estimated_ops, const char* what) const {
        if (estimated_ops > budget)
            throw TooLargeError(std::string(what) + ": estimated " +
                                std::to_string(estimated_ops) +
                                " element-ops exceeds budget " + std::to_string(budget));
    }
};

// Splits [0, total) into contiguous chunks, runs `body(worker_index, lo, hi)`
// on each, and joins. Worker partials must be stored per-index by the caller
// and merged afterwards in index order.
inline void parallel_chunks(uint64_t total, int workers,
                            const std::function<void(int, uint64_t, uint64_t)>& body) {
    if (total == 0) return;
    int k = workers;
    if (k < 1) k = 1;
    if (static_cast<uint64_t>(k) > total) k = static_cast<int>(total);
    if (k == 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(k);
    uint64_t chunk = total / k, rem = total % k, lo = 0;
    for (int i = 0; i < k; ++i) {
        uint64_t hi = lo + chunk + (static_cast<uint64_t>(i) < rem ? 1 : 0);
        threads.emplace_back(body, i, lo, hi);
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

} // namespace niho
