#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace metastab {

// Worker count: METASTAB_THREADS if set, else hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("METASTAB_THREADS")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs body(i) for i in [begin, end) on contiguous chunks. Results must be
// written to disjoint slots so the outcome is independent of the thread
// count. If several chunks throw, the exception from the lowest chunk wins.
template <class Body>
void parallel_for(std::size_t begin, std::size_t end, Body&& body) {
    const std::size_t n = end > begin ? end - begin : 0;
    if (n == 0) return;
    const int k = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (k <= 1) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(k);
    std::vector<std::thread> workers;
    workers.reserve(k);
    const std::size_t chunk = (n + k - 1) / k;
    for (int w = 0; w < k; ++w) {
        const std::size_t lo = begin + static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([lo, hi, w, &errors, &body] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : workers) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace metastab
