#include "wrt/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace wrt {

PhaseTable::PhaseTable(long long modulus) : modulus_(modulus), table_(modulus) {
    for (long long r = 0; r < modulus; ++r) {
        double x = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(modulus);
        table_[r] = {std::cos(x), std::sin(x)};
    }
    if (modulus % 4 == 0) {
        table_[0] = {1, 0};
        table_[modulus / 4] = {0, 1};
        table_[modulus / 2] = {-1, 0};
        table_[3 * modulus / 4] = {0, -1};
    } else if (modulus % 2 == 0) {
        table_[0] = {1, 0};
        table_[modulus / 2] = {-1, 0};
    }
}

unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WRT_TORUS_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex guard;
    auto run = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(guard);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace wrt
