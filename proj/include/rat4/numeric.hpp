#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace rat4 {

using Z = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;

inline std::string qstr(const Q& q) { return q.str(); }

inline Q qparse(const std::string& s) { return Q(s); }

inline bool is_integer(const Q& q) { return boost::multiprecision::denominator(q) == 1; }

inline long q_to_long(const Q& q) {
    return boost::multiprecision::numerator(q).convert_to<long>();
}

inline double q_to_double(const Q& q) { return q.convert_to<double>(); }

// Worker count used by the parallel helpers; 0 means hardware concurrency.
unsigned& thread_count();

// Runs body(i) for i in [0, n) on a small pool; results must be written by index so
// output order never depends on scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned k = thread_count();
    if (k == 0) k = std::max(1u, std::thread::hardware_concurrency());
    if (k <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    k = static_cast<unsigned>(std::min<std::size_t>(k, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < k; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next++;
                if (i >= n || failed) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace rat4
