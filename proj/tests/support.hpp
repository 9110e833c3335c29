#pragma once

#include "rat4/lattice.hpp"

#include <cstdlib>
#include <random>

namespace testing {

// RAT4_SEED overrides the fixed default.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g([] {
        const char* s = std::getenv("RAT4_SEED");
        return s ? std::strtoull(s, nullptr, 10) : 20240611ULL;
    }());
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline rat4::HClass random_class(int n, int bound) {
    rat4::HClass x;
    x.a = uniform(-bound, bound);
    for (int i = 0; i < n; ++i) x.b.push_back(uniform(-bound, bound));
    return x;
}

}  // namespace testing
