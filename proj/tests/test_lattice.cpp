#include "rat4/lattice.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace rat4;

namespace {

// Brute-force oracle for the root count: every class with A^2 = -2, K.A = 0 in a wide box,
// translated by a multiple of K to a in {0, 1, 2}.
HClass normalize_mod_K(HClass x) {
    int t = x.a >= 0 ? x.a / 3 : -((2 - x.a) / 3);
    x.a -= 3 * t;
    for (auto& v : x.b) v -= t;
    return x;
}

std::set<HClass> roots_by_brute_force() {
    std::set<HClass> reps;
    for (int a = -6; a <= 6; ++a)
        for_each_vector(9, 3L * a, static_cast<long>(a) * a + 2, -6, 6,
                        [&](const std::vector<int>& b) { reps.insert(normalize_mod_K(HClass(a, b))); });
    return reps;
}

}  // namespace

TEST_SUITE("lattice") {
    TEST_CASE("pairing, canonical class, adjunction") {
        BlowupLattice L(9);
        CHECK(pair(L.H(), L.H()) == 1);
        CHECK(pair(L.E(1), L.E(1)) == -1);
        CHECK(pair(L.E(1), L.E(2)) == 0);
        CHECK(square(L.K()) == 0);
        CHECK(k_dot(L.E(3)) == -1);
        CHECK(adjunction_genus(L.H()) == 0);
        CHECK(adjunction_genus(3 * L.H()) == 1);
        HClass cubic(3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
        CHECK(square(cubic) == 0);
        CHECK(k_dot(cubic) == 0);
        CHECK(L.E(1).str() == "E1");
    }

    TEST_CASE("reflections are involutive isometries fixing K") {
        const int n = 10;
        HClass K = BlowupLattice(n).K();
        for (int it = 0; it < 1000; ++it) {
            HClass x = testing::random_class(n, 5), y = testing::random_class(n, 5);
            int k = testing::uniform(1, n);
            int i = testing::uniform(1, n), j, l;
            do j = testing::uniform(1, n);
            while (j == i);
            do l = testing::uniform(1, n);
            while (l == i || l == j);
            HClass rx = reflect_exceptional(x, k);
            CHECK(reflect_exceptional(rx, k) == x);
            CHECK(pair(rx, reflect_exceptional(y, k)) == pair(x, y));
            HClass cx = reflect_cremona(x, i, j, l);
            CHECK(reflect_cremona(cx, i, j, l) == x);
            CHECK(pair(cx, reflect_cremona(y, i, j, l)) == pair(x, y));
            CHECK(reflect_cremona(K, i, j, l) == K);
            CHECK(k_dot(cx) == k_dot(x));
            CHECK(adjunction_genus(cx) == adjunction_genus(x));
        }
    }

    TEST_CASE("Cremona example") {
        HClass A(4, {2, 2, 2, 1, 1, 1, 1, 1, 1});
        HClass R = reflect_cremona(A, 1, 2, 3);
        CHECK(R == HClass(2, {0, 0, 0, 1, 1, 1, 1, 1, 1}));
    }

    TEST_CASE("canonical form is invariant under relabeling") {
        std::vector<HClass> c = {HClass(1, {1, 1, 1, 0, 0, 0, 0, 0, 0}), HClass(1, {1, 0, 0, 1, 1, 0, 0, 0, 0}),
                                 HClass(1, {1, 0, 0, 0, 0, 1, 1, 0, 0}), HClass(1, {1, 0, 0, 0, 0, 0, 0, 1, 1}),
                                 HClass(0, {0, 1, -1, 0, 0, 0, 0, 0, 0}), HClass(0, {0, 0, 0, 1, -1, 0, 0, 0, 0}),
                                 HClass(0, {0, 0, 0, 0, 0, 1, -1, 0, 0}), HClass(0, {0, 0, 0, 0, 0, 0, 0, 1, -1})};
        auto key = canonical_key(c);
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        for (int it = 0; it < 200; ++it) {
            std::shuffle(perm.begin(), perm.end(), testing::rng());
            std::vector<HClass> d;
            for (const auto& x : c) d.push_back(permute_columns(x, perm));
            std::shuffle(d.begin(), d.end(), testing::rng());
            CHECK(canonical_key(d) == key);
            CHECK(canonical_tuple(d) == canonical_tuple(c));
        }
        auto cf = canonical_form(c);
        for (std::size_t t = 0; t < c.size(); ++t) CHECK(square(cf.rows[t]) == -2);
    }

    TEST_CASE("vector enumeration agrees with a filtered box scan") {
        long fast = 0, slow = 0;
        for_each_vector(5, 3, 5, -2, 2, [&](const std::vector<int>&) { ++fast; });
        for (int code = 0; code < 3125; ++code) {
            int c = code, s = 0, q = 0;
            for (int i = 0; i < 5; ++i) {
                int v = c % 5 - 2;
                c /= 5;
                s += v;
                q += v * v;
            }
            slow += s == 3 && q == 5;
        }
        CHECK(fast == slow);
    }

    TEST_CASE("roots modulo K at N = 9") {
        auto roots = minus2_classes_mod_K(9);
        auto oracle = roots_by_brute_force();
        CHECK(roots.size() == 240);
        CHECK(oracle.size() == 240);
        std::set<HClass> mine;
        for (const auto& r : roots) mine.insert(normalize_mod_K(r));
        CHECK(mine == oracle);
        for (const auto& r : roots) {
            CHECK(square(r) == -2);
            CHECK(k_dot(r) == 0);
        }
        CHECK(rank_of_gram(roots) == 8);
        // pairings between distinct roots take values in {-2, ..., 2}
        std::set<long> spectrum;
        for (const auto& x : roots)
            for (const auto& y : roots) spectrum.insert(pair(x, y));
        for (long v : spectrum) CHECK((v >= -2 && v <= 2));
        auto best = max_orthogonal_roots(roots);
        CHECK(best.size() == 8);
        CHECK(negative_definite(best));
        for (std::size_t i = 0; i < best.size(); ++i)
            for (std::size_t j = i + 1; j < best.size(); ++j) CHECK(pair(best[i], best[j]) == 0);
    }
}
