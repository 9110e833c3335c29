#include "rat4/sphere_enum.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rat4;

namespace {

// Oracle: sphere classes (A^2 = -alpha, K.A = alpha - 2) with fixed a, entries in a box,
// b >= 0 when a > 0.
std::set<HClass> sphere_box(int n, int alpha, int a, int lo, int hi) {
    std::set<HClass> out;
    std::vector<int> b(n, lo);
    for (;;) {
        long s = 0, q = 0;
        for (int v : b) s += v, q += static_cast<long>(v) * v;
        if (s == 3L * a + alpha - 2 && q == static_cast<long>(a) * a + alpha) out.insert(HClass(a, b));
        int i = 0;
        while (i < n && b[i] == hi) b[i++] = lo;
        if (i == n) break;
        ++b[i];
    }
    return out;
}

}  // namespace

TEST_SUITE("sphere_enum") {
    TEST_CASE("a = 0 spheres at N = 9") {
        SphereClassQuery q{9, 2, 0, 0, false, false};
        auto xs = enumerate_sphere_classes(q);
        CHECK(xs.size() == 72);
        CHECK(std::set<HClass>(xs.begin(), xs.end()) == sphere_box(9, 2, 0, -2, 2));
    }

    TEST_CASE("area-bounded pool at N = 9 has strata a = 0..3") {
        auto xs = area_bounded_forms(9, 2);
        std::map<int, int> strata;
        for (const auto& x : xs) ++strata[x.a];
        CHECK(strata == std::map<int, int>{{0, 72}, {1, 84}, {2, 84}, {3, 72}});
        CHECK(area_bound(9, 2) == 3);
        for (int a = 1; a <= 3; ++a) {
            auto f = observation_forms(9, 2, a);
            CHECK(std::set<HClass>(f.begin(), f.end()) == sphere_box(9, 2, a, 0, a));
        }
    }

    TEST_CASE("observation forms against the box oracle, alpha = 3") {
        for (int a = 0; a <= 3; ++a) {
            auto f = observation_forms(9, 3, a);
            std::set<HClass> box = sphere_box(9, 3, a, a == 0 ? -1 : 0, std::max(1, a));
            CHECK(std::set<HClass>(f.begin(), f.end()) == box);
        }
    }

    TEST_CASE("out-of-range queries are empty") {
        CHECK(enumerate_sphere_classes({2, 2, -5, -5, false, false}).empty());
        CHECK(enumerate_sphere_classes({8, 2, 4, 4, false, false}).empty());
        CHECK_THROWS_AS(enumerate_sphere_classes({0, 2, 0, 0, false, false}), std::invalid_argument);
    }

    TEST_CASE("negative forms") {
        CHECK(negative_forms(9, 2, -1).empty());
        auto f = negative_forms(9, 3, -1);
        CHECK(f.size() == 9);
        for (const auto& x : f) {
            CHECK(square(x) == -3);
            CHECK(k_dot(x) == 1);
        }
        CHECK(negative_forms(9, 4, -1, true).size() == 8);
        for (int n = 6; n <= 10; ++n) {
            std::vector<HClass> all;
            for (int alpha = 2; alpha <= 6; ++alpha)
                for (int a = -1; -2 * a <= alpha; --a)
                    for (auto& x : negative_forms(n, alpha, a, true)) all.push_back(x);
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(pair(all[i], all[j]) < 0);
        }
    }

    TEST_CASE("support size for 4 <= a <= 6") {
        for (int n = 9; n <= 13; ++n)
            for (int alpha = 2; alpha <= 3; ++alpha)
                for (int a = 4; a <= 6; ++a) {
                    auto st = support_stats(n, alpha, a);
                    if (st.classes > 0) CHECK(st.min_support >= alpha + 7);
                }
        // unsorted brute force at N = 10 agrees on the minimum
        for (int a = 4; a <= 5; ++a) {
            int best = 100;
            for_each_vector(10, 3L * a, static_cast<long>(a) * a + 2, 0, a - 1, [&](const std::vector<int>& b) {
                best = std::min(best, static_cast<int>(std::count_if(b.begin(), b.end(), [](int v) { return v; })));
            });
            CHECK(best == support_stats(10, 2, a).min_support);
        }
        CHECK(support_stats(9, 2, 4).classes == 1);
        CHECK(support_stats(8, 2, 4).classes == 0);
    }

    TEST_CASE("Cremona reduction") {
        HClass A(4, {2, 2, 2, 1, 1, 1, 1, 1, 1});
        auto t = reduce_by_cremona(A);
        CHECK(t.terminal.a == 2);
        CHECK(t.steps.size() == 1);
        CHECK(square(t.terminal) == square(A));
        CHECK(k_dot(t.terminal) == k_dot(A));
        for (int it = 0; it < 100; ++it) {
            int n = testing::uniform(9, 12);
            auto f = observation_forms(n, 2, testing::uniform(1, 3));
            const HClass& x = f[testing::uniform(0, static_cast<int>(f.size()) - 1)];
            auto r = reduce_by_cremona(x);
            CHECK(r.terminal.a <= 3);
            CHECK(square(r.terminal) == -2);
        }
    }

    TEST_CASE("zero-square classes") {
        auto zs = zero_square_scan(10, 6, 6);
        for (const auto& B : zs) {
            CHECK(square(B) == 0);
            CHECK(k_dot(B) == 0);
            CHECK(zero_square_a_ok(B));
            if (B.a == 3) {
                CHECK(std::count(B.b.begin(), B.b.end(), 1) == 9);
                CHECK(std::count(B.b.begin(), B.b.end(), 0) == 1);
            }
        }
        auto forms = zero_square_forms(10);
        CHECK(forms.size() == 10);
        // oracle: no class with 0 <= a < 3 in a box at N = 9
        long low = 0;
        for (int a = 0; a < 3; ++a)
            for_each_vector(9, 3L * a, static_cast<long>(a) * a, -5, 5, [&](const std::vector<int>& b) {
                if (!HClass(a, b).is_zero()) ++low;
            });
        CHECK(low == 0);
    }

    TEST_CASE("surface filter") {
        CHECK(surface_class_filter(HClass(1, {1, 1, 1}), 0).pass);
        CHECK(!surface_class_filter(HClass(3, {-1, 1, 1, 1, 1, 1, 1, 1, 1}), 0).pass);
        CHECK_THROWS_AS(surface_class_filter(HClass(1, {1, 1, 1}), 2), std::invalid_argument);
        auto g2 = surface_classes(10, 2, 6, 4);
        for (const auto& x : g2) {
            CHECK(adjunction_genus(x) == 2);
            CHECK(square(x) == 6);
        }
    }
}
