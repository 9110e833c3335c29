#include "rat4/gindex.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace rat4;

namespace {

FixedPointProfile points_only(int order, std::initializer_list<std::array<int, 3>> groups) {
    FixedPointProfile p{order, {}, {}, true};
    for (auto [count, a, b] : groups)
        for (int i = 0; i < count; ++i) p.points.push_back({order, a, b});
    return p;
}

}  // namespace

TEST_SUITE("gindex") {
    TEST_CASE("Lefschetz numbers") {
        CHECK(lefschetz_fix(points_only(2, {{8, 1, 1}})) == 8);
        auto p = points_only(3, {{9, 1, 1}});
        for (int g = 0; g < 3; ++g) {
            p.surfaces.push_back({1, 0, 1, 3});
            CHECK(lefschetz_fix(p) == 9);
        }
        p.surfaces.push_back({0, 2, 1, 3});
        CHECK(lefschetz_fix(p) == 11);
    }

    TEST_CASE("normalized types") {
        CHECK(normalized_type({5, 2, 4}) == IsolatedPoint{5, 1, 2});
        CHECK(normalized_type({8, 3, 1}) == IsolatedPoint{8, 1, 3});
        CHECK_THROWS_AS(normalized_type({4, 2, 1}), std::invalid_argument);
    }

    TEST_CASE("signature defects at p = 5") {
        CHECK(signature_defect(IsolatedPoint{5, 1, 1}, 5) == -4);
        CHECK(signature_defect(IsolatedPoint{5, 1, 2}, 5) == 0);
        CHECK(signature_defect(IsolatedPoint{5, 1, 4}, 5) == 4);
        CHECK(signature_defect(FixedSurface{1, 3, 1, 5}, 5) == 24);
        auto w = weak_checks(5, 0, 0, points_only(5, {{5, 1, 2}}));
        CHECK(w.chi == 4);
        CHECK(w.chi_integral);
    }

    TEST_CASE("G-signature at p = 3") {
        // -x/3 + y/3 + (4/3) sum Y^2
        for (int it = 0; it < 50; ++it) {
            int x = testing::uniform(0, 6), y = testing::uniform(0, 6), Y = testing::uniform(0, 4);
            auto p = points_only(3, {{x, 1, 1}, {y, 1, 2}});
            if (Y) p.surfaces.push_back({0, Y, 1, 3});
            CHECK(signature_number(p) == CycNumber(Q(-x, 3) + Q(y, 3) + Q(4 * Y, 3)));
        }
    }

    TEST_CASE("Spin numbers") {
        CHECK(spin_k_point(1, 1, 3) == 2);
        CHECK(spin_k_point(1, 2, 3) == 1);
        auto p = points_only(3, {{8, 1, 1}});
        p.surfaces.push_back({2, 2, 1, 3});
        CHECK(spin_number(p, 3) == CycNumber(-3));
        auto s = spin_coefficients({{1, spin_number(p, 3, 1)}, {2, spin_number(p, 3, 2)}}, 3, 0);
        REQUIRE(s.ok);
        CHECK(s.d[0] == -2);
    }

    TEST_CASE("Spin sum at p = 5 on random profiles") {
        for (int it = 0; it < 300; ++it) {
            FixedPointProfile p{5, {}, {}, true};
            int x = 0, y = 0;
            long Y = 0;
            int np = testing::uniform(0, 6);
            for (int i = 0; i < np; ++i) {
                int a = testing::uniform(1, 4), t = testing::uniform(0, 2);
                int b = t == 0 ? a : t == 1 ? 5 - a : 2 * a % 5;
                p.points.push_back({5, a, b});
                x += t == 0;
                y += t == 1;
            }
            int ns = testing::uniform(0, 2);
            for (int i = 0; i < ns; ++i) {
                int s = testing::uniform(-1, 4);
                p.surfaces.push_back({testing::uniform(0, 2), s, testing::uniform(1, 4), 5});
                Y += s;
            }
            CHECK(spin_number(p, 5, 1) + spin_number(p, 5, 2) == CycNumber(Q(y - x) - Q(Y, 2)));
        }
    }

    TEST_CASE("torus model examples") {
        auto t = torus_model(Q(1, 2), Q(1, 2));
        CHECK(t.L == 16);
        CHECK(t.closed_forms_agree);
        t = torus_model(Q(1, 3), Q(1, 3));
        CHECK(t.L == 9);
        CHECK(t.sign == CycNumber(-3));
        t = torus_model(Q(1, 5), Q(2, 5));
        CHECK(t.sign == -2 * (cos_pi(1, 5) + cos_pi(2, 5)));
        CHECK(std::abs(t.sign.numeric().real() + 2 * (std::cos(M_PI / 5) + std::cos(2 * M_PI / 5))) < 1e-9);
        CHECK_THROWS_AS(torus_model(Q(1, 7), Q(2, 7)), IntegralityError);
        CHECK(!torus_model(Q(1, 7), Q(2, 7), true).integral);
    }

    TEST_CASE("closed forms agree with the exterior-power computation for n <= 12") {
        for (int n = 1; n <= 12; ++n)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(torus_model(Q(i, n), Q(j, n), true).closed_forms_agree);
    }

    TEST_CASE("integrality by element order") {
        CHECK(!order_admits_integral_angles(9));
        CHECK(!order_admits_integral_angles(16));
        for (int n : {2, 3, 4, 5, 6, 8, 10, 12}) CHECK(order_admits_integral_angles(n));
        // order 8: q = 1, 7 violate integrality, q = 3, 5 do not
        CHECK(!torus_model(Q(1, 8), Q(1, 8), true).integral);
        CHECK(!torus_model(Q(1, 8), Q(7, 8), true).integral);
        CHECK(torus_model(Q(1, 8), Q(3, 8), true).integral);
        CHECK(torus_model(Q(1, 8), Q(5, 8), true).integral);
    }

    TEST_CASE("torus quotients") {
        auto q = torus_quotient(Q(1, 5), Q(2, 5));
        CHECK(q.chi == 4);
        CHECK(q.b2plus == 1);
        CHECK(q.b2minus == 1);
    }

    TEST_CASE("Hirzebruch-Jung resolutions") {
        auto r = hj_resolution(2, 1);
        CHECK(r.chain == std::vector<int>{2});
        CHECK(r.delta_K2 == 0);
        r = hj_resolution(4, 1);
        CHECK(r.chain == std::vector<int>{4});
        CHECK(r.delta_K2 == -1);
        r = hj_resolution(8, 3);
        CHECK(r.chain == std::vector<int>{3, 3});
        CHECK(r.delta_K2 == -1);
        r = hj_resolution(8, 7);
        CHECK(r.chain == std::vector<int>(7, 2));
        CHECK(r.delta_K2 == 0);
        CHECK(r.delta_chi == 7);
        for (int m = 2; m <= 12; ++m)
            for (int b = 1; b < m; ++b) {
                if (std::gcd(m, b) != 1) continue;
                auto s = hj_resolution(m, b);
                bool zero = true;
                for (const auto& d : s.discrepancies) zero = zero && d == 0;
                CHECK(zero == (b == m - 1));
                CHECK(s.du_val() == (b == m - 1));
                // continued fraction m/b = [e1, e2, ...]
                Q v = s.chain.back();
                for (int k = static_cast<int>(s.chain.size()) - 2; k >= 0; --k) v = Q(s.chain[k]) - 1 / v;
                CHECK(v == Q(m, b));
            }
    }

    TEST_CASE("profile JSON") {
        json j = {{"group_order", 5}, {"points", {{{"a", 1}, {"b", 2}, {"count", 5}}}}};
        auto p = profile_from_json(j);
        CHECK(p.points.size() == 5);
        CHECK(profile_from_json(profile_json(p)).points == p.points);
        CHECK_THROWS_AS(profile_from_json(json{{"group_order", 5}, {"points", {{{"a", 0}, {"b", 2}}}}}),
                        std::invalid_argument);
    }
}
