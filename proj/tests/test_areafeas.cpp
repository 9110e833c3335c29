#include "rat4/areafeas.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rat4;

namespace {

LinearForm random_form(int n) {
    LinearForm f(n);
    for (int i = 0; i <= n; ++i) f.coef[i] = testing::uniform(-3, 3);
    return f;
}

}  // namespace

TEST_SUITE("areafeas") {
    TEST_CASE("reduced basis systems are feasible") {
        for (int n = 3; n <= 12; ++n) {
            for (bool mono : {true, false}) {
                auto s = reduced_basis_system(n, mono);
                auto w = feasible(s);
                REQUIRE(w);
                CHECK(s.satisfied_by(w->values));
                CHECK(w->slack > 0);
            }
        }
    }

    TEST_CASE("contradictions are detected") {
        AreaSystem s(3);
        s.add(LinearForm::wH(3), Rel::gt);
        s.add(Q(-1) * LinearForm::wH(3), Rel::ge);
        CHECK(!feasible(s));
        AreaSystem t = reduced_basis_system(3);
        t.add(LinearForm::wE(3, 2) - LinearForm::wE(3, 1), Rel::gt);
        CHECK(!feasible(t));
        // equal areas are allowed by monotonicity
        AreaSystem u = reduced_basis_system(3);
        u.add(LinearForm::wE(3, 1) - LinearForm::wE(3, 2), Rel::eq);
        CHECK(feasible(u));
    }

    TEST_CASE("witnesses are sound and scale") {
        int found = 0;
        for (int it = 0; it < 300; ++it) {
            int n = testing::uniform(3, 6);
            AreaSystem s = reduced_basis_system(n, false);
            int extra = testing::uniform(1, 4);
            for (int r = 0; r < extra; ++r) {
                static const Rel rels[] = {Rel::gt, Rel::ge, Rel::eq};
                s.add(random_form(n), rels[testing::uniform(0, 2)]);
            }
            auto w = feasible(s);
            if (!w) continue;
            ++found;
            CHECK(s.satisfied_by(w->values));
            // every row is homogeneous, so positive multiples stay feasible
            std::vector<Q> twice = w->values;
            for (auto& v : twice) v *= 3;
            CHECK(s.satisfied_by(twice));
        }
        CHECK(found > 20);
    }

    TEST_CASE("JSON round trip") {
        AreaSystem s = reduced_basis_system(4);
        s.add(area_of(HClass(1, {1, 1, 0, 0})) - LinearForm::delta(4, 1), Rel::eq, "w(F) = delta1");
        s.add(LinearForm::delta(4, 1), Rel::gt);
        auto back = system_from_json(system_json(s));
        CHECK(system_json(back) == system_json(s));
        auto w = feasible(back);
        REQUIRE(w);
        CHECK(s.satisfied_by(w->values));
    }

    TEST_CASE("delta system for eight disjoint classes") {
        const int n = 9;
        std::vector<HClass> c = {HClass(1, {1, 1, 1, 0, 0, 0, 0, 0, 0}), HClass(1, {1, 0, 0, 1, 1, 0, 0, 0, 0}),
                                 HClass(1, {1, 0, 0, 0, 0, 1, 1, 0, 0}), HClass(1, {1, 0, 0, 0, 0, 0, 0, 1, 1}),
                                 HClass(0, {0, 1, -1, 0, 0, 0, 0, 0, 0}), HClass(0, {0, 0, 0, 1, -1, 0, 0, 0, 0}),
                                 HClass(0, {0, 0, 0, 0, 0, 1, -1, 0, 0}), HClass(0, {0, 0, 0, 0, 0, 0, 0, 1, -1})};
        AreaSystem s = reduced_basis_system(n, false);
        LinearForm d1 = LinearForm::delta(n, 1), d2 = LinearForm::delta(n, 2);
        s.add(area_of(c[0]) - d1, Rel::eq);
        for (int j = 1; j < 8; ++j) s.add(area_of(c[j]) - d2, Rel::eq);
        s.add(d1 - d2, Rel::gt);
        s.add(Q(2) * d2 - d1, Rel::gt);
        s.add(minus_K_area(n) - Q(7) * d1, Rel::gt);
        s.add(minus_K_area(n) - Q(7) * d2, Rel::gt);
        auto w = feasible(s);
        REQUIRE(w);
        CHECK(s.satisfied_by(w->values));
    }
}
