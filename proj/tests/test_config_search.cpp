#include "rat4/config_search.hpp"
#include "rat4/sphere_enum.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace rat4;

namespace {

std::vector<HClass> relabel(const std::vector<HClass>& t, const std::vector<int>& perm) {
    std::vector<HClass> out;
    for (const auto& x : t) out.push_back(permute_columns(x, perm));
    return out;
}

bool pairwise_disjoint(const std::vector<HClass>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (pair(t[i], t[j]) != 0) return false;
    return true;
}

}  // namespace

TEST_SUITE("config_search") {
    TEST_CASE("reference families are disjoint (-2)-classes") {
        for (char l : {'a', 'b', 'c'}) {
            auto f = reference_family(l);
            CHECK(f.size() == 8);
            CHECK(pairwise_disjoint(f));
            for (const auto& x : f) {
                CHECK(square(x) == -2);
                CHECK(k_dot(x) == 0);
            }
            CHECK(family_label(f) == std::string(1, l));
        }
        CHECK_THROWS_AS(reference_family('d'), std::invalid_argument);
    }

    TEST_CASE("labels and Fano incidence survive relabeling") {
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        for (int it = 0; it < 100; ++it) {
            std::shuffle(perm.begin(), perm.end(), testing::rng());
            for (char l : {'a', 'b', 'c'}) CHECK(family_label(relabel(reference_family(l), perm)) == std::string(1, l));
            CHECK(fano_incidence(relabel(reference_family('a'), perm)).is_fano);
        }
    }

    TEST_CASE("Fano incidence") {
        auto inc = fano_incidence(reference_family('a'));
        CHECK(inc.is_fano);
        CHECK(inc.points == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
        // break one line: move a point
        auto broken = reference_family('a');
        broken[1] = HClass(1, {0, 1, 1, 0, 1, 0, 0, 0, 0});
        CHECK(!fano_incidence(broken).is_fano);
        CHECK_THROWS_AS(fano_incidence(reference_family('c')), std::invalid_argument);
        std::vector<std::vector<bool>> m(7, std::vector<bool>(7, false));
        CHECK(!is_fano_plane(m));
    }

    TEST_CASE("orbit search counts") {
        auto pool = area_bounded_forms(9, 2);
        CHECK(orthogonal_orbits(pool, 8).size() == 55);
        CHECK(orthogonal_orbits(pool, 9).empty());
        CHECK(orthogonal_orbits(area_bounded_forms(8, 2), 8).size() == 4);
        CHECK(orthogonal_orbits(area_bounded_forms(7, 2), 7).size() == 2);
        // every orbit representative is canonical and pairwise orthogonal
        for (const auto& t : orthogonal_orbits(pool, 4)) {
            CHECK(canonical_tuple(t) == t);
            CHECK(pairwise_disjoint(t));
        }
    }

    TEST_CASE("orbit search agrees with a plain subset scan") {
        // oracle: all 3-subsets of the N = 7 pool, reduced by canonical key
        auto pool = area_bounded_forms(7, 2);
        std::set<std::vector<int>> keys;
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                for (std::size_t k = j + 1; k < pool.size(); ++k) {
                    std::vector<HClass> t = {pool[i], pool[j], pool[k]};
                    if (pairwise_disjoint(t)) keys.insert(canonical_key(t));
                }
        CHECK(orthogonal_orbits(pool, 3).size() == keys.size());
    }

    TEST_CASE("delta families") {
        auto nine = delta_families(9, 8);
        std::multiset<std::string> labels;
        for (const auto& f : nine) {
            labels.insert(f.label);
            REQUIRE(f.witness);
            CHECK(delta_system(f.realized, f.feasible_slots[0], true).satisfied_by(f.witness->values));
        }
        CHECK(labels == std::multiset<std::string>{"a", "b", "c"});
        for (int n : {7, 8}) {
            auto fams = delta_families(n, n);
            REQUIRE(fams.size() == 1);
            CHECK(fano_incidence(fams[0].tuple).is_fano);
        }
    }

    TEST_CASE("odd construction") {
        for (int n = 3; n <= 13; n += 2) {
            auto t = odd_n_construction(n);
            CHECK(static_cast<int>(t.size()) == n - 1);
            CHECK(pairwise_disjoint(t));
            auto fams = disjoint_tuples(t, n - 1);
            CHECK(fams.size() == 1);
        }
        CHECK_THROWS_AS(odd_n_construction(4), std::invalid_argument);
    }

    TEST_CASE("make_monotone sorts E-areas") {
        auto t = reference_family('c');
        auto s = delta_system(t, 0, false);
        auto w = feasible(s);
        REQUIRE(w);
        auto r = t;
        make_monotone(r, *w);
        for (int i = 1; i < 9; ++i) CHECK(w->values[i] >= w->values[i + 1]);
        CHECK(canonical_key(r) == canonical_key(t));
    }
}

TEST_SUITE("props") {
    TEST_CASE("one torus with F41.F42 = 1") {
        auto r = verify_prop("4.3");
        CHECK(r.pass);
        CHECK(r.failures.empty());
        CHECK(r.data["torus_branch"]["solutions"].get<long>() > 0);
        for (const auto& c : r.data["cases"]) CHECK(c["solutions"].get<long>() == 0);
    }
    TEST_CASE("no configuration at N = 12") {
        auto r = verify_prop("4.4");
        CHECK(r.pass);
        CHECK(r.data["solution_set"].empty());
    }
    TEST_CASE("no configuration at N = 11") {
        auto r = verify_prop("4.5");
        CHECK(r.pass);
        CHECK(r.data["solution_set"].empty());
    }
    TEST_CASE("unknown proposition") { CHECK_THROWS_AS(verify_prop("4.6"), std::invalid_argument); }
}
