// One line per acceptance criterion. Exit status is 0 iff every failing criterion is on the
// documented list below.
#include "rat4/areafeas.hpp"
#include "rat4/cyclotomic.hpp"
#include "rat4/gindex.hpp"
#include "rat4/report.hpp"
#include "rat4/scenario.hpp"
#include "rat4/sphere_enum.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>

using namespace rat4;

namespace {

// Criterion 7 asks that integrality fail for exactly the orders {9, 12, 16}; order 12 admits
// integral angles (1/12, 5/12) in the model, so only the 9 and 16 parts can hold.
const std::set<int> documented_unattainable = {7};

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void need(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            notes.push_back("missing: " + what);
        }
    }
};

bool has_ok_line(const Report& r, const std::string& needle) {
    for (const auto& l : r.lines)
        if (l.rfind("ok   ", 0) == 0 && l.find(needle) != std::string::npos) return true;
    return false;
}

Outcome c1() {
    Outcome o;
    auto r = run_verifier("lemma-5.1");
    o.need(r.pass, "lemma-5.1 verifier passes");
    std::multiset<std::string> labels;
    for (const auto& f : r.data["families"]) labels.insert(f["label"].get<std::string>());
    o.need(labels == std::multiset<std::string>{"a", "b", "c"}, "families (a), (b), (c) exactly");
    return o;
}

Outcome c2() {
    Outcome o;
    auto r = run_verifier("thm-1.4-n9");
    o.need(r.pass, "N = 9 verifier passes");
    o.need(r.data["representatives"] == 240, "240 representatives");
    o.need(r.data["max_orthogonal"] == 8, "maximal orthogonal set of size 8");
    o.need(r.data["exhibit"].size() == 8, "size-8 exhibit");
    return o;
}

Outcome c3() {
    Outcome o;
    for (int n : {7, 8}) {
        auto r = run_verifier("thm-1.4-n" + std::to_string(n));
        o.need(r.pass, "N = " + std::to_string(n) + " verifier passes");
        bool fano = !r.data["families"].empty();
        for (const auto& f : r.data["families"]) fano = fano && f["incidence"]["is_fano"].get<bool>();
        o.need(fano, "every N = " + std::to_string(n) + " survivor is Fano");
        o.need(r.data["exhibit"].size() == static_cast<std::size_t>(n), "explicit N-tuple");
    }
    return o;
}

Outcome c4() {
    Outcome o;
    auto r3 = run_verifier("prop-4.3");
    o.need(r3.pass, "prop-4.3 passes");
    o.need(has_ok_line(r3, "exactly one component B, a torus"), "single torus solution set");
    for (int k = 1; k <= 5; ++k) o.need(has_ok_line(r3, "Case (" + std::to_string(k) + ")"), "Case " + std::to_string(k));
    auto r4 = run_verifier("prop-4.4");
    o.need(r4.pass && r4.data["solution_set"].empty(), "prop-4.4 empty");
    auto r5 = run_verifier("prop-4.5");
    o.need(r5.pass && r5.data["solution_set"].empty(), "prop-4.5 empty");
    for (const char* c : {"Case (1)", "Case (2)"})
        for (const char* p : {"pattern (!)", "pattern (!!)"})
            o.need(has_ok_line(r5, std::string(c) + " " + p), std::string(c) + " " + p);
    return o;
}

ProfileSearch scenario(const std::string& name) {
    std::ifstream f(std::string(RAT4_FIXTURE_DIR) + "/scenarios/" + name + ".json");
    if (!f) throw std::runtime_error("missing fixture " + name);
    return profile_search(scenario_from_json(json::parse(f)));
}

std::vector<std::vector<int>> alive(const BranchResult& b) {
    std::vector<std::vector<int>> out;
    for (const auto& r : b.rows)
        if (r.killed_by.empty()) out.push_back(r.counts);
    return out;
}

Outcome c5() {
    Outcome o;
    using V = std::vector<std::vector<int>>;
    auto z2 = scenario("z2-rational-b1-2");
    bool ok2 = z2.branches.size() == 2;
    for (const auto& b : z2.branches)
        ok2 = ok2 && b.rows.size() == 1 && b.rows[0].counts == std::vector<int>{8} &&
              b.rows[0].self_int_sum == 2 * (1 - b.b2minus_quotient) && b.rows[0].killed_by.empty();
    o.need(ok2, "order 2: z = 8, sum Y^2 = 2(1 - b2-)");
    auto z3 = scenario("z3-rational-b1-2");
    bool ok3 = z3.branches.size() == 2 && alive(z3.branches[1]) == V{{3, 3}};
    bool x8 = false;
    if (ok3)
        for (const auto& r : z3.branches[1].rows)
            x8 = x8 || (r.counts == std::vector<int>{8, 0} && r.killed_by == "spin" &&
                        r.detail.find("d_0 = -2") != std::string::npos);
    o.need(ok3 && x8, "order 3, b1 = 2: x = y = 3; x = 8 killed with d_0 = -2");
    auto z3b = scenario("z3-rational-b1-4");
    bool tori = z3b.branches.size() == 1 && alive(z3b.branches[0]) == V{{9, 0}};
    if (tori)
        for (const auto& r : z3b.branches[0].rows)
            if (r.killed_by.empty() && r.witness)
                for (const auto& y : r.witness->surfaces) tori = tori && y.genus == 1;
    o.need(tori, "order 3, b1 = 4: x = 9, y = 0, tori");
    auto z5 = scenario("z5-rational-b1-4");
    bool ok5 = z5.branches.size() == 1 && z5.branches[0].rows.size() == 6 && alive(z5.branches[0]) == V{{0, 5, 0}};
    o.need(ok5, "order 5: six raw rows, z = 5 survives");
    auto z4 = scenario("z4-rational-b1-2");
    o.need(z4.branches.size() == 2 && alive(z4.branches[0]).empty() && alive(z4.branches[1]) == V{{2, 2}},
           "order 4: x = y = 2, b2- = 0 contradictory");
    auto q3 = scenario("z8-rational-b1-4-q3"), q5 = scenario("z8-rational-b1-4-q5");
    o.need(q3.branches.size() == 1 && q3.branches[0].type_names[0] == "(1,3)" && alive(q3.branches[0]) == V{{2, 0}},
           "order 8: two (1,3) points");
    o.need(q5.branches.size() == 1 && q5.branches[0].type_names[1] == "(1,5)" && alive(q5.branches[0]) == V{{0, 2}},
           "order 8: two (1,5) points");
    return o;
}

Outcome c6() {
    Outcome o;
    o.need(signature_defect(IsolatedPoint{5, 1, 1}, 5) == -4, "defect (1,1) = -4");
    o.need(signature_defect(IsolatedPoint{5, 1, 2}, 5) == 0, "defect (1,2) = 0");
    o.need(signature_defect(IsolatedPoint{5, 1, 4}, 5) == 4, "defect (1,4) = 4");
    o.need(run_verifier("identities-2.10").pass, "four identities");
    bool floats = true;
    for (int m = 1; m <= 24; ++m)
        for (int k = 1; k < 2 * m; ++k) {
            if (k % m == 0) continue;
            double t = M_PI * k / m;
            floats = floats && std::abs(cot_pi(k, m).numeric().real() - std::cos(t) / std::sin(t)) < 1e-9 &&
                     std::abs(csc_pi(k, m).numeric().real() - 1 / std::sin(t)) < 1e-9;
        }
    o.need(floats, "cot/csc agree with floating point for m <= 24");
    return o;
}

Outcome c7() {
    Outcome o;
    bool closed = true;
    for (int n = 1; n <= 12; ++n)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) closed = closed && torus_model(Q(i, n), Q(j, n), true).closed_forms_agree;
    o.need(closed, "closed forms equal the exterior-power traces for n <= 12");
    o.need(!order_admits_integral_angles(9), "order 9 violates integrality");
    o.need(!order_admits_integral_angles(16), "order 16 violates integrality");
    std::vector<std::pair<Q, Q>> w;
    if (order_admits_integral_angles(12, &w)) {
        o.ok = false;
        o.notes.push_back("order 12 admits integral angles, e.g. (" + w[0].first.str() + ", " + w[0].second.str() + ")");
    }
    return o;
}

Outcome c8() {
    Outcome o;
    auto r = hj_resolution(2, 1);
    o.need(r.chain == std::vector<int>{2} && r.delta_K2 == 0, "(2,1)");
    r = hj_resolution(4, 1);
    o.need(r.delta_K2 == -1, "(4,1) gives -1");
    r = hj_resolution(8, 3);
    o.need(r.chain == std::vector<int>{3, 3} && r.delta_K2 == -1, "(8,3) chain [3,3], -1");
    r = hj_resolution(8, 7);
    o.need(r.chain == std::vector<int>(7, 2) && r.delta_K2 == 0, "(8,7) seven (-2)'s, 0");
    bool iff = true;
    for (int m = 2; m <= 12; ++m)
        for (int b = 1; b < m; ++b) {
            if (std::gcd(m, b) != 1) continue;
            auto s = hj_resolution(m, b);
            bool zero = true;
            for (const auto& d : s.discrepancies) zero = zero && d == 0;
            iff = iff && zero == (b == m - 1);
        }
    o.need(iff, "discrepancies vanish iff b = m - 1, m <= 12");
    return o;
}

Outcome c9() {
    Outcome o;
    std::mt19937_64 g(7);
    auto u = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
    bool refl = true;
    const int n = 10;
    HClass K = BlowupLattice(n).K();
    for (int it = 0; it < 1000; ++it) {
        HClass x(u(-5, 5), {}), y(u(-5, 5), {});
        for (int i = 0; i < n; ++i) x.b.push_back(u(-5, 5)), y.b.push_back(u(-5, 5));
        int k = u(1, n), i = 1 + (it % n), j = 1 + ((it + 3) % n), l = 1 + ((it + 7) % n);
        HClass c = reflect_cremona(x, i, j, l);
        refl = refl && reflect_exceptional(reflect_exceptional(x, k), k) == x &&
               pair(reflect_exceptional(x, k), reflect_exceptional(y, k)) == pair(x, y) &&
               reflect_cremona(c, i, j, l) == x && pair(c, reflect_cremona(y, i, j, l)) == pair(x, y) &&
               reflect_cremona(K, i, j, l) == K && adjunction_genus(c) == adjunction_genus(x);
    }
    o.need(refl, "reflections: involutions, isometries, adjunction invariant (1000 classes)");
    bool sound = true;
    int feasible_count = 0;
    for (int it = 0; it < 300; ++it) {
        int m = u(3, 6);
        AreaSystem s = reduced_basis_system(m, false);
        for (int r = 0; r < u(1, 4); ++r) {
            LinearForm f(m);
            for (int i = 0; i <= m; ++i) f.coef[i] = u(-3, 3);
            static const Rel rels[] = {Rel::gt, Rel::ge, Rel::eq};
            s.add(f, rels[u(0, 2)]);
        }
        auto w = feasible(s);
        if (!w) continue;
        ++feasible_count;
        auto twice = w->values;
        for (auto& v : twice) v *= 2;
        sound = sound && s.satisfied_by(w->values) && s.satisfied_by(twice);
    }
    o.need(sound && feasible_count > 0, "area witnesses sound and scale-invariant");
    o.need(run_verifier("lemma-3.5").pass, "support sizes for N <= 13, a <= 6");
    o.need(run_verifier("lemma-4.2").pass, "negative classes and zero-square windows");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"classification of eight disjoint (-2)-classes at N = 9", c1},
        {"N = 9 roots: 240, orthogonal sets of size 8", c2},
        {"N = 7, 8 survivors are Fano; explicit tuples", c3},
        {"proposition searches: one torus, empty, empty; cases eliminated", c4},
        {"fixed-point tables", c5},
        {"exact trig values and defects", c6},
        {"torus model", c7},
        {"resolution calculus", c8},
        {"property suites", c9},
    };
    bool gate = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool unexpected = false;
        for (const auto& n : o.notes) unexpected = unexpected || n.rfind("missing:", 0) == 0 || n.rfind("exception:", 0) == 0;
        bool documented = !o.ok && !unexpected && documented_unattainable.count(id);
        std::cout << "criterion " << id << ": "
                  << (o.ok ? "PASS" : documented ? "FAIL (documented unattainable)" : "FAIL") << "  "
                  << criteria[i].first << "  [" << std::fixed << std::setprecision(1) << secs << "s]\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        if (!o.ok && !documented) gate = false;
    }
    return gate ? 0 : 1;
}
