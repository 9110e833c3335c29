#include "rat4/report.hpp"

#include "rat4/config_search.hpp"
#include "rat4/cyclotomic.hpp"
#include "rat4/gindex.hpp"
#include "rat4/sphere_enum.hpp"

#include <sstream>
#include <stdexcept>

namespace rat4 {

bool Report::check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) {
        pass = false;
        failures.push_back(what);
    }
    return ok;
}

std::string Report::text() const {
    std::ostringstream os;
    os << target << ": " << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& l : lines) os << "  " << l << "\n";
    return os.str();
}

json Report::to_json() const {
    json j = json::object();
    j["target"] = target;
    j["pass"] = pass;
    j["checks"] = lines;
    j["failures"] = failures;
    j["data"] = data;
    return j;
}

namespace {

Report verify_support() {
    Report rep;
    rep.target = "lemma-3.5";
    rep.note("classes with A^2 = -alpha, K.A = alpha - 2, a > 3, b >= 0, up to permutation");
    json rows = json::array();
    bool ok = true;
    for (int n = 9; n <= 13; ++n)
        for (int alpha = 2; alpha <= 3; ++alpha)
            for (int a = 4; a <= 6; ++a) {
                auto st = support_stats(n, alpha, a);
                bool good = st.classes == 0 || st.min_support >= alpha + 7;
                ok = ok && good;
                rows.push_back({{"n", n}, {"alpha", alpha}, {"a", a}, {"classes", st.classes},
                                {"min_support", st.min_support}});
                if (st.classes > 0)
                    rep.note("N=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " a=" +
                             std::to_string(a) + ": " + std::to_string(st.classes) + " classes, min support " +
                             std::to_string(st.min_support));
                if (!good)
                    rep.check(false, "N=" + std::to_string(n) + " alpha=" + std::to_string(alpha) +
                                         " a=" + std::to_string(a) + " has support " +
                                         std::to_string(st.min_support));
            }
    rep.check(ok, "every class with 4 <= a <= 6 has at least alpha + 7 nonzero b_i (N = 9..13, alpha = 2, 3)");

    HClass A(4, {2, 2, 2, 1, 1, 1, 1, 1, 1});
    auto trail = reduce_by_cremona(A);
    rep.check(trail.terminal.a == 2 && square(trail.terminal) == -2 && k_dot(trail.terminal) == 0,
              A.str() + " reduces to " + trail.terminal.str());
    rep.data = {{"table", rows}, {"reduction", {{"from", A.str()}, {"to", trail.terminal.str()}}}};
    return rep;
}

Report verify_negative_and_tori() {
    Report rep;
    rep.target = "lemma-4.2";
    long pairs = 0;
    bool negative = true;
    std::string bad;
    for (int n = 9; n <= 12; ++n) {
        std::vector<HClass> forms;
        for (int alpha = 2; alpha <= 6; ++alpha)
            for (int a = -1; 2 * -a <= alpha; --a)
                for (auto& x : negative_forms(n, alpha, a, true)) forms.push_back(x);
        for (std::size_t i = 0; i < forms.size(); ++i)
            for (std::size_t j = i + 1; j < forms.size(); ++j) {
                ++pairs;
                if (pair(forms[i], forms[j]) >= 0 && negative) {
                    negative = false;
                    bad = forms[i].str() + " , " + forms[j].str();
                }
            }
    }
    rep.check(negative, "two negative-a sphere classes always meet negatively (" + std::to_string(pairs) +
                            " pairs, N = 9..12, alpha = 2..6)" + (bad.empty() ? "" : ": " + bad));

    auto zs = zero_square_scan(10, 6, 6);
    long low = 0, a3 = 0, a3_shape = 0;
    for (const auto& B : zs) {
        if (!zero_square_a_ok(B)) ++low;
        if (B.a == 3) {
            ++a3;
            int ones = 0, zeros = 0;
            for (int v : B.b) ones += v == 1, zeros += v == 0;
            a3_shape += ones == 9 && zeros == 1;
        }
    }
    rep.note("B^2 = K.B = 0, N = 10, |a|, |b_i| <= 6: " + std::to_string(zs.size()) + " classes");
    rep.check(low == 0, "no such class has 0 <= a < 3");
    rep.check(a3 > 0 && a3 == a3_shape, "every a = 3 class is 3H - E_j1 - ... - E_j9 (" + std::to_string(a3) + ")");
    rep.data = {{"negative_pairs", pairs}, {"zero_square_classes", zs.size()}, {"a3_classes", a3}};
    return rep;
}

Report verify_identities() {
    Report rep;
    rep.target = "identities-2.10";
    CycNumber c1 = cot_pi(1, 5), c2 = cot_pi(2, 5), s1 = csc_pi(1, 5), s2 = csc_pi(2, 5);
    CycNumber cc = c1 * c2;
    rep.check(c1 * c1 - c2 * c2 == 4 * cc, "cot^2(pi/5) - cot^2(2pi/5) = 4 cot(pi/5) cot(2pi/5)");
    rep.check(5 * cc == 2 * (cos_pi(1, 5) + cos_pi(2, 5)), "5 cot(pi/5) cot(2pi/5) = 2 (cos(pi/5) + cos(2pi/5))");
    rep.check(s1 * s2 == 4 * cc, "csc(pi/5) csc(2pi/5) = 4 cot(pi/5) cot(2pi/5)");
    rep.check(s1 * c1 + s2 * c2 == 6 * cc, "csc(pi/5) cot(pi/5) + csc(2pi/5) cot(2pi/5) = 6 cot(pi/5) cot(2pi/5)");
    json defects = json::array();
    const std::pair<int, int> expect[] = {{1, -4}, {2, 0}, {4, 4}};
    for (auto [b, v] : expect) {
        Q d = signature_defect(IsolatedPoint{5, 1, b}, 5);
        defects.push_back({{"type", "(1," + std::to_string(b) + ")"}, {"defect", qstr(d)}});
        rep.check(d == v, "defect of a (1," + std::to_string(b) + ") point, p = 5: " + qstr(d));
    }
    rep.data = {{"cot_product", cc.str()}, {"defects", defects}};
    return rep;
}

}  // namespace

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> t = {"lemma-5.1", "thm-1.4-n7", "thm-1.4-n8", "thm-1.4-n9",
                                               "prop-4.3",  "prop-4.4",   "prop-4.5",   "lemma-3.5",
                                               "lemma-4.2", "identities-2.10"};
    return t;
}

Report run_verifier(const std::string& target) {
    if (target == "lemma-5.1") return verify_lemma_5_1();
    if (target == "thm-1.4-n7") return verify_thm_1_4(7);
    if (target == "thm-1.4-n8") return verify_thm_1_4(8);
    if (target == "thm-1.4-n9") return verify_thm_1_4(9);
    if (target == "prop-4.3") return verify_prop("4.3");
    if (target == "prop-4.4") return verify_prop("4.4");
    if (target == "prop-4.5") return verify_prop("4.5");
    if (target == "lemma-3.5") return verify_support();
    if (target == "lemma-4.2") return verify_negative_and_tori();
    if (target == "identities-2.10") return verify_identities();
    throw std::invalid_argument("unknown verify target: " + target);
}

Report verify_all(std::vector<Report>* parts) {
    Report all;
    all.target = "all";
    json summary = json::array();
    for (const auto& t : verify_targets()) {
        Report r = run_verifier(t);
        all.check(r.pass, t);
        summary.push_back({{"target", t}, {"pass", r.pass}});
        if (parts) parts->push_back(std::move(r));
    }
    all.data = {{"targets", summary}};
    return all;
}

}  // namespace rat4
