// Bounded exhaustive searches for the three torus-configuration statements.
#include "rat4/config_search.hpp"
#include "rat4/sphere_enum.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rat4 {

namespace {

struct Window {
    int lo = 0, hi = 0;
};

// Embedded spheres with square -alpha and a in [lo, hi]; negative a only in the normal form.
std::vector<HClass> sphere_pool(int n, int alpha, Window w) {
    std::vector<HClass> out;
    for (int a = w.lo; a <= w.hi; ++a) {
        auto xs = a < 0 ? negative_forms(n, alpha, a) : surface_classes(n, 0, -alpha, a);
        out.insert(out.end(), xs.begin(), xs.end());
    }
    return out;
}

std::vector<HClass> genus_pool(int n, int genus, int self_int, Window w) {
    std::vector<HClass> out;
    for (int a = w.lo; a <= w.hi; ++a) {
        auto xs = surface_classes(n, genus, self_int, a);
        out.insert(out.end(), xs.begin(), xs.end());
    }
    return out;
}

struct Unit {
    std::vector<HClass> cls;
    HClass w;  // weighted contribution to the K-equation
    bool negative = false;
};

struct Node {
    std::vector<HClass> rows;
    HClass wsum;
    int units = 0;
    bool negative = false;
};

bool orthogonal(const std::vector<HClass>& rows, const std::vector<HClass>& add) {
    for (const auto& x : add)
        for (const auto& r : rows)
            if (pair(x, r) != 0) return false;
    return true;
}

// Two negative-a spheres always meet, so a configuration has at most one negative unit.
void check_negative_units(const std::vector<Unit>& pool) {
    std::vector<const HClass*> neg;
    for (const auto& u : pool)
        for (const auto& c : u.cls)
            if (c.a < 0) neg.push_back(&c);
    for (std::size_t i = 0; i < neg.size(); ++i)
        for (std::size_t j = i; j < neg.size(); ++j)
            if (pair(*neg[i], *neg[j]) == 0) throw std::logic_error("two negative-a spheres are disjoint");
}

struct Search {
    std::vector<Unit> pool;
    int count = 0;
    std::optional<HClass> target;
    long unit_min = 0, unit_max = 0;  // weighted a per unit
    std::vector<long> level_counts;    // orbit counts after each level

    void set_pool(std::vector<Unit> p) {
        pool = std::move(p);
        unit_min = 0;
        unit_max = 0;
        for (const auto& u : pool) {
            unit_min = std::min<long>(unit_min, u.w.a);
            unit_max = std::max<long>(unit_max, u.w.a);
        }
        check_negative_units(pool);
    }

    bool admissible(const Node& x) const {
        if (!target) return true;
        long r = count - x.units;
        long need = target->a - x.wsum.a;
        if (r == 0) return x.wsum == *target;
        long lo = x.negative ? 0 : unit_min;
        return need >= lo && need <= r * unit_max;
    }

    std::vector<Node> run(std::vector<Node> start) {
        std::map<std::vector<int>, Node> level;
        for (auto& s : start) level.emplace(canonical_key(s.rows), std::move(s));
        level_counts.clear();
        for (int step = 0; step < count && !level.empty(); ++step) {
            std::vector<const Node*> reps;
            for (auto& [k, v] : level) reps.push_back(&v);
            std::vector<std::map<std::vector<int>, Node>> local(reps.size());
            parallel_for(reps.size(), [&](std::size_t r) {
                const Node& base = *reps[r];
                for (const auto& u : pool) {
                    if (u.negative && base.negative) continue;
                    if (!orthogonal(base.rows, u.cls)) continue;
                    Node nx = base;
                    nx.rows.insert(nx.rows.end(), u.cls.begin(), u.cls.end());
                    nx.wsum = nx.wsum + u.w;
                    nx.units += 1;
                    nx.negative = nx.negative || u.negative;
                    if (!admissible(nx)) continue;
                    auto key = canonical_key(nx.rows);
                    local[r].emplace(std::move(key), std::move(nx));
                }
            });
            std::map<std::vector<int>, Node> next;
            for (auto& m : local) next.merge(m);
            level = std::move(next);
            level_counts.push_back(static_cast<long>(level.size()));
        }
        std::vector<Node> out;
        for (auto& [k, v] : level) out.push_back(std::move(v));
        return out;
    }
};

std::vector<Unit> single_units(const std::vector<HClass>& xs, long weight = 1) {
    std::vector<Unit> out;
    for (const auto& x : xs) out.push_back({{x}, weight * x, x.a < 0});
    return out;
}

Node seed(const std::vector<HClass>& rows) {
    Node s;
    s.rows = rows;
    s.wsum = BlowupLattice(rows.at(0).n()).zero();
    return s;
}

std::vector<std::vector<HClass>> extend_prefixes(const std::vector<std::vector<HClass>>& base,
                                                 const std::vector<HClass>& pool, int count) {
    Search s;
    s.set_pool(single_units(pool));
    s.count = count;
    std::vector<Node> start;
    for (const auto& b : base) start.push_back(seed(b));
    std::vector<std::vector<HClass>> out;
    for (auto& x : s.run(start)) out.push_back(std::move(x.rows));
    return out;
}

HClass sum_of(const std::vector<HClass>& xs, int n) {
    HClass s = BlowupLattice(n).zero();
    for (const auto& x : xs) s = s + x;
    return s;
}

long a_sum(const std::vector<HClass>& xs) {
    long s = 0;
    for (const auto& x : xs) s += x.a;
    return s;
}

std::string a_profile(const std::vector<HClass>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].a;
    return os.str();
}

struct Stage {
    std::string name;
    long count = 0;
};

json stages_json(const std::vector<Stage>& st) {
    json j = json::array();
    for (const auto& s : st) j.push_back({{"stage", s.name}, {"count", s.count}});
    return j;
}

std::vector<HClass> rows_with_square(const std::vector<HClass>& rows, long sq) {
    std::vector<HClass> out;
    for (const auto& r : rows)
        if (square(r) == sq) out.push_back(r);
    return out;
}

HClass zero_a_minus3(int n, int plus, int m1, int m2) {
    HClass x(0, std::vector<int>(n, 0));
    x.b[plus - 1] = -1;
    x.b[m1 - 1] = 1;
    x.b[m2 - 1] = 1;
    return x;
}

// ---------------------------------------------------------------------------
// Torus with three (-3)-spheres and a pair of (-2)-spheres meeting once, N = 10.

struct Windows43 {
    Window F{-1, 3}, F4{0, 4}, torus{3, 5}, sphere{-2, 3}, genus2{4, 6};
    int max_tori = 2;
    Windows43 widened() const {
        Windows43 w = *this;
        w.F.hi += 1;
        w.F4.hi += 1;
        w.torus.hi += 1;
        w.sphere.hi += 1;
        w.genus2.hi += 1;
        w.max_tori += 1;
        return w;
    }
};

// A negative-a sphere aH + (|a|+1)E_j - ... forces E_j to have the strictly largest area.
void add_negative_sphere_rows(AreaSystem& s, const std::vector<HClass>& rows) {
    for (const auto& r : rows) {
        if (r.a >= 0) continue;
        for (int j = 0; j < r.n(); ++j) {
            if (r.b[j] != r.a - 1) continue;
            for (int i = 0; i < r.n(); ++i)
                if (i != j)
                    s.add(LinearForm::wE(r.n(), j + 1) - LinearForm::wE(r.n(), i + 1), Rel::gt,
                          "w(E" + std::to_string(j + 1) + ") > w(E" + std::to_string(i + 1) + ") for " + r.str());
        }
    }
}

struct Branch {
    std::string name;
    std::vector<Stage> stages;
    std::vector<std::vector<HClass>> solutions;
    std::vector<ConfigFamily> families;
};

AreaSystem area_rows_43(const std::vector<HClass>& rows, bool monotone) {
    int n = rows.at(0).n();
    AreaSystem s = reduced_basis_system(n, monotone);
    auto F = rows_with_square(rows, -3);
    auto F4 = rows_with_square(rows, -2);
    std::vector<HClass> B;
    for (const auto& r : rows)
        if (square(r) != -3 && square(r) != -2) B.push_back(r);
    for (const auto& r : rows) s.add(area_of(r), Rel::gt, "w(" + r.str() + ") > 0");
    s.add(area_of(F4.at(0)) - area_of(F4.at(1)), Rel::eq, "the two (-2)-spheres have equal area");
    s.add(minus_K_area(n) - area_of(F4.at(0)), Rel::gt, "w((-2)-sphere) < -K.w");
    for (std::size_t k = 1; k < F.size(); ++k)
        s.add(area_of(F[k]) - area_of(F[0]), Rel::eq, "the (-3)-spheres have equal area");
    for (const auto& b : B)
        s.add(area_of(b) - area_of(F.at(0)), Rel::gt, "w((-3)-sphere) < w(" + b.str() + ")");
    add_negative_sphere_rows(s, rows);
    return s;
}

// Every component has positive area in some reduced basis.
AreaSystem positive_area_rows(const std::vector<HClass>& rows, bool monotone) {
    AreaSystem s = reduced_basis_system(rows.at(0).n(), monotone);
    for (const auto& r : rows) s.add(area_of(r), Rel::gt, "w(" + r.str() + ") > 0");
    add_negative_sphere_rows(s, rows);
    return s;
}

using RowBuilder = AreaSystem (*)(const std::vector<HClass>&, bool);

std::vector<ConfigFamily> area_stage(const std::vector<std::vector<HClass>>& cand, RowBuilder rows) {
    std::vector<std::optional<ConfigFamily>> out(cand.size());
    parallel_for(cand.size(), [&](std::size_t i) {
        auto wit = feasible(rows(cand[i], false));
        if (!wit) return;
        ConfigFamily f;
        f.tuple = canonical_tuple(cand[i]);
        f.realized = cand[i];
        make_monotone(f.realized, *wit);
        if (!rows(f.realized, true).satisfied_by(wit->values))
            throw std::logic_error("relabeled witness fails the area rows");
        f.witness = std::move(wit);
        f.label = "other";
        out[i] = std::move(f);
    });
    std::vector<ConfigFamily> fams;
    for (auto& f : out)
        if (f) fams.push_back(std::move(*f));
    return fams;
}

std::vector<std::vector<HClass>> area_feasible(const std::vector<std::vector<HClass>>& cand) {
    std::vector<std::vector<HClass>> out;
    for (auto& f : area_stage(cand, positive_area_rows)) out.push_back(f.tuple);
    return out;
}

Branch run_43_branch(const std::string& name, const std::vector<std::vector<HClass>>& prefixes, const Windows43& w) {
    const int n = 10;
    Branch br;
    br.name = name;
    br.stages.push_back({"component sets", static_cast<long>(prefixes.size())});
    // 3K = -2 sum B - sum F
    HClass minus3K = -3 * BlowupLattice(n).K();
    std::vector<std::vector<HClass>> balanced;
    for (const auto& p : prefixes) {
        long need = minus3K.a - 2 * a_sum(p);
        if (need >= -1 && need <= 3L * w.F.hi) balanced.push_back(p);
    }
    br.stages.push_back({"a-coefficient balance", static_cast<long>(balanced.size())});

    Search fs;
    fs.set_pool(single_units(sphere_pool(n, 3, w.F)));
    fs.count = 3;
    std::vector<Node> with_f;
    for (const auto& p : balanced) {
        fs.target = minus3K - 2 * sum_of(p, n);
        auto r = fs.run({seed(p)});
        with_f.insert(with_f.end(), r.begin(), r.end());
    }
    br.stages.push_back({"canonical class equation", static_cast<long>(with_f.size())});

    std::vector<HClass> f4pool;
    for (const auto& x : area_bounded_forms(n, 2))
        if (x.a >= w.F4.lo && x.a <= w.F4.hi) f4pool.push_back(x);
    for (int a = 5; a <= w.F4.hi; ++a) {
        auto extra = observation_forms(n, 2, a);
        f4pool.insert(f4pool.end(), extra.begin(), extra.end());
    }
    std::map<std::vector<int>, std::vector<HClass>> full;
    for (const auto& node : with_f) {
        std::vector<HClass> ok;
        for (const auto& x : f4pool)
            if (orthogonal(node.rows, {x})) ok.push_back(x);
        for (std::size_t i = 0; i < ok.size(); ++i)
            for (std::size_t j = i + 1; j < ok.size(); ++j) {
                if (pair(ok[i], ok[j]) != 1) continue;
                auto rows = node.rows;
                rows.push_back(ok[i]);
                rows.push_back(ok[j]);
                full.emplace(canonical_key(rows), canonical_tuple(rows));
            }
    }
    br.stages.push_back({"(-2)-pair meeting once", static_cast<long>(full.size())});

    std::vector<std::vector<HClass>> cand;
    for (auto& [k, v] : full) cand.push_back(v);
    br.families = area_stage(cand, area_rows_43);
    for (const auto& f : br.families) br.solutions.push_back(f.tuple);
    br.stages.push_back({"area conditions", static_cast<long>(br.solutions.size())});
    return br;
}

std::vector<std::vector<HClass>> singletons(const std::vector<HClass>& pool) {
    std::map<std::vector<int>, std::vector<HClass>> m;
    for (const auto& x : pool) m.emplace(canonical_key({x}), std::vector<HClass>{x});
    std::vector<std::vector<HClass>> out;
    for (auto& [k, v] : m) out.push_back(v);
    return out;
}

struct Result43 {
    Branch torus;
    std::vector<Branch> cases;  // sphere component with a in the case's range
};

Result43 run_43(const Windows43& w) {
    const int n = 10;
    Result43 r;
    auto tori = genus_pool(n, 1, 0, w.torus);
    std::vector<std::vector<HClass>> torus_sets;
    for (int m = 1; m <= w.max_tori; ++m) {
        auto xs = orthogonal_orbits(tori, m);
        torus_sets.insert(torus_sets.end(), xs.begin(), xs.end());
    }
    r.torus = run_43_branch("tori only", torus_sets, w);

    auto g2 = genus_pool(n, 2, 6, w.genus2);
    struct CaseDef {
        std::string name;
        int lo, hi;
    };
    std::vector<CaseDef> defs = {{"Case (1): sphere with a = -2", -2, -2},
                                 {"Case (2): sphere with a = -1", -1, -1},
                                 {"Case (3): sphere with a = 0", 0, 0},
                                 {"Case (4): sphere with a = 1", 1, 1},
                                 {"Case (5): sphere with a > 1", 2, w.sphere.hi}};
    for (const auto& d : defs) {
        auto spheres = sphere_pool(n, 6, {d.lo, d.hi});
        auto sets = extend_prefixes(singletons(spheres), g2, 1);
        std::vector<std::vector<HClass>> all = sets;
        auto cur = sets;
        for (int m = 1; m <= w.max_tori; ++m) {
            cur = extend_prefixes(cur, tori, 1);
            all.insert(all.end(), cur.begin(), cur.end());
        }
        r.cases.push_back(run_43_branch(d.name, all, w));
    }
    return r;
}

std::set<std::vector<int>> keys_of(const std::vector<std::vector<HClass>>& xs) {
    std::set<std::vector<int>> s;
    for (const auto& x : xs) s.insert(canonical_key(x));
    return s;
}

json branch_json(const Branch& b, bool with_solutions) {
    json j = {{"name", b.name}, {"stages", stages_json(b.stages)}, {"solutions", b.solutions.size()}};
    if (with_solutions) {
        json s = json::array();
        for (const auto& f : b.families) s.push_back(family_json(f));
        j["solution_set"] = s;
    }
    return j;
}

std::string stage_line(const Branch& b) {
    std::ostringstream os;
    os << b.name << ":";
    for (const auto& s : b.stages) os << " " << s.name << " " << s.count << ";";
    return os.str();
}

Report verify_43() {
    Report rep;
    rep.target = "prop-4.3";
    rep.note("X = CP2 # 10; 3K = -2 sum B - (F1 + F2 + F3); (-2)-spheres F41, F42 with F41.F42 = 1");
    Windows43 w;
    auto r = run_43(w);
    rep.note(stage_line(r.torus));
    bool single_torus = !r.torus.solutions.empty();
    std::set<int> torus_a;
    for (const auto& s : r.torus.solutions) {
        std::vector<HClass> B;
        for (const auto& x : s)
            if (square(x) == 0) B.push_back(x);
        single_torus = single_torus && B.size() == 1 && adjunction_genus(B[0]) == 1;
        if (B.size() == 1) torus_a.insert(B[0].a);
    }
    std::string as;
    for (int a : torus_a) as += (as.empty() ? "" : ",") + std::to_string(a);
    rep.check(single_torus, "every solution has exactly one component B, a torus (a-coefficient " + as + ")");
    rep.note("torus a-coefficients among solutions: " + as);
    for (const auto& c : r.cases) {
        rep.note(stage_line(c));
        rep.check(c.solutions.empty(), c.name + " eliminated");
    }
    bool witnesses = true;
    for (const auto& f : r.torus.families)
        witnesses = witnesses && f.witness && area_rows_43(f.realized, true).satisfied_by(f.witness->values);
    rep.check(witnesses, std::to_string(r.torus.families.size()) + " area witnesses re-verify");

    auto wide = run_43(w.widened());
    bool stable = keys_of(wide.torus.solutions) == keys_of(r.torus.solutions);
    for (const auto& c : wide.cases) stable = stable && c.solutions.empty();
    rep.check(stable, "solution sets unchanged with every a-window widened by one");

    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(branch_json(c, false));
    rep.data = {{"n", 10},
                {"torus_a", torus_a},
                {"torus_branch", branch_json(r.torus, true)},
                {"cases", cases},
                {"stable_under_widening", stable}};
    return rep;
}

// ---------------------------------------------------------------------------
// Nine (-3)-spheres and tori, N = 12.

struct Windows44 {
    Window F{-1, 4}, torus{3, 5};
    int max_tori = 2;
    Windows44 widened() const {
        Windows44 w = *this;
        w.F.hi += 1;
        w.torus.hi += 1;
        w.max_tori += 1;
        return w;
    }
};

std::vector<Branch> run_44(const Windows44& w) {
    const int n = 12;
    auto tori = genus_pool(n, 1, 0, w.torus);
    HClass minus3K = -3 * BlowupLattice(n).K();
    Search fs;
    fs.set_pool(single_units(sphere_pool(n, 3, w.F)));
    fs.count = 9;
    std::vector<Branch> out;
    for (int m = 1; m <= w.max_tori; ++m) {
        for (int a = w.torus.lo; a <= w.torus.hi; ++a) {
            if (m > 1 && a > w.torus.lo) break;  // m >= 2 is reported once, over every a
            Branch br;
            std::vector<std::vector<HClass>> prefixes;
            for (auto& p : orthogonal_orbits(tori, m)) {
                bool keep = m > 1 || p[0].a == a;
                if (keep) prefixes.push_back(p);
            }
            br.name = m == 1 ? "one torus with a = " + std::to_string(a) : std::to_string(m) + " tori";
            br.stages.push_back({"component sets", static_cast<long>(prefixes.size())});
            std::vector<std::vector<HClass>> balanced;
            for (const auto& p : prefixes) {
                long need = minus3K.a - 2 * a_sum(p);
                if (need >= -1 && need <= 9L * w.F.hi) balanced.push_back(p);
            }
            br.stages.push_back({"a-coefficient balance", static_cast<long>(balanced.size())});
            std::vector<long> deepest;
            std::vector<std::vector<HClass>> eq;
            for (const auto& p : balanced) {
                fs.target = minus3K - 2 * sum_of(p, n);
                auto r = fs.run({seed(p)});
                if (fs.level_counts.size() > deepest.size()) deepest = fs.level_counts;
                for (auto& x : r) eq.push_back(x.rows);
            }
            std::ostringstream os;
            for (std::size_t i = 0; i < deepest.size(); ++i) os << (i ? "," : "") << deepest[i];
            br.stages.push_back({"partial (-3)-configurations per level [" + os.str() + "]",
                                 static_cast<long>(deepest.size())});
            br.stages.push_back({"canonical class equation", static_cast<long>(eq.size())});
            br.families = area_stage(eq, positive_area_rows);
            for (const auto& f : br.families) br.solutions.push_back(f.tuple);
            br.stages.push_back({"positive areas", static_cast<long>(br.solutions.size())});
            out.push_back(br);
        }
    }
    return out;
}

Report verify_44() {
    Report rep;
    rep.target = "prop-4.4";
    rep.note("X = CP2 # 12; 3K = -(F1 + ... + F9) - 2 sum B with every B a square-zero torus");
    const int n = 12;
    auto zero = observation_forms(n, 3, 0);
    auto six = area_feasible(orthogonal_orbits(zero, 6));
    auto seven = area_feasible(orthogonal_orbits(zero, 7));
    std::vector<HClass> pattern = {zero_a_minus3(n, 1, 2, 3), zero_a_minus3(n, 2, 3, 4),
                                   zero_a_minus3(n, 5, 6, 7), zero_a_minus3(n, 6, 7, 8),
                                   zero_a_minus3(n, 9, 10, 11), zero_a_minus3(n, 10, 11, 12)};
    rep.check(seven.empty(), "no seven pairwise-disjoint zero-a (-3)-classes");
    rep.check(six.size() == 1 && canonical_key(six[0]) == canonical_key(pattern),
              "six pairwise-disjoint zero-a (-3)-classes form the three linked couples, uniquely");

    Windows44 w;
    auto br = run_44(w);
    bool empty = true;
    for (const auto& b : br) {
        rep.note(stage_line(b));
        empty = empty && b.solutions.empty();
        rep.check(b.solutions.empty(), b.name + ": no configuration");
    }
    auto wide = run_44(w.widened());
    bool stable = true;
    for (const auto& b : wide) stable = stable && b.solutions.empty();
    rep.check(stable, "still empty with every a-window widened by one");
    json bj = json::array();
    for (const auto& b : br) bj.push_back(branch_json(b, false));
    rep.data = {{"n", n},
                {"zero_a_maximum", 6},
                {"zero_a_pattern", tuple_json(six.empty() ? std::vector<HClass>{} : six[0])},
                {"branches", bj},
                {"solution_set", json::array()},
                {"stable_under_widening", stable}};
    return rep;
}

// ---------------------------------------------------------------------------
// Five (-3)/(-2) pairs meeting once and tori, N = 11.

struct Windows45 {
    Window F1{-1, 2}, F2{0, 5}, torus{3, 4};
    int max_tori = 1;
    Windows45 widened() const {
        Windows45 w = *this;
        w.F1.hi += 1;
        w.F2.hi += 1;
        w.torus.hi += 1;
        w.max_tori += 1;
        return w;
    }
};

std::vector<Unit> pair_units(int n, const Windows45& w, long max_weight) {
    auto f1 = sphere_pool(n, 3, w.F1);
    auto f2 = sphere_pool(n, 2, w.F2);
    std::vector<Unit> out;
    for (const auto& x : f1)
        for (const auto& y : f2) {
            if (2L * x.a + y.a > max_weight) continue;
            if (pair(x, y) != 1) continue;
            out.push_back({{x, y}, 2 * x + y, x.a < 0 || y.a < 0});
        }
    return out;
}

std::vector<Branch> run_45(const Windows45& w) {
    const int n = 11;
    auto tori = genus_pool(n, 1, 0, w.torus);
    HClass minus5K = -5 * BlowupLattice(n).K();
    std::vector<Branch> out;
    for (int m = 1; m <= w.max_tori; ++m) {
        for (auto& p : orthogonal_orbits(tori, m)) {
            Branch br;
            long asum = a_sum(p);
            br.name = (m == 1 ? "torus a = " : "tori a = ") + a_profile(p);
            if (m == 1 && p[0].a == 4) br.name = "Case (1): " + br.name;
            if (m == 1 && p[0].a == 3) br.name = "Case (2): " + br.name;
            long need = minus5K.a - 4 * asum;
            br.stages.push_back({"component sets", 1});
            if (need < -2) {
                br.stages.push_back({"a-coefficient balance", 0});
                out.push_back(br);
                continue;
            }
            br.stages.push_back({"a-coefficient balance", 1});
            Search s;
            std::vector<Unit> units;
            for (auto& u : pair_units(n, w, need + 2))
                if (orthogonal(p, u.cls)) units.push_back(std::move(u));
            s.set_pool(std::move(units));
            s.count = 5;
            s.target = minus5K - 4 * sum_of(p, n);
            auto r = s.run({seed(p)});
            std::ostringstream os;
            for (std::size_t i = 0; i < s.level_counts.size(); ++i) os << (i ? "," : "") << s.level_counts[i];
            br.stages.push_back({"pairs disjoint from B", static_cast<long>(s.pool.size())});
            br.stages.push_back({"partial configurations per level [" + os.str() + "]",
                                 static_cast<long>(s.level_counts.size())});
            std::vector<std::vector<HClass>> eq;
            for (auto& x : r) eq.push_back(x.rows);
            br.stages.push_back({"canonical class equation", static_cast<long>(eq.size())});
            br.families = area_stage(eq, positive_area_rows);
            for (const auto& f : br.families) br.solutions.push_back(f.tuple);
            br.stages.push_back({"positive areas", static_cast<long>(br.solutions.size())});
            out.push_back(br);
        }
    }
    return out;
}

Report verify_45() {
    Report rep;
    rep.target = "prop-4.5";
    rep.note("X = CP2 # 11; 5K = -sum (2 F_j1 + F_j2) - 4 sum B, F_j1.F_j2 = 1, every B a square-zero torus");
    const int n = 11;
    Windows45 w;
    auto br = run_45(w);
    for (const auto& b : br) {
        rep.note(stage_line(b));
        rep.check(b.solutions.empty(), b.name + " eliminated");
    }

    // The four zero-a (-3)-spheres in both cases.
    auto zero = observation_forms(n, 3, 0);
    auto four = area_feasible(orthogonal_orbits(zero, 4));
    std::vector<HClass> bang = {zero_a_minus3(n, 1, 2, 3), zero_a_minus3(n, 2, 3, 4), zero_a_minus3(n, 5, 6, 7),
                                zero_a_minus3(n, 6, 7, 8)};
    std::vector<HClass> bangbang = {zero_a_minus3(n, 1, 2, 3), zero_a_minus3(n, 2, 3, 4),
                                    zero_a_minus3(n, 5, 6, 7), zero_a_minus3(n, 8, 9, 10)};
    rep.check(four.size() == 2 && keys_of(four) == keys_of({bang, bangbang}),
              "four disjoint zero-a (-3)-classes have exactly the shapes (!) and (!!)");

    auto tori = genus_pool(n, 1, 0, w.torus);
    json pj = json::array();
    for (int a : {4, 3}) {
        std::string cname = a == 4 ? "Case (1)" : "Case (2)";
        std::vector<std::vector<HClass>> base;
        for (const auto& t : orthogonal_orbits(tori, 1))
            if (t[0].a == a) base.push_back(t);
        if (a == 4) base = extend_prefixes(base, negative_forms(n, 3, -1), 1);
        // torus (and the negative class) together with four zero-a classes
        auto with = area_feasible(extend_prefixes(base, zero, 4));
        for (const auto& [label, pat] : {std::pair<std::string, std::vector<HClass>>{"(!)", bang},
                                         {"(!!)", bangbang}}) {
            long cnt = 0;
            for (const auto& c : with) {
                std::vector<HClass> z;
                for (const auto& x : c)
                    if (x.a == 0) z.push_back(x);
                if (canonical_key(z) == canonical_key(pat)) ++cnt;
            }
            long completions = 0;
            for (const auto& b : br) {
                if (b.name.rfind(cname, 0) != 0) continue;
                for (const auto& s : b.solutions) {
                    std::vector<HClass> z;
                    for (const auto& x : s)
                        if (x.a == 0 && square(x) == -3) z.push_back(x);
                    if (z.size() == 4 && canonical_key(z) == canonical_key(pat)) ++completions;
                }
            }
            std::string what = cname + " pattern " + label + ": " + std::to_string(cnt) +
                               " disjoint placements beside the torus" + (a == 4 ? " and -H + 2E" : "") +
                               ", " + std::to_string(completions) + " completions";
            rep.note(what);
            rep.check(completions == 0, cname + " pattern " + label + " eliminated");
            pj.push_back({{"case", cname}, {"pattern", label}, {"placements", cnt}, {"completions", completions}});
        }
    }

    auto wide = run_45(w.widened());
    bool stable = true;
    for (const auto& b : wide) stable = stable && b.solutions.empty();
    rep.check(stable, "still empty with every a-window widened by one");
    json bj = json::array();
    for (const auto& b : br) bj.push_back(branch_json(b, false));
    rep.data = {{"n", n},
                {"branches", bj},
                {"patterns", pj},
                {"solution_set", json::array()},
                {"stable_under_widening", stable}};
    return rep;
}

}  // namespace

Report verify_prop(const std::string& which) {
    if (which == "4.3") return verify_43();
    if (which == "4.4") return verify_44();
    if (which == "4.5") return verify_45();
    throw std::invalid_argument("unknown proposition: " + which);
}

}  // namespace rat4
