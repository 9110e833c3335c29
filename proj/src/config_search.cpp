#include "rat4/config_search.hpp"

#include "rat4/sphere_enum.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace rat4 {

namespace {

bool permutation_invariant(const std::vector<HClass>& xs) {
    std::set<HClass> s(xs.begin(), xs.end());
    for (const auto& x : xs)
        for (int i = 0; i + 1 < x.n(); ++i) {
            HClass y = x;
            std::swap(y.b[i], y.b[i + 1]);
            if (!s.count(y)) return false;
        }
    return true;
}

bool orthogonal_to_all(const std::vector<HClass>& t, const HClass& c) {
    for (const auto& x : t)
        if (pair(x, c) != 0) return false;
    return true;
}

using KeyMap = std::map<std::vector<int>, std::vector<HClass>>;

KeyMap levelwise(const std::vector<HClass>& cands, int k) {
    KeyMap level;
    for (const auto& c : cands) {
        std::vector<HClass> t{c};
        level.emplace(canonical_key(t), canonical_tuple(t));
    }
    for (int size = 1; size < k && !level.empty(); ++size) {
        std::vector<const std::vector<HClass>*> reps;
        for (auto& [key, t] : level) reps.push_back(&t);
        std::vector<KeyMap> local(reps.size());
        parallel_for(reps.size(), [&](std::size_t r) {
            for (const auto& c : cands) {
                if (!orthogonal_to_all(*reps[r], c)) continue;
                std::vector<HClass> t = *reps[r];
                t.push_back(c);
                auto cf = canonical_form(t);
                std::vector<int> key;
                for (const auto& row : cf.rows) {
                    key.push_back(row.a);
                    key.insert(key.end(), row.b.begin(), row.b.end());
                }
                local[r].emplace(std::move(key), std::move(cf.rows));
            }
        });
        KeyMap next;
        for (auto& m : local) next.merge(m);
        level = std::move(next);
    }
    return level;
}

KeyMap backtrack(const std::vector<HClass>& cands, int k) {
    KeyMap out;
    std::vector<HClass> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace(canonical_key(cur), canonical_tuple(cur));
            return;
        }
        for (std::size_t i = start; i < cands.size(); ++i) {
            if (!orthogonal_to_all(cur, cands[i])) continue;
            cur.push_back(cands[i]);
            rec(i);  // i, not i + 1: a square-zero class may repeat
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

AreaSystem positivity_rows(const std::vector<HClass>& t, bool monotone) {
    int n = t.at(0).n();
    AreaSystem s = reduced_basis_system(n, monotone);
    for (const auto& x : t) s.add(area_of(x), Rel::gt, "w(" + x.str() + ") > 0");
    return s;
}

std::vector<HClass> truncate(const std::vector<HClass>& t, int n) {
    std::vector<HClass> out;
    for (const auto& x : t) {
        for (int i = n; i < x.n(); ++i)
            if (x.b[i] != 0) return {};
        out.emplace_back(x.a, std::vector<int>(x.b.begin(), x.b.begin() + n));
    }
    return out;
}

HClass line(int n, std::initializer_list<int> idx) {
    HClass x(1, std::vector<int>(n, 0));
    for (int i : idx) x.b[i - 1] = 1;
    return x;
}

HClass difference(int n, int i, int j) {
    HClass x(0, std::vector<int>(n, 0));
    x.b[i - 1] = -1;
    x.b[j - 1] = 1;
    return x;
}

}  // namespace

std::vector<std::vector<HClass>> orthogonal_orbits(const std::vector<HClass>& candidates, int k) {
    if (k < 1 || candidates.empty()) return {};
    KeyMap m = permutation_invariant(candidates) ? levelwise(candidates, k) : backtrack(candidates, k);
    std::vector<std::vector<HClass>> out;
    for (auto& [key, t] : m) out.push_back(std::move(t));
    return out;
}

void make_monotone(std::vector<HClass>& tuple, Witness& w) {
    int n = tuple.at(0).n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int p, int q) { return w.values[p + 1] > w.values[q + 1]; });
    for (auto& x : tuple) x = permute_columns(x, order);
    std::vector<Q> v = w.values;
    for (int t = 0; t < n; ++t) v[t + 1] = w.values[order[t] + 1];
    w.values = std::move(v);
}

std::vector<ConfigFamily> disjoint_tuples(const std::vector<HClass>& candidates, int k, const AreaSystem* extra) {
    auto orbits = orthogonal_orbits(candidates, k);
    std::vector<std::optional<ConfigFamily>> slots(orbits.size());
    parallel_for(orbits.size(), [&](std::size_t i) {
        ConfigFamily f;
        f.tuple = orbits[i];
        if (extra) {
            AreaSystem s = positivity_rows(f.tuple, false);
            s.append(*extra);
            auto w = feasible(s);
            if (!w) return;
            f.realized = f.tuple;
            make_monotone(f.realized, *w);
            AreaSystem check = positivity_rows(f.realized, true);
            check.append(*extra);
            if (!check.satisfied_by(w->values)) throw std::logic_error("relabeled witness fails the monotone system");
            f.witness = std::move(w);
        }
        f.label = family_label(f.tuple);
        slots[i] = std::move(f);
    });
    std::vector<ConfigFamily> out;
    for (auto& f : slots)
        if (f) out.push_back(std::move(*f));
    return out;
}

AreaSystem delta_system(const std::vector<HClass>& tuple, int slot, bool monotone) {
    int n = tuple.at(0).n();
    if (slot < 0 || slot >= static_cast<int>(tuple.size())) throw std::out_of_range("delta slot");
    AreaSystem s = reduced_basis_system(n, monotone);
    LinearForm d1 = LinearForm::delta(n, 1), d2 = LinearForm::delta(n, 2);
    for (int j = 0; j < static_cast<int>(tuple.size()); ++j) {
        bool big = j == slot;
        s.add(area_of(tuple[j]) - (big ? d1 : d2), Rel::eq,
              "w(" + tuple[j].str() + ") = " + (big ? "delta1" : "delta2"));
    }
    LinearForm mk = minus_K_area(n);
    s.add(d2, Rel::gt, "delta2 > 0");
    s.add(d1 - d2, Rel::gt, "delta2 < delta1");
    s.add(Q(2) * d2 - d1, Rel::gt, "delta1 < 2 delta2");
    s.add(mk - Q(7) * d1, Rel::gt, "7 delta1 < -K.w");
    s.add(mk - Q(7) * d2, Rel::gt, "7 delta2 < -K.w");
    return s;
}

std::vector<HClass> reference_family(char label) {
    const int n = 9;
    switch (label) {
        case 'a': {
            HClass f(3, std::vector<int>(n, 1));
            f.b[0] = 2;
            f.b[8] = 0;
            return {f,
                    line(n, {2, 3, 4}), line(n, {2, 5, 6}), line(n, {2, 7, 8}), line(n, {3, 5, 7}),
                    line(n, {3, 6, 8}), line(n, {4, 5, 8}), line(n, {4, 6, 7})};
        }
        case 'b':
            return {line(n, {1, 2, 3}), line(n, {1, 4, 5}), line(n, {1, 6, 7}), line(n, {2, 4, 6}),
                    line(n, {3, 5, 6}), line(n, {2, 5, 7}), line(n, {3, 4, 7}), difference(n, 8, 9)};
        case 'c':
            return {line(n, {1, 2, 3}), line(n, {1, 4, 5}), line(n, {1, 6, 7}), line(n, {1, 8, 9}),
                    difference(n, 2, 3), difference(n, 4, 5), difference(n, 6, 7), difference(n, 8, 9)};
        default:
            throw std::invalid_argument("unknown family label");
    }
}

std::string family_label(const std::vector<HClass>& tuple) {
    if (tuple.empty()) return "other";
    int n = tuple[0].n();
    auto key = canonical_key(tuple);
    for (char l : {'a', 'b', 'c'}) {
        auto ref = reference_family(l);
        if (ref.size() != tuple.size()) continue;
        auto t = n <= 9 ? truncate(ref, n) : ref;
        if (t.empty()) continue;
        if (n > 9)
            for (auto& x : t) x.b.resize(n, 0);
        if (canonical_key(t) == key) return std::string(1, l);
    }
    return "other";
}

bool is_fano_plane(const std::vector<std::vector<bool>>& m) {
    if (m.size() != 7) return false;
    for (const auto& row : m)
        if (row.size() != 7) return false;
    for (int l = 0; l < 7; ++l) {
        int c = 0;
        for (int p = 0; p < 7; ++p) c += m[l][p];
        if (c != 3) return false;
    }
    for (int p = 0; p < 7; ++p) {
        int c = 0;
        for (int l = 0; l < 7; ++l) c += m[l][p];
        if (c != 3) return false;
    }
    for (int l = 0; l < 7; ++l)
        for (int k = l + 1; k < 7; ++k) {
            int c = 0;
            for (int p = 0; p < 7; ++p) c += m[l][p] && m[k][p];
            if (c != 1) return false;
        }
    return true;
}

IncidenceStructure fano_incidence(const std::vector<HClass>& tuple) {
    IncidenceStructure s;
    std::vector<const HClass*> cubic;
    for (const auto& x : tuple) {
        if (x.a == 1) s.lines.push_back(x);
        else if (x.a == 3) cubic.push_back(&x);
        else throw std::invalid_argument("tuple has a class that is neither a line nor the cubic");
    }
    if (s.lines.size() != 7 || cubic.size() > 1 || tuple.size() != s.lines.size() + cubic.size())
        throw std::invalid_argument("tuple is not of the seven-line or cubic-plus-seven-lines shape");
    int n = tuple[0].n();
    if (cubic.size() == 1) {
        const HClass& f = *cubic[0];
        int twos = 0, ones = 0;
        for (int i = 0; i < n; ++i) {
            if (f.b[i] == 2) ++twos;
            else if (f.b[i] == 1) {
                ++ones;
                s.points.push_back(i + 1);
            } else if (f.b[i] != 0)
                throw std::invalid_argument("cubic class is not 3H - 2E - E - ... - E");
        }
        if (twos != 1 || ones != 7) throw std::invalid_argument("cubic class is not 3H - 2E - E - ... - E");
    } else {
        std::set<int> support;
        for (const auto& l : s.lines)
            for (int i = 0; i < n; ++i)
                if (l.b[i] != 0) support.insert(i + 1);
        s.points.assign(support.begin(), support.end());
    }
    for (const auto& l : s.lines) {
        std::vector<bool> row;
        for (int p : s.points) row.push_back(l.b[p - 1] == 1);
        s.membership.push_back(row);
    }
    s.is_fano = s.points.size() == 7 && is_fano_plane(s.membership);
    return s;
}

json incidence_json(const IncidenceStructure& s) {
    json m = json::array();
    for (const auto& row : s.membership) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        m.push_back(r);
    }
    return {{"lines", tuple_json(s.lines)}, {"points", s.points}, {"membership", m}, {"is_fano", s.is_fano}};
}

std::vector<ConfigFamily> delta_families(int n, int k) {
    auto orbits = orthogonal_orbits(area_bounded_forms(n, 2), k);
    std::vector<ConfigFamily> all(orbits.size());
    parallel_for(orbits.size(), [&](std::size_t i) {
        ConfigFamily& f = all[i];
        f.tuple = orbits[i];
        for (int slot = 0; slot < k; ++slot) {
            auto w = feasible(delta_system(f.tuple, slot, false));
            if (!w) continue;
            f.feasible_slots.push_back(slot);
            if (!f.witness) {
                f.realized = f.tuple;
                make_monotone(f.realized, *w);
                if (!delta_system(f.realized, slot, true).satisfied_by(w->values))
                    throw std::logic_error("relabeled witness fails the monotone delta system");
                f.witness = std::move(w);
            }
        }
        f.label = family_label(f.tuple);
    });
    std::vector<ConfigFamily> out;
    for (auto& f : all)
        if (!f.feasible_slots.empty()) out.push_back(std::move(f));
    return out;
}

std::vector<HClass> odd_n_construction(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("construction needs odd N >= 3");
    std::vector<HClass> out;
    for (int k = 1; 2 * k + 1 <= n; ++k) {
        out.push_back(line(n, {1, 2 * k, 2 * k + 1}));
        out.push_back(difference(n, 2 * k, 2 * k + 1));
    }
    return out;
}

json family_json(const ConfigFamily& f) {
    json j = {{"label", f.label.empty() ? "other" : f.label}, {"tuple", tuple_json(f.tuple)}};
    if (!f.feasible_slots.empty()) j["feasible_slots"] = f.feasible_slots;
    if (f.witness) {
        int n = f.tuple.at(0).n();
        j["realized"] = tuple_json(f.realized);
        j["witness"] = witness_json(n, *f.witness);
    }
    return j;
}

namespace {

bool disjoint_minus2(const std::vector<HClass>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (square(t[i]) != -2 || k_dot(t[i]) != 0) return false;
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (pair(t[i], t[j]) != 0) return false;
    }
    return true;
}

std::string slots_str(const std::vector<int>& s) {
    std::string out;
    for (int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

bool witness_ok(const ConfigFamily& f) {
    if (!f.witness) return false;
    for (int slot : f.feasible_slots)
        if (!feasible(delta_system(f.realized, slot, false))) return false;
    return delta_system(f.realized, f.feasible_slots.at(0), true).satisfied_by(f.witness->values);
}

}  // namespace

Report verify_lemma_5_1() {
    Report rep;
    rep.target = "lemma-5.1";
    rep.note("X = CP2 # 9; eight disjoint (-2)-classes; one of area delta1, seven of area delta2;");
    rep.note("delta2 < delta1 < 2 delta2, 7 delta_i < -K.w");
    auto orbits = orthogonal_orbits(area_bounded_forms(9, 2), 8);
    rep.note("orbits of pairwise-orthogonal 8-tuples in the area-bounded pool: " + std::to_string(orbits.size()));
    auto fams = delta_families(9, 8);
    std::set<std::string> labels;
    json fj = json::array();
    for (const auto& f : fams) {
        labels.insert(f.label);
        rep.note("family (" + f.label + "), feasible slots " + slots_str(f.feasible_slots));
        for (const auto& x : f.realized) rep.note("    " + x.str());
        fj.push_back(family_json(f));
    }
    rep.check(fams.size() == 3, "exactly 3 families survive (" + std::to_string(fams.size()) + ")");
    rep.check(labels == std::set<std::string>{"a", "b", "c"}, "the families are (a), (b), (c) up to relabeling");
    bool fano = false, wit = true;
    for (const auto& f : fams) {
        wit = wit && witness_ok(f) && disjoint_minus2(f.realized);
        if (f.label == "a") fano = fano_incidence(f.tuple).is_fano;
    }
    rep.check(fano, "family (a): the seven lines meet the seven points as the Fano plane");
    rep.check(wit, "every family has an exact area witness that re-verifies");
    rep.data = {{"n", 9}, {"k", 8}, {"orbits", orbits.size()}, {"families", fj}};
    return rep;
}

Report verify_thm_1_4(int n) {
    Report rep;
    rep.target = "thm-1.4-n" + std::to_string(n);
    if (n == 9) {
        auto roots = minus2_classes_mod_K(9);
        rep.check(roots.size() == 240, "(-2)-classes with K.A = 0 modulo K: " + std::to_string(roots.size()));
        rep.check(rank_of_gram(roots) == 8, "they span a rank-8 lattice");
        auto best = max_orthogonal_roots(roots);
        rep.check(best.size() == 8, "largest pairwise-orthogonal set has size " + std::to_string(best.size()));
        rep.check(negative_definite(best), "the exhibit spans a negative-definite sublattice");
        for (const auto& x : best) rep.note("    " + x.str());
        auto c = reference_family('c');
        rep.check(disjoint_minus2(c), "family (c) gives eight disjoint (-2)-classes");
        rep.check(orthogonal_orbits(area_bounded_forms(9, 2), 9).empty(), "no nine pairwise-orthogonal classes in the area-bounded pool");
        rep.data = {{"n", 9},
                    {"representatives", roots.size()},
                    {"max_orthogonal", best.size()},
                    {"exhibit", tuple_json(best)},
                    {"eight_tuple", tuple_json(c)}};
        return rep;
    }
    if (n != 7 && n != 8) throw std::invalid_argument("thm-1.4 verifier covers N = 7, 8, 9");
    auto orbits = orthogonal_orbits(area_bounded_forms(n, 2), n);
    auto fams = delta_families(n, n);
    rep.note("orbits of pairwise-orthogonal " + std::to_string(n) + "-tuples: " + std::to_string(orbits.size()) +
             ", surviving the delta system: " + std::to_string(fams.size()));
    bool all_fano = !fams.empty();
    json fj = json::array();
    for (const auto& f : fams) {
        IncidenceStructure inc;
        try {
            inc = fano_incidence(f.tuple);
        } catch (const std::invalid_argument&) {
            all_fano = false;
            continue;
        }
        all_fano = all_fano && inc.is_fano;
        auto j = family_json(f);
        j["incidence"] = incidence_json(inc);
        fj.push_back(j);
        for (const auto& x : f.realized) rep.note("    " + x.str());
    }
    rep.check(all_fano, "every surviving tuple reduces to the Fano plane incidence");
    const std::vector<HClass>* exhibit = orbits.empty() ? nullptr : &orbits[0];
    for (const auto& f : fams)
        if (f.witness) exhibit = &f.realized;
    rep.check(exhibit && disjoint_minus2(*exhibit),
              std::to_string(n) + " pairwise-disjoint (-2)-classes exist homologically");
    json odd = json::array();
    for (int m = 3; m <= 9; m += 2) {
        auto t = odd_n_construction(m);
        bool ok = static_cast<int>(t.size()) == m - 1 && disjoint_minus2(t) && feasible(positivity_rows(t, true));
        rep.check(ok, "N = " + std::to_string(m) + ": " + std::to_string(t.size()) + " disjoint classes with positive area");
        odd.push_back({{"n", m}, {"tuple", tuple_json(t)}});
    }
    rep.data = {{"n", n},
                {"orbits", orbits.size()},
                {"families", fj},
                {"exhibit", exhibit ? tuple_json(*exhibit) : json::array()},
                {"odd_construction", odd}};
    return rep;
}

}  // namespace rat4
