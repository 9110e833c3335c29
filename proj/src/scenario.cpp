#include "rat4/scenario.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace rat4 {

namespace {

Q q_from_json(const json& j) {
    if (j.is_string()) return qparse(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    throw std::invalid_argument("expected a rational as string or integer");
}

long mod(long x, long m) { return ((x % m) + m) % m; }

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// All ways to write total as an ordered sum of k nonnegative parts.
void compositions(int total, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur(k, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
            cur[i] = left;
            f(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (k == 0) {
        if (total == 0) f(cur);
        return;
    }
    rec(0, total);
}

// Multisets of nonzero even self-intersections, keyed by their sum.
std::map<long, std::vector<std::vector<int>>> surface_multisets(const ScenarioSpec& s, int max_negative) {
    std::vector<int> vals;
    for (int v = s.min_self_int; v <= s.max_self_int; ++v)
        if (v != 0 && v % 2 == 0) vals.push_back(v);
    std::map<long, std::vector<std::vector<int>>> out;
    std::vector<int> cur;
    std::function<void(std::size_t, long, int)> rec = [&](std::size_t start, long sum, int neg) {
        out[sum].push_back(cur);
        if (static_cast<int>(cur.size()) == s.max_surfaces) return;
        for (std::size_t i = start; i < vals.size(); ++i) {
            int n2 = neg + (vals[i] < 0);
            if (n2 > max_negative) continue;
            cur.push_back(vals[i]);
            rec(i, sum + vals[i], n2);
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

struct BranchData {
    CohomologyBranch spec;
    bool ok = true;
    std::string why;
    long L = 0;
    Q chi_quotient, sign_quotient;
    int b1q = 0, b2pq = 0, b2mq = 0;
    std::map<long, CycNumber> sign_powers;  // exact Sign(g^e) from the cohomology model
};

BranchData derive_branch(const ScenarioSpec& s, const CohomologyBranch& br) {
    BranchData d;
    d.spec = br;
    try {
        if (br.angles) {
            TorusModel g = torus_model(br.angles->first, br.angles->second);
            d.L = g.L;
            d.b1q = g.b1_fixed;
            d.b2pq = g.b2plus_fixed;
            d.b2mq = g.b2minus_fixed;
            for (long e = 1; e < s.order; ++e) {
                TorusModel ge = torus_model(br.angles->first * e, br.angles->second * e, true);
                d.sign_powers[e] = ge.sign;
            }
            if (g.order != s.order) throw std::invalid_argument("angles do not generate a group of the stated order");
            if (is_prime(s.order)) {
                d.chi_quotient = Q(s.chi_M + static_cast<long>(s.order - 1) * d.L, s.order);
            } else {
                d.chi_quotient = torus_quotient(br.angles->first, br.angles->second).chi;
            }
        } else {
            d.b1q = br.b1_quotient;
            d.b2pq = br.b2plus_quotient;
            d.b2mq = br.b2minus_quotient;
            d.L = 2 - 2 * q_to_long(br.tr_h1) + q_to_long(br.tr_h2plus) + q_to_long(br.tr_h2minus);
            for (long e = 1; e < s.order; ++e) d.sign_powers[e] = CycNumber(br.tr_h2plus - br.tr_h2minus);
            d.chi_quotient = Q(2 - 2 * d.b1q + d.b2pq + d.b2mq);
            if (is_prime(s.order) && d.chi_quotient != Q(s.chi_M + static_cast<long>(s.order - 1) * d.L, s.order))
                throw std::invalid_argument("traces and quotient Betti numbers are inconsistent");
        }
        if (d.chi_quotient != Q(2 - 2 * d.b1q + d.b2pq + d.b2mq))
            throw std::invalid_argument("quotient Euler characteristic disagrees with its Betti numbers");
        d.sign_quotient = Q(d.b2pq - d.b2mq);
    } catch (const std::exception& e) {
        d.ok = false;
        d.why = e.what();
    }
    return d;
}

// Branches for a trace-parameterized prime scenario: iterate b2minus of the quotient.
std::vector<CohomologyBranch> trace_branches(const ScenarioSpec& s, std::vector<std::string>& rejected) {
    std::vector<CohomologyBranch> out;
    int p = s.order;
    int dim1 = s.b1, dim2 = s.b1 - 1;
    auto trace = [&](int inv, int dim, Q& tr) {
        Q t = Q(static_cast<long>(p) * inv - dim, p - 1);
        tr = t;
        return is_integer(t) && t <= dim && t >= -dim;
    };
    for (int b = 0; b <= dim2; ++b) {
        CohomologyBranch br;
        br.label = "b2-(M/G)=" + std::to_string(b);
        br.b1_quotient = s.b1_quotient;
        br.b2plus_quotient = s.b2plus_quotient;
        br.b2minus_quotient = b;
        bool ok = trace(s.b1_quotient, dim1, br.tr_h1) && trace(s.b2plus_quotient, dim2, br.tr_h2plus) &&
                  trace(b, dim2, br.tr_h2minus);
        if (ok) out.push_back(br);
        else rejected.push_back(br.label + ": no integral trace with these invariant dimensions");
    }
    return out;
}

BranchResult run_prime_branch(const ScenarioSpec& s, const BranchData& bd) {
    int p = s.order;
    BranchResult res;
    res.label = bd.spec.label;
    res.L = bd.L;
    res.chi_quotient = bd.chi_quotient;
    res.sign_quotient = bd.sign_quotient;
    res.b2minus_quotient = bd.b2mq;
    auto types = point_types(p);
    for (const auto& t : types) res.type_names.push_back(t.name());
    if (!bd.ok) {
        res.consistent = false;
        res.inconsistency = bd.why;
        return res;
    }
    if (!is_integer(bd.chi_quotient)) {
        res.consistent = false;
        res.inconsistency = "chi(M/G) = " + bd.chi_quotient.str() + " is not an integer";
        return res;
    }
    std::vector<Q> defects;
    for (const auto& t : types) defects.push_back(signature_defect(IsolatedPoint{p, 1, t.b}, p));
    Q surface_defect = Q(static_cast<long>(p) * p - 1, 3);
    int max_neg = s.max_negative_surfaces >= 0 ? s.max_negative_surfaces : bd.b2mq;
    auto multisets = surface_multisets(s, max_neg);
    auto wclasses = surface_weight_classes(p);

    // stage 1: Lefschetz, weak signature, parity
    std::vector<RawRow> rows;
    for (int total = 0; total <= s.max_points; ++total) {
        long sum_y = total - bd.L;  // #points - sum Y^2 = L for Y^2 = 2g - 2
        if (sum_y % 2 != 0) continue;
        compositions(total, static_cast<int>(types.size()), [&](const std::vector<int>& c) {
            Q def = surface_defect * sum_y;
            for (std::size_t i = 0; i < c.size(); ++i) def += defects[i] * c[i];
            if (Q(s.sign_M) + def != bd.sign_quotient * p) return;
            RawRow r;
            r.counts = c;
            r.self_int_sum = sum_y;
            rows.push_back(r);
        });
    }
    std::sort(rows.begin(), rows.end(), [](const RawRow& a, const RawRow& b) {
        if (a.counts != b.counts) return a.counts > b.counts;
        return a.self_int_sum < b.self_int_sum;
    });

    const char* stage_names[] = {"spin", "signature", "vanishing"};
    parallel_for(rows.size(), [&](std::size_t ri) {
        RawRow& r = rows[ri];
        auto it = multisets.find(r.self_int_sum);
        if (it == multisets.end()) {
            r.killed_by = "surfaces";
            r.detail = "sum Y^2 = " + std::to_string(r.self_int_sum) + " not realizable within the surface bounds";
            return;
        }
        int best = -1;
        std::string best_detail;
        std::vector<std::vector<int>> per_type;  // compositions chosen per type
        std::vector<std::vector<std::vector<int>>> type_options;
        for (std::size_t t = 0; t < types.size(); ++t) {
            std::vector<std::vector<int>> opts;
            compositions(r.counts[t], static_cast<int>(types[t].sign_classes.size()),
                         [&](const std::vector<int>& c) { opts.push_back(c); });
            type_options.push_back(opts);
        }
        // surface assignments: each multiset element to a weight class
        std::set<std::vector<std::vector<int>>> surface_opts;
        for (const auto& ms : it->second) {
            std::vector<int> assign(ms.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == ms.size()) {
                    std::vector<std::vector<int>> byclass(wclasses.size());
                    for (std::size_t k = 0; k < ms.size(); ++k) byclass[assign[k]].push_back(ms[k]);
                    for (auto& v : byclass) std::sort(v.begin(), v.end());
                    surface_opts.insert(byclass);
                    return;
                }
                for (std::size_t c = 0; c < wclasses.size(); ++c) {
                    assign[i] = static_cast<int>(c);
                    rec(i + 1);
                }
            };
            rec(0);
        }
        std::vector<std::size_t> idx(types.size(), 0);
        std::function<void(std::size_t)> walk = [&](std::size_t t) {
            if (best == 3) return;
            if (t < types.size()) {
                for (std::size_t o = 0; o < type_options[t].size(); ++o) {
                    idx[t] = o;
                    walk(t + 1);
                }
                return;
            }
            for (const auto& so : surface_opts) {
                if (best == 3) return;
                FixedPointProfile prof;
                prof.group_order = p;
                prof.cy = true;
                for (std::size_t ti = 0; ti < types.size(); ++ti) {
                    const auto& comp = type_options[ti][idx[ti]];
                    for (std::size_t c = 0; c < comp.size(); ++c)
                        for (int k = 0; k < comp[c]; ++k)
                            prof.points.push_back(
                                {p, types[ti].sign_classes[c].first, types[ti].sign_classes[c].second});
                }
                for (std::size_t c = 0; c < so.size(); ++c)
                    for (int y2 : so[c]) prof.surfaces.push_back({y2 / 2 + 1, y2, wclasses[c], p});
                int stage = 0;
                std::string detail;
                SpinSolve spin;
                bool have_spin = false;
                if (s.spin_filter && p % 2 == 1) {
                    std::map<long, CycNumber> vals;
                    for (long e = 1; e < p; ++e) vals[e] = spin_number(prof, p, e);
                    if (s.sign_M % 8 != 0) throw std::invalid_argument("Dirac index -Sign(M)/8 must be integral");
                    spin = spin_coefficients(vals, p, -s.sign_M / 8);
                    have_spin = !spin.d.empty();
                    if (!spin.ok) detail = "Spin: " + spin.reason;
                    else if (s.dirac_index_zero && spin.d[0] != 0)
                        detail = "Spin: d_0 = " + spin.d[0].str() + " but the quotient Dirac index vanishes";
                    else stage = 1;
                } else {
                    stage = 1;
                }
                if (stage == 1) {
                    if (s.exact_sign_filter) {
                        for (long e = 1; e < p && detail.empty(); ++e) {
                            CycNumber v = signature_number(prof, e);
                            if (v != bd.sign_powers.at(e))
                                detail = "Sign(g^" + std::to_string(e) + ") = " + v.str() + " differs from the model";
                        }
                    }
                    if (detail.empty()) stage = 2;
                }
                if (stage == 2) {
                    if (s.vanishing_filter) {
                        if (!have_spin) throw std::invalid_argument("vanishing filter needs the Spin filter");
                        Q bound = Q(1 - bd.b1q + bd.b2pq);
                        bool all_small = true;
                        for (const auto& dk : spin.d) all_small = all_small && 2 * dk < bound;
                        if (all_small) detail = "all 2d_k < 1 - b1(M/G) + b2+(M/G): invariant vanishes mod p";
                        else stage = 3;
                    } else {
                        stage = 3;
                    }
                }
                if (stage > best) {
                    best = stage;
                    best_detail = detail;
                    if (stage == 3) {
                        r.witness = prof;
                        r.spin_d.clear();
                        if (have_spin)
                            for (const auto& dk : spin.d) r.spin_d.push_back(dk.str());
                    }
                }
            }
        };
        walk(0);
        if (best < 3) {
            r.killed_by = stage_names[best];
            r.detail = best_detail;
        }
    });
    res.rows = std::move(rows);
    return res;
}

BranchResult run_resolution_branch(const ScenarioSpec& s, const BranchData& bd) {
    int n = s.order;
    BranchResult res;
    res.label = bd.spec.label;
    res.L = bd.L;
    res.chi_quotient = bd.chi_quotient;
    res.sign_quotient = bd.sign_quotient;
    res.b2minus_quotient = bd.b2mq;
    for (int b : s.point_types) res.type_names.push_back("(1," + std::to_string(b) + ")");
    if (!bd.ok) {
        res.consistent = false;
        res.inconsistency = bd.why;
        return res;
    }
    if (bd.L < 0) {
        res.consistent = false;
        res.inconsistency = "negative Lefschetz number";
        return res;
    }
    // points of smaller isotropy, one per orbit
    std::vector<std::pair<IsolatedPoint, int>> extra;
    long prev = bd.L;
    auto subs = s.subgroups;
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return a.order > b.order; });
    for (const auto& sg : subs) {
        long diff = sg.fixed_points - prev;
        int orbit = n / sg.order;
        if (diff < 0 || diff % orbit != 0) {
            res.consistent = false;
            res.inconsistency = "fixed points of the order-" + std::to_string(sg.order) +
                                " subgroup do not split into free orbits";
            return res;
        }
        extra.push_back({IsolatedPoint{sg.order, 1, sg.type_b}, static_cast<int>(diff / orbit)});
        prev = sg.fixed_points;
    }
    Q base_chi = bd.chi_quotient;
    Q base_K2 = 0;
    bool base_nondv = false;
    for (const auto& [q, c] : extra) {
        auto r = hj_resolution(q.order, q.b);
        base_chi += Q(static_cast<long>(c) * r.delta_chi);
        base_K2 += r.delta_K2 * c;
        base_nondv = base_nondv || (c > 0 && !r.du_val());
    }
    std::vector<ResolutionData> tres;
    for (int b : s.point_types) tres.push_back(hj_resolution(n, b));
    std::vector<RawRow> rows;
    compositions(static_cast<int>(bd.L), static_cast<int>(s.point_types.size()), [&](const std::vector<int>& c) {
        RawRow r;
        r.counts = c;
        Q chi = base_chi, K2 = base_K2;
        bool nondv = base_nondv;
        for (std::size_t i = 0; i < c.size(); ++i) {
            chi += Q(static_cast<long>(c[i]) * tres[i].delta_chi);
            K2 += tres[i].delta_K2 * c[i];
            nondv = nondv || (c[i] > 0 && !tres[i].du_val());
        }
        r.detail = "chi(M_G) = " + chi.str() + ", c1(K)^2 = " + K2.str();
        if (s.canonical == "rational") {
            if (K2 != Q(12) - chi) r.killed_by = "noether";
            else if (!nondv) {
                r.killed_by = "canonical";
                r.detail += "; all singular points are Du Val, so c1(K) = 0, impossible for a rational surface";
            }
        } else {
            if (nondv) r.killed_by = "canonical";
            else if (chi != 12 && chi != 24) r.killed_by = "euler";
        }
        FixedPointProfile prof;
        prof.group_order = n;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (int k = 0; k < c[i]; ++k) prof.points.push_back({n, 1, s.point_types[i]});
        for (const auto& [q, cnt] : extra)
            for (int k = 0; k < cnt; ++k) prof.points.push_back(q);
        r.witness = prof;
        rows.push_back(r);
    });
    std::sort(rows.begin(), rows.end(), [](const RawRow& a, const RawRow& b) { return a.counts > b.counts; });
    res.rows = std::move(rows);
    return res;
}

}  // namespace

std::vector<PointType> point_types(int p) {
    if (!is_prime(p)) throw std::invalid_argument("point types are tabulated for prime orders");
    std::vector<PointType> out;
    std::set<std::pair<int, int>> seen;
    auto canon = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (int b = 1; b < p; ++b) {
        if (seen.count(canon(1, b))) continue;
        PointType t;
        t.b = b;
        std::set<std::pair<int, int>> orbit;
        for (int u = 1; u < p; ++u) orbit.insert(canon(static_cast<int>(mod(u, p)), static_cast<int>(mod(static_cast<long>(u) * b, p))));
        seen.insert(orbit.begin(), orbit.end());
        std::set<std::pair<int, int>> done;
        auto add_class = [&](std::pair<int, int> w) {
            if (done.count(w)) return;
            done.insert(w);
            done.insert(canon(p - w.first, p - w.second));
            t.sign_classes.push_back(w);
        };
        add_class(canon(1, b));
        for (const auto& w : orbit) add_class(w);
        out.push_back(t);
    }
    return out;
}

std::vector<int> surface_weight_classes(int p) {
    std::vector<int> out;
    for (int c = 1; 2 * c <= p; ++c)
        if (2 * c != p || p == 2) out.push_back(c);
    if (out.empty()) out.push_back(1);
    return out;
}

ScenarioSpec scenario_from_json(const json& j) {
    ScenarioSpec s;
    s.name = j.value("name", "");
    s.kind = j.at("kind").get<std::string>();
    s.note = j.value("note", "");
    s.order = j.at("order").get<int>();
    s.b1 = j.value("b1", 0);
    s.chi_M = j.value("chi_M", 0L);
    s.sign_M = j.value("sign_M", 0L);
    if (s.kind != "prime" && s.kind != "resolution") throw std::invalid_argument("kind must be prime or resolution");
    if (s.order < 2) throw std::invalid_argument("order must be at least 2");
    if (s.kind == "prime" && !is_prime(s.order)) throw std::invalid_argument("prime scenario needs a prime order");
    if (j.contains("branches"))
        for (const auto& b : j.at("branches")) {
            CohomologyBranch br;
            br.label = b.value("label", "");
            if (b.contains("angles")) {
                const auto& a = b.at("angles");
                if (!a.is_array() || a.size() != 2) throw std::invalid_argument("angles must be a pair");
                br.angles = std::make_pair(q_from_json(a[0]), q_from_json(a[1]));
            } else {
                const auto& t = b.at("traces");
                br.tr_h1 = q_from_json(t.at("h1"));
                br.tr_h2plus = q_from_json(t.at("h2plus"));
                br.tr_h2minus = q_from_json(t.at("h2minus"));
                const auto& qb = b.at("quotient");
                br.b1_quotient = qb.at("b1").get<int>();
                br.b2plus_quotient = qb.at("b2plus").get<int>();
                br.b2minus_quotient = qb.at("b2minus").get<int>();
            }
            s.branches.push_back(br);
        }
    if (j.contains("quotient")) {
        s.b1_quotient = j["quotient"].value("b1", 0);
        s.b2plus_quotient = j["quotient"].value("b2plus", 1);
    }
    if (j.contains("bounds")) {
        const auto& b = j["bounds"];
        s.max_points = b.value("max_points", s.max_points);
        s.max_surfaces = b.value("max_surfaces", s.max_surfaces);
        s.min_self_int = b.value("min_self_int", s.min_self_int);
        s.max_self_int = b.value("max_self_int", s.max_self_int);
        s.max_negative_surfaces = b.value("max_negative_surfaces", s.max_negative_surfaces);
    } else if (s.kind == "prime") {
        throw std::invalid_argument("prime scenario needs explicit search bounds");
    }
    if (j.contains("filters")) {
        const auto& f = j["filters"];
        s.spin_filter = f.value("spin", false);
        s.dirac_index_zero = f.value("dirac_index_zero", false);
        s.exact_sign_filter = f.value("exact_signature", true);
        s.vanishing_filter = f.value("vanishing", false);
    }
    if (j.contains("point_types")) s.point_types = j["point_types"].get<std::vector<int>>();
    if (j.contains("subgroups"))
        for (const auto& g : j["subgroups"])
            s.subgroups.push_back({g.at("order").get<int>(), g.at("fixed_points").get<int>(), g.value("type_b", 1)});
    s.canonical = j.value("canonical", "rational");
    if (s.canonical != "rational" && s.canonical != "torsion")
        throw std::invalid_argument("canonical must be rational or torsion");
    if (s.kind == "resolution") {
        if (s.branches.empty()) throw std::invalid_argument("resolution scenario needs branches");
        if (s.point_types.empty()) throw std::invalid_argument("resolution scenario needs point_types");
        for (int b : s.point_types)
            if (b <= 0 || b >= s.order || std::gcd(b, s.order) != 1)
                throw std::invalid_argument("point type weight must be a unit modulo the order");
        for (const auto& g : s.subgroups)
            if (g.order < 2 || g.order >= s.order || s.order % g.order != 0)
                throw std::invalid_argument("subgroup order must be a proper divisor");
    }
    if (s.max_points < 0 || s.max_points > 64 || s.max_surfaces < 0 || s.max_surfaces > 16 ||
        s.min_self_int > s.max_self_int)
        throw std::invalid_argument("search bounds out of range");
    return s;
}

json scenario_json(const ScenarioSpec& s) {
    json br = json::array();
    for (const auto& b : s.branches) {
        json x = {{"label", b.label}};
        if (b.angles) x["angles"] = {b.angles->first.str(), b.angles->second.str()};
        else {
            x["traces"] = {{"h1", b.tr_h1.str()}, {"h2plus", b.tr_h2plus.str()}, {"h2minus", b.tr_h2minus.str()}};
            x["quotient"] = {{"b1", b.b1_quotient}, {"b2plus", b.b2plus_quotient}, {"b2minus", b.b2minus_quotient}};
        }
        br.push_back(x);
    }
    json j = {{"name", s.name}, {"kind", s.kind}, {"order", s.order}, {"b1", s.b1}, {"branches", br}};
    if (s.kind == "prime") {
        j["quotient"] = {{"b1", s.b1_quotient}, {"b2plus", s.b2plus_quotient}};
        j["bounds"] = {{"max_points", s.max_points},
                       {"max_surfaces", s.max_surfaces},
                       {"min_self_int", s.min_self_int},
                       {"max_self_int", s.max_self_int},
                       {"max_negative_surfaces", s.max_negative_surfaces}};
        j["filters"] = {{"spin", s.spin_filter},
                        {"dirac_index_zero", s.dirac_index_zero},
                        {"exact_signature", s.exact_sign_filter},
                        {"vanishing", s.vanishing_filter}};
    } else {
        j["point_types"] = s.point_types;
        json sg = json::array();
        for (const auto& g : s.subgroups)
            sg.push_back({{"order", g.order}, {"fixed_points", g.fixed_points}, {"type_b", g.type_b}});
        j["subgroups"] = sg;
        j["canonical"] = s.canonical;
    }
    return j;
}

ProfileSearch profile_search(const ScenarioSpec& s) {
    ProfileSearch out;
    out.scenario = s.name;
    std::vector<CohomologyBranch> branches = s.branches;
    std::vector<std::string> rejected;
    if (branches.empty()) {
        if (s.kind != "prime" || s.b1 >= 4 || s.b1 < 1)
            throw std::invalid_argument("scenario needs explicit branches");
        branches = trace_branches(s, rejected);
    }
    for (const auto& msg : rejected) {
        BranchResult r;
        r.label = msg.substr(0, msg.find(':'));
        r.consistent = false;
        r.inconsistency = msg.substr(msg.find(':') + 2);
        out.branches.push_back(r);
    }
    for (const auto& br : branches) {
        BranchData bd = derive_branch(s, br);
        out.branches.push_back(s.kind == "prime" ? run_prime_branch(s, bd) : run_resolution_branch(s, bd));
    }
    std::stable_sort(out.branches.begin(), out.branches.end(),
                     [](const BranchResult& a, const BranchResult& b) { return a.label < b.label; });
    return out;
}

json profile_search_json(const ProfileSearch& r) {
    json br = json::array();
    for (const auto& b : r.branches) {
        json x = {{"label", b.label}, {"consistent", b.consistent}};
        if (!b.consistent) {
            x["inconsistency"] = b.inconsistency;
            br.push_back(x);
            continue;
        }
        x["lefschetz"] = b.L;
        x["chi_quotient"] = b.chi_quotient.str();
        x["sign_quotient"] = b.sign_quotient.str();
        x["types"] = b.type_names;
        json rows = json::array(), surv = json::array();
        for (const auto& row : b.rows) {
            json rr = {{"counts", row.counts}, {"sum_self_int", row.self_int_sum}};
            rr["status"] = row.killed_by.empty() ? "survives" : "eliminated";
            if (!row.killed_by.empty()) rr["stage"] = row.killed_by;
            if (!row.detail.empty()) rr["detail"] = row.detail;
            if (!row.spin_d.empty()) rr["spin_d"] = row.spin_d;
            rows.push_back(rr);
            if (row.killed_by.empty() && row.witness) surv.push_back(profile_json(*row.witness));
        }
        x["rows"] = rows;
        x["survivors"] = surv;
        br.push_back(x);
    }
    return {{"scenario", r.scenario}, {"branches", br}};
}

}  // namespace rat4
