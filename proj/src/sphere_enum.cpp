#include "rat4/sphere_enum.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace rat4 {

namespace {

// All subsets of {0..n-1} of size k, excluding `skip`.
void for_each_subset(int n, int k, int skip, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            f(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            if (i == skip) continue;
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

bool negative_normal_form(const HClass& A, std::string& why) {
    long sq = square(A);
    int abs_a = -A.a;
    if (sq >= -2) {
        why = "negative a requires A^2 < -2";
        return false;
    }
    long alpha = -sq;
    if (2L * abs_a >= alpha) {
        why = "negative a requires 2|a| < |A^2|";
        return false;
    }
    int neg = 0, ones = 0;
    for (int v : A.b) {
        if (v == -(abs_a + 1)) ++neg;
        else if (v == 1) ++ones;
        else if (v != 0) {
            why = "negative a class is not of the form aH + (|a|+1)E - E - ... - E";
            return false;
        }
    }
    long s = alpha - 2L * abs_a;
    if (neg != 1 || ones != s - 1) {
        why = "negative a class is not of the form aH + (|a|+1)E - E - ... - E";
        return false;
    }
    return true;
}

}  // namespace

FilterResult surface_class_filter(const HClass& A, long g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (adjunction_genus(A) != g) throw std::invalid_argument("genus does not match adjunction");
    FilterResult r;
    if (A.a > 0) {
        for (int v : A.b)
            if (v < 0) return {false, "a > 0 requires all b_i >= 0"};
        long lhs = static_cast<long>(A.a - 1) * (A.a - 2);
        bool all01 = true;
        for (int v : A.b) all01 = all01 && (v == 0 || v == 1);
        if (lhs < 2 * g) return {false, "(a-1)(a-2) < 2g"};
        if ((lhs == 2 * g) != all01) return {false, "(a-1)(a-2) = 2g must hold exactly when all b_i are 0 or 1"};
    } else if (A.a == 0) {
        bool has_neg = false;
        for (int v : A.b) has_neg = has_neg || v < 0;
        if (!has_neg) return {false, "a = 0 requires some b_i < 0 for positive area"};
    } else {
        if (g != 0) return {false, "negative a requires a sphere"};
        std::string why;
        if (!negative_normal_form(A, why)) return {false, why};
    }
    return r;
}

std::vector<HClass> observation_forms(int n, int alpha, int a) {
    if (a < 0) throw std::invalid_argument("observation forms need a >= 0");
    std::set<HClass> out;
    int others = 2 * a + alpha - 1;
    if (others + 1 > n) return {};
    for (int j1 = 0; j1 < n; ++j1) {
        for_each_subset(n, others, j1, [&](const std::vector<int>& s) {
            HClass x(a, std::vector<int>(n, 0));
            x.b[j1] = a - 1;
            for (int i : s) x.b[i] = 1;
            out.insert(x);
        });
    }
    return {out.begin(), out.end()};
}

std::vector<HClass> negative_forms(int n, int alpha, int a, bool pinned_first) {
    if (a >= 0) throw std::invalid_argument("negative forms need a < 0");
    int abs_a = -a;
    int s = alpha - 2 * abs_a;
    if (s < 1 || s > n) return {};
    std::set<HClass> out;
    for (int j1 = 0; j1 < n; ++j1) {
        if (pinned_first && j1 != 0) break;
        for_each_subset(n, s - 1, j1, [&](const std::vector<int>& rest) {
            HClass x(a, std::vector<int>(n, 0));
            x.b[j1] = -(abs_a + 1);
            for (int i : rest) x.b[i] = 1;
            out.insert(x);
        });
    }
    return {out.begin(), out.end()};
}

std::vector<HClass> enumerate_sphere_classes(const SphereClassQuery& q) {
    if (q.n < 1 || q.alpha < 1) throw std::invalid_argument("invalid sphere query");
    if (q.a_lo > q.a_hi) return {};
    std::vector<HClass> out;
    if (q.area_condition) {
        for (const auto& x : area_bounded_forms(q.n, q.alpha))
            if (x.a >= q.a_lo && x.a <= q.a_hi) out.push_back(x);
        return out;
    }
    for (int a = q.a_lo; a <= q.a_hi; ++a) {
        if (a < 0 && !q.allow_negative) continue;
        long sum = 3L * a + q.alpha - 2;
        long sq = static_cast<long>(a) * a + q.alpha;
        int lo, hi;
        if (a > 0) {
            lo = 0;
            hi = std::max(1, a - 1);
        } else {
            hi = static_cast<int>(std::floor(std::sqrt(static_cast<double>(sq)))) + 1;
            lo = -hi;
        }
        std::vector<HClass> stratum;
        for_each_vector(q.n, sum, sq, lo, hi, [&](const std::vector<int>& b) {
            HClass x(a, b);
            if (surface_class_filter(x, 0).pass) stratum.push_back(x);
        });
        std::sort(stratum.begin(), stratum.end());
        out.insert(out.end(), stratum.begin(), stratum.end());
    }
    return out;
}

int area_bound(int n, int alpha) { return (n - alpha) / 2; }

std::vector<HClass> area_bounded_forms(int n, int alpha) {
    if (alpha != 2 && alpha != 3) throw std::invalid_argument("area-bounded forms are defined for alpha in {2, 3}");
    std::vector<HClass> out;
    for (int a = 0; a <= area_bound(n, alpha); ++a) {
        auto f = observation_forms(n, alpha, a);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

std::vector<HClass> surface_classes(int n, int genus, int self_int, int a) {
    long kdot = 2L * genus - 2 - self_int;
    long sum = 3L * a + kdot;
    long sq = static_cast<long>(a) * a - self_int;
    if (sq < 0) return {};
    int bound = static_cast<int>(std::floor(std::sqrt(static_cast<double>(sq)))) + 1;
    int lo = a > 0 ? 0 : -bound;
    std::vector<HClass> out;
    for_each_vector(n, sum, sq, lo, bound, [&](const std::vector<int>& b) {
        HClass x(a, b);
        if (x.is_zero()) return;
        if (surface_class_filter(x, genus).pass) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

CremonaTrail reduce_by_cremona(const HClass& A) {
    CremonaTrail t{A, {}};
    for (int guard = 0; guard < 1000 && t.terminal.a > 3; ++guard) {
        const HClass& x = t.terminal;
        std::vector<int> idx;
        for (int i = 0; i < x.n(); ++i)
            if (x.b[i] > 0) idx.push_back(i);
        if (idx.size() < 3) break;
        std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) { return x.b[p] > x.b[q]; });
        int i = idx[0] + 1, j = idx[1] + 1, k = idx[2] + 1;
        if (x.a - (x.b[i - 1] + x.b[j - 1] + x.b[k - 1]) >= 0) break;
        t.terminal = reflect_cremona(x, i, j, k);
        t.steps.push_back({i, j, k});
    }
    return t;
}

std::vector<HClass> zero_square_forms(int n) {
    if (n < 9) throw std::invalid_argument("zero-square forms need N >= 9");
    std::vector<HClass> out;
    for_each_subset(n, 9, -1, [&](const std::vector<int>& s) {
        HClass x(3, std::vector<int>(n, 0));
        for (int i : s) x.b[i] = 1;
        out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool zero_square_a_ok(const HClass& B) { return B.a >= 3 || B.a < 0; }

std::vector<HClass> zero_square_scan(int n, int amax, int bmax) {
    std::vector<HClass> out;
    for (int a = -amax; a <= amax; ++a) {
        for_each_vector(n, 3L * a, static_cast<long>(a) * a, -bmax, bmax, [&](const std::vector<int>& b) {
            HClass x(a, b);
            if (!x.is_zero()) out.push_back(x);
        });
    }
    return out;
}

SupportStats support_stats(int n, int alpha, int a) {
    if (a <= 0) throw std::invalid_argument("support statistics need a > 0");
    SupportStats st;
    long sum = 3L * a + alpha - 2;
    long sq = static_cast<long>(a) * a + alpha;
    for_each_sorted_vector(n, sum, sq, 0, std::max(1, a - 1), [&](const std::vector<int>& b) {
        int nz = 0;
        for (int v : b) nz += v != 0;
        ++st.classes;
        if (st.min_support < 0 || nz < st.min_support) st.min_support = nz;
    });
    return st;
}

json classes_summary_json(const std::vector<HClass>& xs) {
    std::map<int, long> strata;
    for (const auto& x : xs) ++strata[x.a];
    json s = json::array();
    for (auto& [a, c] : strata) s.push_back({{"a", a}, {"count", c}});
    return {{"count", xs.size()}, {"strata", s}, {"classes", tuple_json(xs)}};
}

}  // namespace rat4
