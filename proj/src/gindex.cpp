#include "rat4/gindex.hpp"

#include <numeric>

namespace rat4 {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

long inverse_mod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::invalid_argument("weight is not a unit modulo the order");
    return mod(t, m);
}

Q rational_or_throw(const CycNumber& x, const char* what) {
    auto q = x.to_rational();
    if (!q) throw std::logic_error(std::string(what) + " is not rational: " + x.str());
    return *q;
}

// A fraction of a full turn reduced into [0, 1).
Q reduce_turn(const Q& t) {
    Z num = boost::multiprecision::numerator(t), den = boost::multiprecision::denominator(t);
    Z r = num % den;
    if (r < 0) r += den;
    return Q(r, den);
}

CycNumber turn_cos(const Q& t) {
    Q r = reduce_turn(t);
    long num = boost::multiprecision::numerator(r).convert_to<long>();
    long den = boost::multiprecision::denominator(r).convert_to<long>();
    return cos_pi(2 * num, den);
}

CycNumber turn_sin(const Q& t) {
    Q r = reduce_turn(t);
    long num = boost::multiprecision::numerator(r).convert_to<long>();
    long den = boost::multiprecision::denominator(r).convert_to<long>();
    return sin_pi(2 * num, den);
}

using Mat = std::vector<std::vector<CycNumber>>;

CycNumber det(const Mat& a) {
    std::size_t n = a.size();
    if (n == 0) return CycNumber(1);
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    CycNumber s;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        Mat minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<CycNumber> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        CycNumber t = a[0][j] * det(minor);
        s = (j % 2 == 0) ? s + t : s - t;
    }
    return s;
}

Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat s;
    for (int r : rows) {
        std::vector<CycNumber> row;
        for (int c : cols) row.push_back(a[r][c]);
        s.push_back(row);
    }
    return s;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

IsolatedPoint normalized_type(const IsolatedPoint& q) {
    if (q.order < 2) throw std::invalid_argument("isotropy order must be at least 2");
    long inv = inverse_mod(q.a, q.order);
    IsolatedPoint r{q.order, 1, static_cast<int>(mod(static_cast<long>(q.b) * inv, q.order))};
    if (r.b == 0) throw std::invalid_argument("weight vanishes modulo the order");
    return r;
}

void FixedPointProfile::validate() const {
    if (group_order < 1) throw std::invalid_argument("group order must be positive");
    for (const auto& q : points) {
        if (q.order < 2 || group_order % q.order != 0)
            throw std::invalid_argument("point order must divide the group order");
        if (q.a <= 0 || q.a >= q.order || q.b <= 0 || q.b >= q.order)
            throw std::invalid_argument("point weights must lie in (0, order)");
    }
    for (const auto& y : surfaces) {
        if (y.order < 2 || group_order % y.order != 0)
            throw std::invalid_argument("surface order must divide the group order");
        if (y.weight <= 0 || y.weight >= y.order) throw std::invalid_argument("normal weight must lie in (0, order)");
        if (y.genus < 0) throw std::invalid_argument("genus must be nonnegative");
        if (cy && y.self_int != 2 * y.genus - 2)
            throw std::invalid_argument("Calabi-Yau profile needs Y^2 = 2g - 2");
    }
}

json profile_json(const FixedPointProfile& p) {
    json pts = json::array();
    for (const auto& q : p.points) pts.push_back({{"order", q.order}, {"a", q.a}, {"b", q.b}});
    json ys = json::array();
    for (const auto& y : p.surfaces)
        ys.push_back({{"genus", y.genus}, {"self_int", y.self_int}, {"weight", y.weight}, {"order", y.order}});
    return {{"group_order", p.group_order}, {"cy", p.cy}, {"points", pts}, {"surfaces", ys}};
}

FixedPointProfile profile_from_json(const json& j) {
    FixedPointProfile p;
    p.group_order = j.at("group_order").get<int>();
    p.cy = j.value("cy", false);
    if (j.contains("points"))
        for (const auto& q : j.at("points")) {
            int count = q.value("count", 1);
            for (int i = 0; i < count; ++i)
                p.points.push_back({q.value("order", p.group_order), q.at("a").get<int>(), q.at("b").get<int>()});
        }
    if (j.contains("surfaces"))
        for (const auto& y : j.at("surfaces")) {
            int count = y.value("count", 1);
            FixedSurface s{y.at("genus").get<int>(), 0, y.value("weight", 1), y.value("order", p.group_order)};
            s.self_int = y.contains("self_int") ? y.at("self_int").get<int>() : 2 * s.genus - 2;
            for (int i = 0; i < count; ++i) p.surfaces.push_back(s);
        }
    p.validate();
    return p;
}

long lefschetz_fix(const FixedPointProfile& p) {
    long s = static_cast<long>(p.points.size());
    for (const auto& y : p.surfaces) s += 2 - 2L * y.genus;
    return s;
}

CycNumber signature_number(const FixedPointProfile& p, long e) {
    CycNumber s;
    for (const auto& q : p.points) {
        long a = mod(e * q.a, q.order), b = mod(e * q.b, q.order);
        if (a == 0 || b == 0) throw std::domain_error("weight vanishes for this power; restrict the profile first");
        s -= cot_pi(a, q.order) * cot_pi(b, q.order);
    }
    for (const auto& y : p.surfaces) {
        long c = mod(e * y.weight, y.order);
        if (c == 0) throw std::domain_error("normal weight vanishes for this power; restrict the profile first");
        CycNumber k = csc_pi(c, y.order);
        s += k * k * CycNumber(static_cast<long>(y.self_int));
    }
    return s;
}

Q signature_defect(const IsolatedPoint& q, int p) {
    if (q.order != p) throw std::invalid_argument("defect needs a point of isotropy order p");
    CycNumber s;
    for (long j = 1; j < p; ++j) {
        CycNumber la = CycNumber::zeta(p, j * q.a), lb = CycNumber::zeta(p, j * q.b);
        s += (CycNumber(1) + la) * (CycNumber(1) + lb) / ((CycNumber(1) - la) * (CycNumber(1) - lb));
    }
    return rational_or_throw(s, "point defect");
}

Q signature_defect(const FixedSurface& y, int p) {
    return Q(static_cast<long>(p) * p - 1, 3) * y.self_int;
}

WeakQuotient weak_checks(int p, long chi_M, long sign_M, const FixedPointProfile& prof) {
    WeakQuotient w;
    w.chi = Q(chi_M + static_cast<long>(p - 1) * lefschetz_fix(prof), p);
    Q def = 0;
    for (const auto& q : prof.points) def += signature_defect(q, p);
    for (const auto& y : prof.surfaces) def += signature_defect(y, p);
    w.sign = (Q(sign_M) + def) / p;
    w.chi_integral = is_integer(w.chi);
    return w;
}

int spin_k_point(int a, int b, int p) {
    for (int k = 0; k <= 3; ++k) {
        long r = static_cast<long>(k) * p - (a + b);
        if (r >= 0 && r < 2L * p && r % 2 == 0) return k;
    }
    throw std::logic_error("no parity index for point weights");
}

int spin_k_surface(int c, int p) {
    for (int k = 0; k <= 3; ++k) {
        long r = static_cast<long>(k) * p - c;
        if (r > 0 && r < 2L * p && r % 2 == 0) return k;
    }
    throw std::logic_error("no parity index for surface weight");
}

CycNumber spin_number(const FixedPointProfile& prof, int p, long e) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("Spin number needs an odd prime");
    CycNumber s;
    for (const auto& q : prof.points) {
        if (q.order != p) throw std::invalid_argument("Spin number needs isotropy order p");
        int a = static_cast<int>(mod(e * q.a, p)), b = static_cast<int>(mod(e * q.b, p));
        if (a == 0 || b == 0) throw std::domain_error("weight vanishes for this power");
        CycNumber t = csc_pi(a, p) * csc_pi(b, p) * CycNumber(Q(1, 4));
        s = spin_k_point(a, b, p) % 2 == 0 ? s - t : s + t;
    }
    for (const auto& y : prof.surfaces) {
        if (y.order != p) throw std::invalid_argument("Spin number needs isotropy order p");
        int c = static_cast<int>(mod(e * y.weight, p));
        if (c == 0) throw std::domain_error("normal weight vanishes for this power");
        CycNumber t = csc_pi(c, p) * cot_pi(c, p) * CycNumber(Q(y.self_int, 4));
        s = spin_k_surface(c, p) % 2 == 0 ? s + t : s - t;
    }
    return s;
}

SpinSolve spin_coefficients(const std::map<long, CycNumber>& values, int p, long index_total) {
    SpinSolve r;
    for (long e = 1; e < p; ++e)
        if (!values.count(e)) throw std::invalid_argument("Spin values needed for every nonzero exponent");
    for (long k = 0; k < p; ++k) {
        CycNumber s(index_total);
        for (long e = 1; e < p; ++e) s += values.at(e) * CycNumber::zeta(p, -k * e);
        auto q = (s * CycNumber(Q(1, p))).to_rational();
        if (!q) {
            r.reason = "d_" + std::to_string(k) + " is not rational";
            r.d.clear();
            return r;
        }
        r.d.push_back(*q);
    }
    for (long k = 0; k < p; ++k)
        if (!is_integer(r.d[k])) {
            r.reason = "d_" + std::to_string(k) + " = " + r.d[k].str() + " is not an integer";
            return r;
        }
    for (long k = 1; k < p; ++k)
        if (r.d[k] != r.d[p - k]) {
            r.reason = "d_k != d_{p-k}";
            return r;
        }
    for (long e = 1; e < p; ++e) {
        CycNumber s;
        for (long k = 0; k < p; ++k) s += CycNumber(r.d[k]) * CycNumber::zeta(p, k * e);
        if (s != values.at(e)) {
            r.reason = "coefficients do not reproduce Spin(g^" + std::to_string(e) + ")";
            return r;
        }
    }
    r.ok = true;
    return r;
}

TorusModel torus_model(const Q& theta1, const Q& theta2, bool allow_nonintegral) {
    TorusModel t;
    t.theta1 = reduce_turn(theta1);
    t.theta2 = reduce_turn(theta2);
    {
        long d1 = boost::multiprecision::denominator(t.theta1).convert_to<long>();
        long d2 = boost::multiprecision::denominator(t.theta2).convert_to<long>();
        t.order = static_cast<int>(std::lcm(d1, d2));
    }
    CycNumber c1 = turn_cos(t.theta1), s1 = turn_sin(t.theta1);
    CycNumber c2 = turn_cos(t.theta2), s2 = turn_sin(t.theta2);
    CycNumber zero;
    // columns are images of alpha_1..alpha_4
    Mat A = {{c1, -s1, zero, zero}, {s1, c1, zero, zero}, {zero, zero, c2, -s2}, {zero, zero, s2, c2}};

    std::vector<CycNumber> tr(5);
    for (int k = 0; k <= 4; ++k)
        for (const auto& I : subsets(4, k)) tr[k] += det(submatrix(A, I, I));
    t.lefschetz = tr[0] - tr[1] + tr[2] - tr[3] + tr[4];
    t.trace_b1 = tr[1];

    // Lambda^2 in the basis a12, a13, a14, a23, a24, a34; M[J][I] = coefficient of a_J in g.a_I.
    auto pairs = subsets(4, 2);
    Mat M(6, std::vector<CycNumber>(6));
    for (int I = 0; I < 6; ++I)
        for (int J = 0; J < 6; ++J) M[J][I] = det(submatrix(A, pairs[J], pairs[I]));

    bool ok = true;
    // g acting on gamma_1..gamma_4 = a13, a14, a23, a24 as displayed in the model
    {
        int idx[4] = {1, 2, 3, 4};
        CycNumber expect[4][4] = {{c1 * c2, c1 * s2, s1 * c2, s1 * s2},
                                  {-(c1 * s2), c1 * c2, -(s1 * s2), s1 * c2},
                                  {-(s1 * c2), -(s1 * s2), c1 * c2, c1 * s2},
                                  {s1 * s2, -(s1 * c2), -(c1 * s2), c1 * c2}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) ok = ok && M[idx[j]][idx[i]] == expect[i][j];
        ok = ok && M[0][0] == CycNumber(1) && M[5][5] == CycNumber(1);
    }

    // beta and beta' bases; P^T P = 2 I.
    const int P[6][6] = {
        // columns: b1, b2, b3, b1', b2', b3'
        {1, 0, 0, 1, 0, 0},   // a12
        {0, 1, 0, 0, 1, 0},   // a13
        {0, 0, 1, 0, 0, 1},   // a14
        {0, 0, 1, 0, 0, -1},  // a23
        {0, -1, 0, 0, 1, 0},  // a24
        {1, 0, 0, -1, 0, 0},  // a34
    };
    Mat B(6, std::vector<CycNumber>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CycNumber s;
            for (int r = 0; r < 6; ++r) {
                if (P[r][i] == 0) continue;
                for (int c = 0; c < 6; ++c) {
                    if (P[c][j] == 0 || M[r][c].is_zero()) continue;
                    s += CycNumber(static_cast<long>(P[r][i] * P[c][j])) * M[r][c];
                }
            }
            B[i][j] = s * CycNumber(Q(1, 2));
        }
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if ((i < 3) != (j < 3)) ok = ok && B[i][j].is_zero();
    auto rotation_block = [&](int o, const Q& phi) {
        CycNumber cp = turn_cos(phi), sp = turn_sin(phi);
        bool fixed = B[o][o] == CycNumber(1) && B[o + 1][o].is_zero() && B[o + 2][o].is_zero() &&
                     B[o][o + 1].is_zero() && B[o][o + 2].is_zero();
        bool rot = B[o + 1][o + 1] == cp && B[o + 2][o + 2] == cp &&
                   ((B[o + 2][o + 1] == sp && B[o + 1][o + 2] == -sp) ||
                    (B[o + 2][o + 1] == -sp && B[o + 1][o + 2] == sp));
        return fixed && rot;
    };
    ok = ok && rotation_block(0, t.theta1 + t.theta2) && rotation_block(3, t.theta1 - t.theta2);
    CycNumber trp = B[0][0] + B[1][1] + B[2][2], trm = B[3][3] + B[4][4] + B[5][5];
    t.sign = trp - trm;
    ok = ok && tr[2] == trp + trm;

    CycNumber one(1);
    ok = ok && t.lefschetz == CycNumber(4) * (one - c1) * (one - c2);
    ok = ok && t.sign == CycNumber(-4) * s1 * s2;
    ok = ok && t.sign == CycNumber(2) * (turn_cos(t.theta1 + t.theta2) - turn_cos(t.theta1 - t.theta2));
    t.closed_forms_agree = ok;

    t.two_cos_sum = CycNumber(2) * (c1 + c2);
    t.four_cos_prod = CycNumber(4) * c1 * c2;
    auto a = t.two_cos_sum.to_rational(), b = t.four_cos_prod.to_rational();
    t.integral = a && b && is_integer(*a) && is_integer(*b);
    if (t.integral) t.L = q_to_long(rational_or_throw(t.lefschetz, "Lefschetz number"));
    t.b1_fixed = 2 * (t.theta1 == 0) + 2 * (t.theta2 == 0);
    t.b2plus_fixed = 1 + 2 * (reduce_turn(t.theta1 + t.theta2) == 0);
    t.b2minus_fixed = 1 + 2 * (reduce_turn(t.theta1 - t.theta2) == 0);
    if (!ok) throw std::logic_error("torus model: explicit action disagrees with closed forms");
    if (!t.integral && !allow_nonintegral)
        throw IntegralityError("angles " + t.theta1.str() + ", " + t.theta2.str() +
                               " violate the integrality conditions: 2(cos+cos) = " + t.two_cos_sum.str() +
                               ", 4cos*cos = " + t.four_cos_prod.str());
    return t;
}

json torus_model_json(const TorusModel& t) {
    json j = {{"theta1", t.theta1.str()},
              {"theta2", t.theta2.str()},
              {"order", t.order},
              {"integral", t.integral},
              {"closed_forms_agree", t.closed_forms_agree},
              {"two_cos_sum", t.two_cos_sum.str()},
              {"four_cos_prod", t.four_cos_prod.str()},
              {"lefschetz", t.lefschetz.str()},
              {"sign", t.sign.str()},
              {"sign_numeric", t.sign.numeric().real()},
              {"trace_b1", t.trace_b1.str()},
              {"b1_fixed", t.b1_fixed},
              {"b2plus_fixed", t.b2plus_fixed},
              {"b2minus_fixed", t.b2minus_fixed}};
    if (t.integral) j["L"] = t.L;
    return j;
}

TorusQuotient torus_quotient(const Q& theta1, const Q& theta2) {
    TorusModel g = torus_model(theta1, theta2);
    TorusQuotient q;
    q.order = g.order;
    Q sum = 0;
    for (int e = 1; e < g.order; ++e) {
        TorusModel ge = torus_model(theta1 * e, theta2 * e);
        q.lefschetz_powers.push_back(ge.L);
        sum += ge.L;
    }
    q.chi = sum / g.order;
    q.b1 = g.b1_fixed;
    q.b2plus = g.b2plus_fixed;
    q.b2minus = g.b2minus_fixed;
    if (q.chi != Q(2 - 2 * q.b1 + q.b2plus + q.b2minus))
        throw std::logic_error("quotient Euler characteristic disagrees with invariant Betti numbers");
    return q;
}

bool order_admits_integral_angles(int n, std::vector<std::pair<Q, Q>>* witnesses) {
    bool any = false;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (std::gcd(std::gcd(i, j), n) != 1) continue;
            TorusModel t = torus_model(Q(i, n), Q(j, n), true);
            if (t.integral) {
                any = true;
                if (witnesses) witnesses->emplace_back(Q(i, n), Q(j, n));
            }
        }
    return any;
}

bool ResolutionData::du_val() const {
    for (int c : chain)
        if (c != 2) return false;
    return true;
}

ResolutionData hj_resolution(int m, int b) {
    if (m < 2 || b <= 0 || b >= m || std::gcd(m, b) != 1)
        throw std::invalid_argument("resolution needs 0 < b < m with gcd(m, b) = 1");
    ResolutionData r;
    r.m = m;
    r.b = b;
    long x = m, y = b;
    while (y > 0) {
        long c = (x + y - 1) / y;
        r.chain.push_back(static_cast<int>(c));
        long rem = c * y - x;
        x = y;
        y = rem;
    }
    int k = static_cast<int>(r.chain.size());
    // intersection matrix augmented with c_i - 2
    std::vector<std::vector<Q>> a(k, std::vector<Q>(k + 1, Q(0)));
    for (int i = 0; i < k; ++i) {
        a[i][i] = -r.chain[i];
        if (i > 0) a[i][i - 1] = 1;
        if (i + 1 < k) a[i][i + 1] = 1;
        a[i][k] = r.chain[i] - 2;
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        for (int i = 0; i < k; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Q f = a[i][col] / a[col][col];
            for (int j = col; j <= k; ++j) a[i][j] -= f * a[col][j];
        }
    }
    r.delta_K2 = 0;
    for (int i = 0; i < k; ++i) {
        Q d = a[i][k] / a[i][i];
        r.discrepancies.push_back(d);
        r.delta_K2 += d * (r.chain[i] - 2);
    }
    r.delta_chi = k;
    r.delta_b2minus = k;
    return r;
}

json resolution_json(const ResolutionData& r) {
    json d = json::array();
    for (const auto& q : r.discrepancies) d.push_back(q.str());
    return {{"m", r.m},
            {"b", r.b},
            {"chain", r.chain},
            {"discrepancies", d},
            {"delta_K2", r.delta_K2.str()},
            {"delta_chi", r.delta_chi},
            {"delta_b2minus", r.delta_b2minus},
            {"du_val", r.du_val()}};
}

}  // namespace rat4
