#include "rat4/areafeas.hpp"

#include <sstream>
#include <stdexcept>

namespace rat4 {

LinearForm LinearForm::wH(int n) {
    LinearForm f(n);
    f.coef[0] = 1;
    return f;
}

LinearForm LinearForm::wE(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("area variable index");
    LinearForm f(n);
    f.coef[i] = 1;
    return f;
}

LinearForm LinearForm::delta(int n, int which) {
    if (which != 1 && which != 2) throw std::out_of_range("delta index");
    LinearForm f(n);
    f.coef[n + which] = 1;
    return f;
}

Q LinearForm::eval(const std::vector<Q>& x) const {
    Q s = constant;
    for (std::size_t i = 0; i < coef.size(); ++i)
        if (coef[i] != 0) s += coef[i] * x[i];
    return s;
}

std::string variable_name(int n, int idx) {
    if (idx == 0) return "wH";
    if (idx <= n) return "wE" + std::to_string(idx);
    return "delta" + std::to_string(idx - n);
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i] == 0) continue;
        Q c = coef[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Q ac = c < 0 ? Q(-c) : c;
        if (ac != 1) os << ac.str() << "*";
        os << variable_name(n(), static_cast<int>(i));
        first = false;
    }
    if (constant != 0 || first) {
        if (!first) os << (constant < 0 ? " - " : " + ") << (constant < 0 ? Q(-constant) : constant).str();
        else os << constant.str();
    }
    return os.str();
}

LinearForm operator+(const LinearForm& x, const LinearForm& y) {
    if (x.coef.size() != y.coef.size()) throw std::invalid_argument("linear form size mismatch");
    LinearForm r = x;
    for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] += y.coef[i];
    r.constant += y.constant;
    return r;
}

LinearForm operator*(const Q& k, const LinearForm& x) {
    LinearForm r = x;
    for (auto& c : r.coef) c *= k;
    r.constant *= k;
    return r;
}

LinearForm operator-(const LinearForm& x, const LinearForm& y) { return x + Q(-1) * y; }

void AreaSystem::add(const LinearForm& f, Rel rel, std::string tag) {
    if (f.n() != n) throw std::invalid_argument("row over a different lattice");
    rows.push_back({f, rel, std::move(tag)});
}

void AreaSystem::append(const AreaSystem& o) {
    if (o.n != n) throw std::invalid_argument("systems over different lattices");
    rows.insert(rows.end(), o.rows.begin(), o.rows.end());
}

bool AreaSystem::satisfied_by(const std::vector<Q>& x) const {
    for (const auto& r : rows) {
        Q v = r.f.eval(x);
        if (r.rel == Rel::gt && !(v > 0)) return false;
        if (r.rel == Rel::ge && !(v >= 0)) return false;
        if (r.rel == Rel::eq && v != 0) return false;
    }
    return true;
}

AreaSystem reduced_basis_system(int n, bool monotone) {
    if (n < 3) throw std::invalid_argument("reduced basis rows need n >= 3");
    AreaSystem s(n);
    s.add(LinearForm::wH(n), Rel::gt, "w(H) > 0");
    for (int i = 1; i <= n; ++i) s.add(LinearForm::wE(n, i), Rel::gt, "w(E" + std::to_string(i) + ") > 0");
    if (monotone)
        for (int i = 1; i < n; ++i)
            s.add(LinearForm::wE(n, i) - LinearForm::wE(n, i + 1), Rel::ge,
                  "w(E" + std::to_string(i) + ") >= w(E" + std::to_string(i + 1) + ")");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            s.add(LinearForm::wH(n) - LinearForm::wE(n, i) - LinearForm::wE(n, j), Rel::gt,
                  "w(H-E" + std::to_string(i) + "-E" + std::to_string(j) + ") > 0");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                s.add(LinearForm::wH(n) - LinearForm::wE(n, i) - LinearForm::wE(n, j) - LinearForm::wE(n, k),
                      Rel::ge,
                      "w(H-E" + std::to_string(i) + "-E" + std::to_string(j) + "-E" + std::to_string(k) + ") >= 0");
    return s;
}

LinearForm area_of(const HClass& A) {
    LinearForm f(A.n());
    f.coef[0] = A.a;
    for (int i = 0; i < A.n(); ++i) f.coef[i + 1] = -A.b[i];
    return f;
}

LinearForm minus_K_area(int n) { return Q(-1) * area_of(BlowupLattice(n).K()); }

// ---- simplex ----------------------------------------------------------------
//
// Primal: max t  s.t.  A x <= b, x free (last coordinate is t).
// Solved through its dual  min b.y  s.t.  A^T y = e_t, y >= 0  with a revised
// simplex (explicit basis inverse, Bland's rule). The simplex multipliers of the
// optimal dual basis are an optimal primal point.

namespace {

struct Entry {
    int idx;
    Q val;
};

struct Dual {
    int R;                                // equality rows = primal variables
    int m;                                // real columns = primal rows
    std::vector<std::vector<Entry>> col;  // column j, sign-flipped
    std::vector<Q> cost;                  // b_j
    std::vector<Q> rhs;
    std::vector<int> flip;

    std::vector<int> basis;
    std::vector<std::vector<Q>> Binv;
    std::vector<Q> xB;

    bool artificial(int j) const { return j >= m; }

    std::vector<Q> column(int j) const {
        std::vector<Q> v(R, Q(0));
        if (artificial(j)) v[j - m] = 1;
        else
            for (const auto& e : col[j]) v[e.idx] = e.val;
        return v;
    }

    std::vector<Q> ftran(int j) const {
        std::vector<Q> u(R, Q(0));
        if (artificial(j)) {
            for (int i = 0; i < R; ++i) u[i] = Binv[i][j - m];
            return u;
        }
        for (int i = 0; i < R; ++i) {
            Q s = 0;
            for (const auto& e : col[j])
                if (Binv[i][e.idx] != 0) s += Binv[i][e.idx] * e.val;
            u[i] = s;
        }
        return u;
    }

    void pivot(int r, int j, const std::vector<Q>& u) {
        Q piv = u[r];
        Q theta = xB[r] / piv;
        for (int i = 0; i < R; ++i)
            if (i != r && u[i] != 0) xB[i] -= theta * u[i];
        xB[r] = theta;
        for (auto& v : Binv[r]) v /= piv;
        for (int i = 0; i < R; ++i) {
            if (i == r || u[i] == 0) continue;
            Q f = u[i];
            for (int k = 0; k < R; ++k)
                if (Binv[r][k] != 0) Binv[i][k] -= f * Binv[r][k];
        }
        basis[r] = j;
    }

    std::vector<Q> multipliers(const std::vector<Q>& cB) const {
        std::vector<Q> pi(R, Q(0));
        for (int i = 0; i < R; ++i) {
            if (cB[i] == 0) continue;
            for (int k = 0; k < R; ++k)
                if (Binv[i][k] != 0) pi[k] += cB[i] * Binv[i][k];
        }
        return pi;
    }

    // Returns false when unbounded.
    bool optimize(bool phase1) {
        std::vector<char> inbasis(m + R, 0);
        for (;;) {
            std::fill(inbasis.begin(), inbasis.end(), 0);
            for (int b : basis) inbasis[b] = 1;
            std::vector<Q> cB(R);
            for (int i = 0; i < R; ++i)
                cB[i] = artificial(basis[i]) ? Q(phase1 ? 1 : 0) : (phase1 ? Q(0) : cost[basis[i]]);
            std::vector<Q> pi = multipliers(cB);
            int enter = -1;
            for (int j = 0; j < m; ++j) {
                if (inbasis[j]) continue;
                Q d = phase1 ? Q(0) : cost[j];
                for (const auto& e : col[j])
                    if (pi[e.idx] != 0) d -= pi[e.idx] * e.val;
                if (d < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            std::vector<Q> u = ftran(enter);
            int leave = -1;
            Q best;
            for (int i = 0; i < R; ++i) {
                if (u[i] <= 0) continue;
                Q ratio = xB[i] / u[i];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter, u);
        }
    }
};

}  // namespace

std::optional<Witness> feasible(const AreaSystem& s) {
    const int V = s.n + 3;  // area variables
    const int R = V + 1;    // plus t
    std::vector<std::vector<Entry>> rows;
    std::vector<Q> b;
    auto push = [&](const LinearForm& f, const Q& sign, bool with_t) {
        std::vector<Entry> row;
        for (int i = 0; i < V; ++i)
            if (f.coef[i] != 0) row.push_back({i, -sign * f.coef[i]});
        if (with_t) row.push_back({V, Q(1)});
        rows.push_back(std::move(row));
        b.push_back(sign * f.constant);
    };
    for (const auto& r : s.rows) {
        switch (r.rel) {
            case Rel::gt: push(r.f, 1, true); break;
            case Rel::ge: push(r.f, 1, false); break;
            case Rel::eq:
                push(r.f, 1, false);
                push(r.f, -1, false);
                break;
        }
    }
    rows.push_back({{V, Q(1)}});
    b.push_back(1);

    Dual d;
    d.R = R;
    d.m = static_cast<int>(rows.size());
    d.cost = b;
    d.rhs.assign(R, Q(0));
    d.rhs[V] = 1;
    d.flip.assign(R, 1);
    d.col.resize(d.m);
    for (int j = 0; j < d.m; ++j) d.col[j] = rows[j];
    d.basis.resize(R);
    d.Binv.assign(R, std::vector<Q>(R, Q(0)));
    for (int i = 0; i < R; ++i) {
        d.basis[i] = d.m + i;
        d.Binv[i][i] = 1;
    }
    d.xB = d.rhs;

    if (!d.optimize(true)) return std::nullopt;  // cannot happen for phase 1
    for (int i = 0; i < R; ++i)
        if (d.artificial(d.basis[i]) && d.xB[i] != 0) return std::nullopt;
    // drive remaining artificials out where possible
    for (int i = 0; i < R; ++i) {
        if (!d.artificial(d.basis[i])) continue;
        std::vector<char> inb(d.m, 0);
        for (int bb : d.basis)
            if (!d.artificial(bb)) inb[bb] = 1;
        for (int j = 0; j < d.m; ++j) {
            if (inb[j]) continue;
            std::vector<Q> u = d.ftran(j);
            if (u[i] != 0) {
                d.pivot(i, j, u);
                break;
            }
        }
    }
    if (!d.optimize(false)) return std::nullopt;

    std::vector<Q> cB(R);
    for (int i = 0; i < R; ++i) cB[i] = d.artificial(d.basis[i]) ? Q(0) : d.cost[d.basis[i]];
    std::vector<Q> pi = d.multipliers(cB);
    Witness w;
    w.values.assign(pi.begin(), pi.begin() + V);
    w.slack = pi[V];
    if (!(w.slack > 0)) return std::nullopt;
    if (!s.satisfied_by(w.values)) throw std::logic_error("simplex witness failed exact re-check");
    return w;
}

// ---- JSON -------------------------------------------------------------------

namespace {

const char* rel_str(Rel r) {
    switch (r) {
        case Rel::gt: return ">";
        case Rel::ge: return ">=";
        case Rel::eq: return "=";
    }
    return "?";
}

Rel rel_from(const std::string& s) {
    if (s == ">") return Rel::gt;
    if (s == ">=") return Rel::ge;
    if (s == "=" || s == "==") return Rel::eq;
    throw std::invalid_argument("unknown relation '" + s + "'");
}

int variable_index(int n, const std::string& name) {
    if (name == "wH") return 0;
    if (name.rfind("wE", 0) == 0) {
        int i = std::stoi(name.substr(2));
        if (i < 1 || i > n) throw std::invalid_argument("variable out of range: " + name);
        return i;
    }
    if (name == "delta1") return n + 1;
    if (name == "delta2") return n + 2;
    throw std::invalid_argument("unknown variable '" + name + "'");
}

}  // namespace

json system_json(const AreaSystem& s) {
    json rows = json::array();
    for (const auto& r : s.rows) {
        json f = json::object();
        for (std::size_t i = 0; i < r.f.coef.size(); ++i)
            if (r.f.coef[i] != 0) f[variable_name(s.n, static_cast<int>(i))] = r.f.coef[i].str();
        json row = {{"form", f}, {"const", r.f.constant.str()}, {"rel", rel_str(r.rel)}};
        if (!r.tag.empty()) row["tag"] = r.tag;
        rows.push_back(row);
    }
    return {{"n", s.n}, {"rows", rows}};
}

AreaSystem system_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("rows")) throw std::invalid_argument("area system needs 'n' and 'rows'");
    int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("area system needs n >= 1");
    AreaSystem s(n);
    if (j.value("reduced_basis", false)) s = reduced_basis_system(n, j.value("monotone", true));
    for (const auto& r : j.at("rows")) {
        LinearForm f(n);
        for (const auto& [name, v] : r.at("form").items())
            f.coef[variable_index(n, name)] = v.is_string() ? Q(v.get<std::string>()) : Q(v.get<long>());
        if (r.contains("const")) {
            const auto& c = r.at("const");
            f.constant = c.is_string() ? Q(c.get<std::string>()) : Q(c.get<long>());
        }
        s.add(f, rel_from(r.at("rel").get<std::string>()), r.value("tag", std::string()));
    }
    return s;
}

json witness_json(int n, const Witness& w) {
    json j = json::object();
    for (std::size_t i = 0; i < w.values.size(); ++i) j[variable_name(n, static_cast<int>(i))] = w.values[i].str();
    return j;
}

}  // namespace rat4
