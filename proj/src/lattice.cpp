#include "rat4/lattice.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rat4 {

namespace {

void require_same(const HClass& x, const HClass& y) {
    if (x.b.size() != y.b.size()) throw std::invalid_argument("lattice dimension mismatch");
}

void require_index(const HClass& x, int k) {
    if (k < 1 || k > x.n()) throw std::out_of_range("exceptional index out of range");
}

}  // namespace

bool HClass::is_zero() const {
    if (a != 0) return false;
    for (int v : b)
        if (v != 0) return false;
    return true;
}

std::string HClass::str() const {
    std::ostringstream os;
    bool first = true;
    if (a != 0) {
        if (a == -1) os << "-";
        else if (a != 1) os << a;
        os << "H";
        first = false;
    }
    for (int i = 0; i < n(); ++i) {
        int c = -b[i];
        if (c == 0) continue;
        if (c > 0 && !first) os << " + ";
        if (c < 0) os << (first ? "-" : " - ");
        if (std::abs(c) != 1) os << std::abs(c);
        os << "E" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

BlowupLattice::BlowupLattice(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("lattice needs n >= 1");
}

HClass BlowupLattice::H() const { return HClass(1, std::vector<int>(n, 0)); }

HClass BlowupLattice::E(int i) const {
    if (i < 1 || i > n) throw std::out_of_range("exceptional index out of range");
    HClass e(0, std::vector<int>(n, 0));
    e.b[i - 1] = -1;
    return e;
}

HClass BlowupLattice::K() const { return HClass(-3, std::vector<int>(n, -1)); }

HClass BlowupLattice::zero() const { return HClass(0, std::vector<int>(n, 0)); }

HClass operator+(const HClass& x, const HClass& y) {
    require_same(x, y);
    HClass r(x.a + y.a, x.b);
    for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
    return r;
}

HClass operator-(const HClass& x) {
    HClass r(-x.a, x.b);
    for (int& v : r.b) v = -v;
    return r;
}

HClass operator-(const HClass& x, const HClass& y) { return x + (-y); }

HClass operator*(long k, const HClass& x) {
    HClass r(static_cast<int>(k * x.a), x.b);
    for (int& v : r.b) v = static_cast<int>(k * v);
    return r;
}

long pair(const HClass& x, const HClass& y) {
    require_same(x, y);
    long s = static_cast<long>(x.a) * y.a;
    for (std::size_t i = 0; i < x.b.size(); ++i) s -= static_cast<long>(x.b[i]) * y.b[i];
    return s;
}

long square(const HClass& x) { return pair(x, x); }

long k_dot(const HClass& x) {
    long s = -3L * x.a;
    for (int v : x.b) s += v;
    return s;
}

long adjunction_genus(const HClass& x) {
    long num = square(x) + k_dot(x);
    return num / 2 + 1;
}

HClass reflect_exceptional(const HClass& x, int k) {
    require_index(x, k);
    HClass r = x;
    r.b[k - 1] = -r.b[k - 1];
    return r;
}

HClass reflect_cremona(const HClass& x, int i, int j, int k) {
    require_index(x, i);
    require_index(x, j);
    require_index(x, k);
    if (i == j || j == k || i == k) throw std::invalid_argument("cremona indices must be distinct");
    int d = x.a - (x.b[i - 1] + x.b[j - 1] + x.b[k - 1]);
    HClass r = x;
    r.a += d;
    r.b[i - 1] += d;
    r.b[j - 1] += d;
    r.b[k - 1] += d;
    return r;
}

HClass permute_columns(const HClass& x, const std::vector<int>& perm) {
    HClass r(x.a, std::vector<int>(x.b.size()));
    for (std::size_t t = 0; t < perm.size(); ++t) r.b[t] = x.b[perm[t]];
    return r;
}

// ---- canonical form -------------------------------------------------------

namespace {

using Row = std::vector<int>;  // a, then permuted b

struct Canon {
    const std::vector<HClass>& in;
    int k, n;
    std::vector<Row> best;
    std::vector<int> best_perm;
    bool have = false;

    explicit Canon(const std::vector<HClass>& t)
        : in(t), k(static_cast<int>(t.size())), n(t.empty() ? 0 : t[0].n()) {}

    Row image(int r, const std::vector<std::vector<int>>& cells) const {
        Row v;
        v.reserve(n + 1);
        v.push_back(in[r].a);
        for (const auto& c : cells) {
            std::size_t s = v.size();
            for (int col : c) v.push_back(in[r].b[col]);
            std::sort(v.begin() + s, v.end());
        }
        return v;
    }

    // -1: prefix < best prefix, 0: equal, 1: greater
    int cmp_prefix(const std::vector<Row>& prefix) const {
        if (!have) return -1;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] < best[i]) return -1;
            if (best[i] < prefix[i]) return 1;
        }
        return 0;
    }

    void run(std::vector<std::vector<int>>& cells, std::vector<char>& used, std::vector<Row>& prefix) {
        int c = cmp_prefix(prefix);
        if (c > 0) return;
        if (static_cast<int>(prefix.size()) == k) {
            if (c < 0) {
                best = prefix;
                best_perm.clear();
                for (const auto& cell : cells)
                    for (int col : cell) best_perm.push_back(col);
                have = true;
            }
            return;
        }
        std::vector<std::pair<Row, int>> cand;
        for (int r = 0; r < k; ++r)
            if (!used[r]) cand.emplace_back(image(r, cells), r);
        Row m = cand[0].first;
        for (auto& p : cand) m = std::min(m, p.first);
        if (c == 0 && best[prefix.size()] < m) return;
        std::set<std::vector<int>> tried;
        for (auto& [img, r] : cand) {
            if (img != m) continue;
            std::vector<int> raw(in[r].b);
            raw.insert(raw.begin(), in[r].a);
            if (!tried.insert(raw).second) continue;
            std::vector<std::vector<int>> next;
            for (const auto& cell : cells) {
                std::map<int, std::vector<int>> split;
                for (int col : cell) split[in[r].b[col]].push_back(col);
                for (auto& [val, cols] : split) next.push_back(std::move(cols));
            }
            used[r] = 1;
            prefix.push_back(m);
            run(next, used, prefix);
            prefix.pop_back();
            used[r] = 0;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const std::vector<HClass>& t) {
    CanonicalForm out;
    if (t.empty()) return out;
    for (const auto& x : t) require_same(x, t[0]);
    Canon c(t);
    std::vector<std::vector<int>> cells(1);
    for (int i = 0; i < c.n; ++i) cells[0].push_back(i);
    if (c.n == 0) cells.clear();
    std::vector<char> used(c.k, 0);
    std::vector<Row> prefix;
    c.run(cells, used, prefix);
    out.perm = c.best_perm;
    for (const auto& r : c.best) out.rows.emplace_back(r[0], std::vector<int>(r.begin() + 1, r.end()));
    return out;
}

std::vector<HClass> canonical_tuple(const std::vector<HClass>& t) { return canonical_form(t).rows; }

std::vector<int> canonical_key(const std::vector<HClass>& t) {
    std::vector<int> key;
    for (const auto& r : canonical_tuple(t)) {
        key.push_back(r.a);
        key.insert(key.end(), r.b.begin(), r.b.end());
    }
    return key;
}

// ---- vector enumeration ---------------------------------------------------

namespace {

struct VecEnum {
    int n, lo, hi;
    bool sorted;
    const std::function<void(const std::vector<int>&)>& f;
    std::vector<int> cur;
    long maxsq;

    VecEnum(int n_, int lo_, int hi_, bool s, const std::function<void(const std::vector<int>&)>& f_)
        : n(n_), lo(lo_), hi(hi_), sorted(s), f(f_), cur(n_) {
        maxsq = std::max(static_cast<long>(lo) * lo, static_cast<long>(hi) * hi);
    }

    void rec(int pos, long sum, long sq, int cap) {
        int r = n - pos;
        if (r == 0) {
            if (sum == 0 && sq == 0) f(cur);
            return;
        }
        if (sq < 0) return;
        int top = sorted ? std::min(hi, cap) : hi;
        if (sum < static_cast<long>(r) * lo || sum > static_cast<long>(r) * top) return;
        if (sq * r < sum * sum) return;
        if (sq > r * maxsq) return;
        for (int v = lo; v <= top; ++v) {
            long v2 = static_cast<long>(v) * v;
            if (v2 > sq) continue;
            cur[pos] = v;
            rec(pos + 1, sum - v, sq - v2, v);
        }
    }
};

}  // namespace

void for_each_vector(int n, long sum, long sumsq, int lo, int hi,
                     const std::function<void(const std::vector<int>&)>& f) {
    VecEnum e(n, lo, hi, false, f);
    e.rec(0, sum, sumsq, hi);
}

void for_each_sorted_vector(int n, long sum, long sumsq, int lo, int hi,
                            const std::function<void(const std::vector<int>&)>& f) {
    // non-increasing: enumerate with a cap that descends
    VecEnum e(n, lo, hi, true, f);
    e.rec(0, sum, sumsq, hi);
}

// ---- N = 9 roots ----------------------------------------------------------

std::vector<HClass> minus2_classes_mod_K(int n) {
    if (n != 9) throw std::invalid_argument("minus2_classes_mod_K is defined for N = 9 only");
    std::set<HClass> reps;
    for (int a = -4; a <= 4; ++a) {
        for_each_vector(n, 3L * a, static_cast<long>(a) * a + 2, -5, 5, [&](const std::vector<int>& b) {
            int t = (a >= 0) ? (a + 1) / 3 : -((-a + 1) / 3);
            HClass r(a - 3 * t, b);
            for (int& v : r.b) v -= t;
            reps.insert(r);
        });
    }
    return {reps.begin(), reps.end()};
}

namespace {

// Row-reduce over Q; returns indices of a maximal independent subset.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<Q>>& rows) {
    std::vector<std::vector<Q>> basis;
    std::vector<std::size_t> pivcol, picked;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Q> v = rows[r];
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Q& c = v[pivcol[i]];
            if (c == 0) continue;
            Q f = c / basis[i][pivcol[i]];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[i][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        basis.push_back(v);
        pivcol.push_back(p);
        picked.push_back(r);
    }
    return picked;
}

std::vector<std::vector<Q>> gram(const std::vector<HClass>& xs) {
    std::vector<std::vector<Q>> g(xs.size(), std::vector<Q>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) g[i][j] = pair(xs[i], xs[j]);
    return g;
}

}  // namespace

long rank_of_gram(const std::vector<HClass>& xs) {
    std::vector<std::vector<Q>> coords;
    for (const auto& x : xs) {
        std::vector<Q> v{x.a};
        for (int c : x.b) v.emplace_back(c);
        coords.push_back(v);
    }
    std::vector<HClass> basis;
    for (auto i : independent_rows(coords)) basis.push_back(xs[i]);
    return static_cast<long>(independent_rows(gram(basis)).size());
}

bool negative_definite(const std::vector<HClass>& xs) {
    auto g = gram(xs);
    std::size_t n = g.size();
    for (auto& row : g)
        for (auto& v : row) v = -v;
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i][i] <= 0) return false;
        for (std::size_t r = i + 1; r < n; ++r) {
            Q f = g[r][i] / g[i][i];
            for (std::size_t c = i; c < n; ++c) g[r][c] -= f * g[i][c];
        }
    }
    return true;
}

std::vector<HClass> max_orthogonal_roots(const std::vector<HClass>& roots) {
    std::vector<HClass> vs;
    std::set<HClass> seen;
    for (const auto& r : roots) {
        if (seen.count(-r)) continue;
        seen.insert(r);
        vs.push_back(r);
    }
    std::size_t n = vs.size();
    std::size_t words = (n + 63) / 64;
    using Bits = std::vector<std::uint64_t>;
    std::vector<Bits> adj(n, Bits(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && pair(vs[i], vs[j]) == 0) adj[i][j / 64] |= 1ULL << (j % 64);

    std::vector<std::size_t> best, cur;
    auto popcount = [&](const Bits& b) {
        std::size_t c = 0;
        for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    };
    std::function<void(Bits)> grow = [&](Bits cand) {
        if (cur.size() > best.size()) best = cur;
        while (true) {
            if (cur.size() + popcount(cand) <= best.size()) return;
            std::size_t v = n;
            for (std::size_t w = 0; w < words; ++w)
                if (cand[w]) {
                    v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(cand[w]));
                    break;
                }
            if (v == n) return;
            cand[v / 64] &= ~(1ULL << (v % 64));
            Bits next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = cand[w] & adj[v][w];
            cur.push_back(v);
            grow(next);
            cur.pop_back();
        }
    };
    Bits all(words, 0);
    for (std::size_t i = 0; i < n; ++i) all[i / 64] |= 1ULL << (i % 64);
    grow(all);
    std::vector<HClass> out;
    for (auto i : best) out.push_back(vs[i]);
    return out;
}

}  // namespace rat4

namespace rat4 {
unsigned& thread_count() {
    static unsigned k = 0;
    return k;
}
}  // namespace rat4
