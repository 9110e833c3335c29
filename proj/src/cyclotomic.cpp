#include "rat4/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rat4 {

namespace {

using Poly = std::vector<Q>;

std::mutex phi_mutex;
std::map<int, std::vector<long>> phi_cache;

std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // den monic
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
        long c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (int k = 0; k < dd; ++k)
        if (num[k] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::vector<long> compute_phi(int m) {
    std::vector<long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_exact(p, cyclotomic_poly(d));
    return p;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly reduce(Poly p, int m) {
    const auto& phi = cyclotomic_poly(m);
    int d = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
        if (p[k] == 0) continue;
        Q c = p[k];
        for (int j = 0; j <= d; ++j)
            if (phi[j] != 0) p[k - d + j] -= c * phi[j];
    }
    p.resize(d);
    return p;
}

Poly mul(const Poly& x, const Poly& y) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) r[i + j] += x[i] * y[j];
    }
    return r;
}

// x = q*y + r
void divmod(const Poly& x, const Poly& y, Poly& q, Poly& r) {
    r = x;
    trim(r);
    Poly yy = y;
    trim(yy);
    int dy = static_cast<int>(yy.size()) - 1;
    q.assign(std::max<int>(0, static_cast<int>(r.size()) - dy), Q(0));
    while (static_cast<int>(r.size()) - 1 >= dy && !r.empty()) {
        int dr = static_cast<int>(r.size()) - 1;
        Q c = r[dr] / yy[dy];
        q[dr - dy] = c;
        for (int j = 0; j <= dy; ++j) r[dr - dy + j] -= c * yy[j];
        trim(r);
    }
    trim(q);
}

Poly sub(const Poly& x, const Poly& y) {
    Poly r(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    trim(r);
    return r;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    {
        std::lock_guard<std::mutex> lk(phi_mutex);
        auto it = phi_cache.find(m);
        if (it != phi_cache.end()) return it->second;
    }
    std::vector<long> p;
    if (m == 1) p = {-1, 1};
    else p = compute_phi(m);
    std::lock_guard<std::mutex> lk(phi_mutex);
    return phi_cache.emplace(m, std::move(p)).first->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_poly(m).size()) - 1; }

CycNumber::CycNumber() : m_(1), c_(1, Q(0)) {}

CycNumber::CycNumber(const Q& q) : m_(1), c_(1, q) {}

CycNumber::CycNumber(int m, std::vector<Q> coeffs) : m_(m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    c_ = reduce(std::move(coeffs), m);
}

CycNumber CycNumber::zeta(int m, long k) {
    long e = ((k % m) + m) % m;
    std::vector<Q> c(e + 1, Q(0));
    c[e] = 1;
    return CycNumber(m, c);
}

CycNumber CycNumber::lift(int M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
    int s = M / m_;
    std::vector<Q> p((c_.empty() ? 0 : (c_.size() - 1) * s) + 1, Q(0));
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * s] = c_[k];
    return CycNumber(M, p);
}

CycNumber CycNumber::conj() const {
    std::vector<Q> p(m_, Q(0));
    for (std::size_t k = 0; k < c_.size(); ++k) p[(m_ - static_cast<int>(k)) % m_] += c_[k];
    return CycNumber(m_, p);
}

bool CycNumber::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

CycNumber CycNumber::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // extended Euclid: find u with u*x + v*phi = g, g constant
    Poly phi;
    for (long v : cyclotomic_poly(m_)) phi.emplace_back(v);
    Poly r0 = phi, r1 = c_;
    trim(r1);
    Poly s0, s1{Q(1)};  // coefficients of x
    while (r1.size() > 1) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("non-invertible element in a field");
    Q g = r1[0];
    for (auto& v : s1) v /= g;
    return CycNumber(m_, s1);
}

std::optional<Q> CycNumber::to_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return std::nullopt;
    return c_.empty() ? Q(0) : c_[0];
}

std::complex<double> CycNumber::numeric() const {
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>(k) / m_;
        s += q_to_double(c_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string CycNumber::str() const {
    if (auto q = to_rational()) return q->str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Q c = c_[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Q ac = c < 0 ? Q(-c) : c;
        if (k == 0) os << ac.str();
        else {
            if (ac != 1) os << ac.str() << "*";
            os << "z" << m_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

CycNumber operator+(const CycNumber& x, const CycNumber& y) {
    int M = lcm_int(x.m_, y.m_);
    CycNumber a = x.lift(M), b = y.lift(M);
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    return a;
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycNumber operator-(const CycNumber& x, const CycNumber& y) { return x + (-y); }

CycNumber operator*(const CycNumber& x, const CycNumber& y) {
    int M = lcm_int(x.m_, y.m_);
    CycNumber a = x.lift(M), b = y.lift(M);
    return CycNumber(M, mul(a.c_, b.c_));
}

CycNumber operator/(const CycNumber& x, const CycNumber& y) {
    int M = lcm_int(x.m_, y.m_);
    return x.lift(M) * y.lift(M).inv();
}

bool operator==(const CycNumber& x, const CycNumber& y) {
    int M = lcm_int(x.m_, y.m_);
    return x.lift(M).c_ == y.lift(M).c_;
}

CycNumber trig(Trig kind, long k, long m) {
    if (m <= 0) throw std::invalid_argument("trig needs m > 0");
    int mm = static_cast<int>(m);
    CycNumber i = CycNumber::zeta(4, 1);
    switch (kind) {
        case Trig::cot: {
            if (k % m == 0) throw std::domain_error("cot pole");
            CycNumber z = CycNumber::zeta(mm, k);
            return i * (z + 1) / (z - 1);
        }
        case Trig::csc: {
            if (k % m == 0) throw std::domain_error("csc pole");
            CycNumber z = CycNumber::zeta(mm, k);
            return CycNumber(2) * i * CycNumber::zeta(2 * mm, k) / (z - 1);
        }
        case Trig::cos:
            return (CycNumber::zeta(2 * mm, k) + CycNumber::zeta(2 * mm, -k)) * CycNumber(Q(1, 2));
        case Trig::sin:
            return (CycNumber::zeta(2 * mm, k) - CycNumber::zeta(2 * mm, -k)) / (CycNumber(2) * i);
    }
    throw std::logic_error("unknown trig kind");
}

}  // namespace rat4
