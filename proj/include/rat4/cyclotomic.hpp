#pragma once

#include "rat4/numeric.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace rat4 {

// Integer coefficients of the m-th cyclotomic polynomial, low degree first. Cached.
const std::vector<long>& cyclotomic_poly(int m);
int euler_phi(int m);

// Element of Q(zeta_m) in the power basis modulo Phi_m.
class CycNumber {
public:
    CycNumber();  // zero in Q(zeta_1)
    CycNumber(const Q& q);  // NOLINT: implicit from rationals is intended
    CycNumber(long v) : CycNumber(Q(v)) {}
    CycNumber(int v) : CycNumber(Q(v)) {}
    CycNumber(int m, std::vector<Q> coeffs);

    static CycNumber zeta(int m, long k = 1);

    int conductor() const { return m_; }
    const std::vector<Q>& coeffs() const { return c_; }

    CycNumber lift(int M) const;
    CycNumber conj() const;
    CycNumber inv() const;

    bool is_zero() const;
    std::optional<Q> to_rational() const;
    std::complex<double> numeric() const;
    std::string str() const;

    friend CycNumber operator+(const CycNumber& x, const CycNumber& y);
    friend CycNumber operator-(const CycNumber& x, const CycNumber& y);
    friend CycNumber operator*(const CycNumber& x, const CycNumber& y);
    friend CycNumber operator/(const CycNumber& x, const CycNumber& y);
    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& y) { return *this = *this + y; }
    CycNumber& operator-=(const CycNumber& y) { return *this = *this - y; }
    CycNumber& operator*=(const CycNumber& y) { return *this = *this * y; }
    friend bool operator==(const CycNumber& x, const CycNumber& y);
    friend bool operator!=(const CycNumber& x, const CycNumber& y) { return !(x == y); }

private:
    int m_;
    std::vector<Q> c_;
};

enum class Trig { cot, csc, cos, sin };

// kind(k*pi/m), exact. Throws std::domain_error at poles of cot/csc.
CycNumber trig(Trig kind, long k, long m);

inline CycNumber cot_pi(long k, long m) { return trig(Trig::cot, k, m); }
inline CycNumber csc_pi(long k, long m) { return trig(Trig::csc, k, m); }
inline CycNumber cos_pi(long k, long m) { return trig(Trig::cos, k, m); }
inline CycNumber sin_pi(long k, long m) { return trig(Trig::sin, k, m); }

}  // namespace rat4
