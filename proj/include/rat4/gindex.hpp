#pragma once

#include "rat4/cyclotomic.hpp"
#include "rat4/json.hpp"
#include "rat4/numeric.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rat4 {

struct IsolatedPoint {
    int order = 0;
    int a = 0;
    int b = 0;
    bool operator==(const IsolatedPoint&) const = default;
};

// Replace the generator so that a = 1; requires gcd(a, order) = 1.
IsolatedPoint normalized_type(const IsolatedPoint& q);

struct FixedSurface {
    int genus = 0;
    int self_int = 0;
    int weight = 0;  // normal weight c
    int order = 0;
    bool operator==(const FixedSurface&) const = default;
};

struct FixedPointProfile {
    int group_order = 0;
    std::vector<IsolatedPoint> points;
    std::vector<FixedSurface> surfaces;
    bool cy = false;

    void validate() const;  // throws std::invalid_argument
};

json profile_json(const FixedPointProfile& p);
FixedPointProfile profile_from_json(const json& j);

long lefschetz_fix(const FixedPointProfile& p);

// Exact G-signature fixed-point sum for g^e.
CycNumber signature_number(const FixedPointProfile& p, long e = 1);

Q signature_defect(const IsolatedPoint& q, int p);
Q signature_defect(const FixedSurface& y, int p);

struct WeakQuotient {
    Q chi;
    Q sign;
    bool chi_integral = true;
};
WeakQuotient weak_checks(int p, long chi_M, long sign_M, const FixedPointProfile& prof);

// The parity indices entering the Spin number.
int spin_k_point(int a, int b, int p);
int spin_k_surface(int c, int p);
CycNumber spin_number(const FixedPointProfile& prof, int p, long e = 1);

struct SpinSolve {
    bool ok = false;
    std::vector<Q> d;  // d_0..d_{p-1}, present whenever the values are rational
    std::string reason;
};
// Solve Spin(g^e) = sum_k d_k mu^{ke} with sum_k d_k = index_total.
SpinSolve spin_coefficients(const std::map<long, CycNumber>& values, int p, long index_total);

class IntegralityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Angles are fractions of a full turn.
struct TorusModel {
    Q theta1, theta2;
    int order = 1;  // order of the rotation
    CycNumber lefschetz;     // from the explicit exterior-power traces
    CycNumber sign;          // tr on H^{2,+} minus tr on H^{2,-}, explicit
    CycNumber trace_b1;
    CycNumber two_cos_sum, four_cos_prod;
    bool closed_forms_agree = false;
    bool integral = false;
    long L = 0;  // meaningful when integral
    int b1_fixed = 0, b2plus_fixed = 0, b2minus_fixed = 0;
};
// Throws IntegralityError unless allow_nonintegral.
TorusModel torus_model(const Q& theta1, const Q& theta2, bool allow_nonintegral = false);
json torus_model_json(const TorusModel& t);

// Quotient invariants for the cyclic group generated by the rotation (chi(M) = 0).
struct TorusQuotient {
    int order = 1;
    Q chi;
    int b1 = 0, b2plus = 0, b2minus = 0;
    std::vector<long> lefschetz_powers;  // L(g^e), e = 1..order-1
};
TorusQuotient torus_quotient(const Q& theta1, const Q& theta2);

// Orders n whose elements admit some pair of nonzero angles meeting the integrality conditions.
bool order_admits_integral_angles(int n, std::vector<std::pair<Q, Q>>* witnesses = nullptr);

struct ResolutionData {
    int m = 0, b = 0;
    std::vector<int> chain;
    std::vector<Q> discrepancies;
    int delta_chi = 0;
    int delta_b2minus = 0;
    Q delta_K2;
    bool du_val() const;
};
ResolutionData hj_resolution(int m, int b);
json resolution_json(const ResolutionData& r);

}  // namespace rat4
