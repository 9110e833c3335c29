#pragma once

#include "rat4/json.hpp"
#include "rat4/lattice.hpp"
#include "rat4/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rat4 {

// Variables: 0 = w_H, 1..n = w_E1..w_En, n+1 = delta1, n+2 = delta2.
struct LinearForm {
    std::vector<Q> coef;
    Q constant = 0;

    LinearForm() = default;
    explicit LinearForm(int n) : coef(static_cast<std::size_t>(n) + 3, Q(0)) {}
    int n() const { return static_cast<int>(coef.size()) - 3; }

    static LinearForm wH(int n);
    static LinearForm wE(int n, int i);
    static LinearForm delta(int n, int which);

    Q eval(const std::vector<Q>& x) const;
    std::string str() const;
};

LinearForm operator+(const LinearForm& x, const LinearForm& y);
LinearForm operator-(const LinearForm& x, const LinearForm& y);
LinearForm operator*(const Q& k, const LinearForm& x);

enum class Rel { gt, ge, eq };

struct AreaRow {
    LinearForm f;
    Rel rel;
    std::string tag;
};

struct AreaSystem {
    int n = 0;
    std::vector<AreaRow> rows;

    AreaSystem() = default;
    explicit AreaSystem(int n_) : n(n_) {}
    void add(const LinearForm& f, Rel rel, std::string tag = {});
    void append(const AreaSystem& o);
    bool satisfied_by(const std::vector<Q>& x) const;
};

std::string variable_name(int n, int idx);

// w_H > 0, w_Ei > 0, w_Ei >= w_E(i+1), w(H - Ei - Ej) > 0, w(H - Ei - Ej - Ek) >= 0.
// Without the monotone rows the system is invariant under relabeling the E's.
AreaSystem reduced_basis_system(int n, bool monotone = true);

LinearForm area_of(const HClass& A);
LinearForm minus_K_area(int n);

struct Witness {
    std::vector<Q> values;  // one per variable
    Q slack;                // optimum of the auxiliary t
};

// Exact decision: maximize t subject to strict rows >= t, non-strict rows >= 0, t <= 1.
std::optional<Witness> feasible(const AreaSystem& s);

json system_json(const AreaSystem& s);
AreaSystem system_from_json(const json& j);
json witness_json(int n, const Witness& w);

}  // namespace rat4
