#pragma once

#include "rat4/json.hpp"
#include "rat4/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace rat4 {

struct SphereClassQuery {
    int n = 0;
    int alpha = 2;
    int a_lo = 0;
    int a_hi = 0;
    bool area_condition = false;   // restrict to the area-bounded forms
    bool allow_negative = false;   // emit negative-a normal forms
};

struct FilterResult {
    bool pass = true;
    std::string reason;
};

// Necessary conditions for an embedded symplectic surface of genus g in class A.
// Throws if g disagrees with adjunction.
FilterResult surface_class_filter(const HClass& A, long g);

// a*H - (a-1)E_j1 - E_j2 - ... - E_j(2a+alpha), a >= 0 (for a = 0: E_j1 - E_j2 - ... - E_j(alpha)).
std::vector<HClass> observation_forms(int n, int alpha, int a);
// a*H + (|a|+1)E_j1 - E_j2 - ... - E_js with s = alpha - 2|a|, a < 0.
// With pinned_first, j1 is fixed to 1 (the index of largest area).
std::vector<HClass> negative_forms(int n, int alpha, int a, bool pinned_first = false);

std::vector<HClass> enumerate_sphere_classes(const SphereClassQuery& q);
std::vector<HClass> area_bounded_forms(int n, int alpha);
int area_bound(int n, int alpha);

// Surfaces of genus g with A^2 = s and given a (b >= 0 enforced for a > 0).
std::vector<HClass> surface_classes(int n, int genus, int self_int, int a);

struct CremonaTrail {
    HClass terminal;
    std::vector<std::array<int, 3>> steps;  // 1-based index triples
};
CremonaTrail reduce_by_cremona(const HClass& A);

std::vector<HClass> zero_square_forms(int n);
bool zero_square_a_ok(const HClass& B);
// Every nonzero B with B^2 = K.B = 0 and |a| <= amax, |b_i| <= bmax.
std::vector<HClass> zero_square_scan(int n, int amax, int bmax);

struct SupportStats {
    long classes = 0;
    int min_support = -1;
};
// Classes with A^2 = -alpha, K.A = alpha - 2, fixed a > 0, b >= 0, counted up to permutation
// (non-increasing b).
SupportStats support_stats(int n, int alpha, int a);

json classes_summary_json(const std::vector<HClass>& xs);

}  // namespace rat4
