#pragma once

#include "rat4/numeric.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rat4 {

// Class a*H - sum b_i E_i in H^2(CP^2 # N CP^2-bar). Indices in the API are 1-based.
struct HClass {
    int a = 0;
    std::vector<int> b;

    HClass() = default;
    HClass(int a_, std::vector<int> b_) : a(a_), b(std::move(b_)) {}

    int n() const { return static_cast<int>(b.size()); }
    bool operator==(const HClass& o) const { return a == o.a && b == o.b; }
    bool operator!=(const HClass& o) const { return !(*this == o); }
    bool operator<(const HClass& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool is_zero() const;
    std::string str() const;
};

struct BlowupLattice {
    int n;
    explicit BlowupLattice(int n_);
    HClass H() const;
    HClass E(int i) const;
    HClass K() const;
    HClass zero() const;
};

HClass operator+(const HClass& x, const HClass& y);
HClass operator-(const HClass& x, const HClass& y);
HClass operator-(const HClass& x);
HClass operator*(long k, const HClass& x);

long pair(const HClass& x, const HClass& y);
long square(const HClass& x);
long k_dot(const HClass& x);
// (A^2 + K.A)/2 + 1; the numerator is always even.
long adjunction_genus(const HClass& x);

HClass reflect_exceptional(const HClass& x, int k);
HClass reflect_cremona(const HClass& x, int i, int j, int k);

// Permutation-and-reordering canonical form. perm[t] is the original (0-based) column
// placed at position t.
struct CanonicalForm {
    std::vector<HClass> rows;
    std::vector<int> perm;
};
CanonicalForm canonical_form(const std::vector<HClass>& t);
std::vector<HClass> canonical_tuple(const std::vector<HClass>& t);
std::vector<int> canonical_key(const std::vector<HClass>& t);
HClass permute_columns(const HClass& x, const std::vector<int>& perm);

// All integer vectors of length n with the given sum and sum of squares, entries in [lo, hi].
void for_each_vector(int n, long sum, long sumsq, int lo, int hi,
                     const std::function<void(const std::vector<int>&)>& f);
// Same, restricted to non-increasing sequences.
void for_each_sorted_vector(int n, long sum, long sumsq, int lo, int hi,
                            const std::function<void(const std::vector<int>&)>& f);

// Roots of K^perp / K at N = 9, one representative per K-translate, a in {-1, 0, 1}.
std::vector<HClass> minus2_classes_mod_K(int n = 9);

long rank_of_gram(const std::vector<HClass>& xs);
bool negative_definite(const std::vector<HClass>& xs);

// Largest pairwise-orthogonal subset among the given roots (one per +- pair is enough).
std::vector<HClass> max_orthogonal_roots(const std::vector<HClass>& roots);

}  // namespace rat4
