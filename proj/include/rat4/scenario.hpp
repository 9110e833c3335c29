#pragma once

#include "rat4/gindex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rat4 {

// Cohomological data of the generator g. Either rotation angles on H^1 (b1 = 4) or
// explicit traces together with the quotient Betti numbers.
struct CohomologyBranch {
    std::string label;
    std::optional<std::pair<Q, Q>> angles;
    Q tr_h1 = 0, tr_h2plus = 0, tr_h2minus = 0;
    int b1_quotient = 0, b2plus_quotient = 0, b2minus_quotient = 0;
};

struct SubgroupPoints {
    int order = 0;         // d, a proper divisor of the group order
    int fixed_points = 0;  // isolated fixed points of the order-d subgroup
    int type_b = 1;        // points of isotropy exactly d have type (1, b)
};

struct ScenarioSpec {
    std::string name;
    std::string kind;  // "prime" or "resolution"
    std::string note;
    int order = 0;
    int b1 = 0;
    long chi_M = 0, sign_M = 0;
    std::vector<CohomologyBranch> branches;

    // prime-order search; quotient Betti numbers iterate over b2minus when no branch is given
    int b1_quotient = 0;
    int b2plus_quotient = 1;
    int max_points = 20;
    int max_surfaces = 6;
    int min_self_int = -2;
    int max_self_int = 6;
    int max_negative_surfaces = -1;  // -1: b2minus of the quotient
    bool spin_filter = false;
    bool dirac_index_zero = false;
    bool exact_sign_filter = true;
    bool vanishing_filter = false;

    // resolution bookkeeping
    std::vector<int> point_types;
    std::vector<SubgroupPoints> subgroups;
    std::string canonical = "rational";  // or "torsion"
};

ScenarioSpec scenario_from_json(const json& j);
json scenario_json(const ScenarioSpec& s);

struct PointType {
    int b = 1;  // normalized (1, b)
    std::vector<std::pair<int, int>> sign_classes;  // one representative weight pair per +-class
    std::string name() const { return "(1," + std::to_string(b) + ")"; }
};
std::vector<PointType> point_types(int p);
std::vector<int> surface_weight_classes(int p);

struct RawRow {
    std::vector<int> counts;  // per point type
    long self_int_sum = 0;
    std::string killed_by;  // empty for survivors
    std::string detail;
    std::optional<FixedPointProfile> witness;
    std::vector<std::string> spin_d;  // d_k of the surviving refinement, when computed
};

struct BranchResult {
    std::string label;
    bool consistent = true;
    std::string inconsistency;
    long L = 0;
    Q chi_quotient, sign_quotient;
    int b2minus_quotient = 0;
    std::vector<std::string> type_names;
    std::vector<RawRow> rows;
};

struct ProfileSearch {
    std::string scenario;
    std::vector<BranchResult> branches;
};

// Exhaustive search; raw rows keep the stage that eliminated them.
ProfileSearch profile_search(const ScenarioSpec& s);
json profile_search_json(const ProfileSearch& r);

}  // namespace rat4
