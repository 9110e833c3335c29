#pragma once

#include "rat4/areafeas.hpp"
#include "rat4/lattice.hpp"
#include "rat4/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rat4 {

struct ConfigFamily {
    std::vector<HClass> tuple;  // canonical_tuple form
    // When a witness exists: `realized` is a relabeling of `tuple` and `witness` satisfies the
    // monotone reduced-basis system together with the area rows of `realized`.
    std::vector<HClass> realized;
    std::optional<Witness> witness;
    std::string label;               // a, b, c, other (empty when unlabeled)
    std::vector<int> feasible_slots;  // delta-system slots with a witness (0-based, canonical order)
};

// Orbit representatives (canonical tuples) of k-element pairwise-orthogonal sub-multisets.
// A class may repeat only when its square is 0.
std::vector<std::vector<HClass>> orthogonal_orbits(const std::vector<HClass>& candidates, int k);

// Tuple rows: w(A) > 0 for each member. `extra` must be invariant under relabeling the E's;
// feasibility is decided on the orbit through the non-monotone reduced-basis system.
std::vector<ConfigFamily> disjoint_tuples(const std::vector<HClass>& candidates, int k,
                                          const AreaSystem* extra = nullptr);

// One member (slot) has area delta1, the others delta2; delta2 < delta1 < 2 delta2 and
// 7 delta_i < -K.w.
AreaSystem delta_system(const std::vector<HClass>& tuple, int slot, bool monotone);

// Relabel so the E-areas of the witness are non-increasing.
void make_monotone(std::vector<HClass>& tuple, Witness& w);

// The three shapes of disjoint eight-tuples at N = 9, with the identity labeling.
std::vector<HClass> reference_family(char label);
std::string family_label(const std::vector<HClass>& tuple);

struct IncidenceStructure {
    std::vector<HClass> lines;  // the seven a = 1 classes
    std::vector<int> points;    // 1-based E indices
    std::vector<std::vector<bool>> membership;  // [line][point]
    bool is_fano = false;
};
// Accepts the (a) shape (one 3H - 2E - E.. plus seven a = 1 classes) or seven a = 1 classes
// alone. Throws std::invalid_argument otherwise.
IncidenceStructure fano_incidence(const std::vector<HClass>& tuple);
bool is_fano_plane(const std::vector<std::vector<bool>>& membership);
json incidence_json(const IncidenceStructure& s);

// Delta-system search over the area-bounded (-2) pool at the given N with tuples of size k.
std::vector<ConfigFamily> delta_families(int n, int k);

// Pairwise-disjoint (-2) classes: N-1 of them for odd N >= 3.
std::vector<HClass> odd_n_construction(int n);

json family_json(const ConfigFamily& f);

Report verify_lemma_5_1();
Report verify_thm_1_4(int n);
Report verify_prop(const std::string& which);

}  // namespace rat4
