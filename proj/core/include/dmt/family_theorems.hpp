#ifndef DMT_FAMILY_THEOREMS_HPP
#define DMT_FAMILY_THEOREMS_HPP

#include <string>
#include <vector>

#include "dmt/cluster.hpp"
#include "dmt/derived_complexes.hpp"
#include "dmt/homotopy_type.hpp"

namespace dmt {

/// One constructive decomposition per family theorem.
enum class family_theorem {
    morse_path,         // M(P_t), t >= 3
    morse_extended_star,// M(S_{0,n,m}), n >= 1, m >= 0
    gm_cycle,           // GM(C_t), t > 3
    gm_cycle_leaf,      // GM(C_t v leaf), t >= 3
    matching_path,      // M(P_t) matching complex, t >= 3
    matching_cycle,     // M(C_t) matching complex, t >= 3
    matching_centipede, // matching complex of the centipede, t >= 1
    matching_windmill,  // matching complex of D^n_m, n >= 2, m >= 3
};

std::string theorem_name(family_theorem th);
family_theorem parse_theorem(const std::string& name);

/// Parameters of a theorem instance: `t` for single-parameter families,
/// (`n`, `m`) for extended stars and windmills.
struct theorem_params {
    int t = 0;
    int n = 0;
    int m = 0;
};

std::string to_string(family_theorem th, const theorem_params& p);

/// True iff the parameters satisfy the theorem's hypotheses.
bool theorem_params_in_range(family_theorem th, const theorem_params& p);

/// The homotopy type the theorem's formula asserts for these parameters.
homotopy_type expected_homotopy(family_theorem th, const theorem_params& p);

struct family_run {
    labeled_complex complex;
    cluster_decomposition decomposition;
};

/// Builds the derived complex and the Cluster-Lemma decomposition from the
/// theorem's proof: piece Delta_0 is the star cluster matched by its own
/// collapse sequence, the remaining pieces carry the proof's toggle
/// matchings, and the critical faces land exactly where the proof says.
/// Throws out_of_range_parameter outside the theorem's hypotheses.
family_run family_decomposition(family_theorem th, const theorem_params& p);

struct gm_collapse_result {
    labeled_complex gm;    // GM(C_t v leaf)
    labeled_complex morse; // M(C_t v leaf)
    face_poset_matching matching; // the 2-pair collapse GM -> M
};

/// The two elementary collapses pairing each oriented cycle with the same
/// cycle plus the inward leaf arrow. Removing the four matched faces from
/// GM(C_t v leaf) leaves exactly the face set of M(C_t v leaf).
gm_collapse_result gm_cycle_leaf_collapse(int t);

struct suspension_split {
    simplex leaf_root_facet;     // facet of M(T): field rooted at the leaf
    simplex neighbor_root_facet; // facet of M(T): field rooted at its neighbor
    simplicial_complex sc0;      // star cluster of the first facet
    simplicial_complex sc1;      // star cluster of the second facet
    simplicial_complex intersection;
};

/// Splits M(T) into the two star clusters of the maximal fields rooted at a
/// leaf and at its neighbor; their union is all of M(T) and each collapses
/// to a point, so M(T) is homotopy equivalent to the suspension of the
/// intersection. The leaf chosen is the smallest-id degree-1 vertex.
suspension_split tree_suspension_split(const simplicial_complex& T,
                                       const labeled_complex& morse);
suspension_split tree_suspension_split(const simplicial_complex& T);

} // namespace dmt

#endif
