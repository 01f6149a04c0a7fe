#ifndef DMT_CLUSTER_HPP
#define DMT_CLUSTER_HPP

#include <vector>

#include "dmt/homotopy_type.hpp"
#include "dmt/matching.hpp"
#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// One collection Delta_k of a Cluster-Lemma decomposition together with the
/// acyclic matching chosen inside it. Pieces are face sets, not subcomplexes;
/// only prefix unions must be downward closed.
struct decomposition_piece {
    int index = 0;
    std::vector<simplex> faces; // sorted
    face_poset_matching matching;
};

struct cluster_decomposition {
    std::vector<decomposition_piece> pieces;

    std::size_t total_faces() const;
};

/// Successive set differences of the generators (a final remainder piece is
/// added when their union misses faces of K), validated as a Cluster-Lemma
/// decomposition in the given order: the pieces partition the faces of K and
/// every prefix union is a subcomplex. Throws partition_violation otherwise.
/// Matchings are left empty.
cluster_decomposition assemble_decomposition(
    const simplicial_complex& K,
    const std::vector<std::vector<simplex>>& generators);

/// Index order of the disjoint pieces under which prefix unions are downward
/// closed, preferring low original indices (stable topological sort). Throws
/// partition_violation when no valid order exists.
std::vector<int> order_pieces_for_prefix_closure(
    const simplicial_complex& K,
    const std::vector<std::vector<simplex>>& pieces);

struct union_matching_result {
    face_poset_matching matching;
    critical_profile profile;
    std::vector<simplex> critical_faces; // sorted
};

/// Union of the piece matchings. Re-validates the decomposition, checks each
/// piece matching for acyclicity within its piece, and checks the union for
/// acyclicity on all of K (throws global_acyclicity_failure if that ever
/// fails; the Cluster Lemma guarantees it cannot when the inputs are valid).
union_matching_result union_matchings(const simplicial_complex& K,
                                      const cluster_decomposition& D);

/// Forman's special case: {0:1} is a point; {0:1, n:k} with n >= 1 is a
/// k-fold wedge of S^n; {0:k+1} alone is a k-fold wedge of S^0; anything
/// else is inconclusive.
homotopy_type forman_classify(const critical_profile& profile);

} // namespace dmt

#endif
