#ifndef DMT_MATCHING_HPP
#define DMT_MATCHING_HPP

#include <utility>
#include <vector>

#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// A partial matching on the face poset: pairs (face, coface) with
/// dim(coface) = dim(face) + 1 and face < coface, each face in at most
/// one pair.
struct face_poset_matching {
    std::vector<std::pair<simplex, simplex>> pairs;

    std::size_t size() const { return pairs.size(); }
    void append(const face_poset_matching& other);
};

/// Validates dimensions, containment and the at-most-once rule.
void validate_matching(const face_poset_matching& M);

struct acyclicity_result {
    bool acyclic = false;
    /// On failure: a directed cycle in the modified Hasse diagram, as the
    /// face sequence visited.
    std::vector<simplex> witness;
};

/// Modified-Hasse-diagram cycle search restricted to the given face set:
/// matched incidences point upward, all other incidences downward.
acyclicity_result verify_acyclic_matching(const std::vector<simplex>& faces,
                                          const face_poset_matching& M);

/// Same check over all faces of K.
acyclicity_result verify_acyclic_matching(const simplicial_complex& K,
                                          const face_poset_matching& M);

/// Pairs each face of the piece with its apex-toggle partner. Faces whose
/// partner would be the empty simplex or is not a face of K stay unmatched;
/// a partner that is a face of K but lies outside the piece throws
/// toggle_escapes_piece (the apex was wrongly chosen).
face_poset_matching cone_matching(const simplicial_complex& K,
                                  const std::vector<simplex>& piece,
                                  vertex_id apex);

/// Sequential cone matchings: for each apex in order, pairs every still
/// unmatched face whose toggle partner is unmatched and inside the piece.
/// Faces left over are simply unmatched (critical within the piece).
face_poset_matching cascade_matching(const simplicial_complex& K,
                                     const std::vector<simplex>& piece,
                                     const std::vector<vertex_id>& apexes);

} // namespace dmt

#endif
