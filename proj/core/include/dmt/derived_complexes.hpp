#ifndef DMT_DERIVED_COMPLEXES_HPP
#define DMT_DERIVED_COMPLEXES_HPP

#include <string>
#include <vector>

#include "dmt/simplicial_complex.hpp"
#include "dmt/vector_fields.hpp"

namespace dmt {

enum class provenance { morse, generalized_morse, matching };

std::string provenance_name(provenance p);

/// A complex whose vertices stand for generating objects of the source graph:
/// primitive gradient vector fields (Morse, generalized Morse) or edges
/// (matching complex). vertex i of `complex` means `gvf_meaning[i]` /
/// `edge_meaning[i]`; the complex's labels carry the printed forms.
struct labeled_complex {
    simplicial_complex complex;
    provenance tag{};
    simplicial_complex source;
    std::vector<primitive_gvf> gvf_meaning; // morse / generalized_morse
    std::vector<simplex> edge_meaning;      // matching

    /// Vertex id of a primitive gvf (morse / generalized_morse only).
    vertex_id vertex_of(const primitive_gvf& p) const;
    /// Vertex id of a source edge (matching only).
    vertex_id vertex_of(const simplex& edge) const;
};

/// Flag complex on the pairwise-compatibility graph of the primitive gvfs.
labeled_complex generalized_morse_complex(const simplicial_complex& G);

/// Subcomplex of GM(G) of faces with no closed V-path. Equals GM(G) exactly
/// when G is a tree.
labeled_complex morse_complex(const simplicial_complex& G);

/// Vertices are the edges of G; faces are matchings of G.
labeled_complex matching_complex(const simplicial_complex& G);

/// For GMC = GM(C_t) and V_k = {(v_{i+1})v_i : k <= i <= t-1}: the faces of
/// st(V_k) that do not contain (v_k)v_{k-1}. Requires 1 <= k <= t-1.
std::vector<simplex> st_mod(const labeled_complex& GMC, int k);

struct sd_iso_report {
    /// gm vertex id -> matching-complex-of-sd vertex id
    std::vector<vertex_id> vertex_map;
    std::vector<std::size_t> gm_f_vector;
    std::vector<std::size_t> msd_f_vector;
    bool f_vectors_equal = false;
    bool forward_faces_preserved = false;
    bool backward_faces_preserved = false;

    bool verified() const {
        return f_vectors_equal && forward_faces_preserved && backward_faces_preserved;
    }
};

/// The bijection (u, uv) -> {u, m_uv} between primitive gvfs of G and edges
/// of sd(G), verified to be a simplicial isomorphism GM(G) -> M(sd(G)).
/// Throws verification_failure if any check fails.
sd_iso_report sd_matching_isomorphism(const simplicial_complex& G);

} // namespace dmt

#endif
