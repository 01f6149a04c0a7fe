#ifndef DMT_VECTOR_FIELDS_HPP
#define DMT_VECTOR_FIELDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// The single regular pair (u, uv), written "(u)v": tail vertex u, edge uv.
struct primitive_gvf {
    vertex_id tail{};
    simplex edge; // dimension 1, contains tail

    vertex_id head() const {
        return edge[0] == tail ? edge[1] : edge[0];
    }

    friend auto operator<=>(const primitive_gvf&, const primitive_gvf&) = default;
};

primitive_gvf make_primitive_gvf(vertex_id tail, const simplex& edge);

/// "(u)v", with vertex labels substituted when the complex defines them.
std::string to_string(const primitive_gvf& p);
std::string to_string(const primitive_gvf& p, const simplicial_complex& G);

/// Parses the textual "(u)v" notation with numeric vertex ids.
primitive_gvf parse_primitive_gvf(const std::string& text);

/// All 2|E| primitive gradient vector fields of a graph, in canonical order:
/// edges lexicographically, then tail ascending within each edge.
std::vector<primitive_gvf> enumerate_primitive_gvfs(const simplicial_complex& G);

/// True iff {p, q} is a valid discrete vector field: tails distinct and
/// edges distinct (each simplex of the graph used at most once).
bool are_compatible(const primitive_gvf& p, const primitive_gvf& q);

/// A set of regular pairs with all tails distinct and all edges distinct.
struct discrete_vector_field {
    std::vector<primitive_gvf> pairs;
};

/// Validates the pairs against G and the at-most-once rule.
discrete_vector_field make_discrete_vector_field(std::vector<primitive_gvf> pairs,
                                                 const simplicial_complex& G);

/// Alternating vertex/edge sequence alpha_0, beta_0, alpha_1, ..., alpha_k
/// with (alpha_i, beta_i) in the field and beta_i > alpha_{i+1} != alpha_i.
/// Closed when alpha_k == alpha_0.
struct v_path {
    std::vector<vertex_id> alphas; // k+1 entries
    std::vector<simplex> betas;    // k entries

    bool closed() const {
        return !alphas.empty() && alphas.front() == alphas.back() && !betas.empty();
    }
};

/// A non-trivial closed V-path of V on G if one exists. On graphs this is a
/// directed cycle of the partial map tail -> opposite endpoint.
std::optional<v_path> find_closed_vpath(const discrete_vector_field& V,
                                        const simplicial_complex& G);

/// True iff V contains no non-trivial closed V-path.
bool is_gradient(const discrete_vector_field& V, const simplicial_complex& G);

/// The maximal gradient vector field rooted at r on a tree: every vertex
/// u != r is paired with its first edge on the path toward r, leaving r as
/// the unique critical vertex.
discrete_vector_field rooted_field(const simplicial_complex& tree, vertex_id root);

} // namespace dmt

#endif
