#ifndef DMT_SIMPLICIAL_COMPLEX_HPP
#define DMT_SIMPLICIAL_COMPLEX_HPP

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "dmt/simplex.hpp"

namespace dmt {

/// Finite abstract simplicial complex with a fully materialized face set.
///
/// Vertex ids refer to an ambient range [0, num_vertices()); subcomplexes
/// (stars, star clusters, residues of collapses) keep the ambient numbering
/// of the complex they were carved from. Faces are stored per dimension in
/// lexicographic order, which fixes the canonical order used everywhere
/// downstream.
class simplicial_complex {
public:
    simplicial_complex() = default;

    /// Downward closure of the given facets; redundant facets are dropped.
    static simplicial_complex from_facets(std::vector<simplex> facets,
                                          int num_vertices = -1);

    /// Builds from an explicit face list, which must be downward closed.
    static simplicial_complex from_faces(std::vector<simplex> faces,
                                         int num_vertices = -1);

    int num_vertices() const { return num_vertices_; }
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    std::size_t num_faces() const { return total_faces_; }
    bool is_point() const { return total_faces_ == 1 && dim() == 0; }

    /// Faces of dimension k, sorted lexicographically. Empty list if out of range.
    const std::vector<simplex>& faces(int k) const;
    /// All faces, dimension-major then lexicographic.
    std::vector<simplex> all_faces() const;
    const std::vector<simplex>& facets() const { return facets_; }

    /// Face counts per dimension, f[0..dim].
    std::vector<std::size_t> f_vector() const;

    bool contains(const simplex& s) const;

    const std::map<vertex_id, std::string>& labels() const { return labels_; }
    void set_label(vertex_id v, std::string text);
    void set_labels(std::map<vertex_id, std::string> labels);
    /// Label of v when present, else the decimal id.
    std::string label_of(vertex_id v) const;

    friend bool operator==(const simplicial_complex& a, const simplicial_complex& b);

private:
    int num_vertices_ = 0;
    std::size_t total_faces_ = 0;
    std::vector<std::vector<simplex>> faces_;
    std::vector<simplex> facets_;
    std::unordered_set<simplex, simplex_hash> face_set_;
    std::map<vertex_id, std::string> labels_;

    void index_faces();
};

/// Downward-closed complex generated by `facets`.
/// Throws invalid_complex when `facets` is empty or ids are inconsistent.
simplicial_complex make_complex(std::vector<simplex> facets, int num_vertices = -1);

/// Subcomplex of all faces of K having s as a face, closed under faces.
simplicial_complex star(const simplicial_complex& K, const simplex& s);

/// Union of the stars of the vertices of s.
simplicial_complex star_cluster(const simplicial_complex& K, const simplex& s);

/// True iff K equals the clique complex of its own 1-skeleton.
bool is_flag(const simplicial_complex& K);

/// Clique complex of a graph (dim <= 1 required).
simplicial_complex flag_completion(const simplicial_complex& G);

/// Splits every edge {u,w} at a fresh midpoint vertex. Midpoints are numbered
/// num_vertices + (edge rank in lexicographic edge order).
simplicial_complex barycentric_subdivision_graph(const simplicial_complex& G);

/// Midpoint vertex id of edge {u,w} in barycentric_subdivision_graph(G).
vertex_id sd_midpoint_id(const simplicial_complex& G, const simplex& edge);

/// Connected in the 1-skeleton sense (ignoring vertices absent from faces).
bool is_connected(const simplicial_complex& K);

/// dim(K) <= 1 and K is connected and acyclic.
bool is_tree(const simplicial_complex& K);

} // namespace dmt

#endif
