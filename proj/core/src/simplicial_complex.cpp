#include "dmt/simplicial_complex.hpp"

#include <algorithm>
#include <queue>

#include "dmt/errors.hpp"
#include "dmt/limits.hpp"

namespace dmt {

namespace {

int infer_num_vertices(const std::vector<simplex>& faces, int declared) {
    int max_id = -1;
    for (const simplex& f : faces)
        if (!f.empty()) max_id = std::max(max_id, f.vertices().back());
    if (declared < 0) return max_id + 1;
    if (max_id >= declared)
        throw invalid_complex("vertex id exceeds declared vertex count");
    return declared;
}

} // namespace

void simplicial_complex::index_faces() {
    total_faces_ = 0;
    face_set_.clear();
    for (auto& level : faces_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        total_faces_ += level.size();
        for (const simplex& f : level) face_set_.insert(f);
    }
    if (total_faces_ > max_faces())
        throw size_limit_exceeded("complex exceeds the face budget");

    // A face is a facet iff it has no one-vertex extension in the complex.
    facets_.clear();
    std::unordered_set<simplex, simplex_hash> non_maximal;
    for (int d = 1; d <= dim(); ++d)
        for (const simplex& f : faces_[d])
            for (std::size_t i = 0; i < f.size(); ++i)
                non_maximal.insert(f.facet_dropping(i));
    for (const auto& level : faces_)
        for (const simplex& f : level)
            if (!non_maximal.count(f)) facets_.push_back(f);
    std::sort(facets_.begin(), facets_.end());
}

simplicial_complex simplicial_complex::from_facets(std::vector<simplex> facets,
                                                   int num_vertices) {
    for (const simplex& f : facets)
        if (f.empty()) throw invalid_complex("empty facet");
    if (facets.empty()) throw invalid_complex("no facets given");

    simplicial_complex K;
    K.num_vertices_ = infer_num_vertices(facets, num_vertices);

    const std::size_t budget = max_faces();
    std::unordered_set<simplex, simplex_hash> seen;
    int max_dim = 0;
    for (const simplex& f : facets) max_dim = std::max(max_dim, f.dim());
    K.faces_.assign(max_dim + 1, {});

    for (const simplex& f : facets) {
        const auto& vs = f.vertices();
        if (vs.size() > 25)
            throw size_limit_exceeded("facet too large to enumerate faces");
        const unsigned long full = (1ul << vs.size()) - 1;
        for (unsigned long mask = 1; mask <= full; ++mask) {
            std::vector<vertex_id> sub;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask & (1ul << i)) sub.push_back(vs[i]);
            simplex face = simplex::from_sorted(std::move(sub));
            if (seen.insert(face).second) {
                if (seen.size() > budget)
                    throw size_limit_exceeded("complex exceeds the face budget");
                K.faces_[face.dim()].push_back(std::move(face));
            }
        }
    }
    K.index_faces();
    return K;
}

simplicial_complex simplicial_complex::from_faces(std::vector<simplex> faces,
                                                  int num_vertices) {
    if (faces.empty()) throw invalid_complex("no faces given");
    simplicial_complex K;
    K.num_vertices_ = infer_num_vertices(faces, num_vertices);
    int max_dim = 0;
    for (const simplex& f : faces) {
        if (f.empty()) throw invalid_complex("empty face");
        max_dim = std::max(max_dim, f.dim());
    }
    K.faces_.assign(max_dim + 1, {});
    for (simplex& f : faces) K.faces_[f.dim()].push_back(std::move(f));
    K.index_faces();

    // Downward closure must hold for an explicit face list.
    for (int d = 1; d <= K.dim(); ++d)
        for (const simplex& f : K.faces_[d])
            for (std::size_t i = 0; i < f.size(); ++i)
                if (!K.contains(f.facet_dropping(i)))
                    throw invalid_complex("face list is not downward closed at " +
                                          to_string(f));
    return K;
}

const std::vector<simplex>& simplicial_complex::faces(int k) const {
    static const std::vector<simplex> empty;
    if (k < 0 || k > dim()) return empty;
    return faces_[k];
}

std::vector<simplex> simplicial_complex::all_faces() const {
    std::vector<simplex> out;
    out.reserve(total_faces_);
    for (const auto& level : faces_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<std::size_t> simplicial_complex::f_vector() const {
    std::vector<std::size_t> f;
    f.reserve(faces_.size());
    for (const auto& level : faces_) f.push_back(level.size());
    return f;
}

bool simplicial_complex::contains(const simplex& s) const {
    return face_set_.count(s) > 0;
}

void simplicial_complex::set_label(vertex_id v, std::string text) {
    labels_[v] = std::move(text);
}

void simplicial_complex::set_labels(std::map<vertex_id, std::string> labels) {
    labels_ = std::move(labels);
}

std::string simplicial_complex::label_of(vertex_id v) const {
    auto it = labels_.find(v);
    if (it != labels_.end()) return it->second;
    return std::to_string(v);
}

bool operator==(const simplicial_complex& a, const simplicial_complex& b) {
    return a.num_vertices_ == b.num_vertices_ && a.faces_ == b.faces_;
}

simplicial_complex make_complex(std::vector<simplex> facets, int num_vertices) {
    return simplicial_complex::from_facets(std::move(facets), num_vertices);
}

simplicial_complex star(const simplicial_complex& K, const simplex& s) {
    if (!K.contains(s))
        throw face_not_found("star: " + to_string(s) + " is not a face");
    std::vector<simplex> generating;
    for (const simplex& f : K.facets())
        if (f.contains_all(s)) generating.push_back(f);
    auto out = simplicial_complex::from_facets(std::move(generating), K.num_vertices());
    out.set_labels(K.labels());
    return out;
}

simplicial_complex star_cluster(const simplicial_complex& K, const simplex& s) {
    if (!K.contains(s))
        throw face_not_found("star_cluster: " + to_string(s) + " is not a face");
    std::vector<simplex> generating;
    for (const simplex& f : K.facets()) {
        bool hit = false;
        for (vertex_id v : s)
            if (f.contains(v)) { hit = true; break; }
        if (hit) generating.push_back(f);
    }
    auto out = simplicial_complex::from_facets(std::move(generating), K.num_vertices());
    out.set_labels(K.labels());
    return out;
}

namespace {

/// Adjacency lists of the 1-skeleton, sorted.
std::vector<std::vector<vertex_id>> skeleton_adjacency(const simplicial_complex& K) {
    std::vector<std::vector<vertex_id>> adj(K.num_vertices());
    for (const simplex& e : K.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool adjacent(const std::vector<std::vector<vertex_id>>& adj, vertex_id u, vertex_id w) {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), w);
}

/// Enumerates all cliques of the skeleton in ascending-vertex DFS order,
/// invoking visit(clique); visit returns false to abort the enumeration.
template <typename Visit>
bool enumerate_cliques(const std::vector<std::vector<vertex_id>>& adj,
                       const std::vector<vertex_id>& vertices, Visit&& visit) {
    std::vector<vertex_id> clique;
    // Iterative DFS over (clique, next candidate start).
    struct frame { std::vector<vertex_id> cand; std::size_t next; };
    std::vector<frame> stack;
    stack.push_back({vertices, 0});
    while (!stack.empty()) {
        frame& top = stack.back();
        if (top.next >= top.cand.size()) {
            stack.pop_back();
            if (!clique.empty()) clique.pop_back();
            continue;
        }
        vertex_id v = top.cand[top.next++];
        clique.push_back(v);
        if (!visit(clique)) return false;
        std::vector<vertex_id> nc;
        for (std::size_t i = stack.back().next; i < stack.back().cand.size(); ++i) {
            vertex_id w = stack.back().cand[i];
            if (adjacent(adj, v, w)) nc.push_back(w);
        }
        if (nc.empty()) {
            clique.pop_back();
        } else {
            stack.push_back({std::move(nc), 0});
        }
    }
    return true;
}

std::vector<vertex_id> present_vertices(const simplicial_complex& K) {
    std::vector<vertex_id> vs;
    for (const simplex& v : K.faces(0)) vs.push_back(v[0]);
    return vs;
}

} // namespace

bool is_flag(const simplicial_complex& K) {
    auto adj = skeleton_adjacency(K);
    std::size_t budget = max_faces();
    std::size_t count = 0;
    bool flag = true;
    enumerate_cliques(adj, present_vertices(K), [&](const std::vector<vertex_id>& c) {
        if (++count > budget)
            throw size_limit_exceeded("flagness check exceeds the face budget");
        if (!K.contains(simplex::from_sorted(std::vector<vertex_id>(c.begin(), c.end())))) {
            flag = false;
            return false;
        }
        return true;
    });
    return flag;
}

simplicial_complex flag_completion(const simplicial_complex& G) {
    if (G.dim() > 1)
        throw invalid_complex("flag_completion requires a graph (dim <= 1)");
    auto adj = skeleton_adjacency(G);
    std::size_t budget = max_faces();
    std::vector<simplex> faces;
    enumerate_cliques(adj, present_vertices(G), [&](const std::vector<vertex_id>& c) {
        if (faces.size() >= budget)
            throw size_limit_exceeded("flag completion exceeds the face budget");
        faces.push_back(simplex::from_sorted(std::vector<vertex_id>(c.begin(), c.end())));
        return true;
    });
    auto out = simplicial_complex::from_faces(std::move(faces), G.num_vertices());
    out.set_labels(G.labels());
    return out;
}

vertex_id sd_midpoint_id(const simplicial_complex& G, const simplex& edge) {
    const auto& edges = G.faces(1);
    auto it = std::lower_bound(edges.begin(), edges.end(), edge);
    if (it == edges.end() || *it != edge)
        throw face_not_found("sd_midpoint_id: " + to_string(edge) + " is not an edge");
    return G.num_vertices() + static_cast<vertex_id>(it - edges.begin());
}

simplicial_complex barycentric_subdivision_graph(const simplicial_complex& G) {
    if (G.dim() > 1)
        throw invalid_complex("barycentric_subdivision_graph requires dim <= 1");
    std::vector<simplex> facets;
    for (const simplex& v : G.faces(0))
        facets.push_back(v); // isolated vertices survive; others become redundant
    const auto& edges = G.faces(1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        vertex_id mid = G.num_vertices() + static_cast<vertex_id>(i);
        facets.push_back(simplex({edges[i][0], mid}));
        facets.push_back(simplex({edges[i][1], mid}));
    }
    return simplicial_complex::from_facets(
        std::move(facets), G.num_vertices() + static_cast<int>(edges.size()));
}

bool is_connected(const simplicial_complex& K) {
    auto vs = present_vertices(K);
    if (vs.empty()) return false;
    auto adj = skeleton_adjacency(K);
    std::unordered_set<vertex_id> seen{vs.front()};
    std::queue<vertex_id> q;
    q.push(vs.front());
    while (!q.empty()) {
        vertex_id u = q.front();
        q.pop();
        for (vertex_id w : adj[u])
            if (seen.insert(w).second) q.push(w);
    }
    return seen.size() == vs.size();
}

bool is_tree(const simplicial_complex& K) {
    if (K.dim() > 1) return false;
    return is_connected(K) &&
           K.faces(1).size() + 1 == K.faces(0).size();
}

} // namespace dmt
