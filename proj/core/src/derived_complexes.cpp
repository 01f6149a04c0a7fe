#include "dmt/derived_complexes.hpp"

#include <algorithm>
#include <unordered_map>

#include "dmt/errors.hpp"
#include "dmt/limits.hpp"

namespace dmt {

std::string provenance_name(provenance p) {
    switch (p) {
    case provenance::morse: return "Morse";
    case provenance::generalized_morse: return "GeneralizedMorse";
    case provenance::matching: return "Matching";
    }
    return "?";
}

vertex_id labeled_complex::vertex_of(const primitive_gvf& p) const {
    for (std::size_t i = 0; i < gvf_meaning.size(); ++i)
        if (gvf_meaning[i] == p) return static_cast<vertex_id>(i);
    throw face_not_found("primitive gvf " + to_string(p) + " is not a vertex");
}

vertex_id labeled_complex::vertex_of(const simplex& edge) const {
    for (std::size_t i = 0; i < edge_meaning.size(); ++i)
        if (edge_meaning[i] == edge) return static_cast<vertex_id>(i);
    throw face_not_found("edge " + to_string(edge) + " is not a vertex");
}

namespace {

/// All cliques of the compatibility graph, optionally pruned: `admit` is
/// called with the clique-so-far (excluding v) and the new vertex v.
template <typename Admit>
std::vector<simplex> enumerate_faces(int n, const std::vector<std::vector<bool>>& adj,
                                     Admit&& admit) {
    const std::size_t budget = max_faces();
    std::vector<simplex> out;
    std::vector<vertex_id> clique;

    struct frame {
        std::vector<vertex_id> cand;
        std::size_t next = 0;
    };
    std::vector<frame> stack;
    {
        std::vector<vertex_id> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        stack.push_back({std::move(all), 0});
    }
    while (!stack.empty()) {
        frame& top = stack.back();
        if (top.next >= top.cand.size()) {
            stack.pop_back();
            if (!clique.empty()) clique.pop_back();
            continue;
        }
        vertex_id v = top.cand[top.next++];
        if (!admit(clique, v)) continue;
        clique.push_back(v);
        out.push_back(simplex::from_sorted(clique));
        if (out.size() > budget)
            throw size_limit_exceeded("derived complex exceeds the face budget");
        std::vector<vertex_id> nc;
        for (std::size_t i = stack.back().next; i < stack.back().cand.size(); ++i) {
            vertex_id w = stack.back().cand[i];
            if (adj[v][w]) nc.push_back(w);
        }
        if (nc.empty()) {
            clique.pop_back();
        } else {
            stack.push_back({std::move(nc), 0});
        }
    }
    return out;
}

std::vector<std::vector<bool>> compatibility_adjacency(
    const std::vector<primitive_gvf>& prim) {
    int n = static_cast<int>(prim.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = are_compatible(prim[i], prim[j]);
    return adj;
}

labeled_complex finish_gvf_complex(const simplicial_complex& G,
                                   std::vector<primitive_gvf> prim,
                                   std::vector<simplex> faces, provenance tag) {
    labeled_complex out;
    out.tag = tag;
    out.source = G;
    out.gvf_meaning = std::move(prim);
    out.complex = simplicial_complex::from_faces(
        std::move(faces), static_cast<int>(out.gvf_meaning.size()));
    for (std::size_t i = 0; i < out.gvf_meaning.size(); ++i)
        out.complex.set_label(static_cast<vertex_id>(i),
                              to_string(out.gvf_meaning[i], G));
    return out;
}

void require_graph(const simplicial_complex& G, const char* what) {
    if (G.dim() > 1)
        throw invalid_complex(std::string(what) + " requires a graph (dim <= 1)");
}

} // namespace

labeled_complex generalized_morse_complex(const simplicial_complex& G) {
    require_graph(G, "generalized_morse_complex");
    auto prim = enumerate_primitive_gvfs(G);
    auto adj = compatibility_adjacency(prim);
    auto faces = enumerate_faces(static_cast<int>(prim.size()), adj,
                                 [](const std::vector<vertex_id>&, vertex_id) {
                                     return true;
                                 });
    return finish_gvf_complex(G, std::move(prim), std::move(faces),
                              provenance::generalized_morse);
}

labeled_complex morse_complex(const simplicial_complex& G) {
    require_graph(G, "morse_complex");
    auto prim = enumerate_primitive_gvfs(G);
    auto adj = compatibility_adjacency(prim);

    // Incremental gradient pruning: adding (u -> w) closes a V-path cycle
    // iff following the arrows from w already leads back to u.
    std::unordered_map<vertex_id, vertex_id> next;
    auto admit = [&](const std::vector<vertex_id>& clique, vertex_id v) {
        // The clique-so-far tracked in `next` may be stale after backtracking;
        // rebuild cheaply (cliques are small).
        next.clear();
        for (vertex_id c : clique) next[prim[c].tail] = prim[c].head();
        vertex_id u = prim[v].tail;
        vertex_id cur = prim[v].head();
        while (true) {
            if (cur == u) return false;
            auto it = next.find(cur);
            if (it == next.end()) return true;
            cur = it->second;
        }
    };
    auto faces = enumerate_faces(static_cast<int>(prim.size()), adj, admit);
    return finish_gvf_complex(G, std::move(prim), std::move(faces), provenance::morse);
}

labeled_complex matching_complex(const simplicial_complex& G) {
    require_graph(G, "matching_complex");
    const auto& edges = G.faces(1);
    int n = static_cast<int>(edges.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool disjoint = edges[i][0] != edges[j][0] && edges[i][0] != edges[j][1] &&
                            edges[i][1] != edges[j][0] && edges[i][1] != edges[j][1];
            adj[i][j] = adj[j][i] = disjoint;
        }
    auto faces = enumerate_faces(
        n, adj, [](const std::vector<vertex_id>&, vertex_id) { return true; });

    labeled_complex out;
    out.tag = provenance::matching;
    out.source = G;
    out.edge_meaning.assign(edges.begin(), edges.end());
    out.complex = simplicial_complex::from_faces(std::move(faces), n);
    for (int i = 0; i < n; ++i)
        out.complex.set_label(i, "[" + G.label_of(edges[i][0]) + "," +
                                     G.label_of(edges[i][1]) + "]");
    return out;
}

namespace {

bool source_is_cycle(const simplicial_complex& G) {
    if (G.dim() != 1) return false;
    int t = G.num_vertices();
    if (static_cast<int>(G.faces(1).size()) != t || t < 3) return false;
    std::vector<int> deg(t, 0);
    for (const simplex& e : G.faces(1)) {
        deg[e[0]]++;
        deg[e[1]]++;
    }
    for (int d : deg)
        if (d != 2) return false;
    return is_connected(G);
}

} // namespace

std::vector<simplex> st_mod(const labeled_complex& GMC, int k) {
    if (GMC.tag != provenance::generalized_morse || !source_is_cycle(GMC.source))
        throw invalid_complex("st_mod requires the generalized Morse complex of a cycle");
    int t = GMC.source.num_vertices();
    if (k < 1 || k > t - 1)
        throw out_of_range_parameter("st_mod: V_" + std::to_string(k) +
                                     " is not a face (invalid k)");
    std::vector<vertex_id> vk;
    for (int i = k; i <= t - 1; ++i) {
        vertex_id tail = (i + 1) % t;
        vk.push_back(GMC.vertex_of(make_primitive_gvf(tail, simplex({i, tail}))));
    }
    std::sort(vk.begin(), vk.end());
    simplex generator = simplex::from_sorted(std::move(vk));
    if (!GMC.complex.contains(generator))
        throw out_of_range_parameter("st_mod: V_" + std::to_string(k) +
                                     " is not a face");
    vertex_id blocked =
        GMC.vertex_of(make_primitive_gvf(k, simplex({k - 1, k})));

    std::vector<simplex> out;
    for (const simplex& f : star(GMC.complex, generator).all_faces())
        if (!f.contains(blocked)) out.push_back(f);
    return out;
}

sd_iso_report sd_matching_isomorphism(const simplicial_complex& G) {
    require_graph(G, "sd_matching_isomorphism");
    labeled_complex gm = generalized_morse_complex(G);
    simplicial_complex sd = barycentric_subdivision_graph(G);
    labeled_complex msd = matching_complex(sd);

    sd_iso_report rep;
    rep.vertex_map.resize(gm.gvf_meaning.size());
    for (std::size_t i = 0; i < gm.gvf_meaning.size(); ++i) {
        const primitive_gvf& p = gm.gvf_meaning[i];
        vertex_id mid = sd_midpoint_id(G, p.edge);
        rep.vertex_map[i] = msd.vertex_of(simplex({p.tail, mid}));
    }

    rep.gm_f_vector = gm.complex.f_vector();
    rep.msd_f_vector = msd.complex.f_vector();
    rep.f_vectors_equal = rep.gm_f_vector == rep.msd_f_vector;

    auto push_through = [](const simplex& f, const std::vector<vertex_id>& map) {
        std::vector<vertex_id> vs;
        vs.reserve(f.size());
        for (vertex_id v : f) vs.push_back(map[v]);
        return simplex(std::move(vs));
    };

    std::vector<vertex_id> inverse(rep.vertex_map.size());
    for (std::size_t i = 0; i < rep.vertex_map.size(); ++i)
        inverse[rep.vertex_map[i]] = static_cast<vertex_id>(i);

    rep.forward_faces_preserved = true;
    for (const simplex& f : gm.complex.all_faces())
        if (!msd.complex.contains(push_through(f, rep.vertex_map))) {
            rep.forward_faces_preserved = false;
            break;
        }
    rep.backward_faces_preserved = true;
    for (const simplex& f : msd.complex.all_faces())
        if (!gm.complex.contains(push_through(f, inverse))) {
            rep.backward_faces_preserved = false;
            break;
        }

    if (!rep.verified())
        throw verification_failure(
            "GM(G) and M(sd(G)) failed to verify as isomorphic");
    return rep;
}

} // namespace dmt
