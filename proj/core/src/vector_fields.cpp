#include "dmt/vector_fields.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dmt/errors.hpp"

namespace dmt {

primitive_gvf make_primitive_gvf(vertex_id tail, const simplex& edge) {
    if (edge.dim() != 1)
        throw invalid_simplex("primitive gvf needs an edge, got " + to_string(edge));
    if (!edge.contains(tail))
        throw invalid_simplex("primitive gvf tail " + std::to_string(tail) +
                              " is not an endpoint of " + to_string(edge));
    return primitive_gvf{tail, edge};
}

std::string to_string(const primitive_gvf& p) {
    return "(" + std::to_string(p.tail) + ")" + std::to_string(p.head());
}

std::string to_string(const primitive_gvf& p, const simplicial_complex& G) {
    return "(" + G.label_of(p.tail) + ")" + G.label_of(p.head());
}

primitive_gvf parse_primitive_gvf(const std::string& text) {
    std::size_t open = text.find('(');
    std::size_t close = text.find(')');
    if (open != 0 || close == std::string::npos || close + 1 >= text.size())
        throw parse_error("expected \"(u)v\", got \"" + text + "\"");
    try {
        int tail = std::stoi(text.substr(1, close - 1));
        int head = std::stoi(text.substr(close + 1));
        return make_primitive_gvf(tail, simplex({tail, head}));
    } catch (const std::invalid_argument&) {
        throw parse_error("expected \"(u)v\", got \"" + text + "\"");
    }
}

std::vector<primitive_gvf> enumerate_primitive_gvfs(const simplicial_complex& G) {
    if (G.dim() > 1)
        throw invalid_complex("primitive gvfs are defined on graphs (dim <= 1)");
    std::vector<primitive_gvf> out;
    out.reserve(G.faces(1).size() * 2);
    for (const simplex& e : G.faces(1)) {
        out.push_back(primitive_gvf{e[0], e});
        out.push_back(primitive_gvf{e[1], e});
    }
    return out;
}

bool are_compatible(const primitive_gvf& p, const primitive_gvf& q) {
    return p.tail != q.tail && p.edge != q.edge;
}

discrete_vector_field make_discrete_vector_field(std::vector<primitive_gvf> pairs,
                                                 const simplicial_complex& G) {
    std::unordered_set<vertex_id> tails;
    std::unordered_set<simplex, simplex_hash> edges;
    for (const auto& p : pairs) {
        if (!G.contains(p.edge))
            throw invalid_complex("vector field uses edge " + to_string(p.edge) +
                                  " not in the graph");
        if (!tails.insert(p.tail).second)
            throw invalid_complex("vector field reuses tail vertex " +
                                  std::to_string(p.tail));
        if (!edges.insert(p.edge).second)
            throw invalid_complex("vector field reuses edge " + to_string(p.edge));
    }
    return discrete_vector_field{std::move(pairs)};
}

std::optional<v_path> find_closed_vpath(const discrete_vector_field& V,
                                        const simplicial_complex& G) {
    (void)G;
    // On a graph the V-paths follow the partial map tail -> other endpoint.
    std::unordered_map<vertex_id, const primitive_gvf*> arrow;
    for (const auto& p : V.pairs) arrow[p.tail] = &p;

    std::unordered_map<vertex_id, int> color; // 0 unseen, 1 on stack, 2 done
    for (const auto& p : V.pairs) {
        vertex_id start = p.tail;
        if (color[start] != 0) continue;
        std::vector<vertex_id> trail;
        vertex_id cur = start;
        while (true) {
            color[cur] = 1;
            trail.push_back(cur);
            auto it = arrow.find(cur);
            if (it == arrow.end()) break;
            vertex_id next = it->second->head();
            auto cit = color.find(next);
            int c = (cit == color.end()) ? 0 : cit->second;
            if (c == 1) {
                // Cycle: slice the trail from the first occurrence of `next`.
                auto pos = std::find(trail.begin(), trail.end(), next);
                v_path path;
                for (auto jt = pos; jt != trail.end(); ++jt) {
                    path.alphas.push_back(*jt);
                    path.betas.push_back(arrow.at(*jt)->edge);
                }
                path.alphas.push_back(next);
                return path;
            }
            if (c == 2) break;
            cur = next;
        }
        for (vertex_id v : trail) color[v] = 2;
    }
    return std::nullopt;
}

bool is_gradient(const discrete_vector_field& V, const simplicial_complex& G) {
    return !find_closed_vpath(V, G).has_value();
}

discrete_vector_field rooted_field(const simplicial_complex& tree, vertex_id root) {
    if (!is_tree(tree))
        throw invalid_complex("rooted_field requires a tree");
    std::vector<std::vector<vertex_id>> adj(tree.num_vertices());
    for (const simplex& e : tree.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<primitive_gvf> pairs;
    std::vector<int> parent(tree.num_vertices(), -2);
    std::vector<vertex_id> queue{root};
    parent[root] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        vertex_id u = queue[i];
        for (vertex_id w : adj[u]) {
            if (parent[w] != -2) continue;
            parent[w] = u;
            pairs.push_back(make_primitive_gvf(w, simplex({w, u})));
            queue.push_back(w);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return make_discrete_vector_field(std::move(pairs), tree);
}

} // namespace dmt
