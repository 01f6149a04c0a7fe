#ifndef DMT_TEST_SUPPORT_HPP
#define DMT_TEST_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dmt/graph_families.hpp"
#include "dmt/simplicial_complex.hpp"
#include "dmt/vector_fields.hpp"

namespace dmt_test {

using namespace dmt;

inline simplex sx(std::vector<vertex_id> vs) { return simplex(std::move(vs)); }

/// Brute-force oracle: all simple cycles of a graph, each as the cyclic
/// vertex sequence. Enumerates via DFS from the minimal vertex; fine for the
/// tiny corpus graphs.
inline std::vector<std::vector<vertex_id>> all_simple_cycles(
    const simplicial_complex& G) {
    std::vector<std::vector<vertex_id>> cycles;
    std::vector<std::vector<vertex_id>> adj(G.num_vertices());
    for (const simplex& e : G.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<vertex_id> path;
    std::vector<bool> on_path(G.num_vertices(), false);
    // Canonical form: cycle starts at its smallest vertex and the second
    // element is smaller than the last (one orientation per cycle).
    auto dfs = [&](auto&& self, vertex_id start, vertex_id u) -> void {
        for (vertex_id w : adj[u]) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
                continue;
            }
            if (w <= start || on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            on_path[w] = false;
        }
    };
    for (vertex_id s = 0; s < G.num_vertices(); ++s) {
        path = {s};
        on_path.assign(G.num_vertices(), false);
        on_path[s] = true;
        dfs(dfs, s, s);
    }
    return cycles;
}

/// Brute-force gradient test: a field fails iff it contains a coherently
/// oriented simple cycle of the graph.
inline bool brute_force_is_gradient(const discrete_vector_field& V,
                                    const simplicial_complex& G) {
    std::set<std::pair<vertex_id, vertex_id>> arrows;
    for (const auto& p : V.pairs) arrows.insert({p.tail, p.head()});
    for (const auto& cyc : all_simple_cycles(G)) {
        const std::size_t n = cyc.size();
        bool forward = true, backward = true;
        for (std::size_t i = 0; i < n; ++i) {
            vertex_id a = cyc[i], b = cyc[(i + 1) % n];
            if (!arrows.count({a, b})) forward = false;
            if (!arrows.count({b, a})) backward = false;
        }
        if (forward || backward) return false;
    }
    return true;
}

/// All discrete vector fields on G (subsets of primitives with distinct
/// tails and edges). Exponential; only for graphs with few edges.
inline std::vector<std::vector<primitive_gvf>> all_discrete_vector_fields(
    const simplicial_complex& G) {
    auto prim = enumerate_primitive_gvfs(G);
    std::vector<std::vector<primitive_gvf>> out;
    std::vector<primitive_gvf> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == prim.size()) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        self(self, i + 1);
        bool ok = true;
        for (const auto& p : cur)
            if (!are_compatible(p, prim[i])) { ok = false; break; }
        if (ok) {
            cur.push_back(prim[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Connected random graph with n vertices and up to max_edges edges:
/// a uniform random labeled tree plus random extra edges.
inline simplicial_complex random_connected_graph(std::mt19937& rng, int n,
                                                 int max_edges) {
    std::set<std::pair<int, int>> edges;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        int a = order[pick(rng)], b = order[i];
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    int extras = std::uniform_int_distribution<int>(
        0, std::max(0, max_edges - static_cast<int>(edges.size())))(rng);
    for (int e = 0; e < extras; ++e) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<simplex> facets;
    for (auto& [a, b] : edges) facets.push_back(simplex({a, b}));
    return simplicial_complex::from_facets(std::move(facets), n);
}

/// Random labeled tree on n vertices (uniform via Pruefer sequences).
inline simplicial_complex random_tree(std::mt19937& rng, int n) {
    if (n == 2) return simplicial_complex::from_facets({simplex({0, 1})}, 2);
    std::vector<int> pruefer(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& x : pruefer) x = pick(rng);
    // Decode.
    std::vector<int> degree(n, 1);
    for (int x : pruefer) degree[x]++;
    std::set<int> leaves;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.insert(i);
    std::vector<simplex> facets;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        facets.push_back(simplex({leaf, x}));
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    facets.push_back(simplex({a, b}));
    return simplicial_complex::from_facets(std::move(facets), n);
}

/// AHU canonical string of a free tree given by its edges; isomorphic trees
/// get equal strings.
inline std::string tree_canonical_form(const simplicial_complex& T) {
    int n = T.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (const simplex& e : T.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    if (n == 1) return "()";
    // Centers: peel leaves.
    std::vector<int> deg(n), layer(n, 0);
    std::vector<int> frontier;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(adj[i].size());
        if (deg[i] <= 1) frontier.push_back(i);
    }
    int remaining = n;
    std::vector<int> centers = frontier;
    while (remaining > 2) {
        std::vector<int> next;
        for (int u : frontier) {
            --remaining;
            for (int w : adj[u])
                if (--deg[w] == 1) next.push_back(w);
        }
        frontier = next;
        centers = next;
    }
    auto encode = [&](auto&& self, int u, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : adj[u])
            if (w != parent) kids.push_back(self(self, w, u));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        return s + ")";
    };
    std::vector<std::string> forms;
    for (int c : centers) forms.push_back(encode(encode, c, -1));
    return *std::min_element(forms.begin(), forms.end());
}

/// Every unlabeled tree with edge count in [1, max_edges], one labeled
/// representative each (enumerated via Pruefer sequences, deduplicated by
/// canonical form).
inline std::vector<simplicial_complex> all_trees_up_to(int max_edges) {
    std::vector<simplicial_complex> out;
    out.push_back(simplicial_complex::from_facets({simplex({0, 1})}, 2));
    std::set<std::string> seen{tree_canonical_form(out[0])};
    for (int n = 3; n <= max_edges + 1; ++n) {
        std::vector<int> pruefer(n - 2, 0);
        while (true) {
            std::vector<int> degree(n, 1);
            for (int x : pruefer) degree[x]++;
            std::set<int> leaves;
            for (int i = 0; i < n; ++i)
                if (degree[i] == 1) leaves.insert(i);
            std::vector<simplex> facets;
            std::vector<int> deg = degree;
            for (int x : pruefer) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                facets.push_back(simplex({std::min(leaf, x), std::max(leaf, x)}));
                if (--deg[x] == 1) leaves.insert(x);
            }
            int a = *leaves.begin(), b = *std::next(leaves.begin());
            facets.push_back(simplex({std::min(a, b), std::max(a, b)}));
            auto T = simplicial_complex::from_facets(std::move(facets), n);
            auto key = tree_canonical_form(T);
            if (seen.insert(key).second) out.push_back(std::move(T));

            // next Pruefer sequence
            int pos = n - 3;
            while (pos >= 0 && pruefer[pos] == n - 1) pruefer[pos--] = 0;
            if (pos < 0) break;
            pruefer[pos]++;
        }
    }
    return out;
}

/// All connected graphs on exactly nv labeled vertices with at most
/// max_edges edges (labeled enumeration; small nv only).
inline std::vector<simplicial_complex> all_connected_graphs(int nv, int max_edges) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) slots.push_back({i, j});
    std::vector<simplicial_complex> out;
    for (unsigned long mask = 1; mask < (1ul << slots.size()); ++mask) {
        if (__builtin_popcountl(mask) > max_edges) continue;
        std::vector<simplex> facets;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask & (1ul << s))
                facets.push_back(simplex({slots[s].first, slots[s].second}));
        auto G = simplicial_complex::from_facets(std::move(facets), nv);
        if (static_cast<int>(G.faces(0).size()) != nv) continue; // isolated vertex
        if (!is_connected(G)) continue;
        out.push_back(std::move(G));
    }
    return out;
}

} // namespace dmt_test

#endif
