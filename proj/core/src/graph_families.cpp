#include "dmt/graph_families.hpp"

#include <algorithm>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw out_of_range_parameter(what);
}

simplicial_complex graph_from_edges(std::vector<std::pair<int, int>> edges,
                                    int num_vertices) {
    std::vector<simplex> facets;
    facets.reserve(edges.size());
    for (auto [a, b] : edges) facets.push_back(simplex({a, b}));
    return simplicial_complex::from_facets(std::move(facets), num_vertices);
}

} // namespace

simplicial_complex generate_family(const family_spec& spec) {
    const auto& p = spec.params;
    switch (spec.family) {
    case graph_family::path: {
        require(p.size() == 1 && p[0] >= 2, "path requires t >= 2");
        int t = p[0];
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < t; ++i) e.push_back({i, i + 1});
        return graph_from_edges(std::move(e), t);
    }
    case graph_family::cycle: {
        require(p.size() == 1 && p[0] >= 3, "cycle requires t >= 3");
        int t = p[0];
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < t; ++i) e.push_back({i, i + 1});
        e.push_back({t - 1, 0});
        return graph_from_edges(std::move(e), t);
    }
    case graph_family::star: {
        require(p.size() == 1 && p[0] >= 1, "star requires n >= 1");
        int n = p[0];
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n; ++i) e.push_back({0, i});
        return graph_from_edges(std::move(e), n + 1);
    }
    case graph_family::extended_star: {
        require(p.size() == 3 && p[0] >= 0 && p[1] >= 0 && p[2] >= 0 &&
                    p[0] + p[1] + p[2] >= 1,
                "extended star requires v1+v2+v3 >= 1, all non-negative");
        int v1 = p[0], v2 = p[1], v3 = p[2];
        std::vector<std::pair<int, int>> e;
        int next = 1;
        for (int i = 0; i < v1; ++i) e.push_back({0, next++});
        for (int i = 0; i < v2; ++i) {
            int inner = next++, tip = next++;
            e.push_back({0, inner});
            e.push_back({inner, tip});
        }
        for (int i = 0; i < v3; ++i) {
            int inner = next++, middle = next++, tip = next++;
            e.push_back({0, inner});
            e.push_back({inner, middle});
            e.push_back({middle, tip});
        }
        return graph_from_edges(std::move(e), next);
    }
    case graph_family::cycle_with_leaf: {
        require(p.size() == 1 && p[0] >= 3, "cycle with leaf requires t >= 3");
        int t = p[0];
        std::vector<std::pair<int, int>> e;
        e.push_back({0, 1}); // leaf tip v_0 attached at v_1
        for (int i = 1; i < t; ++i) e.push_back({i, i + 1});
        e.push_back({t, 1});
        return graph_from_edges(std::move(e), t + 1);
    }
    case graph_family::centipede: {
        require(p.size() == 1 && p[0] >= 1, "centipede requires t >= 1");
        int t = p[0];
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < t; ++i) e.push_back({i, i + 1});
        for (int i = 0; i < t; ++i) e.push_back({i, t + i});
        return graph_from_edges(std::move(e), 2 * t);
    }
    case graph_family::dutch_windmill: {
        require(p.size() == 2 && p[0] >= 1 && p[1] >= 3,
                "dutch windmill requires n >= 1, m >= 3");
        int n = p[0], m = p[1];
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i) {
            int base = 1 + i * (m - 1);
            e.push_back({0, base});
            for (int j = 0; j + 1 < m - 1; ++j) e.push_back({base + j, base + j + 1});
            e.push_back({base + m - 2, 0});
        }
        return graph_from_edges(std::move(e), n * (m - 1) + 1);
    }
    case graph_family::complete: {
        require(p.size() == 1 && p[0] >= 2, "complete graph requires n >= 2");
        int n = p[0];
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.push_back({i, j});
        return graph_from_edges(std::move(e), n);
    }
    }
    throw out_of_range_parameter("unknown family");
}

std::string family_name(graph_family f) {
    switch (f) {
    case graph_family::path: return "path";
    case graph_family::cycle: return "cycle";
    case graph_family::star: return "star";
    case graph_family::extended_star: return "extended-star";
    case graph_family::cycle_with_leaf: return "cycle-with-leaf";
    case graph_family::centipede: return "centipede";
    case graph_family::dutch_windmill: return "dutch-windmill";
    case graph_family::complete: return "complete";
    }
    return "?";
}

family_spec parse_family_spec(const std::string& name, const std::vector<int>& params) {
    static const std::pair<const char*, graph_family> table[] = {
        {"path", graph_family::path},
        {"cycle", graph_family::cycle},
        {"star", graph_family::star},
        {"extended-star", graph_family::extended_star},
        {"cycle-with-leaf", graph_family::cycle_with_leaf},
        {"centipede", graph_family::centipede},
        {"dutch-windmill", graph_family::dutch_windmill},
        {"complete", graph_family::complete},
    };
    for (auto& [n, f] : table)
        if (name == n) return {f, params};
    throw parse_error("unknown graph family: " + name);
}

} // namespace dmt
