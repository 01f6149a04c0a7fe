#ifndef DMT_GRAPH_FAMILIES_HPP
#define DMT_GRAPH_FAMILIES_HPP

#include <string>
#include <vector>

#include "dmt/simplicial_complex.hpp"

namespace dmt {

enum class graph_family {
    path,            // P_t, t >= 2
    cycle,           // C_t, t >= 3
    star,            // S_n = K_{1,n}, n >= 1
    extended_star,   // S_{v1,v2,v3}, v1+v2+v3 >= 1
    cycle_with_leaf, // C_t with a pendant leaf, t >= 3
    centipede,       // path P_t with one leaf per spine vertex, t >= 1
    dutch_windmill,  // D^n_m: n cycles C_m glued at one vertex, n >= 1, m >= 3
    complete,        // 1-skeleton of the full simplex on n vertices, n >= 2
};

struct family_spec {
    graph_family family{};
    std::vector<int> params;

    static family_spec path(int t) { return {graph_family::path, {t}}; }
    static family_spec cycle(int t) { return {graph_family::cycle, {t}}; }
    static family_spec star(int n) { return {graph_family::star, {n}}; }
    static family_spec extended_star(int v1, int v2, int v3) {
        return {graph_family::extended_star, {v1, v2, v3}};
    }
    static family_spec cycle_with_leaf(int t) {
        return {graph_family::cycle_with_leaf, {t}};
    }
    static family_spec centipede(int t) { return {graph_family::centipede, {t}}; }
    static family_spec dutch_windmill(int n, int m) {
        return {graph_family::dutch_windmill, {n, m}};
    }
    static family_spec complete(int n) { return {graph_family::complete, {n}}; }
};

/// Canonical vertex numbering (also in the README):
///   path:            v_0 .. v_{t-1} along the path
///   cycle:           v_0 .. v_{t-1} in cyclic order
///   star:            center 0, leaves 1..n
///   extended_star:   center 0; length-1 arms (tips 1..v1); then length-2 arms,
///                    each arm consecutive (inner, tip); then length-3 arms,
///                    each consecutive (inner, middle, tip)
///   cycle_with_leaf: leaf tip v_0 attached at v_1; cycle v_1 .. v_t in order
///   centipede:       spine 0..t-1; leaf of spine vertex i is t+i
///   dutch_windmill:  center 0; cycle i occupies 1+(i-1)(m-1) .. i(m-1)
///   complete:        vertices 0..n-1
simplicial_complex generate_family(const family_spec& spec);

std::string family_name(graph_family f);
family_spec parse_family_spec(const std::string& name, const std::vector<int>& params);

} // namespace dmt

#endif
