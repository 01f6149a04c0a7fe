#include "dmt/matching.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "dmt/errors.hpp"

namespace dmt {

void face_poset_matching::append(const face_poset_matching& other) {
    pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
}

void validate_matching(const face_poset_matching& M) {
    std::unordered_set<simplex, simplex_hash> used;
    for (const auto& [face, coface] : M.pairs) {
        if (coface.dim() != face.dim() + 1 || !coface.contains_all(face))
            throw invalid_complex("matching pair " + to_string(face) + " < " +
                                  to_string(coface) + " is not a codimension-1 incidence");
        if (!used.insert(face).second)
            throw invalid_complex("face " + to_string(face) + " matched twice");
        if (!used.insert(coface).second)
            throw invalid_complex("face " + to_string(coface) + " matched twice");
    }
}

acyclicity_result verify_acyclic_matching(const std::vector<simplex>& faces,
                                          const face_poset_matching& M) {
    validate_matching(M);
    std::unordered_map<simplex, int, simplex_hash> index;
    for (std::size_t i = 0; i < faces.size(); ++i)
        index.emplace(faces[i], static_cast<int>(i));

    std::unordered_map<simplex, simplex, simplex_hash> up; // face -> matched coface
    for (const auto& [face, coface] : M.pairs) {
        if (!index.count(face) || !index.count(coface))
            throw invalid_complex("matching pair outside the face set: " +
                                  to_string(face) + " < " + to_string(coface));
        up.emplace(face, coface);
    }

    // Modified Hasse digraph on the face set: matched codim-1 incidences point
    // upward, all others downward.
    const int n = static_cast<int>(faces.size());
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i) {
        const simplex& f = faces[i];
        auto mit = up.find(f);
        if (mit != up.end()) {
            succ[i].push_back(index.at(mit->second));
        }
        if (f.dim() >= 1) {
            for (std::size_t j = 0; j < f.size(); ++j) {
                simplex sub = f.facet_dropping(j);
                auto it = index.find(sub);
                if (it == index.end()) continue;
                auto m2 = up.find(sub);
                if (m2 != up.end() && m2->second == f) continue; // reversed edge
                succ[i].push_back(it->second);
            }
        }
    }

    // Iterative DFS with three colors; a back edge yields the witness cycle.
    std::vector<int> color(n, 0);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next >= succ[u].size()) {
                color[u] = 2;
                stack.pop_back();
                continue;
            }
            int w = succ[u][next++];
            if (color[w] == 1) {
                acyclicity_result res;
                res.acyclic = false;
                std::vector<int> cyc{w};
                for (int x = u; x != w; x = parent[x]) cyc.push_back(x);
                std::reverse(cyc.begin(), cyc.end());
                for (int x : cyc) res.witness.push_back(faces[x]);
                res.witness.push_back(faces[w]);
                return res;
            }
            if (color[w] == 0) {
                color[w] = 1;
                parent[w] = u;
                stack.push_back({w, 0});
            }
        }
    }
    return {true, {}};
}

acyclicity_result verify_acyclic_matching(const simplicial_complex& K,
                                          const face_poset_matching& M) {
    return verify_acyclic_matching(K.all_faces(), M);
}

face_poset_matching cone_matching(const simplicial_complex& K,
                                  const std::vector<simplex>& piece,
                                  vertex_id apex) {
    std::unordered_set<simplex, simplex_hash> in_piece(piece.begin(), piece.end());
    face_poset_matching M;
    for (const simplex& f : piece) {
        if (f.contains(apex)) {
            simplex down = f.without(apex);
            if (down.empty()) continue; // bare apex vertex stays unmatched
            if (!in_piece.count(down))
                throw toggle_escapes_piece("cone partner " + to_string(down) +
                                           " of " + to_string(f) +
                                           " is outside the piece");
            M.pairs.emplace_back(std::move(down), f);
        } else {
            simplex up = f.with(apex);
            if (!K.contains(up)) continue; // no coface in the ambient complex
            if (!in_piece.count(up))
                throw toggle_escapes_piece("cone partner " + to_string(up) +
                                           " of " + to_string(f) +
                                           " is outside the piece");
        }
    }
    std::sort(M.pairs.begin(), M.pairs.end());
    return M;
}

face_poset_matching cascade_matching(const simplicial_complex& K,
                                     const std::vector<simplex>& piece,
                                     const std::vector<vertex_id>& apexes) {
    std::unordered_set<simplex, simplex_hash> unmatched(piece.begin(), piece.end());
    face_poset_matching M;
    for (vertex_id apex : apexes) {
        std::vector<std::pair<simplex, simplex>> round;
        for (const simplex& f : piece) {
            if (!unmatched.count(f) || f.contains(apex)) continue;
            simplex up = f.with(apex);
            if (!K.contains(up) || !unmatched.count(up)) continue;
            round.emplace_back(f, std::move(up));
        }
        for (auto& [lo, hi] : round) {
            unmatched.erase(lo);
            unmatched.erase(hi);
            M.pairs.emplace_back(std::move(lo), std::move(hi));
        }
    }
    std::sort(M.pairs.begin(), M.pairs.end());
    return M;
}

} // namespace dmt
