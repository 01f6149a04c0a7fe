#include "dmt/cluster.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "dmt/errors.hpp"

namespace dmt {

std::size_t cluster_decomposition::total_faces() const {
    std::size_t n = 0;
    for (const auto& p : pieces) n += p.faces.size();
    return n;
}

namespace {

/// piece index of every face of K, or throws when the pieces do not
/// partition the faces of K.
std::unordered_map<simplex, int, simplex_hash> owner_map(
    const simplicial_complex& K, const std::vector<std::vector<simplex>>& pieces) {
    std::unordered_map<simplex, int, simplex_hash> owner;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (const simplex& f : pieces[i]) {
            if (!K.contains(f))
                throw partition_violation("piece face " + to_string(f) +
                                          " is not a face of the complex");
            if (!owner.emplace(f, static_cast<int>(i)).second)
                throw partition_violation("face " + to_string(f) +
                                          " lies in two pieces");
        }
    if (owner.size() != K.num_faces())
        throw partition_violation("pieces do not cover every face of the complex");
    return owner;
}

void check_prefix_closure(const simplicial_complex& K,
                          const std::vector<std::vector<simplex>>& pieces) {
    auto owner = owner_map(K, pieces);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (const simplex& f : pieces[i]) {
            if (f.dim() == 0) continue;
            for (std::size_t j = 0; j < f.size(); ++j) {
                simplex sub = f.facet_dropping(j);
                if (owner.at(sub) > static_cast<int>(i))
                    throw partition_violation(
                        "prefix union is not a subcomplex: face " + to_string(sub) +
                        " of " + to_string(f) + " appears in a later piece");
            }
        }
}

} // namespace

cluster_decomposition assemble_decomposition(
    const simplicial_complex& K,
    const std::vector<std::vector<simplex>>& generators) {
    std::unordered_set<simplex, simplex_hash> taken;
    std::vector<std::vector<simplex>> pieces;
    for (const auto& gen : generators) {
        std::vector<simplex> piece;
        for (const simplex& f : gen) {
            if (!K.contains(f))
                throw partition_violation("generator face " + to_string(f) +
                                          " is not a face of the complex");
            if (taken.insert(f).second) piece.push_back(f);
        }
        std::sort(piece.begin(), piece.end());
        piece.erase(std::unique(piece.begin(), piece.end()), piece.end());
        pieces.push_back(std::move(piece));
    }
    if (taken.size() < K.num_faces()) {
        std::vector<simplex> remainder;
        for (const simplex& f : K.all_faces())
            if (!taken.count(f)) remainder.push_back(f);
        std::sort(remainder.begin(), remainder.end());
        pieces.push_back(std::move(remainder));
    }
    check_prefix_closure(K, pieces);

    cluster_decomposition D;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        D.pieces.push_back({static_cast<int>(i), std::move(pieces[i]), {}});
    return D;
}

std::vector<int> order_pieces_for_prefix_closure(
    const simplicial_complex& K, const std::vector<std::vector<simplex>>& pieces) {
    auto owner = owner_map(K, pieces);
    const int n = static_cast<int>(pieces.size());

    // Edge a -> b when some face in piece b has a boundary face in piece a;
    // any topological order then satisfies prefix closure.
    std::vector<std::unordered_set<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (int b = 0; b < n; ++b)
        for (const simplex& f : pieces[b]) {
            if (f.dim() == 0) continue;
            for (std::size_t j = 0; j < f.size(); ++j) {
                int a = owner.at(f.facet_dropping(j));
                if (a != b && succ[a].insert(b).second) indeg[b]++;
            }
        }

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        int a = ready.top();
        ready.pop();
        order.push_back(a);
        for (int b : succ[a])
            if (--indeg[b] == 0) ready.push(b);
    }
    if (order.size() != pieces.size())
        throw partition_violation(
            "no piece order satisfies prefix closure (dependency cycle)");
    return order;
}

union_matching_result union_matchings(const simplicial_complex& K,
                                      const cluster_decomposition& D) {
    // Re-validate the decomposition itself.
    {
        std::vector<std::vector<simplex>> raw;
        for (const auto& p : D.pieces) raw.push_back(p.faces);
        check_prefix_closure(K, raw);
    }

    union_matching_result out;
    for (const auto& piece : D.pieces) {
        auto res = verify_acyclic_matching(piece.faces, piece.matching);
        if (!res.acyclic) {
            std::string msg = "piece " + std::to_string(piece.index) +
                              " matching is cyclic:";
            for (const simplex& f : res.witness) msg += " " + to_string(f);
            throw invalid_complex(msg);
        }
        out.matching.append(piece.matching);
    }

    auto global = verify_acyclic_matching(K, out.matching);
    if (!global.acyclic) {
        std::string msg = "union matching is cyclic:";
        for (const simplex& f : global.witness) msg += " " + to_string(f);
        throw global_acyclicity_failure(msg);
    }

    std::unordered_set<simplex, simplex_hash> matched;
    for (const auto& [a, b] : out.matching.pairs) {
        matched.insert(a);
        matched.insert(b);
    }
    for (const simplex& f : K.all_faces())
        if (!matched.count(f)) {
            out.critical_faces.push_back(f);
            out.profile.counts[f.dim()]++;
        }
    std::sort(out.critical_faces.begin(), out.critical_faces.end());
    return out;
}

homotopy_type forman_classify(const critical_profile& profile) {
    std::vector<std::pair<int, long long>> nonzero;
    for (auto& [d, c] : profile.counts)
        if (c > 0) nonzero.push_back({d, c});
    if (nonzero.empty()) return homotopy_type::inconclusive(profile);

    if (nonzero.size() == 1 && nonzero[0].first == 0) {
        long long m0 = nonzero[0].second;
        if (m0 == 1) return homotopy_type::point();
        // m_0 = k + 1 isolated cells: a (k)-fold wedge of 0-spheres.
        return homotopy_type::wedge_of_spheres({{0, m0 - 1}});
    }
    if (nonzero.size() == 2 && nonzero[0].first == 0 && nonzero[0].second == 1)
        return homotopy_type::wedge_of_spheres({{nonzero[1].first, nonzero[1].second}});
    return homotopy_type::inconclusive(profile);
}

} // namespace dmt
