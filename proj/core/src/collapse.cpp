#include "dmt/collapse.hpp"

#include <set>
#include <unordered_map>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

struct face_entry {
    simplex face;
    bool alive = true;
    int immediate_cofaces = 0;
    std::vector<int> cofaces;  // indices of codim-1 cofaces (fixed)
    std::vector<int> boundary; // indices of codim-1 subfaces (fixed)
};

} // namespace

collapse_sequence greedy_collapse(const simplicial_complex& K, tie_break) {
    std::vector<face_entry> entries;
    std::unordered_map<simplex, int, simplex_hash> index;
    for (const simplex& f : K.all_faces()) {
        index.emplace(f, static_cast<int>(entries.size()));
        entries.push_back({f, true, 0, {}, {}});
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const simplex& f = entries[i].face;
        if (f.dim() == 0) continue;
        for (std::size_t j = 0; j < f.size(); ++j) {
            int sub = index.at(f.facet_dropping(j));
            entries[i].boundary.push_back(sub);
            entries[sub].cofaces.push_back(static_cast<int>(i));
            entries[sub].immediate_cofaces++;
        }
    }

    // sigma is free iff it has exactly one immediate coface tau and tau is
    // maximal; then tau is sigma's unique proper coface of any codimension.
    auto cmp = [&](int a, int b) { return entries[a].face < entries[b].face; };
    std::set<int, decltype(cmp)> candidates(cmp);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].immediate_cofaces == 1) candidates.insert(static_cast<int>(i));

    auto unique_live_coface = [&](int i) -> int {
        int found = -1;
        for (int c : entries[i].cofaces) {
            if (!entries[c].alive) continue;
            if (found >= 0) return -1;
            found = c;
        }
        return found;
    };

    collapse_sequence out;
    auto decrement = [&](int i) {
        if (--entries[i].immediate_cofaces == 1) {
            candidates.insert(i);
        } else if (entries[i].immediate_cofaces == 0) {
            candidates.erase(i);
            // i just became maximal: its codim-1 subfaces may now be free
            for (int sub : entries[i].boundary)
                if (entries[sub].alive && entries[sub].immediate_cofaces == 1)
                    candidates.insert(sub);
        }
    };

    while (!candidates.empty()) {
        int sigma = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!entries[sigma].alive || entries[sigma].immediate_cofaces != 1) continue;
        int tau = unique_live_coface(sigma);
        if (tau < 0 || entries[tau].immediate_cofaces != 0) continue;

        entries[sigma].alive = false;
        entries[tau].alive = false;
        out.steps.emplace_back(entries[sigma].face, entries[tau].face);
        for (int sub : entries[tau].boundary)
            if (entries[sub].alive) decrement(sub);
        for (int sub : entries[sigma].boundary)
            if (entries[sub].alive) decrement(sub);
    }

    std::vector<simplex> residual;
    for (const auto& e : entries)
        if (e.alive) residual.push_back(e.face);
    out.residual = simplicial_complex::from_faces(std::move(residual), K.num_vertices());
    out.residual.set_labels(K.labels());
    return out;
}

} // namespace dmt
