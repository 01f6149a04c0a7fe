#include "dmt/family_theorems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "dmt/collapse.hpp"
#include "dmt/errors.hpp"
#include "dmt/graph_families.hpp"

namespace dmt {

std::string theorem_name(family_theorem th) {
    switch (th) {
    case family_theorem::morse_path: return "morse-path";
    case family_theorem::morse_extended_star: return "morse-extended-star";
    case family_theorem::gm_cycle: return "gm-cycle";
    case family_theorem::gm_cycle_leaf: return "gm-cycle-leaf";
    case family_theorem::matching_path: return "matching-path";
    case family_theorem::matching_cycle: return "matching-cycle";
    case family_theorem::matching_centipede: return "matching-centipede";
    case family_theorem::matching_windmill: return "matching-windmill";
    }
    return "?";
}

family_theorem parse_theorem(const std::string& name) {
    static const std::pair<const char*, family_theorem> table[] = {
        {"morse-path", family_theorem::morse_path},
        {"morse-extended-star", family_theorem::morse_extended_star},
        {"gm-cycle", family_theorem::gm_cycle},
        {"gm-cycle-leaf", family_theorem::gm_cycle_leaf},
        {"matching-path", family_theorem::matching_path},
        {"matching-cycle", family_theorem::matching_cycle},
        {"matching-centipede", family_theorem::matching_centipede},
        {"matching-windmill", family_theorem::matching_windmill},
    };
    for (auto& [n, th] : table)
        if (name == n) return th;
    throw parse_error("unknown theorem id: " + name);
}

namespace {

bool two_parameter(family_theorem th) {
    return th == family_theorem::morse_extended_star ||
           th == family_theorem::matching_windmill;
}

} // namespace

std::string to_string(family_theorem th, const theorem_params& p) {
    if (two_parameter(th))
        return theorem_name(th) + "(n=" + std::to_string(p.n) +
               ",m=" + std::to_string(p.m) + ")";
    return theorem_name(th) + "(t=" + std::to_string(p.t) + ")";
}

bool theorem_params_in_range(family_theorem th, const theorem_params& p) {
    switch (th) {
    case family_theorem::morse_path: return p.t >= 3;
    case family_theorem::morse_extended_star: return p.n >= 1 && p.m >= 0;
    case family_theorem::gm_cycle: return p.t > 3;
    case family_theorem::gm_cycle_leaf: return p.t >= 3;
    case family_theorem::matching_path: return p.t >= 3;
    case family_theorem::matching_cycle: return p.t >= 3;
    case family_theorem::matching_centipede: return p.t >= 1;
    case family_theorem::matching_windmill: return p.n >= 2 && p.m >= 3;
    }
    return false;
}

homotopy_type expected_homotopy(family_theorem th, const theorem_params& p) {
    if (!theorem_params_in_range(th, p))
        throw out_of_range_parameter("parameters out of theorem range for " +
                                     to_string(th, p));
    auto sphere = [](int d) { return homotopy_type::sphere(d); };
    auto wedge = [](int d, long long c) {
        return homotopy_type::wedge_of_spheres({{d, c}});
    };
    switch (th) {
    case family_theorem::morse_path: {
        int n = p.t / 3, r = p.t % 3;
        if (r == 0) return homotopy_type::point();
        if (r == 1) return sphere(2 * n - 1);
        return sphere(2 * n);
    }
    case family_theorem::morse_extended_star: {
        if (p.n == 1) return homotopy_type::point();
        return wedge(2 * p.m + p.n, p.n - 1);
    }
    case family_theorem::gm_cycle: {
        int n = p.t / 3, r = p.t % 3;
        if (r == 0) return wedge(2 * n - 1, 2);
        return sphere(2 * n);
    }
    case family_theorem::gm_cycle_leaf: {
        int n = p.t / 3, r = p.t % 3;
        if (r == 0) return homotopy_type::point();
        if (r == 1) return sphere(2 * n);
        return sphere(2 * n + 1);
    }
    case family_theorem::matching_path: {
        int n = p.t / 3, r = p.t % 3;
        if (r == 2) return homotopy_type::point();
        return sphere(n - 1);
    }
    case family_theorem::matching_cycle: {
        int n = p.t / 3, r = p.t % 3;
        if (r == 0) return wedge(n - 1, 2);
        if (r == 1) return sphere(n - 1);
        return sphere(n);
    }
    case family_theorem::matching_centipede: {
        if (p.t % 2 == 1) return homotopy_type::point();
        return sphere(p.t / 2 - 1);
    }
    case family_theorem::matching_windmill: {
        int k = p.m / 3, r = p.m % 3;
        if (r == 0) return homotopy_type::point();
        if (r == 1) return sphere(p.n * k - 1);
        return wedge(p.n * k, 2 * p.n - 1);
    }
    }
    throw out_of_range_parameter("unknown theorem");
}

namespace {

// ---------------------------------------------------------------------------
// Piece plans: a face set plus the matching recipe chosen by the proof.
// ---------------------------------------------------------------------------

struct piece_plan {
    enum class matcher { collapse, cone, cascade, none };
    std::vector<simplex> faces;
    matcher kind = matcher::none;
    std::vector<vertex_id> apexes;

    static piece_plan collapse_piece(std::vector<simplex> faces) {
        return {std::move(faces), matcher::collapse, {}};
    }
    static piece_plan cone_piece(std::vector<simplex> faces, vertex_id apex) {
        return {std::move(faces), matcher::cone, {apex}};
    }
    static piece_plan cascade_piece(std::vector<simplex> faces,
                                    std::vector<vertex_id> apexes) {
        return {std::move(faces), matcher::cascade, std::move(apexes)};
    }
    static piece_plan critical_piece(std::vector<simplex> faces) {
        return {std::move(faces), matcher::none, {}};
    }
};

face_poset_matching collapse_to_matching(const simplicial_complex& piece_complex) {
    collapse_sequence seq = greedy_collapse(piece_complex);
    if (!seq.collapsed_to_point())
        throw verification_failure(
            "star-cluster piece did not collapse to a point");
    face_poset_matching M;
    for (auto& [free, coface] : seq.steps) M.pairs.emplace_back(free, coface);
    std::sort(M.pairs.begin(), M.pairs.end());
    return M;
}

/// Orders the plans for prefix closure, validates the partition, attaches
/// each plan's matching, and packages the result.
cluster_decomposition assemble_plans(const simplicial_complex& K,
                                     std::vector<piece_plan> plans) {
    std::vector<std::vector<simplex>> face_sets;
    face_sets.reserve(plans.size());
    for (auto& pl : plans) {
        std::sort(pl.faces.begin(), pl.faces.end());
        face_sets.push_back(pl.faces);
    }
    std::vector<int> order = order_pieces_for_prefix_closure(K, face_sets);

    std::vector<std::vector<simplex>> ordered;
    for (int idx : order) ordered.push_back(face_sets[idx]);
    cluster_decomposition D = assemble_decomposition(K, ordered);

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const piece_plan& pl = plans[order[pos]];
        decomposition_piece& piece = D.pieces[pos];
        switch (pl.kind) {
        case piece_plan::matcher::collapse: {
            if (piece.faces.empty()) break;
            auto sub = simplicial_complex::from_faces(piece.faces, K.num_vertices());
            piece.matching = collapse_to_matching(sub);
            break;
        }
        case piece_plan::matcher::cone:
            piece.matching = cone_matching(K, piece.faces, pl.apexes.front());
            break;
        case piece_plan::matcher::cascade:
            piece.matching = cascade_matching(K, piece.faces, pl.apexes);
            break;
        case piece_plan::matcher::none:
            break;
        }
    }
    return D;
}

std::vector<simplex> complement_faces(const simplicial_complex& K,
                                      const simplicial_complex& sub) {
    std::vector<simplex> rest;
    for (const simplex& f : K.all_faces())
        if (!sub.contains(f)) rest.push_back(f);
    return rest;
}

// ---------------------------------------------------------------------------
// Gap buckets: the alternating-end scheme shared by the path-shaped proofs.
// Positions carry the indices of the "backward" arrows (or spare edges) that
// a face may omit; T below is always the set of omitted positions.
// ---------------------------------------------------------------------------

struct gap_bucket {
    std::vector<int> spine; // positions forced into T
    int excluded = -1;      // position forced out of T; -1 = none
    int toggle = -1;        // position whose arrow is the cone apex
};

struct gap_plan {
    std::vector<gap_bucket> buckets;
    bool has_final = false;
    std::vector<int> final_spine;
};

/// Alternating two-end bucket plan on the free position range [lo, hi].
/// Starting high reproduces the Morse-path proof's piece order, starting low
/// the cycle-with-leaf proof's.
gap_plan alternating_gap_plan(int lo, int hi, bool start_high) {
    gap_plan plan;
    std::vector<int> spine;
    bool high = start_high;
    while (true) {
        if (lo > hi) {
            plan.has_final = true;
            plan.final_spine = spine;
            return plan;
        }
        if (lo == hi) {
            plan.buckets.push_back({spine, -1, lo});
            return plan;
        }
        if (high) {
            plan.buckets.push_back({spine, hi - 1, hi});
            spine.push_back(hi - 1);
            hi -= 3;
        } else {
            plan.buckets.push_back({spine, lo + 1, lo});
            spine.push_back(lo + 1);
            lo += 3;
        }
        high = !high;
    }
}

bool contains_all_positions(const std::set<int>& T, const std::vector<int>& spine) {
    for (int s : spine)
        if (!T.count(s)) return false;
    return true;
}

/// Distributes faces over the buckets of a gap plan by their gap sets;
/// returns per-bucket face lists plus the final critical list.
struct bucketed_faces {
    std::vector<std::vector<simplex>> buckets;
    std::vector<simplex> final_faces;
};

bucketed_faces distribute_by_gap_plan(
    const gap_plan& plan, const std::vector<std::pair<simplex, std::set<int>>>& faces) {
    bucketed_faces out;
    out.buckets.resize(plan.buckets.size());
    for (const auto& [face, T] : faces) {
        bool placed = false;
        for (std::size_t b = 0; b < plan.buckets.size(); ++b) {
            const gap_bucket& bk = plan.buckets[b];
            if (!contains_all_positions(T, bk.spine))
                throw verification_failure("face " + to_string(face) +
                                           " escapes the gap-bucket chain");
            if (bk.excluded < 0 || !T.count(bk.excluded)) {
                out.buckets[b].push_back(face);
                placed = true;
                break;
            }
        }
        if (!placed) {
            if (!plan.has_final ||
                !contains_all_positions(T, plan.final_spine))
                throw verification_failure("face " + to_string(face) +
                                           " fits no gap bucket");
            out.final_faces.push_back(face);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Morse complex of a path (Prop. on M(P_t)).
// ---------------------------------------------------------------------------

family_run build_morse_path(int t) {
    labeled_complex lc = morse_complex(generate_family(family_spec::path(t)));
    const simplicial_complex& K = lc.complex;

    auto forward = [&](int i) { // (v_i)v_{i+1}
        return lc.vertex_of(make_primitive_gvf(i, simplex({i, i + 1})));
    };
    auto backward = [&](int i) { // (v_{i+1})v_i
        return lc.vertex_of(make_primitive_gvf(i + 1, simplex({i, i + 1})));
    };

    std::vector<vertex_id> root_facet;
    for (int i = 0; i + 1 < t; ++i) root_facet.push_back(forward(i));
    simplicial_complex sc =
        star_cluster(K, simplex(std::vector<vertex_id>(root_facet)));

    // Faces outside the star cluster are exactly the all-backward fields whose
    // edge set blocks every forward arrow; classify them by omitted positions.
    std::vector<std::pair<simplex, std::set<int>>> rest;
    for (const simplex& f : complement_faces(K, sc)) {
        std::set<int> T;
        for (int i = 0; i + 1 < t; ++i) T.insert(i);
        for (vertex_id v : f) {
            const primitive_gvf& a = lc.gvf_meaning[v];
            if (a.tail != a.edge[1])
                throw verification_failure("unexpected forward arrow outside the "
                                           "star cluster of M(P_t)");
            T.erase(a.edge[0]);
        }
        rest.push_back({f, std::move(T)});
    }

    gap_plan plan = alternating_gap_plan(1, t - 2, /*start_high=*/true);
    bucketed_faces dist = distribute_by_gap_plan(plan, rest);

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    for (std::size_t b = 0; b < plan.buckets.size(); ++b)
        plans.push_back(piece_plan::cone_piece(std::move(dist.buckets[b]),
                                               backward(plan.buckets[b].toggle)));
    if (plan.has_final && !dist.final_faces.empty())
        plans.push_back(piece_plan::critical_piece(std::move(dist.final_faces)));

    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

// ---------------------------------------------------------------------------
// Generalized Morse complex of a cycle-with-leaf (Thm. on GM(C_t v leaf)).
// Same machinery as the path, but the leaf-inward arrow is forced and the
// proof fills gaps from the low end first.
// ---------------------------------------------------------------------------

family_run build_gm_cycle_leaf(int t) {
    labeled_complex lc =
        generalized_morse_complex(generate_family(family_spec::cycle_with_leaf(t)));
    const simplicial_complex& K = lc.complex;

    // Cycle vertices are 1..t; edge s is {s, s+1} for s in [1, t-1]; the edge
    // {1, t} closes the cycle and {0, 1} is the leaf.
    auto cw = [&](int i) { // (v_i)v_{i+1}, i in [1, t-1]
        return lc.vertex_of(make_primitive_gvf(i, simplex({i, i + 1})));
    };
    auto ccw = [&](int s) { // (v_{s+1})v_s, s in [1, t-1]
        return lc.vertex_of(make_primitive_gvf(s + 1, simplex({s, s + 1})));
    };
    vertex_id leaf_out = lc.vertex_of(make_primitive_gvf(0, simplex({0, 1})));
    vertex_id leaf_in = lc.vertex_of(make_primitive_gvf(1, simplex({0, 1})));
    vertex_id closing_cw = lc.vertex_of(make_primitive_gvf(t, simplex({1, t})));

    std::vector<vertex_id> big_facet{leaf_out, closing_cw};
    for (int i = 1; i < t; ++i) big_facet.push_back(cw(i));
    simplicial_complex sc = star_cluster(K, simplex(std::move(big_facet)));

    std::vector<std::pair<simplex, std::set<int>>> rest;
    for (const simplex& f : complement_faces(K, sc)) {
        if (!f.contains(leaf_in))
            throw verification_failure(
                "face outside the star cluster misses the leaf-inward arrow");
        std::set<int> T;
        for (int s = 1; s <= t - 2; ++s) T.insert(s);
        bool saw_last = false;
        for (vertex_id v : f) {
            if (v == leaf_in) continue;
            const primitive_gvf& a = lc.gvf_meaning[v];
            if (a.edge.contains(0) || a.tail != a.edge[1])
                throw verification_failure(
                    "unexpected arrow outside the star cluster of GM(C_t v leaf)");
            int s = a.edge[0];
            if (s == t - 1)
                saw_last = true;
            else
                T.erase(s);
        }
        if (!saw_last)
            throw verification_failure(
                "face outside the star cluster misses the forced backward arrow");
        rest.push_back({f, std::move(T)});
    }

    gap_plan plan = alternating_gap_plan(1, t - 2, /*start_high=*/false);
    bucketed_faces dist = distribute_by_gap_plan(plan, rest);

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    for (std::size_t b = 0; b < plan.buckets.size(); ++b)
        plans.push_back(piece_plan::cone_piece(std::move(dist.buckets[b]),
                                               ccw(plan.buckets[b].toggle)));
    if (plan.has_final && !dist.final_faces.empty())
        plans.push_back(piece_plan::critical_piece(std::move(dist.final_faces)));

    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

// ---------------------------------------------------------------------------
// Generalized Morse complex of a cycle (Thm. on GM(C_t)).
// After removing the star cluster of the coherently oriented facet, faces are
// counterclockwise arrow sets whose gaps form independent sets of Z_t; the
// proof fills the gap at 0, then gaps 3, 6, ... upward and t-3, t-6, ...
// downward, leaving exactly the theorem's critical cells.
// ---------------------------------------------------------------------------

family_run build_gm_cycle(int t) {
    labeled_complex lc =
        generalized_morse_complex(generate_family(family_spec::cycle(t)));
    const simplicial_complex& K = lc.complex;

    auto edge_at = [&](int i) {
        return i == t - 1 ? simplex({0, t - 1}) : simplex({i, i + 1});
    };
    auto cw = [&](int i) { // (v_i)v_{i+1 mod t}
        return lc.vertex_of(make_primitive_gvf(i, edge_at(i)));
    };
    auto ccw = [&](int i) { // (v_{i+1 mod t})v_i
        return lc.vertex_of(make_primitive_gvf((i + 1) % t, edge_at(i)));
    };

    std::vector<vertex_id> facet;
    for (int i = 0; i < t; ++i) facet.push_back(cw(i));
    simplicial_complex sc = star_cluster(K, simplex(std::move(facet)));

    std::vector<std::pair<simplex, std::set<int>>> rest;
    for (const simplex& f : complement_faces(K, sc)) {
        std::set<int> T;
        for (int i = 0; i < t; ++i) T.insert(i);
        for (vertex_id v : f) {
            const primitive_gvf& a = lc.gvf_meaning[v];
            int pos = a.edge.contains(0) && a.edge.contains(t - 1) ? t - 1
                                                                   : a.edge[0];
            vertex_id expect_tail = (pos + 1) % t;
            if (a.tail != expect_tail)
                throw verification_failure("unexpected clockwise arrow outside "
                                           "the star cluster of GM(C_t)");
            T.erase(pos);
        }
        rest.push_back({f, std::move(T)});
    }

    // Bucket chain for the branch with gaps at `anchor`, spine step -3 or +3.
    std::vector<piece_plan> plans;
    plans.reserve(rest.size() / 2 + 4);

    struct cyc_bucket {
        std::vector<int> spine;
        int excluded; // -1: bucket absorbs the whole branch remainder
        int toggle;
    };
    std::vector<cyc_bucket> x_buckets, y_buckets;
    std::vector<int> x_crit_spine, y_crit_spine;
    bool x_has_crit = false, y_has_crit = false;
    {
        std::vector<int> spine;
        for (int k = 1;; ++k) {
            spine.push_back(3 * k - 2);
            if (3 * k > t - 1) {
                x_crit_spine = spine;
                x_has_crit = true;
                break;
            }
            int excl = (3 * k + 1 <= t - 1) ? 3 * k + 1 : -1;
            x_buckets.push_back({spine, excl, 3 * k});
            if (excl < 0) break;
        }
    }
    {
        std::vector<int> spine;
        for (int k = 1;; ++k) {
            spine.push_back(t - 1 - 3 * (k - 1));
            int toggle = t - 3 * k;
            if (toggle < 2) {
                y_crit_spine = spine;
                y_has_crit = true;
                break;
            }
            int e = t - 1 - 3 * k;
            int excl = (e >= 2) ? e : -1;
            y_buckets.push_back({spine, excl, toggle});
            if (excl < 0) break;
        }
    }

    std::vector<simplex> p0_faces;
    std::vector<std::vector<simplex>> x_faces(x_buckets.size()),
        y_faces(y_buckets.size());
    std::vector<simplex> x_crit, y_crit;

    for (const auto& [face, T] : rest) {
        if (!T.count(1) && !T.count(t - 1)) {
            p0_faces.push_back(face);
            continue;
        }
        const bool x_branch = T.count(1) > 0;
        const auto& buckets = x_branch ? x_buckets : y_buckets;
        auto& facelists = x_branch ? x_faces : y_faces;
        bool placed = false;
        for (std::size_t b = 0; b < buckets.size(); ++b) {
            if (!contains_all_positions(T, buckets[b].spine))
                throw verification_failure("face " + to_string(face) +
                                           " escapes the cycle bucket chain");
            if (buckets[b].excluded < 0 || !T.count(buckets[b].excluded)) {
                facelists[b].push_back(face);
                placed = true;
                break;
            }
        }
        if (!placed) {
            auto& crit_spine = x_branch ? x_crit_spine : y_crit_spine;
            bool has = x_branch ? x_has_crit : y_has_crit;
            if (!has || !contains_all_positions(T, crit_spine))
                throw verification_failure("face " + to_string(face) +
                                           " fits no cycle bucket");
            (x_branch ? x_crit : y_crit).push_back(face);
        }
    }

    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    plans.push_back(piece_plan::cone_piece(std::move(p0_faces), ccw(0)));
    for (std::size_t b = 0; b < x_buckets.size(); ++b)
        plans.push_back(
            piece_plan::cone_piece(std::move(x_faces[b]), ccw(x_buckets[b].toggle)));
    for (std::size_t b = 0; b < y_buckets.size(); ++b)
        plans.push_back(
            piece_plan::cone_piece(std::move(y_faces[b]), ccw(y_buckets[b].toggle)));
    if (!x_crit.empty()) plans.push_back(piece_plan::critical_piece(std::move(x_crit)));
    if (!y_crit.empty()) plans.push_back(piece_plan::critical_piece(std::move(y_crit)));

    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

// ---------------------------------------------------------------------------
// Morse complex of an extended star S_{0,n,m} (Thm. on extended stars).
// ---------------------------------------------------------------------------

family_run build_morse_extended_star(int n, int m) {
    simplicial_complex G = generate_family(family_spec::extended_star(0, n, m));
    labeled_complex lc = morse_complex(G);
    const simplicial_complex& K = lc.complex;

    auto arrow = [&](vertex_id tail, vertex_id other) {
        return lc.vertex_of(make_primitive_gvf(tail, simplex({tail, other})));
    };
    auto inner2 = [&](int i) { return 1 + 2 * i; };          // 2-arm inner
    auto inner3 = [&](int j) { return 1 + 2 * n + 3 * j; };  // 3-arm inner

    // Star cluster of the field rooted at the center.
    discrete_vector_field rooted = rooted_field(G, 0);
    std::vector<vertex_id> facet;
    for (const auto& pg : rooted.pairs) facet.push_back(lc.vertex_of(pg));
    simplicial_complex sc = star_cluster(K, simplex(std::move(facet)));

    std::vector<simplex> rest = complement_faces(K, sc);
    std::unordered_set<simplex, simplex_hash> taken;

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));

    // Delta_1: one piece per length-3 arm, toggling the inner arrow away
    // from the center.
    for (int j = 0; j < m; ++j) {
        vertex_id out_arrow = arrow(0, inner3(j));
        std::vector<simplex> piece;
        for (const simplex& f : rest)
            if (f.contains(out_arrow) && !taken.count(f)) {
                piece.push_back(f);
                taken.insert(f);
            }
        plans.push_back(piece_plan::cone_piece(
            std::move(piece), arrow(inner3(j), inner3(j) + 1)));
    }

    // Delta_2: everything else; one matched pair through the first 2-arm,
    // the other n-1 top cells stay critical.
    std::vector<simplex> delta2;
    for (const simplex& f : rest)
        if (!taken.count(f)) delta2.push_back(f);
    plans.push_back(
        piece_plan::cascade_piece(std::move(delta2), {arrow(0, inner2(0))}));

    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

// ---------------------------------------------------------------------------
// Matching complexes of paths and centipedes: a star cluster plus at most
// one critical cell.
// ---------------------------------------------------------------------------

family_run build_matching_path(int t) {
    labeled_complex lc = matching_complex(generate_family(family_spec::path(t)));
    const simplicial_complex& K = lc.complex;

    std::vector<vertex_id> spine;
    for (int i = 0; 3 * i <= t - 2; ++i)
        spine.push_back(lc.vertex_of(simplex({3 * i, 3 * i + 1})));
    simplicial_complex sc = star_cluster(K, simplex(std::move(spine)));

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    std::vector<simplex> rest = complement_faces(K, sc);
    plans.push_back(piece_plan::critical_piece(std::move(rest)));
    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

family_run build_matching_centipede(int t) {
    labeled_complex lc =
        matching_complex(generate_family(family_spec::centipede(t)));
    const simplicial_complex& K = lc.complex;

    std::vector<vertex_id> spine;
    for (int i = 0; i < t; ++i) spine.push_back(lc.vertex_of(simplex({i, t + i})));
    simplicial_complex sc = star_cluster(K, simplex(std::move(spine)));

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    std::vector<simplex> rest = complement_faces(K, sc);
    plans.push_back(piece_plan::critical_piece(std::move(rest)));
    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

// ---------------------------------------------------------------------------
// Matching complex of a cycle (Prop. on M(C_t)).
// ---------------------------------------------------------------------------

family_run build_matching_cycle(int t) {
    labeled_complex lc = matching_complex(generate_family(family_spec::cycle(t)));
    const simplicial_complex& K = lc.complex;
    const int n = t / 3, r = t % 3;

    auto edge_vtx = [&](int i) { // cyclic edge position i
        return lc.vertex_of(i == t - 1 ? simplex({0, t - 1}) : simplex({i, i + 1}));
    };

    std::vector<vertex_id> spine;
    int kmax = (r == 2) ? n : n - 1;
    for (int i = 0; i <= kmax; ++i) spine.push_back(edge_vtx(3 * i));
    simplicial_complex sc = star_cluster(K, simplex(std::move(spine)));

    std::vector<simplex> rest = complement_faces(K, sc);
    vertex_id last = edge_vtx(t - 1);

    std::vector<simplex> delta1, delta2;
    for (const simplex& f : rest)
        (f.contains(last) ? delta1 : delta2).push_back(f);

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    if (r == 0) {
        plans.push_back(piece_plan::critical_piece(std::move(delta1)));
        plans.push_back(piece_plan::critical_piece(std::move(delta2)));
    } else if (r == 1) {
        // Fill the first missing edge of each block, scanning from the top.
        std::vector<vertex_id> apexes;
        for (int a = n - 1; a >= 0; --a) apexes.push_back(edge_vtx(3 * a + 1));
        plans.push_back(piece_plan::cascade_piece(std::move(delta1), apexes));
        plans.push_back(piece_plan::critical_piece(std::move(delta2)));
    } else {
        std::vector<vertex_id> apexes;
        for (int a = 0; a < n; ++a) apexes.push_back(edge_vtx(3 * a + 2));
        plans.push_back(piece_plan::cascade_piece(std::move(delta1), apexes));
        if (!delta2.empty())
            throw verification_failure("M(C_{3n+2}): unexpected faces outside "
                                       "the star of the closing edge");
    }
    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

// ---------------------------------------------------------------------------
// Matching complex of a Dutch windmill (Thm. on M(D^n_m)), n >= 2.
// ---------------------------------------------------------------------------

family_run build_matching_windmill(int n, int m) {
    labeled_complex lc =
        matching_complex(generate_family(family_spec::dutch_windmill(n, m)));
    const simplicial_complex& K = lc.complex;
    const int k = m / 3, r = m % 3;

    // Edge at position j of cycle i (1-based cycles, positions 0..m-1).
    auto edge_at = [&](int i, int j) {
        int base = 1 + (i - 1) * (m - 1);
        if (j == 0) return simplex({0, base});
        if (j == m - 1) return simplex({0, base + m - 2});
        return simplex({base + j - 1, base + j});
    };
    auto pos_vtx = [&](int i, int j) { return lc.vertex_of(edge_at(i, j)); };

    std::vector<vertex_id> spine;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < k; ++j) spine.push_back(pos_vtx(i, 3 * j + 1));
    simplicial_complex sc = star_cluster(K, simplex(std::move(spine)));

    std::vector<simplex> rest = complement_faces(K, sc);

    // Decode every remaining face into per-cycle position sets.
    std::map<vertex_id, std::pair<int, int>> locate;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < m; ++j) locate[pos_vtx(i, j)] = {i, j};

    auto all_R = [&]() {
        std::set<int> s;
        for (int j = 0; j < k; ++j) s.insert(3 * j + 2);
        return s;
    }();
    auto L_run = [&](int a) {
        std::set<int> s;
        for (int j = 0; j < a; ++j) s.insert(3 * j);
        return s;
    };
    auto pattern_LR = [&](int a) { // L^a R^{k-a}
        std::set<int> s = L_run(a);
        for (int j = a; j < k; ++j) s.insert(3 * j + 2);
        return s;
    };
    auto pattern_LB = [&](int a) { // L^a B R^{k-1-a}
        std::set<int> s = L_run(a + 1);
        for (int j = a; j < k; ++j) s.insert(3 * j + 2);
        return s;
    };
    std::set<int> pattern_L3k = L_run(k);
    pattern_L3k.insert(3 * k); // only meaningful when r == 2
    std::set<int> pattern_center = all_R;
    pattern_center.insert(m - 1);

    struct decoded {
        simplex face;
        int special = 0; // 0: every cycle all-R
        std::set<int> special_pattern;
    };
    std::vector<decoded> faces;
    for (const simplex& f : rest) {
        std::vector<std::set<int>> per_cycle(n + 1);
        for (vertex_id v : f) {
            auto [i, j] = locate.at(v);
            per_cycle[i].insert(j);
        }
        decoded d;
        d.face = f;
        for (int i = 1; i <= n; ++i) {
            if (per_cycle[i] == all_R) continue;
            if (d.special != 0)
                throw verification_failure(
                    "windmill face with two non-canonical cycles");
            d.special = i;
            d.special_pattern = per_cycle[i];
        }
        faces.push_back(std::move(d));
    }

    auto collect = [&](int i, const std::set<int>& p1, const std::set<int>& p2) {
        std::vector<simplex> out;
        for (const auto& d : faces)
            if (d.special == i && (d.special_pattern == p1 || d.special_pattern == p2))
                out.push_back(d.face);
        return out;
    };
    auto collect_one = [&](int i, const std::set<int>& p) {
        return collect(i, p, p);
    };

    std::vector<piece_plan> plans;
    plans.push_back(piece_plan::collapse_piece(sc.all_faces()));
    std::size_t assigned = 0;
    auto push = [&](piece_plan pl) {
        assigned += pl.faces.size();
        plans.push_back(std::move(pl));
    };

    if (r == 0) {
        // Every candidate face would need a second center edge; none exist.
    } else if (r == 1) {
        for (int i = 1; i <= n; ++i)
            for (int a = k; a >= 1; --a)
                push(piece_plan::cone_piece(
                    collect(i, pattern_LR(a), pattern_LB(a - 1)),
                    pos_vtx(i, 3 * (a - 1) + 2)));
        std::vector<simplex> crit;
        for (const auto& d : faces)
            if (d.special == 0) crit.push_back(d.face);
        assigned += crit.size();
        plans.push_back(piece_plan::critical_piece(std::move(crit)));
    } else { // r == 2
        for (int i = 1; i <= n; ++i)
            push(piece_plan::cone_piece(collect(i, L_run(k), pattern_L3k),
                                        pos_vtx(i, 3 * k)));
        if (k >= 2) {
            for (int i = 1; i <= n; ++i) {
                for (int a = k - 1; a >= 2; --a)
                    push(piece_plan::cone_piece(
                        collect(i, pattern_LR(a), pattern_LB(a - 1)),
                        pos_vtx(i, 3 * (a - 1) + 2)));
                push(piece_plan::cone_piece(collect(i, pattern_LR(1), pattern_LB(0)),
                                            pos_vtx(i, 2)));
                push(piece_plan::critical_piece(collect_one(i, pattern_LB(k - 1))));
            }
            // The untouched face pairs with the first center edge; the other
            // center-edge cells stay critical.
            std::vector<simplex> pa = collect_one(1, pattern_center);
            for (const auto& d : faces)
                if (d.special == 0) pa.push_back(d.face);
            push(piece_plan::cascade_piece(std::move(pa), {pos_vtx(1, m - 1)}));
            std::vector<simplex> crit;
            for (int i = 2; i <= n; ++i)
                for (const simplex& f : collect_one(i, pattern_center))
                    crit.push_back(f);
            push(piece_plan::critical_piece(std::move(crit)));
        } else { // k == 1: the B-cells absorb the roles of the LR buckets
            std::vector<simplex> pa = collect_one(1, pattern_LB(0));
            for (const auto& d : faces)
                if (d.special == 0) pa.push_back(d.face);
            push(piece_plan::cascade_piece(std::move(pa), {pos_vtx(1, 0)}));
            std::vector<simplex> crit;
            for (int i = 2; i <= n; ++i)
                for (const simplex& f : collect_one(i, pattern_LB(0)))
                    crit.push_back(f);
            for (int i = 1; i <= n; ++i)
                for (const simplex& f : collect_one(i, pattern_center))
                    crit.push_back(f);
            push(piece_plan::critical_piece(std::move(crit)));
        }
    }
    if (assigned != faces.size())
        throw verification_failure(
            "windmill decomposition left faces unassigned");

    return {std::move(lc), assemble_plans(K, std::move(plans))};
}

} // namespace

family_run family_decomposition(family_theorem th, const theorem_params& p) {
    if (!theorem_params_in_range(th, p))
        throw out_of_range_parameter("parameters out of theorem range for " +
                                     to_string(th, p));
    switch (th) {
    case family_theorem::morse_path: return build_morse_path(p.t);
    case family_theorem::morse_extended_star:
        return build_morse_extended_star(p.n, p.m);
    case family_theorem::gm_cycle: return build_gm_cycle(p.t);
    case family_theorem::gm_cycle_leaf: return build_gm_cycle_leaf(p.t);
    case family_theorem::matching_path: return build_matching_path(p.t);
    case family_theorem::matching_cycle: return build_matching_cycle(p.t);
    case family_theorem::matching_centipede: return build_matching_centipede(p.t);
    case family_theorem::matching_windmill:
        return build_matching_windmill(p.n, p.m);
    }
    throw out_of_range_parameter("unknown theorem");
}

gm_collapse_result gm_cycle_leaf_collapse(int t) {
    if (t < 3) throw out_of_range_parameter("gm_cycle_leaf_collapse needs t >= 3");
    simplicial_complex G = generate_family(family_spec::cycle_with_leaf(t));
    gm_collapse_result out{generalized_morse_complex(G), morse_complex(G), {}};
    const labeled_complex& gm = out.gm;

    auto id = [&](vertex_id tail, vertex_id a, vertex_id b) {
        return gm.vertex_of(make_primitive_gvf(tail, simplex({a, b})));
    };
    std::vector<vertex_id> cwv, ccwv;
    for (int i = 1; i < t; ++i) {
        cwv.push_back(id(i, i, i + 1));
        ccwv.push_back(id(i + 1, i, i + 1));
    }
    cwv.push_back(id(t, 1, t));
    ccwv.push_back(id(1, 1, t));
    vertex_id leaf_in = id(0, 0, 1);

    simplex cw_cycle{std::vector<vertex_id>(cwv)};
    simplex ccw_cycle{std::vector<vertex_id>(ccwv)};
    out.matching.pairs.emplace_back(cw_cycle, cw_cycle.with(leaf_in));
    out.matching.pairs.emplace_back(ccw_cycle, ccw_cycle.with(leaf_in));
    std::sort(out.matching.pairs.begin(), out.matching.pairs.end());

    // The matched faces must be exactly the faces GM adds over M.
    std::unordered_set<simplex, simplex_hash> matched;
    for (auto& [a, b] : out.matching.pairs) {
        matched.insert(a);
        matched.insert(b);
    }
    for (const simplex& f : out.gm.complex.all_faces()) {
        bool in_morse = out.morse.complex.contains(f);
        if (in_morse == (matched.count(f) > 0))
            throw verification_failure(
                "GM(C_t v leaf) collapse does not reach M(C_t v leaf) at " +
                to_string(f));
    }
    auto acyclic = verify_acyclic_matching(out.gm.complex, out.matching);
    if (!acyclic.acyclic)
        throw verification_failure("GM(C_t v leaf) collapse matching is cyclic");
    return out;
}

suspension_split tree_suspension_split(const simplicial_complex& T,
                                       const labeled_complex& morse) {
    if (!is_tree(T) || T.faces(1).size() < 2)
        throw invalid_complex("tree_suspension_split requires a tree with >= 2 edges");

    std::vector<int> degree(T.num_vertices(), 0);
    for (const simplex& e : T.faces(1)) {
        degree[e[0]]++;
        degree[e[1]]++;
    }
    vertex_id leaf = -1;
    for (vertex_id v = 0; v < T.num_vertices(); ++v)
        if (degree[v] == 1) { leaf = v; break; }
    vertex_id neighbor = -1;
    for (const simplex& e : T.faces(1))
        if (e.contains(leaf)) { neighbor = e[0] == leaf ? e[1] : e[0]; break; }

    auto facet_of = [&](vertex_id root) {
        std::vector<vertex_id> ids;
        for (const auto& pg : rooted_field(T, root).pairs)
            ids.push_back(morse.vertex_of(pg));
        return simplex(std::move(ids));
    };

    suspension_split out;
    out.leaf_root_facet = facet_of(leaf);
    out.neighbor_root_facet = facet_of(neighbor);
    out.sc0 = star_cluster(morse.complex, out.leaf_root_facet);
    out.sc1 = star_cluster(morse.complex, out.neighbor_root_facet);

    std::vector<simplex> common;
    for (const simplex& f : out.sc0.all_faces())
        if (out.sc1.contains(f)) common.push_back(f);
    if (common.empty())
        throw verification_failure("tree_suspension_split: empty intersection");
    out.intersection =
        simplicial_complex::from_faces(std::move(common), morse.complex.num_vertices());

    for (const simplex& f : morse.complex.all_faces())
        if (!out.sc0.contains(f) && !out.sc1.contains(f))
            throw verification_failure(
                "star clusters of the two rooted fields do not cover M(T)");
    return out;
}

suspension_split tree_suspension_split(const simplicial_complex& T) {
    labeled_complex mc = morse_complex(T);
    return tree_suspension_split(T, mc);
}

} // namespace dmt
