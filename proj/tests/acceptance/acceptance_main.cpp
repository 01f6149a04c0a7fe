// Acceptance suite: runs every verification target end to end and prints one
// pass/fail line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dmt/collapse.hpp"
#include "dmt/derived_complexes.hpp"
#include "dmt/family_theorems.hpp"
#include "dmt/graph_families.hpp"
#include "dmt/homology.hpp"
#include "dmt/json_io.hpp"
#include "dmt/verify.hpp"

#include "../unit/support.hpp"

using namespace dmt;

namespace {

int failures = 0;
std::vector<verification_report> all_reports;

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void report(int criterion, const std::string& what, bool ok, long long ms) {
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", ok ? "PASS" : "FAIL",
                criterion, what.c_str(), ms);
    if (!ok) ++failures;
}

bool reports_confirmed(const std::vector<verification_report>& reports) {
    if (reports.empty()) return false;
    for (const auto& r : reports) {
        if (r.result != verdict::confirmed) {
            std::printf("       mismatch at %s: engine %s, oracle %s, expected %s\n",
                        to_string(r.theorem, r.params).c_str(),
                        to_string(r.engine_classification).c_str(),
                        to_string(r.oracle_classification).c_str(),
                        to_string(r.expected).c_str());
            return false;
        }
        all_reports.push_back(r);
    }
    return true;
}

template <typename Fn>
void criterion(int number, const std::string& what, Fn&& fn) {
    long long t0 = now_ms();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::printf("       exception: %s\n", e.what());
        ok = false;
    }
    report(number, what, ok, now_ms() - t0);
}

std::vector<theorem_params> t_range(int lo, int hi) {
    std::vector<theorem_params> out;
    for (int t = lo; t <= hi; ++t) out.push_back({.t = t});
    return out;
}

} // namespace

int main() {
    criterion(1, "Morse complexes of paths, t = 3..10", [] {
        return reports_confirmed(run_verify(family_theorem::morse_path, t_range(3, 10)));
    });

    criterion(2, "Morse complexes of extended stars", [] {
        std::vector<theorem_params> ps = {{.n = 1, .m = 0}, {.n = 2, .m = 0},
                                          {.n = 3, .m = 0}, {.n = 4, .m = 0},
                                          {.n = 1, .m = 1}, {.n = 2, .m = 1}};
        auto reports = run_verify(family_theorem::morse_extended_star, ps);
        if (!reports_confirmed(reports)) return false;
        // The figure's instance: M(S_{0,4,0}) is a wedge of three 4-spheres.
        return reports[3].expected == homotopy_type::wedge_of_spheres({{4, 3}});
    });

    criterion(3, "generalized Morse complexes of cycles, t = 4..9", [] {
        auto reports = run_verify(family_theorem::gm_cycle, t_range(4, 9));
        if (!reports_confirmed(reports)) return false;
        return reports[2].expected == homotopy_type::wedge_of_spheres({{3, 2}}) &&
               reports[3].expected == homotopy_type::sphere(4);
    });

    criterion(4, "cycle with leaf, t = 4..7, plus the GM -> M collapse", [] {
        if (!reports_confirmed(run_verify(family_theorem::gm_cycle_leaf, t_range(4, 7))))
            return false;
        for (int t = 4; t <= 7; ++t) {
            auto res = gm_cycle_leaf_collapse(t); // throws unless the collapse
                                                  // reaches M exactly
            if (res.matching.pairs.size() != 2) return false;
            if (res.gm.complex.num_faces() - res.morse.complex.num_faces() != 4)
                return false;
        }
        return true;
    });

    criterion(5, "matching complexes of paths and cycles, t = 3..14", [] {
        return reports_confirmed(
                   run_verify(family_theorem::matching_path, t_range(3, 14))) &&
               reports_confirmed(
                   run_verify(family_theorem::matching_cycle, t_range(3, 14)));
    });

    criterion(6, "matching complexes of centipedes, t = 2..8", [] {
        return reports_confirmed(
            run_verify(family_theorem::matching_centipede, t_range(2, 8)));
    });

    criterion(7, "matching complexes of Dutch windmills", [] {
        std::vector<theorem_params> ps;
        for (int n = 2; n <= 3; ++n)
            for (int m = 3; m <= 7; ++m) ps.push_back({.n = n, .m = m});
        auto reports = run_verify(family_theorem::matching_windmill, ps);
        if (!reports_confirmed(reports)) return false;
        // D^2_5 gives a wedge of three 2-spheres.
        return reports[2].expected == homotopy_type::wedge_of_spheres({{2, 3}});
    });

    criterion(8, "structural lemmas over the graph corpus", [] {
        std::mt19937 rng(2024);
        bool ok = true;

        // Corpus: every unlabeled tree with <= 7 edges, every connected graph
        // on <= 5 vertices with <= 7 edges, the named families, and random
        // connected graphs with <= 7 edges.
        std::vector<simplicial_complex> corpus;
        for (auto& T : dmt_test::all_trees_up_to(7)) corpus.push_back(T);
        for (int nv = 3; nv <= 5; ++nv)
            for (auto& G : dmt_test::all_connected_graphs(nv, 7))
                corpus.push_back(G);
        for (int t = 3; t <= 6; ++t) {
            corpus.push_back(generate_family(family_spec::cycle(t)));
            corpus.push_back(generate_family(family_spec::cycle_with_leaf(t)));
        }
        corpus.push_back(generate_family(family_spec::dutch_windmill(2, 3)));
        corpus.push_back(generate_family(family_spec::extended_star(1, 1, 1)));
        for (int i = 0; i < 25; ++i)
            corpus.push_back(dmt_test::random_connected_graph(rng, 4 + i % 4, 7));

        for (const auto& G : corpus) {
            // GM(G) is always flag; M(G) is flag iff G is a tree.
            auto gm = generalized_morse_complex(G);
            if (!is_flag(gm.complex)) {
                std::printf("       GM not flag for a corpus graph\n");
                ok = false;
            }
            auto m = morse_complex(G);
            if (is_flag(m.complex) != is_tree(G)) {
                std::printf("       flag lemma fails on a corpus graph\n");
                ok = false;
            }
            // GM(G) is isomorphic to M(sd(G)); throws when unverified.
            sd_matching_isomorphism(G);
        }

        // Star clusters in flag complexes greedy-collapse to a point: take
        // the Morse complexes of the corpus trees and every facet's cluster.
        int cluster_checks = 0;
        for (const auto& T : dmt_test::all_trees_up_to(5)) {
            auto m = morse_complex(T);
            for (const simplex& facet : m.complex.facets()) {
                auto sc = star_cluster(m.complex, facet);
                if (!greedy_collapse(sc).collapsed_to_point()) {
                    std::printf("       star cluster failed to collapse\n");
                    ok = false;
                }
                ++cluster_checks;
            }
        }
        if (cluster_checks == 0) ok = false;

        // Two leaves on a common vertex make M(sd(G)) contractible.
        std::vector<simplicial_complex> two_leaves;
        two_leaves.push_back(generate_family(family_spec::star(2)));
        two_leaves.push_back(generate_family(family_spec::star(3)));
        two_leaves.push_back(generate_family(family_spec::extended_star(2, 1, 0)));
        two_leaves.push_back(generate_family(family_spec::extended_star(2, 0, 1)));
        two_leaves.push_back(generate_family(family_spec::extended_star(3, 1, 1)));
        for (const auto& G : two_leaves) {
            auto msd = matching_complex(barycentric_subdivision_graph(G));
            auto b = betti_numbers(msd.complex);
            if (!classify_wedge(b).is_point()) {
                std::printf("       two-leaf corollary fails\n");
                ok = false;
            }
        }
        return ok;
    });

    criterion(9, "tree suspension on 20 random trees with <= 6 edges", [] {
        std::mt19937 rng(77);
        for (int i = 0; i < 20; ++i) {
            int n = std::uniform_int_distribution<int>(3, 7)(rng);
            auto T = dmt_test::random_tree(rng, n);
            auto morse = morse_complex(T);
            auto split = tree_suspension_split(T, morse); // throws unless the
                                                          // clusters cover M(T)
            if (!greedy_collapse(split.sc0).collapsed_to_point()) return false;
            if (!greedy_collapse(split.sc1).collapsed_to_point()) return false;
            if (!suspension_check(betti_numbers(morse.complex),
                                  betti_numbers(split.intersection)))
                return false;
        }
        return true;
    });

    criterion(10, "Cluster-Lemma integrity across criteria 1-7", [] {
        if (all_reports.empty()) return false;
        for (const auto& r : all_reports)
            if (!r.checks.all()) {
                std::printf("       integrity checks fail at %s\n",
                            to_string(r.theorem, r.params).c_str());
                return false;
            }
        return true;
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
