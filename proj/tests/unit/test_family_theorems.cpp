#include <doctest.h>

#include <random>

#include "dmt/collapse.hpp"
#include "dmt/errors.hpp"
#include "dmt/family_theorems.hpp"
#include "dmt/graph_families.hpp"
#include "dmt/homology.hpp"
#include "dmt/verify.hpp"
#include "support.hpp"

using namespace dmt;

namespace {

critical_profile engine_profile(family_theorem th, theorem_params p) {
    auto run = family_decomposition(th, p);
    return union_matchings(run.complex.complex, run.decomposition).profile;
}

} // namespace

TEST_CASE("morse path decomposition profiles") {
    // t = 3n: a single critical vertex.
    CHECK(engine_profile(family_theorem::morse_path, {.t = 3}).counts ==
          std::map<int, long long>{{0, 1}});
    CHECK(engine_profile(family_theorem::morse_path, {.t = 6}).counts ==
          std::map<int, long long>{{0, 1}});
    // t = 3n+1 -> S^{2n-1}; the paper's worked case t = 7 gives {0:1, 3:1}.
    CHECK(engine_profile(family_theorem::morse_path, {.t = 7}).counts ==
          std::map<int, long long>{{0, 1}, {3, 1}});
    // t = 3n+2 -> S^{2n}.
    CHECK(engine_profile(family_theorem::morse_path, {.t = 5}).counts ==
          std::map<int, long long>{{0, 1}, {2, 1}});

    // Piece shape for t = 7: star cluster, two star pieces, one critical cell.
    auto run = family_decomposition(family_theorem::morse_path, {.t = 7});
    CHECK(run.decomposition.pieces.size() == 4);
    CHECK_THROWS_AS(family_decomposition(family_theorem::morse_path, {.t = 2}),
                    out_of_range_parameter);
}

TEST_CASE("extended star decomposition profiles") {
    CHECK(engine_profile(family_theorem::morse_extended_star, {.n = 1, .m = 0}).counts ==
          std::map<int, long long>{{0, 1}});
    CHECK(engine_profile(family_theorem::morse_extended_star, {.n = 4, .m = 0}).counts ==
          std::map<int, long long>{{0, 1}, {4, 3}});
    CHECK(engine_profile(family_theorem::morse_extended_star, {.n = 2, .m = 1}).counts ==
          std::map<int, long long>{{0, 1}, {4, 1}});
}

TEST_CASE("generalized Morse cycle profiles") {
    CHECK(engine_profile(family_theorem::gm_cycle, {.t = 6}).counts ==
          std::map<int, long long>{{0, 1}, {3, 2}});
    CHECK(engine_profile(family_theorem::gm_cycle, {.t = 7}).counts ==
          std::map<int, long long>{{0, 1}, {4, 1}});
    CHECK(engine_profile(family_theorem::gm_cycle, {.t = 5}).counts ==
          std::map<int, long long>{{0, 1}, {2, 1}});
    CHECK_THROWS_AS(family_decomposition(family_theorem::gm_cycle, {.t = 3}),
                    out_of_range_parameter);
}

TEST_CASE("cycle-with-leaf profiles and the GM -> M collapse") {
    CHECK(engine_profile(family_theorem::gm_cycle_leaf, {.t = 6}).counts ==
          std::map<int, long long>{{0, 1}});
    CHECK(engine_profile(family_theorem::gm_cycle_leaf, {.t = 5}).counts ==
          std::map<int, long long>{{0, 1}, {3, 1}});
    CHECK(engine_profile(family_theorem::gm_cycle_leaf, {.t = 4}).counts ==
          std::map<int, long long>{{0, 1}, {2, 1}});

    for (int t = 3; t <= 6; ++t) {
        auto res = gm_cycle_leaf_collapse(t);
        CHECK(res.matching.pairs.size() == 2);
        CHECK(res.gm.complex.num_faces() - res.morse.complex.num_faces() == 4);
        // Same homotopy type on both sides, per the corollary.
        auto bg = betti_numbers(res.gm.complex);
        auto bm = betti_numbers(res.morse.complex);
        CHECK(bg == bm);
    }
}

TEST_CASE("matching path / cycle / centipede profiles") {
    CHECK(engine_profile(family_theorem::matching_path, {.t = 5}).counts ==
          std::map<int, long long>{{0, 1}});
    CHECK(engine_profile(family_theorem::matching_path, {.t = 6}).counts ==
          std::map<int, long long>{{0, 1}, {1, 1}});
    CHECK(engine_profile(family_theorem::matching_path, {.t = 7}).counts ==
          std::map<int, long long>{{0, 1}, {1, 1}});

    CHECK(engine_profile(family_theorem::matching_cycle, {.t = 6}).counts ==
          std::map<int, long long>{{0, 1}, {1, 2}});
    CHECK(engine_profile(family_theorem::matching_cycle, {.t = 7}).counts ==
          std::map<int, long long>{{0, 1}, {1, 1}});
    CHECK(engine_profile(family_theorem::matching_cycle, {.t = 5}).counts ==
          std::map<int, long long>{{0, 1}, {1, 1}});
    CHECK(engine_profile(family_theorem::matching_cycle, {.t = 3}).counts ==
          std::map<int, long long>{{0, 3}});

    CHECK(engine_profile(family_theorem::matching_centipede, {.t = 4}).counts ==
          std::map<int, long long>{{0, 1}, {1, 1}});
    CHECK(engine_profile(family_theorem::matching_centipede, {.t = 5}).counts ==
          std::map<int, long long>{{0, 1}});
}

TEST_CASE("windmill profiles") {
    CHECK(engine_profile(family_theorem::matching_windmill, {.n = 2, .m = 3}).counts ==
          std::map<int, long long>{{0, 1}});
    CHECK(engine_profile(family_theorem::matching_windmill, {.n = 2, .m = 4}).counts ==
          std::map<int, long long>{{0, 1}, {1, 1}});
    // D^2_5 -> wedge of three 2-spheres.
    CHECK(engine_profile(family_theorem::matching_windmill, {.n = 2, .m = 5}).counts ==
          std::map<int, long long>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(
        family_decomposition(family_theorem::matching_windmill, {.n = 1, .m = 4}),
        out_of_range_parameter);
}

TEST_CASE("expected formulas match the stated special cases") {
    CHECK(expected_homotopy(family_theorem::morse_path, {.t = 6}).is_point());
    CHECK(expected_homotopy(family_theorem::morse_path, {.t = 7}) ==
          homotopy_type::sphere(3));
    CHECK(expected_homotopy(family_theorem::morse_extended_star, {.n = 4, .m = 0}) ==
          homotopy_type::wedge_of_spheres({{4, 3}}));
    CHECK(expected_homotopy(family_theorem::gm_cycle, {.t = 6}) ==
          homotopy_type::wedge_of_spheres({{3, 2}}));
    CHECK(expected_homotopy(family_theorem::gm_cycle_leaf, {.t = 5}) ==
          homotopy_type::sphere(3));
    CHECK(expected_homotopy(family_theorem::matching_cycle, {.t = 6}) ==
          homotopy_type::wedge_of_spheres({{1, 2}}));
    CHECK(expected_homotopy(family_theorem::matching_windmill, {.n = 2, .m = 5}) ==
          homotopy_type::wedge_of_spheres({{2, 3}}));
    CHECK(expected_homotopy(family_theorem::matching_centipede, {.t = 8}) ==
          homotopy_type::sphere(3));
}

TEST_CASE("tree suspension split") {
    // P_5: M(P_5) is S^2 and the intersection is a circle.
    auto p5 = generate_family(family_spec::path(5));
    auto split5 = tree_suspension_split(p5);
    CHECK(greedy_collapse(split5.sc0).collapsed_to_point());
    CHECK(greedy_collapse(split5.sc1).collapsed_to_point());
    auto whole = betti_numbers(morse_complex(p5).complex);
    CHECK(whole.reduced == std::vector<long long>{0, 0, 1});
    auto half = betti_numbers(split5.intersection);
    CHECK(half.reduced == std::vector<long long>{0, 1});
    CHECK(suspension_check(whole, half));

    // P_4 and the 3-star.
    for (auto spec : {family_spec::path(4), family_spec::star(3)}) {
        auto T = generate_family(spec);
        auto split = tree_suspension_split(T);
        CHECK(greedy_collapse(split.sc0).collapsed_to_point());
        CHECK(greedy_collapse(split.sc1).collapsed_to_point());
        CHECK(suspension_check(betti_numbers(morse_complex(T).complex),
                               betti_numbers(split.intersection)));
    }

    CHECK_THROWS_AS(tree_suspension_split(generate_family(family_spec::cycle(4))),
                    invalid_complex);
}

TEST_CASE("run_verify confirms and skips") {
    auto reports = run_verify(family_theorem::morse_path,
                              {{.t = 3}, {.t = 4}, {.t = 5}});
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.result == verdict::confirmed);
        CHECK(r.checks.all());
    }

    auto skipped = run_verify_one(family_theorem::gm_cycle, {.t = 3});
    CHECK(skipped.result == verdict::skipped);
    CHECK(skipped.skipped);
    CHECK(all_passed({skipped}));
}
