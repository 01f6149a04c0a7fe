#include <doctest.h>

#include "dmt/cluster.hpp"
#include "dmt/collapse.hpp"
#include "dmt/errors.hpp"
#include "dmt/graph_families.hpp"
#include "dmt/matching.hpp"
#include "support.hpp"

using namespace dmt;
using dmt_test::sx;

TEST_CASE("acyclicity verification") {
    auto c4 = generate_family(family_spec::cycle(4));

    // Empty matching on anything is acyclic.
    CHECK(verify_acyclic_matching(c4, {}).acyclic);

    // The classic cyclic matching around the square.
    face_poset_matching around;
    around.pairs = {{sx({0}), sx({0, 1})},
                    {sx({1}), sx({1, 2})},
                    {sx({2}), sx({2, 3})},
                    {sx({3}), sx({0, 3})}};
    auto res = verify_acyclic_matching(c4, around);
    CHECK_FALSE(res.acyclic);
    CHECK(res.witness.size() >= 4);
    CHECK(res.witness.front() == res.witness.back());

    // Dropping one pair breaks the cycle.
    face_poset_matching broken = around;
    broken.pairs.pop_back();
    CHECK(verify_acyclic_matching(c4, broken).acyclic);

    // Cone matching on a full simplex is acyclic and leaves only the apex.
    auto full = make_complex({sx({0, 1, 2, 3})});
    auto cone = cone_matching(full, full.all_faces(), 0);
    CHECK(verify_acyclic_matching(full, cone).acyclic);
    CHECK(cone.pairs.size() * 2 == full.num_faces() - 1);

    // A doubly used face is rejected outright.
    face_poset_matching doubled;
    doubled.pairs = {{sx({0}), sx({0, 1})}, {sx({0}), sx({0, 3})}};
    CHECK_THROWS_AS(verify_acyclic_matching(c4, doubled), invalid_complex);
}

TEST_CASE("cone matching escape detection") {
    auto full = make_complex({sx({0, 1, 2})});
    // Piece missing the partner of {1,2} under apex 0.
    std::vector<simplex> piece = {sx({1, 2})};
    CHECK_THROWS_AS(cone_matching(full, piece, 0), toggle_escapes_piece);

    // Toggling outside the ambient complex leaves the face unmatched.
    auto hollow = make_complex({sx({0, 1}), sx({1, 2}), sx({0, 2})});
    std::vector<simplex> edge_piece = {sx({1, 2})};
    auto m = cone_matching(hollow, edge_piece, 0); // {0,1,2} not a face
    CHECK(m.pairs.empty());
}

TEST_CASE("assemble_decomposition validates partition and prefix closure") {
    auto p4 = generate_family(family_spec::path(4));

    // Single generator covering everything: one piece.
    auto D = assemble_decomposition(p4, {p4.all_faces()});
    CHECK(D.pieces.size() == 1);
    CHECK(D.total_faces() == p4.num_faces());

    // A generator whose face is not in K is rejected.
    CHECK_THROWS_AS(assemble_decomposition(p4, {{sx({0, 3})}}), partition_violation);

    // Prefix closure violation: an edge before its endpoints.
    CHECK_THROWS_AS(assemble_decomposition(p4, {{sx({0, 1})}}), partition_violation);

    // The remainder piece is synthesized automatically.
    std::vector<simplex> verts;
    for (const simplex& v : p4.faces(0)) verts.push_back(v);
    auto D2 = assemble_decomposition(p4, {verts});
    CHECK(D2.pieces.size() == 2);
    CHECK(D2.pieces[1].faces.size() == p4.faces(1).size());
}

TEST_CASE("piece reordering finds a valid prefix order") {
    auto p4 = generate_family(family_spec::path(4));
    std::vector<simplex> verts;
    for (const simplex& v : p4.faces(0)) verts.push_back(v);
    std::vector<simplex> edges;
    for (const simplex& e : p4.faces(1)) edges.push_back(e);

    // Given in the wrong order, the sort flips them.
    auto order = order_pieces_for_prefix_closure(p4, {edges, verts});
    CHECK(order == std::vector<int>{1, 0});
}

TEST_CASE("union_matchings profiles and guards") {
    auto full = make_complex({sx({0, 1, 2})});
    cluster_decomposition D;
    D.pieces.push_back({0, full.all_faces(), cone_matching(full, full.all_faces(), 0)});
    auto um = union_matchings(full, D);
    CHECK(um.profile.counts == std::map<int, long long>{{0, 1}});
    CHECK(um.critical_faces == std::vector<simplex>{sx({0})});

    // A cyclic piece matching is refused.
    auto c4 = generate_family(family_spec::cycle(4));
    cluster_decomposition bad;
    face_poset_matching around;
    around.pairs = {{sx({0}), sx({0, 1})},
                    {sx({1}), sx({1, 2})},
                    {sx({2}), sx({2, 3})},
                    {sx({3}), sx({0, 3})}};
    bad.pieces.push_back({0, c4.all_faces(), around});
    CHECK_THROWS(union_matchings(c4, bad));
}

TEST_CASE("forman classification") {
    critical_profile pt;
    pt.counts = {{0, 1}};
    CHECK(forman_classify(pt).is_point());

    critical_profile wedge;
    wedge.counts = {{0, 1}, {3, 2}};
    CHECK(forman_classify(wedge) == homotopy_type::wedge_of_spheres({{3, 2}}));

    critical_profile zero_sphere;
    zero_sphere.counts = {{0, 2}};
    CHECK(forman_classify(zero_sphere) == homotopy_type::sphere(0));

    critical_profile messy;
    messy.counts = {{0, 1}, {1, 1}, {2, 1}};
    CHECK(forman_classify(messy).is_inconclusive());

    critical_profile no_vertex;
    no_vertex.counts = {{1, 2}};
    CHECK(forman_classify(no_vertex).is_inconclusive());
}

TEST_CASE("greedy collapse of star clusters in flag complexes reaches a point") {
    // Star clusters of facets in the (flag) Morse complexes of trees.
    for (int t = 4; t <= 6; ++t) {
        auto m = morse_complex(generate_family(family_spec::path(t)));
        for (const simplex& facet : m.complex.facets()) {
            if (facet.dim() + 2 < t - 1) continue; // maximal fields only
            auto sc = star_cluster(m.complex, facet);
            CHECK(greedy_collapse(sc).collapsed_to_point());
        }
    }
}
