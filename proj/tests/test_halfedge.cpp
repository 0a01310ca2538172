// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphcx/halfedge.hpp"
#include "helpers.hpp"

using namespace graphcx;
using namespace graphcx::testbed;

TEST_CASE("validate accepts a two-loop rose") {
    CHECK(validate(loop_rose(2)).empty());
}

TEST_CASE("validate rejects valence below three") {
    auto bad = validate(loop_rose(1));
    REQUIRE(bad.size() == 1);
    CHECK(bad.front().find("valence < 3") != std::string::npos);
}

TEST_CASE("validate flags an incomplete cyclic order") {
    HalfEdgeGraph g = dumbbell(Operad::Assoc);
    g.rotation[0] = {0, 1};   // drops the bridge dart
    bool found = false;
    for (const auto& v : validate(g))
        found = found || v.find("decoration mismatch") != std::string::npos;
    CHECK(found);
}

TEST_CASE("validate flags a broken involution") {
    HalfEdgeGraph g = theta();
    g.mate[0] = 0;
    CHECK(!validate(g).empty());
}

TEST_CASE("reindex action signs") {
    OrientedGraph og = with_default_orientation(theta());
    Reindex identity{{0, 1}, {0, 0, 0}};
    auto [same, s0] = apply_reindex(og, identity);
    CHECK(s0 == 1);
    CHECK(same.orient.vertex_pos == og.orient.vertex_pos);

    Reindex swap{{1, 0}, {0, 0, 0}};
    CHECK(apply_reindex(og, swap).second == -1);

    Reindex swap_flip{{1, 0}, {1, 0, 0}};
    auto [og2, s2] = apply_reindex(og, swap_flip);
    CHECK(s2 == 1);
    CHECK(og2.orient.head_dart[0] == og.graph.mate[og.orient.head_dart[0]]);
}

TEST_CASE("reindex rejects size mismatches") {
    OrientedGraph og = with_default_orientation(theta());
    Reindex wrong{{0, 1, 2}, {0, 0, 0}};
    CHECK_THROWS_AS(apply_reindex(og, wrong), std::invalid_argument);
}

TEST_CASE("graph stats on the basic shapes") {
    GraphStats th = graph_stats(theta());
    CHECK(th.b1 == 2);
    CHECK(th.connected);
    CHECK(!th.has_separating_edge);

    GraphStats db = graph_stats(dumbbell());
    CHECK(db.b1 == 2);
    CHECK(db.connected);
    CHECK(db.has_separating_edge);

    GraphStats two = graph_stats(disjoint(theta(), theta()));
    CHECK(two.b1 == 4);
    CHECK(!two.connected);
    CHECK(two.component_count == 2);
}

TEST_CASE("permutation parity") {
    CHECK(permutation_parity({0, 1, 2}) == 0);
    CHECK(permutation_parity({1, 0, 2}) == 1);
    CHECK(permutation_parity({1, 2, 0}) == 0);
    CHECK(permutation_parity({3, 2, 1, 0}) == 0);
}

TEST_CASE("parity of a reindex element") {
    Reindex r{{1, 0, 2}, {1, 1, 0, 1}};
    CHECK(r.parity() == 0);   // one transposition plus three flips

    Reindex r2{{0, 1, 2}, {1, 0, 0, 0}};
    CHECK(r2.parity() == 1);
}
