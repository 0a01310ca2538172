// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphcx/chain.hpp"
#include "graphcx/enumerate.hpp"
#include "helpers.hpp"

using namespace graphcx;
using namespace graphcx::testbed;

namespace {

Chain unit_chain(const CanonicalGraph& cg) {
    Chain c;
    c.add(cg, Rat(1));
    return c;
}

const CanonicalGraph& theta_class() {
    static CanonicalGraph cg = enumerate_basis(Operad::Comm, 2, 2).elements.front();
    return cg;
}

} // namespace

TEST_CASE("contracting any theta edge lands on the killed double loop") {
    OrientedGraph og = with_default_orientation(theta());
    for (int e = 0; e < 3; ++e) CHECK(contract_edge(og, e).zero());
}

TEST_CASE("loops contract to zero") {
    OrientedGraph og = with_default_orientation(dumbbell(Operad::Assoc));
    CHECK(contract_edge(og, 0).zero());   // loop edge
    CHECK_THROWS_AS(contract_edge(og, 99), std::invalid_argument);
}

TEST_CASE("contracting the bridge of an Assoc dumbbell splices the cyclic orders") {
    OrientedGraph og = with_default_orientation(dumbbell(Operad::Assoc));
    Chain c = contract_edge(og, 2);
    REQUIRE(c.size() == 1);
    const auto& [enc, term] = *c.terms.begin();
    GraphStats s = graph_stats(term.graph);
    CHECK(term.graph.num_vertices == 1);
    CHECK(term.graph.num_edges() == 2);
    CHECK(s.b1 == 2);
    // The splice interleaves the two loops around the merged vertex.
    CHECK(enc == canonicalize(with_default_orientation(loop_rose(2, Operad::Assoc))).canon.encoding);
}

TEST_CASE("boundary of theta and of the dumbbell vanish termwise") {
    CHECK(boundary_of_class(theta_class()).zero());
    OrientedGraph db = with_default_orientation(dumbbell());
    Chain sum;
    for (int e = 0; e < db.graph.num_edges(); ++e) sum += contract_edge(db, e);
    CHECK(sum.zero());
}

TEST_CASE("boundary squares to zero on small slices") {
    for (Operad op : {Operad::Comm, Operad::Assoc})
        for (int n = 2; n <= 3; ++n)
            for (int V = 1; V <= std::max(1, 2 * n - 2); ++V)
                for (const auto& cg : enumerate_basis(op, n, V).elements)
                    CHECK(boundary(boundary_of_class(cg)).zero());
}

TEST_CASE("boundary lowers V by one and preserves loop number and connectivity") {
    for (int V = 3; V <= 4; ++V)
        for (const auto& cg : enumerate_basis(Operad::Assoc, 3, V).elements) {
            GraphStats before = graph_stats(cg.graph);
            for (const auto& [enc, term] : boundary_of_class(cg).terms) {
                GraphStats after = graph_stats(term.graph);
                CHECK(term.graph.num_vertices == V - 1);
                CHECK(after.b1 == before.b1);
                CHECK(after.connected);
            }
        }
}

TEST_CASE("coboundary of a trivalent class is the empty sum") {
    CHECK(coboundary_of_class(theta_class()).zero());
}

TEST_CASE("coboundary terms contract back to the input class") {
    // W3 has a valence-4 vertex, so its coboundary is nonzero.
    CanonicalGraph w3{"C3:1-2,1-2,1-3,1-3,2-3", false, decode_encoding("C3:1-2,1-2,1-3,1-3,2-3")};
    Chain d_up = coboundary_of_class(w3);
    CHECK(!d_up.zero());
    for (const auto& [enc, term] : d_up.terms) {
        CHECK(term.graph.num_vertices == 4);
        // Some contraction of the expanded graph returns w3.
        Chain back;
        OrientedGraph og = with_default_orientation(term.graph);
        for (int e = 0; e < term.graph.num_edges(); ++e) back += contract_edge(og, e);
        CHECK(back.terms.count(w3.encoding) == 1);
    }
}

TEST_CASE("adjointness of boundary and coboundary at loop number two") {
    for (Operad op : {Operad::Comm, Operad::Assoc}) {
        BasisSlice lo = enumerate_basis(op, 2, 1);
        BasisSlice hi = enumerate_basis(op, 2, 2);
        for (const auto& g : lo.elements)
            for (const auto& h : hi.elements) {
                Rat lhs = inner_product(coboundary_of_class(g), unit_chain(h));
                Rat rhs = inner_product(unit_chain(g), boundary_of_class(h));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("product is graded commutative and additive in the loop number") {
    std::vector<CanonicalGraph> pool;
    for (int n = 2; n <= 3; ++n)
        for (int V = 1; V <= std::max(1, 2 * n - 2); ++V)
            for (const auto& cg : enumerate_basis(Operad::Comm, n, V).elements) pool.push_back(cg);
    for (const auto& a : pool)
        for (const auto& b : pool) {
            Chain ab = disjoint_product(unit_chain(a), unit_chain(b));
            Chain ba = disjoint_product(unit_chain(b), unit_chain(a));
            const int sign = (a.vcount() % 2 == 1 && b.vcount() % 2 == 1) ? -1 : +1;
            CHECK(ab == ba * Rat(sign));
            for (const auto& [enc, term] : ab.terms) {
                GraphStats s = graph_stats(term.graph);
                CHECK(s.b1 == graph_stats(a.graph).b1 + graph_stats(b.graph).b1);
                CHECK(s.component_count == 2);
            }
        }
}

TEST_CASE("product with the zero chain is zero, and it is associative") {
    Chain zero;
    Chain th = unit_chain(theta_class());
    CHECK(disjoint_product(th, zero).zero());
    Chain w3 = unit_chain(CanonicalGraph{"C3:1-2,1-2,1-3,1-3,2-3", false,
                                         decode_encoding("C3:1-2,1-2,1-3,1-3,2-3")});
    Chain left = disjoint_product(disjoint_product(th, w3), th);
    Chain right = disjoint_product(th, disjoint_product(w3, th));
    CHECK(left == right);
}

TEST_CASE("inner products carry the automorphism order") {
    Chain th = unit_chain(theta_class());
    CHECK(inner_product(th, th) == Rat(12));
    Chain w3 = unit_chain(CanonicalGraph{"C3:1-2,1-2,1-3,1-3,2-3", false,
                                         decode_encoding("C3:1-2,1-2,1-3,1-3,2-3")});
    CHECK(inner_product(th, w3) == Rat(0));
    CHECK(inner_product(th * Rat(2), th * Rat(3)) == Rat(72));
}

TEST_CASE("subcomplex filters") {
    // The Assoc dumbbell class survives canonicalization and has a bridge.
    Canonicalized db = canonicalize(with_default_orientation(dumbbell(Operad::Assoc)));
    REQUIRE(db.coeff != 0);
    Chain mixed = unit_chain(db.canon) + unit_chain(theta_class());
    Chain union_term;
    union_term.add_canonicalized(
        canonicalize(with_default_orientation(disjoint(theta(), theta()))), Rat(1));
    mixed += union_term;

    Chain connected = subcomplex_filter(mixed, Subcomplex::Connected);
    CHECK(connected.size() == 2);
    Chain irred = subcomplex_filter(mixed, Subcomplex::Irreducible);
    CHECK(irred.size() == 1);
    CHECK(irred.terms.begin()->first == theta_class().encoding);
}
