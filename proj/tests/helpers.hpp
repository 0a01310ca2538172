// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graphcx/canonical.hpp"
#include "graphcx/halfedge.hpp"

namespace graphcx::testbed {

// Two vertices joined by three parallel edges.
inline HalfEdgeGraph theta() {
    HalfEdgeGraph g;
    g.operad = Operad::Comm;
    g.num_vertices = 2;
    for (int e = 0; e < 3; ++e) {
        g.vertex_of.push_back(0);
        g.vertex_of.push_back(1);
        g.mate.push_back(2 * e + 1);
        g.mate.push_back(2 * e);
    }
    return g;
}

// One vertex carrying `loops` loops.
inline HalfEdgeGraph loop_rose(int loops, Operad op = Operad::Comm) {
    HalfEdgeGraph g;
    g.operad = op;
    g.num_vertices = 1;
    for (int l = 0; l < loops; ++l) {
        g.vertex_of.push_back(0);
        g.vertex_of.push_back(0);
        g.mate.push_back(2 * l + 1);
        g.mate.push_back(2 * l);
    }
    if (op == Operad::Assoc) {
        std::vector<int> rot(g.num_darts());
        for (int d = 0; d < g.num_darts(); ++d) rot[d] = d;
        g.rotation.push_back(rot);
    }
    return g;
}

// Two vertices, one bridge, one loop at each end.
inline HalfEdgeGraph dumbbell(Operad op = Operad::Comm) {
    HalfEdgeGraph g;
    g.operad = op;
    g.num_vertices = 2;
    // darts 0,1: loop at 0; 2,3: loop at 1; 4,5: bridge.
    g.vertex_of = {0, 0, 1, 1, 0, 1};
    g.mate = {1, 0, 3, 2, 5, 4};
    if (op == Operad::Assoc) g.rotation = {{0, 1, 4}, {2, 3, 5}};
    return g;
}

inline HalfEdgeGraph disjoint(const HalfEdgeGraph& a, const HalfEdgeGraph& b) {
    return disjoint_union(with_default_orientation(a), with_default_orientation(b)).graph;
}

} // namespace graphcx::testbed
