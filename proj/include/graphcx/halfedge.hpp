// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphcx {

enum class Operad { Comm, Assoc };

inline std::string operad_name(Operad op) { return op == Operad::Comm ? "comm" : "assoc"; }

inline Operad operad_from_name(const std::string& s) {
    if (s == "comm") return Operad::Comm;
    if (s == "assoc") return Operad::Assoc;
    throw std::invalid_argument("unknown operad '" + s + "'");
}

// A decorated multigraph in half-edge (dart) form.  Vertices are 0..nv-1,
// darts 0..2E-1.  `mate` is the fixed-point-free pairing whose orbits are the
// edges.  For Assoc each vertex carries a cyclic order of its darts (a ribbon
// structure); for Comm `rotation` stays empty.
struct HalfEdgeGraph {
    Operad operad = Operad::Comm;
    int num_vertices = 0;
    std::vector<int> vertex_of;                // dart -> vertex
    std::vector<int> mate;                     // dart involution
    std::vector<std::vector<int>> rotation;    // Assoc only: per-vertex cyclic dart list

    int num_darts() const { return static_cast<int>(vertex_of.size()); }
    int num_edges() const { return num_darts() / 2; }

    int degree(int v) const {
        int d = 0;
        for (int h = 0; h < num_darts(); ++h)
            if (vertex_of[h] == v) ++d;
        return d;
    }

    std::vector<int> darts_at(int v) const {
        std::vector<int> out;
        for (int h = 0; h < num_darts(); ++h)
            if (vertex_of[h] == v) out.push_back(h);
        return out;
    }

    // Edges listed as (d, mate[d]) with d < mate[d], ascending in d.  Edge
    // indices used by Orientation refer to this list.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int d = 0; d < num_darts(); ++d)
            if (d < mate[d]) out.emplace_back(d, mate[d]);
        return out;
    }

    std::vector<int> edge_of_dart() const {
        std::vector<int> idx(num_darts(), -1);
        int e = 0;
        for (int d = 0; d < num_darts(); ++d)
            if (d < mate[d]) { idx[d] = e; idx[mate[d]] = e; ++e; }
        return idx;
    }

    bool is_loop_edge(int dart) const { return vertex_of[dart] == vertex_of[mate[dart]]; }

    // Assoc rotation successor; identity-shaped lookup table for Comm callers
    // is never needed, so this asserts the decoration exists.
    std::vector<int> rotation_next() const {
        std::vector<int> nxt(num_darts(), -1);
        for (const auto& cyc : rotation) {
            const int k = static_cast<int>(cyc.size());
            for (int i = 0; i < k; ++i) nxt[cyc[i]] = cyc[(i + 1) % k];
        }
        return nxt;
    }
};

// Vertex ordering plus a direction per edge.  `vertex_pos` maps vertex ->
// position; `head_dart[e]` designates which dart of edge e sits at the head.
struct Orientation {
    std::vector<int> vertex_pos;
    std::vector<int> head_dart;
};

struct OrientedGraph {
    HalfEdgeGraph graph;
    Orientation orient;
};

inline bool is_permutation(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// Parity of a permutation given as value array: 0 even, 1 odd.
inline int permutation_parity(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) { seen[j] = 1; ++len; }
        transpositions += len - 1;
    }
    return transpositions & 1;
}

// One element of the S_V x Z_2^E action on orientations.
struct Reindex {
    std::vector<int> vertex_perm;   // acts on positions: new_pos = vertex_perm[old_pos]
    std::vector<char> flip_edge;    // per edge index

    int parity() const {
        int flips = 0;
        for (char f : flip_edge) flips += f ? 1 : 0;
        return (permutation_parity(vertex_perm) + flips) & 1;
    }
};

inline Orientation default_orientation(const HalfEdgeGraph& g) {
    Orientation o;
    o.vertex_pos.resize(g.num_vertices);
    std::iota(o.vertex_pos.begin(), o.vertex_pos.end(), 0);
    for (const auto& [a, b] : g.edges()) o.head_dart.push_back(std::max(a, b));
    return o;
}

inline OrientedGraph with_default_orientation(const HalfEdgeGraph& g) {
    return OrientedGraph{g, default_orientation(g)};
}

// Diagnostic validation: returns every violated invariant, empty means ok.
inline std::vector<std::string> validate(const HalfEdgeGraph& g) {
    std::vector<std::string> bad;
    const int nd = g.num_darts();
    if (g.num_vertices <= 0) bad.push_back("graph has no vertices");
    if (nd % 2 != 0) bad.push_back("odd number of half-edges");
    if (static_cast<int>(g.mate.size()) != nd) bad.push_back("pairing size mismatch");

    for (int h = 0; h < nd; ++h) {
        if (g.vertex_of[h] < 0 || g.vertex_of[h] >= g.num_vertices) {
            bad.push_back("incidence out of range at half-edge " + std::to_string(h + 1));
            return bad;
        }
    }
    if (static_cast<int>(g.mate.size()) == nd) {
        for (int h = 0; h < nd; ++h) {
            if (g.mate[h] < 0 || g.mate[h] >= nd || g.mate[g.mate[h]] != h)
                bad.push_back("pairing is not an involution at half-edge " + std::to_string(h + 1));
            else if (g.mate[h] == h)
                bad.push_back("pairing fixes half-edge " + std::to_string(h + 1));
        }
    }
    for (int v = 0; v < g.num_vertices; ++v)
        if (g.degree(v) < 3)
            bad.push_back("valence < 3 at vertex " + std::to_string(v + 1));

    if (g.operad == Operad::Assoc) {
        if (static_cast<int>(g.rotation.size()) != g.num_vertices) {
            bad.push_back("decoration mismatch: cyclic order count != vertex count");
        } else {
            for (int v = 0; v < g.num_vertices; ++v) {
                auto expect = g.darts_at(v);
                auto got = g.rotation[v];
                std::sort(expect.begin(), expect.end());
                std::sort(got.begin(), got.end());
                if (expect != got)
                    bad.push_back("decoration mismatch: cyclic order at vertex " +
                                  std::to_string(v + 1) + " is not its incident half-edges");
            }
        }
    } else if (!g.rotation.empty()) {
        bad.push_back("decoration mismatch: Comm graph carries cyclic orders");
    }
    return bad;
}

inline std::vector<std::string> validate(const OrientedGraph& og) {
    auto bad = validate(og.graph);
    if (static_cast<int>(og.orient.vertex_pos.size()) != og.graph.num_vertices ||
        !is_permutation(og.orient.vertex_pos))
        bad.push_back("vertex order is not a permutation");
    const auto edges = og.graph.edges();
    if (og.orient.head_dart.size() != edges.size()) {
        bad.push_back("edge direction count mismatch");
    } else {
        for (size_t e = 0; e < edges.size(); ++e)
            if (og.orient.head_dart[e] != edges[e].first && og.orient.head_dart[e] != edges[e].second)
                bad.push_back("head half-edge of edge " + std::to_string(e + 1) + " not on that edge");
    }
    return bad;
}

// The (anti-)action of S_V x Z_2^E on an oriented graph.  Returns the
// relabelled graph together with +1 for even elements, -1 for odd ones.
inline std::pair<OrientedGraph, int> apply_reindex(const OrientedGraph& og, const Reindex& r) {
    if (static_cast<int>(r.vertex_perm.size()) != og.graph.num_vertices ||
        r.flip_edge.size() != og.orient.head_dart.size())
        throw std::invalid_argument("apply_reindex: size mismatch");
    if (!is_permutation(r.vertex_perm))
        throw std::invalid_argument("apply_reindex: vertex_perm is not a permutation");

    OrientedGraph out = og;
    for (int v = 0; v < og.graph.num_vertices; ++v)
        out.orient.vertex_pos[v] = r.vertex_perm[og.orient.vertex_pos[v]];
    for (size_t e = 0; e < r.flip_edge.size(); ++e)
        if (r.flip_edge[e]) out.orient.head_dart[e] = og.graph.mate[out.orient.head_dart[e]];
    return {std::move(out), r.parity() ? -1 : +1};
}

struct GraphStats {
    int b1 = 0;
    bool connected = false;
    bool has_separating_edge = false;
    int component_count = 0;
};

namespace detail {

inline int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
}

inline std::vector<int> component_of_vertices(const HalfEdgeGraph& g) {
    std::vector<int> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [a, b] : g.edges()) {
        int ra = uf_find(parent, g.vertex_of[a]);
        int rb = uf_find(parent, g.vertex_of[b]);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    // Normalize: components numbered by first vertex encountered.
    std::vector<int> comp(g.num_vertices, -1);
    int next = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
        int r = uf_find(parent, v);
        if (comp[r] < 0) comp[r] = next++;
        comp[v] = comp[r];
    }
    return comp;
}

// Components counted with one edge removed; used for bridge detection.
inline int component_count_without_edge(const HalfEdgeGraph& g, int skip_edge) {
    std::vector<int> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        if (static_cast<int>(e) == skip_edge) continue;
        int ra = uf_find(parent, g.vertex_of[edges[e].first]);
        int rb = uf_find(parent, g.vertex_of[edges[e].second]);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    int count = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (uf_find(parent, v) == v) ++count;
    return count;
}

} // namespace detail

inline GraphStats graph_stats(const HalfEdgeGraph& g) {
    GraphStats s;
    auto comp = detail::component_of_vertices(g);
    s.component_count = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    s.connected = (s.component_count == 1);
    s.b1 = g.num_edges() - g.num_vertices + s.component_count;
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        if (g.vertex_of[edges[e].first] == g.vertex_of[edges[e].second]) continue; // loops never separate
        if (detail::component_count_without_edge(g, static_cast<int>(e)) > s.component_count) {
            s.has_separating_edge = true;
            break;
        }
    }
    return s;
}

} // namespace graphcx
