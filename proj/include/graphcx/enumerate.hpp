// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graphcx/canonical.hpp"
#include "graphcx/halfedge.hpp"

namespace graphcx {

// Complete duplicate-free list of canonical classes for one (operad, loop
// number, vertex count), sorted by encoding.
struct BasisSlice {
    Operad operad = Operad::Comm;
    int loop_number = 0;
    int vertex_count = 0;
    std::vector<CanonicalGraph> elements;

    size_t size() const { return elements.size(); }
};

namespace detail {

// Non-increasing partitions of `total` into `parts` parts, each >= 3.
inline void degree_partitions(int total, int parts, int max_part, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int d = std::min(total - 3 * (parts - 1), max_part); d >= 3; --d) {
        cur.push_back(d);
        degree_partitions(total - d, parts - 1, d, cur, out);
        cur.pop_back();
    }
}

// Loop counts + pairwise multiplicities realizing a degree sequence.
struct MultigraphShape {
    int V = 0;
    std::vector<int> loops;
    std::vector<int> mult;   // upper-triangular by (u,v), u < v, stored V*V

    int& m(int u, int v) { return mult[u * V + v]; }
    int m(int u, int v) const { return mult[u * V + v]; }
};

inline void enumerate_multigraphs(const std::vector<int>& deg, bool allow_loops,
                                  std::vector<MultigraphShape>& out) {
    const int V = static_cast<int>(deg.size());
    MultigraphShape shape;
    shape.V = V;
    shape.loops.assign(V, 0);
    shape.mult.assign(V * V, 0);
    std::vector<int> rem = deg;

    auto fill_vertex = [&](auto&& self, int u) -> void {
        if (u == V) {
            out.push_back(shape);
            return;
        }
        auto distribute = [&](auto&& dself, int v, int left) -> void {
            if (v == V) {
                if (left == 0) self(self, u + 1);
                return;
            }
            int avail = 0;
            for (int w = v; w < V; ++w) avail += rem[w];
            if (avail < left) return;
            for (int m = std::min(left, rem[v]); m >= 0; --m) {
                shape.m(u, v) = m;
                rem[v] -= m;
                dself(dself, v + 1, left - m);
                rem[v] += m;
                shape.m(u, v) = 0;
            }
        };
        const int max_loops = allow_loops ? rem[u] / 2 : 0;
        for (int l = 0; l <= max_loops; ++l) {
            shape.loops[u] = l;
            distribute(distribute, u + 1, rem[u] - 2 * l);
            shape.loops[u] = 0;
        }
    };
    fill_vertex(fill_vertex, 0);
}

inline bool shape_connected(const MultigraphShape& s) {
    std::vector<int> parent(s.V);
    for (int v = 0; v < s.V; ++v) parent[v] = v;
    for (int u = 0; u < s.V; ++u)
        for (int v = u + 1; v < s.V; ++v)
            if (s.m(u, v) > 0) {
                int ru = uf_find(parent, u), rv = uf_find(parent, v);
                if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
            }
    int roots = 0;
    for (int v = 0; v < s.V; ++v)
        if (uf_find(parent, v) == v) ++roots;
    return roots == 1;
}

inline HalfEdgeGraph shape_to_graph(const MultigraphShape& s, Operad op) {
    HalfEdgeGraph g;
    g.operad = op;
    g.num_vertices = s.V;
    auto add_edge = [&](int u, int v) {
        int d = g.num_darts();
        g.vertex_of.push_back(u);
        g.vertex_of.push_back(v);
        g.mate.push_back(d + 1);
        g.mate.push_back(d);
    };
    for (int u = 0; u < s.V; ++u)
        for (int l = 0; l < s.loops[u]; ++l) add_edge(u, u);
    for (int u = 0; u < s.V; ++u)
        for (int v = u + 1; v < s.V; ++v)
            for (int k = 0; k < s.m(u, v); ++k) add_edge(u, v);
    return g;
}

// All ribbon structures on a fixed dart realization: per vertex, cyclic
// orders with the minimal dart pinned first.
template <typename Fn>
inline void for_each_rotation_system(const HalfEdgeGraph& base, Fn&& fn) {
    std::vector<std::vector<int>> at(base.num_vertices);
    for (int d = 0; d < base.num_darts(); ++d) at[base.vertex_of[d]].push_back(d);
    std::vector<std::vector<int>> tails(base.num_vertices);
    for (int v = 0; v < base.num_vertices; ++v)
        tails[v] = std::vector<int>(at[v].begin() + 1, at[v].end());
    for (auto& t : tails) std::sort(t.begin(), t.end());

    HalfEdgeGraph g = base;
    g.rotation.assign(base.num_vertices, {});
    auto rec = [&](auto&& self, int v) -> void {
        if (v == base.num_vertices) {
            fn(g);
            return;
        }
        std::vector<int> tail = tails[v];
        do {
            g.rotation[v].clear();
            g.rotation[v].push_back(at[v][0]);
            for (int d : tail) g.rotation[v].push_back(d);
            self(self, v + 1);
        } while (std::next_permutation(tail.begin(), tail.end()));
    };
    rec(rec, 0);
}

struct SliceKey {
    int op, n, V;
    bool include_zero;
    bool operator<(const SliceKey& o) const {
        return std::tie(op, n, V, include_zero) < std::tie(o.op, o.n, o.V, o.include_zero);
    }
};

inline std::map<SliceKey, BasisSlice>& slice_cache() {
    static std::map<SliceKey, BasisSlice> c;
    return c;
}
inline std::mutex& slice_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

// Exhaustive generation of connected classes with b1 = n and V vertices.
// With include_zero the orientation-killed classes are kept too (used by the
// certification suites); enumerate_basis drops them.
inline BasisSlice enumerate_connected(Operad op, int n, int V, bool include_zero) {
    if (n < 1 || V < 1) throw std::invalid_argument("enumerate_connected: need n >= 1 and V >= 1");
    detail::SliceKey key{static_cast<int>(op), n, V, include_zero};
    {
        std::lock_guard<std::mutex> lock(detail::slice_mutex());
        auto it = detail::slice_cache().find(key);
        if (it != detail::slice_cache().end()) return it->second;
    }

    BasisSlice slice;
    slice.operad = op;
    slice.loop_number = n;
    slice.vertex_count = V;

    const int E = V + n - 1;
    std::vector<std::vector<int>> partitions;
    {
        std::vector<int> cur;
        detail::degree_partitions(2 * E, V, 2 * E, cur, partitions);
    }
    // Comm classes with a loop are killed by the loop-reversing automorphism,
    // so basis generation can skip loops outright.
    const bool allow_loops = include_zero || op == Operad::Assoc;

    std::set<std::string> seen;
    std::map<std::string, CanonicalGraph> found;
    for (const auto& deg : partitions) {
        std::vector<detail::MultigraphShape> shapes;
        detail::enumerate_multigraphs(deg, allow_loops, shapes);
        for (const auto& shape : shapes) {
            if (!detail::shape_connected(shape)) continue;
            HalfEdgeGraph base = detail::shape_to_graph(shape, op);
            auto consider = [&](const HalfEdgeGraph& g) {
                Canonicalized cc = detail::canonicalize_connected(with_default_orientation(g));
                if (!include_zero && cc.canon.zero_flag) return;
                if (seen.insert(cc.canon.encoding).second)
                    found.emplace(cc.canon.encoding, cc.canon);
            };
            if (op == Operad::Comm) consider(base);
            else detail::for_each_rotation_system(base, consider);
        }
    }
    for (auto& [enc, cg] : found) slice.elements.push_back(cg);

    std::lock_guard<std::mutex> lock(detail::slice_mutex());
    detail::slice_cache().emplace(key, slice);
    return slice;
}

// Basis of P^(n)G^O in vertex degree V: connected, valence >= 3, loop number
// n, orientation-killed classes excluded.  V outside [1, 2n-2] is empty by
// the valence bound, so those queries return an empty slice.
inline BasisSlice enumerate_basis(Operad op, int n, int V) {
    if (n < 1 || V < 1) throw std::invalid_argument("enumerate_basis: need n >= 1 and V >= 1");
    if (V > 2 * n - 2) {
        BasisSlice empty;
        empty.operad = op;
        empty.loop_number = n;
        empty.vertex_count = V;
        return empty;
    }
    return enumerate_connected(op, n, V, false);
}

// All nonzero basis classes with b1 <= max_loops, sorted by encoding.
inline std::vector<CanonicalGraph> basis_pool(Operad op, int max_loops) {
    std::vector<CanonicalGraph> pool;
    for (int n = 1; n <= max_loops; ++n)
        for (int V = 1; V <= std::max(1, 2 * n - 2); ++V)
            for (const auto& cg : enumerate_basis(op, n, V).elements) pool.push_back(cg);
    std::sort(pool.begin(), pool.end(),
              [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.encoding < b.encoding; });
    return pool;
}

// ----------------------------------------------------------------------
// Certification oracle: same contract as canonicalize, computed by plain
// exhaustive search over every labeling and an independent sign path.
// Connected inputs only, V <= 5 and E <= 7.
// ----------------------------------------------------------------------

namespace detail {

inline std::vector<int> oracle_full_code_comm(const HalfEdgeGraph& g, const std::vector<int>& vpos) {
    CommAdjacency a = comm_adjacency(g);
    std::vector<int> inv(a.V);
    for (int v = 0; v < a.V; ++v) inv[vpos[v]] = v;
    std::vector<int> code;
    for (int p = 0; p < a.V; ++p) {
        code.push_back(-a.deg[inv[p]]);
        code.push_back(-a.loops[inv[p]]);
        for (int q = 0; q < p; ++q) code.push_back(-a.m(inv[q], inv[p]));
    }
    return code;
}

inline std::vector<int> oracle_full_code_assoc(const HalfEdgeGraph& g, const std::vector<int>& vpos,
                                               const std::vector<int>& starts,
                                               std::vector<int>& dart_num_out) {
    const int nd = g.num_darts();
    const auto next = g.rotation_next();
    std::vector<int> inv(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) inv[vpos[v]] = v;
    std::vector<int> num(nd, -1);
    int base = 0;
    for (int p = 0; p < g.num_vertices; ++p) {
        int v = inv[p];
        int d = starts[v];
        const int deg = static_cast<int>(g.rotation[v].size());
        for (int i = 0; i < deg; ++i, d = next[d]) num[d] = base + i;
        base += deg;
    }
    std::vector<int> code;
    base = 0;
    for (int p = 0; p < g.num_vertices; ++p) {
        int v = inv[p];
        const int deg = static_cast<int>(g.rotation[v].size());
        code.push_back(-deg);
        int d = starts[v];
        const int block_end = base + deg;
        for (int i = 0; i < deg; ++i, d = next[d]) {
            int mn = num[g.mate[d]];
            // Mates at later vertices read as "not yet numbered".
            code.push_back(mn < block_end ? mn : nd);
        }
        base = block_end;
    }
    dart_num_out = std::move(num);
    return code;
}

// Dart-level automorphism sign; valid for either operad.
inline int oracle_dart_sign(const HalfEdgeGraph& g, const std::vector<int>& dmap) {
    std::vector<int> vmap(g.num_vertices, -1);
    for (int d = 0; d < g.num_darts(); ++d) vmap[g.vertex_of[d]] = g.vertex_of[dmap[d]];
    int parity = permutation_parity(vmap);
    int reversed = 0;
    for (const auto& [lo, hi] : g.edges())
        if (dmap[hi] < dmap[lo]) ++reversed;
    return ((parity + reversed) & 1) ? -1 : +1;
}

} // namespace detail

inline Canonicalized oracle_canonicalize(const OrientedGraph& og) {
    const HalfEdgeGraph& g = og.graph;
    if (g.num_vertices > 5 || g.num_edges() > 7)
        throw std::invalid_argument("oracle_canonicalize: exceeds V <= 5, E <= 7 bound");
    if (!graph_stats(g).connected)
        throw std::invalid_argument("oracle_canonicalize: connected graphs only");

    const int V = g.num_vertices;
    std::vector<int> order(V);
    for (int v = 0; v < V; ++v) order[v] = v;

    std::vector<int> best_code;
    HalfEdgeGraph best_graph;
    if (g.operad == Operad::Comm) {
        detail::CommAdjacency adj = detail::comm_adjacency(g);
        do {
            std::vector<int> vpos(V);
            for (int p = 0; p < V; ++p) vpos[order[p]] = p;
            auto code = detail::oracle_full_code_comm(g, vpos);
            if (best_code.empty() || code < best_code) {
                best_code = code;
                best_graph = detail::comm_canonical_graph(adj, vpos);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        do {
            std::vector<int> vpos(V);
            for (int p = 0; p < V; ++p) vpos[order[p]] = p;
            std::vector<int> start_idx(V, 0);
            for (;;) {
                std::vector<int> starts(V);
                for (int v = 0; v < V; ++v) starts[v] = g.rotation[v][start_idx[v]];
                std::vector<int> num;
                auto code = detail::oracle_full_code_assoc(g, vpos, starts, num);
                if (best_code.empty() || code < best_code) {
                    best_code = code;
                    best_graph = detail::assoc_canonical_graph(g, vpos, num);
                }
                int carry = 0;
                while (carry < V) {
                    if (++start_idx[carry] < static_cast<int>(g.rotation[carry].size())) break;
                    start_idx[carry] = 0;
                    ++carry;
                }
                if (carry == V) break;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }

    Canonicalized out;
    out.canon.graph = best_graph;
    out.canon.encoding = detail::encode_connected(best_graph);

    // Zero detection and sign via exhaustive dart-level isomorphism search,
    // independent of the labeling-based path.
    bool zero = false;
    for (const auto& aut : all_isomorphisms(best_graph, best_graph))
        if (detail::oracle_dart_sign(best_graph, aut) < 0) { zero = true; break; }
    out.canon.zero_flag = zero;
    if (zero) { out.coeff = 0; return out; }

    auto isos = all_isomorphisms(g, best_graph, 1);
    if (isos.empty()) throw std::logic_error("oracle_canonicalize: no isomorphism to canonical form");
    const auto& dmap = isos.front();
    std::vector<int> vmap(V, -1);
    for (int d = 0; d < g.num_darts(); ++d) vmap[g.vertex_of[d]] = best_graph.vertex_of[dmap[d]];
    std::vector<int> rel(V);
    for (int v = 0; v < V; ++v) rel[vmap[v]] = og.orient.vertex_pos[v];
    int parity = permutation_parity(rel);
    int reversed = 0;
    const auto canon_heads = default_orientation(best_graph).head_dart;
    const auto canon_edge_of = best_graph.edge_of_dart();
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        int h = og.orient.head_dart[e];
        if (dmap[h] != canon_heads[canon_edge_of[dmap[h]]]) ++reversed;
    }
    out.coeff = ((parity + reversed) & 1) ? -1 : +1;
    return out;
}

} // namespace graphcx
