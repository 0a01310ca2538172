// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcx/canonical.hpp"
#include "graphcx/halfedge.hpp"
#include "graphcx/rational.hpp"

namespace graphcx {

// Sparse exact-rational combination of canonical graphs.  Keys are canonical
// encodings, so iteration order (and every serialization) is deterministic.
struct Chain {
    struct Term {
        HalfEdgeGraph graph;
        Rat coeff;
    };
    std::map<std::string, Term> terms;

    bool zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    void add(const CanonicalGraph& cg, const Rat& c) {
        if (cg.zero_flag || is_zero(c)) return;
        auto it = terms.find(cg.encoding);
        if (it == terms.end()) {
            terms.emplace(cg.encoding, Term{cg.graph, c});
        } else {
            it->second.coeff += c;
            if (is_zero(it->second.coeff)) terms.erase(it);
        }
    }

    void add_canonicalized(const Canonicalized& cc, const Rat& scale) {
        if (cc.coeff == 0) return;
        add(cc.canon, scale * cc.coeff);
    }

    Chain& operator+=(const Chain& o) {
        for (const auto& [enc, t] : o.terms) {
            auto it = terms.find(enc);
            if (it == terms.end()) {
                terms.emplace(enc, t);
            } else {
                it->second.coeff += t.coeff;
                if (is_zero(it->second.coeff)) terms.erase(it);
            }
        }
        return *this;
    }

    Chain& operator-=(const Chain& o) {
        for (const auto& [enc, t] : o.terms) {
            auto it = terms.find(enc);
            if (it == terms.end()) {
                terms.emplace(enc, Term{t.graph, -t.coeff});
            } else {
                it->second.coeff -= t.coeff;
                if (is_zero(it->second.coeff)) terms.erase(it);
            }
        }
        return *this;
    }

    Chain& operator*=(const Rat& s) {
        if (is_zero(s)) { terms.clear(); return *this; }
        for (auto& [enc, t] : terms) t.coeff *= s;
        return *this;
    }

    friend Chain operator+(Chain a, const Chain& b) { a += b; return a; }
    friend Chain operator-(Chain a, const Chain& b) { a -= b; return a; }
    friend Chain operator*(Chain a, const Rat& s) { a *= s; return a; }

    bool operator==(const Chain& o) const {
        if (terms.size() != o.terms.size()) return false;
        auto it = o.terms.begin();
        for (auto jt = terms.begin(); jt != terms.end(); ++jt, ++it) {
            if (jt->first != it->first || jt->second.coeff != it->second.coeff) return false;
        }
        return true;
    }
};

// Contraction of one edge, with the merged vertex moved to the front of the
// vertex order and everything else shifted down.  Loops contract to zero.
inline Chain contract_edge(const OrientedGraph& og, int edge_index) {
    const HalfEdgeGraph& g = og.graph;
    const auto edges = g.edges();
    if (edge_index < 0 || edge_index >= static_cast<int>(edges.size()))
        throw std::invalid_argument("contract_edge: no such edge");

    const int h = og.orient.head_dart[edge_index];
    const int t = g.mate[h];
    const int w = g.vertex_of[h];   // head endpoint
    const int u = g.vertex_of[t];   // tail endpoint
    Chain out;
    if (u == w) return out;          // loop

    // Move tail to position 0 and head to position 1, everything else keeps
    // its relative order; the parity of that shuffle is the sign.
    const int V = g.num_vertices;
    std::vector<int> new_pos(V, -1);
    {
        std::vector<std::pair<int, int>> rest;   // (old position, vertex)
        for (int v = 0; v < V; ++v) {
            if (v == u || v == w) continue;
            rest.emplace_back(og.orient.vertex_pos[v], v);
        }
        std::sort(rest.begin(), rest.end());
        std::vector<int> pos_perm(V, -1);   // old position -> new position
        pos_perm[og.orient.vertex_pos[u]] = 0;
        pos_perm[og.orient.vertex_pos[w]] = 1;
        for (size_t i = 0; i < rest.size(); ++i) pos_perm[rest[i].first] = 2 + static_cast<int>(i);
        int sgn = permutation_parity(pos_perm) ? -1 : +1;

        for (int v = 0; v < V; ++v) new_pos[v] = pos_perm[og.orient.vertex_pos[v]];

        // Contracted graph: merged endpoint occupies position 0, others shift
        // down by one; result vertices are identified with their positions.
        OrientedGraph res;
        res.graph.operad = g.operad;
        res.graph.num_vertices = V - 1;
        std::vector<int> vmap(V, -1);
        for (int v = 0; v < V; ++v) {
            if (v == u || v == w) vmap[v] = 0;
            else vmap[v] = new_pos[v] - 1;
        }
        std::vector<int> dmap(g.num_darts(), -1);
        for (int d = 0; d < g.num_darts(); ++d) {
            if (d == h || d == t) continue;
            dmap[d] = res.graph.num_darts();
            res.graph.vertex_of.push_back(vmap[g.vertex_of[d]]);
            res.graph.mate.push_back(-1);
        }
        for (int d = 0; d < g.num_darts(); ++d)
            if (dmap[d] >= 0) res.graph.mate[dmap[d]] = dmap[g.mate[d]];

        if (g.operad == Operad::Assoc) {
            res.graph.rotation.assign(res.graph.num_vertices, {});
            auto rotate_to = [](const std::vector<int>& cyc, int first) {
                std::vector<int> out;
                size_t i = 0;
                while (cyc[i] != first) ++i;
                for (size_t k = 1; k < cyc.size(); ++k) out.push_back(cyc[(i + k) % cyc.size()]);
                return out;   // cycle read from just after `first`, with `first` dropped
            };
            std::vector<int> merged = rotate_to(g.rotation[u], t);
            std::vector<int> tail_part = rotate_to(g.rotation[w], h);
            merged.insert(merged.end(), tail_part.begin(), tail_part.end());
            for (int& d : merged) d = dmap[d];
            res.graph.rotation[0] = std::move(merged);
            for (int v = 0; v < V; ++v) {
                if (v == u || v == w) continue;
                std::vector<int> cyc;
                for (int d : g.rotation[v]) cyc.push_back(dmap[d]);
                res.graph.rotation[vmap[v]] = std::move(cyc);
            }
        }

        res.orient.vertex_pos.resize(res.graph.num_vertices);
        for (int v = 0; v < res.graph.num_vertices; ++v) res.orient.vertex_pos[v] = v;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (static_cast<int>(e) == edge_index) continue;
            res.orient.head_dart.push_back(dmap[og.orient.head_dart[e]]);
        }
        out.add_canonicalized(canonicalize(res), Rat(sgn));
    }
    return out;
}

namespace detail {

template <typename V>
class EncodingCache {
  public:
    bool get(const std::string& key, V& out) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void put(const std::string& key, const V& v) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, v);
    }

  private:
    std::mutex mu_;
    std::map<std::string, V> map_;
};

inline EncodingCache<Chain>& boundary_cache() {
    static EncodingCache<Chain> c;
    return c;
}
inline EncodingCache<Chain>& coboundary_cache() {
    static EncodingCache<Chain> c;
    return c;
}

} // namespace detail

// Sum of single-edge contractions of one canonical class.
inline Chain boundary_of_class(const CanonicalGraph& cg) {
    Chain out;
    if (detail::boundary_cache().get(cg.encoding, out)) return out;
    OrientedGraph og = with_default_orientation(cg.graph);
    const int ne = cg.graph.num_edges();
    for (int e = 0; e < ne; ++e) out += contract_edge(og, e);
    detail::boundary_cache().put(cg.encoding, out);
    return out;
}

inline Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [enc, t] : c.terms)
        out += boundary_of_class(CanonicalGraph{enc, false, t.graph}) * t.coeff;
    return out;
}

namespace detail {

// Vertex expansion at `v`: darts in `part_a` stay, `part_b` moves to a fresh
// vertex joined by a new edge; for Assoc the parts must be the two arcs of a
// cut of the cyclic order, in order.  The new edge is directed so that
// contracting it returns the input class with sign +1.
inline void coboundary_insertions(const CanonicalGraph& cg, int v, const std::vector<int>& part_a,
                                  const std::vector<int>& part_b, Chain& out) {
    const HalfEdgeGraph& g = cg.graph;
    OrientedGraph ex;
    ex.graph.operad = g.operad;
    ex.graph.num_vertices = g.num_vertices + 1;
    const int x = g.num_vertices;
    const int a0 = g.num_darts(), b0 = g.num_darts() + 1;
    ex.graph.vertex_of = g.vertex_of;
    for (int d : part_b) ex.graph.vertex_of[d] = x;
    ex.graph.vertex_of.push_back(v);
    ex.graph.vertex_of.push_back(x);
    ex.graph.mate = g.mate;
    ex.graph.mate.push_back(b0);
    ex.graph.mate.push_back(a0);
    if (g.operad == Operad::Assoc) {
        ex.graph.rotation = g.rotation;
        ex.graph.rotation[v] = part_a;
        ex.graph.rotation[v].push_back(a0);
        ex.graph.rotation.push_back(part_b);
        ex.graph.rotation[x].push_back(b0);
    }
    ex.orient.vertex_pos.resize(ex.graph.num_vertices);
    for (int i = 0; i < ex.graph.num_vertices; ++i) ex.orient.vertex_pos[i] = i;
    // The appended darts form the last edge, so prior edge indices are stable.
    ex.orient.head_dart = default_orientation(g).head_dart;
    ex.orient.head_dart.push_back(b0);

    const int new_edge = ex.graph.num_edges() - 1;
    Chain back = contract_edge(ex, new_edge);
    if (back.size() != 1 || back.terms.begin()->first != cg.encoding)
        throw std::logic_error("coboundary: inserted edge does not contract back");
    if (sgn(back.terms.begin()->second.coeff) < 0)
        ex.orient.head_dart.back() = a0;
    out.add_canonicalized(canonicalize(ex), Rat(1));
}

} // namespace detail

// Sum over vertices of all admissible expansions into two vertices of
// valence >= 3 joined by a new edge; adjoint to the boundary.
inline Chain coboundary_of_class(const CanonicalGraph& cg) {
    Chain out;
    if (detail::coboundary_cache().get(cg.encoding, out)) return out;
    const HalfEdgeGraph& g = cg.graph;
    for (int v = 0; v < g.num_vertices; ++v) {
        if (g.operad == Operad::Comm) {
            const auto darts = g.darts_at(v);
            const int k = static_cast<int>(darts.size());
            if (k < 4) continue;
            if (k > 30) throw std::invalid_argument("coboundary: vertex valence too large");
            // Unordered bipartitions with both sides of size >= 2, counted
            // once by keeping darts[0] on the A side.
            for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<int> a{darts[0]}, b;
                for (int i = 1; i < k; ++i)
                    ((mask >> (i - 1)) & 1u ? b : a).push_back(darts[i]);
                if (a.size() < 2 || b.size() < 2) continue;
                detail::coboundary_insertions(cg, v, a, b, out);
            }
        } else {
            const auto& cyc = g.rotation[v];
            const int k = static_cast<int>(cyc.size());
            if (k < 4) continue;
            // Cut the cyclic order at two gaps; each unordered gap pair once.
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    if (j - i < 2 || k - (j - i) < 2) continue;
                    std::vector<int> a, b;
                    for (int p = i; p < j; ++p) a.push_back(cyc[p]);
                    for (int p = j; p < i + k; ++p) b.push_back(cyc[p % k]);
                    detail::coboundary_insertions(cg, v, a, b, out);
                }
        }
    }
    detail::coboundary_cache().put(cg.encoding, out);
    return out;
}

inline Chain coboundary(const Chain& c) {
    Chain out;
    for (const auto& [enc, t] : c.terms)
        out += coboundary_of_class(CanonicalGraph{enc, false, t.graph}) * t.coeff;
    return out;
}

// Disjoint-union product, bilinear; orientation is a's order followed by b's.
inline Chain disjoint_product(const Chain& a, const Chain& b) {
    Chain out;
    for (const auto& [ea, ta] : a.terms)
        for (const auto& [eb, tb] : b.terms) {
            if (ta.graph.operad != tb.graph.operad)
                throw std::invalid_argument("disjoint_product: operad mismatch");
            OrientedGraph u = disjoint_union(with_default_orientation(ta.graph),
                                             with_default_orientation(tb.graph));
            out.add_canonicalized(canonicalize(u), ta.coeff * tb.coeff);
        }
    return out;
}

// <G,H> = |Aut(G)| delta_{GH}, extended bilinearly.
inline Rat inner_product(const Chain& a, const Chain& b) {
    Rat out(0);
    for (const auto& [enc, ta] : a.terms) {
        auto it = b.terms.find(enc);
        if (it == b.terms.end()) continue;
        Rat aut(automorphism_order(CanonicalGraph{enc, false, ta.graph}));
        out += ta.coeff * it->second.coeff * aut;
    }
    return out;
}

enum class Subcomplex { Connected, Irreducible };

inline Chain subcomplex_filter(const Chain& c, Subcomplex which) {
    Chain out;
    for (const auto& [enc, t] : c.terms) {
        GraphStats s = graph_stats(t.graph);
        if (!s.connected) continue;
        if (which == Subcomplex::Irreducible && s.has_separating_edge) continue;
        out.terms.emplace(enc, t);
    }
    return out;
}

} // namespace graphcx
