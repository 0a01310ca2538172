// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcx/halfedge.hpp"
#include "graphcx/rational.hpp"

namespace graphcx {

// Deterministic representative of an isomorphism class.  The encoding is a
// self-describing byte string (decode_encoding reconstructs the graph), and
// zero_flag marks classes killed by an orientation-reversing automorphism.
struct CanonicalGraph {
    std::string encoding;
    bool zero_flag = false;
    HalfEdgeGraph graph;

    int vcount() const { return graph.num_vertices; }
    bool odd() const { return graph.num_vertices % 2 != 0; }
};

struct Canonicalized {
    CanonicalGraph canon;
    int coeff = 0;   // -1, 0, +1: input = coeff * canonical representative
};

// Connected factors of a graph, sorted by encoding, with the sign of the
// block-reordering relative to the input orientation (0 when killed).
struct ComponentSplit {
    std::vector<CanonicalGraph> factors;
    int sign = 0;
};

namespace detail {

// ----------------------------------------------------------------------
// Connected canonical labeling.
//
// A labeling assigns vertices to positions 0..V-1 (plus, for Assoc, a start
// dart per vertex).  Each labeling yields an integer code; the canonical
// form is the labeling with lexicographically minimal code.  Codes are
// emitted row by row so a branch-and-bound search can prune against the
// incumbent minimum.  Entries are negated counts/backrefs chosen so that the
// minimum clusters adjacency early, which is what makes the pruning bite.
// ----------------------------------------------------------------------

struct CommAdjacency {
    int V = 0;
    std::vector<int> mult;    // V*V, non-loop edge multiplicities
    std::vector<int> loops;   // per vertex
    std::vector<int> deg;     // total valence (loops count twice)

    int m(int u, int v) const { return mult[u * V + v]; }
};

inline CommAdjacency comm_adjacency(const HalfEdgeGraph& g) {
    CommAdjacency a;
    a.V = g.num_vertices;
    a.mult.assign(a.V * a.V, 0);
    a.loops.assign(a.V, 0);
    a.deg.assign(a.V, 0);
    for (const auto& [d, dm] : g.edges()) {
        int u = g.vertex_of[d], v = g.vertex_of[dm];
        if (u == v) {
            a.loops[u]++;
        } else {
            a.mult[u * a.V + v]++;
            a.mult[v * a.V + u]++;
        }
    }
    for (int h = 0; h < g.num_darts(); ++h) a.deg[g.vertex_of[h]]++;
    return a;
}

struct ConnCanon {
    std::vector<int> code;
    std::vector<std::vector<int>> vertex_labelings;   // all minimal: vertex -> position
    std::vector<std::vector<int>> dart_numberings;    // Assoc only: dart -> canonical dart
};

class CommSearcher {
  public:
    explicit CommSearcher(const CommAdjacency& adj) : a_(adj) {}

    ConnCanon run() {
        pos_of_.assign(a_.V, -1);
        order_.clear();
        cur_.clear();
        best_.clear();
        out_ = ConnCanon{};
        descend(0, true);
        out_.code = best_;
        return std::move(out_);
    }

  private:
    // tight == true: the current prefix equals the incumbent's prefix, so
    // candidate rows are comparable against it.  Completions do a full
    // compare; when the incumbent is replaced the new best runs through the
    // current path, so the caller's prefix is tight again.  Returns whether
    // the incumbent changed inside this subtree.
    bool descend(int depth, bool tight) {
        if (depth == a_.V) {
            if (!best_.empty() && cur_ > best_) return false;
            const bool replaced = best_.empty() || cur_ < best_;
            if (replaced) {
                best_ = cur_;
                out_.vertex_labelings.clear();
            }
            out_.vertex_labelings.push_back(pos_of_);
            return replaced;
        }
        std::vector<std::pair<std::vector<int>, int>> cands;
        for (int u = 0; u < a_.V; ++u) {
            if (pos_of_[u] >= 0) continue;
            std::vector<int> row;
            row.reserve(2 + depth);
            row.push_back(-a_.deg[u]);
            row.push_back(-a_.loops[u]);
            for (int p = 0; p < depth; ++p) row.push_back(-a_.m(order_[p], u));
            cands.emplace_back(std::move(row), u);
        }
        std::sort(cands.begin(), cands.end());
        bool replaced_any = false;
        for (auto& [row, u] : cands) {
            bool child_tight = false;
            if (tight && !best_.empty()) {
                int c = compare_row(row);
                if (c > 0) continue;
                child_tight = (c == 0);
            }
            const size_t mark = cur_.size();
            cur_.insert(cur_.end(), row.begin(), row.end());
            pos_of_[u] = depth;
            order_.push_back(u);
            if (descend(depth + 1, child_tight)) {
                replaced_any = true;
                tight = true;
            }
            order_.pop_back();
            pos_of_[u] = -1;
            cur_.resize(mark);
        }
        return replaced_any;
    }

    int compare_row(const std::vector<int>& row) const {
        size_t off = cur_.size();
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] != best_[off + i]) return row[i] < best_[off + i] ? -1 : +1;
        }
        return 0;
    }

    const CommAdjacency& a_;
    std::vector<int> pos_of_, order_, cur_, best_;
    ConnCanon out_;
};

class AssocSearcher {
  public:
    explicit AssocSearcher(const HalfEdgeGraph& g)
        : g_(g), nd_(g.num_darts()), next_(g.rotation_next()) {
        deg_.assign(g.num_vertices, 0);
        for (int h = 0; h < nd_; ++h) deg_[g.vertex_of[h]]++;
    }

    ConnCanon run() {
        pos_of_.assign(g_.num_vertices, -1);
        num_.assign(nd_, -1);
        cur_.clear();
        best_.clear();
        out_ = ConnCanon{};
        descend(0, 0, true);
        out_.code = best_;
        return std::move(out_);
    }

  private:
    bool descend(int depth, int base, bool tight) {
        if (depth == g_.num_vertices) {
            if (!best_.empty() && cur_ > best_) return false;
            const bool replaced = best_.empty() || cur_ < best_;
            if (replaced) {
                best_ = cur_;
                out_.vertex_labelings.clear();
                out_.dart_numberings.clear();
            }
            out_.vertex_labelings.push_back(pos_of_);
            out_.dart_numberings.push_back(num_);
            return replaced;
        }
        struct Cand { std::vector<int> row; int u; int start; std::vector<int> walk; };
        std::vector<Cand> cands;
        for (int u = 0; u < g_.num_vertices; ++u) {
            if (pos_of_[u] >= 0) continue;
            for (int s : g_.rotation[u]) {
                Cand c;
                c.u = u;
                c.start = s;
                c.walk.reserve(deg_[u]);
                for (int d = s, i = 0; i < deg_[u]; ++i, d = next_[d]) c.walk.push_back(d);
                // Tentative numbering of this block so same-vertex mates resolve.
                for (int i = 0; i < deg_[u]; ++i) num_[c.walk[i]] = base + i;
                c.row.reserve(1 + deg_[u]);
                c.row.push_back(-deg_[u]);
                for (int d : c.walk) {
                    int mn = num_[g_.mate[d]];
                    c.row.push_back(mn >= 0 ? mn : nd_);   // nd_ = "not yet numbered"
                }
                for (int d : c.walk) num_[d] = -1;
                cands.push_back(std::move(c));
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& x, const Cand& y) {
                      if (x.row != y.row) return x.row < y.row;
                      if (x.u != y.u) return x.u < y.u;
                      return x.start < y.start;
                  });
        bool replaced_any = false;
        for (auto& c : cands) {
            bool child_tight = false;
            if (tight && !best_.empty()) {
                int cmp = compare_row(c.row);
                if (cmp > 0) continue;
                child_tight = (cmp == 0);
            }
            const size_t mark = cur_.size();
            cur_.insert(cur_.end(), c.row.begin(), c.row.end());
            pos_of_[c.u] = depth;
            for (int i = 0; i < deg_[c.u]; ++i) num_[c.walk[i]] = base + i;
            if (descend(depth + 1, base + deg_[c.u], child_tight)) {
                replaced_any = true;
                tight = true;
            }
            for (int d : c.walk) num_[d] = -1;
            pos_of_[c.u] = -1;
            cur_.resize(mark);
        }
        return replaced_any;
    }

    int compare_row(const std::vector<int>& row) const {
        size_t off = cur_.size();
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] != best_[off + i]) return row[i] < best_[off + i] ? -1 : +1;
        }
        return 0;
    }

    const HalfEdgeGraph& g_;
    int nd_;
    std::vector<int> next_, deg_, pos_of_, num_, cur_, best_;
    ConnCanon out_;
};

// Canonical graph for a connected Comm class: edges sorted by endpoint pair,
// edge i realized by darts (2i, 2i+1), head = 2i+1.
inline HalfEdgeGraph comm_canonical_graph(const CommAdjacency& a, const std::vector<int>& vpos) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a.V; ++u)
        for (int l = 0; l < a.loops[u]; ++l) es.emplace_back(vpos[u], vpos[u]);
    for (int u = 0; u < a.V; ++u)
        for (int v = u + 1; v < a.V; ++v) {
            int lo = std::min(vpos[u], vpos[v]), hi = std::max(vpos[u], vpos[v]);
            for (int k = 0; k < a.m(u, v); ++k) es.emplace_back(lo, hi);
        }
    std::sort(es.begin(), es.end());
    HalfEdgeGraph g;
    g.operad = Operad::Comm;
    g.num_vertices = a.V;
    for (const auto& [u, v] : es) {
        int d = g.num_darts();
        g.vertex_of.push_back(u);
        g.vertex_of.push_back(v);
        g.mate.push_back(d + 1);
        g.mate.push_back(d);
    }
    return g;
}

inline HalfEdgeGraph assoc_canonical_graph(const HalfEdgeGraph& g, const std::vector<int>& vpos,
                                           const std::vector<int>& dnum) {
    HalfEdgeGraph c;
    c.operad = Operad::Assoc;
    c.num_vertices = g.num_vertices;
    c.vertex_of.assign(g.num_darts(), -1);
    c.mate.assign(g.num_darts(), -1);
    c.rotation.assign(g.num_vertices, {});
    for (int d = 0; d < g.num_darts(); ++d) {
        c.vertex_of[dnum[d]] = vpos[g.vertex_of[d]];
        c.mate[dnum[d]] = dnum[g.mate[d]];
    }
    // Dart numbering follows rotation order, so rotations are consecutive runs.
    int next_dart = 0;
    for (int p = 0; p < c.num_vertices; ++p) {
        int deg = 0;
        for (int d = 0; d < c.num_darts(); ++d)
            if (c.vertex_of[d] == p) ++deg;
        auto& cyc = c.rotation[p];
        for (int i = 0; i < deg; ++i) cyc.push_back(next_dart + i);
        next_dart += deg;
    }
    return c;
}

inline std::string encode_connected(const HalfEdgeGraph& canon) {
    std::ostringstream os;
    if (canon.operad == Operad::Comm) {
        os << "C" << canon.num_vertices << ":";
        bool first = true;
        for (const auto& [d, dm] : canon.edges()) {
            if (!first) os << ",";
            first = false;
            os << canon.vertex_of[d] + 1 << "-" << canon.vertex_of[dm] + 1;
        }
    } else {
        os << "A" << canon.num_vertices << ":";
        for (int v = 0; v < canon.num_vertices; ++v) {
            if (v) os << ",";
            os << canon.rotation[v].size();
        }
        os << ":";
        bool first = true;
        for (const auto& [d, dm] : canon.edges()) {
            if (!first) os << ",";
            first = false;
            os << d + 1 << "-" << dm + 1;
        }
    }
    return os.str();
}

// Signs of automorphisms expressed in canonical coordinates; reference
// orientation is always the canonical one (identity order, max-dart heads).

inline int comm_automorphism_sign(const CommAdjacency& canon_adj, const std::vector<int>& perm) {
    int parity = permutation_parity(perm);
    int reversed = 0;
    for (int p = 0; p < canon_adj.V; ++p)
        for (int q = p + 1; q < canon_adj.V; ++q)
            if (perm[p] > perm[q]) reversed += canon_adj.m(p, q);
    return ((parity + reversed) & 1) ? -1 : +1;
}

inline int assoc_automorphism_sign(const HalfEdgeGraph& canon, const std::vector<int>& dart_map) {
    std::vector<int> vmap(canon.num_vertices, -1);
    for (int d = 0; d < canon.num_darts(); ++d)
        vmap[canon.vertex_of[d]] = canon.vertex_of[dart_map[d]];
    int parity = permutation_parity(vmap);
    int reversed = 0;
    for (const auto& [lo, hi] : canon.edges())
        if (dart_map[hi] < dart_map[lo]) ++reversed;
    return ((parity + reversed) & 1) ? -1 : +1;
}

inline Canonicalized canonicalize_connected(const OrientedGraph& og) {
    const HalfEdgeGraph& g = og.graph;
    Canonicalized result;

    if (g.operad == Operad::Comm) {
        CommAdjacency adj = comm_adjacency(g);
        CommSearcher searcher(adj);
        ConnCanon cc = searcher.run();
        const auto& lab0 = cc.vertex_labelings.front();
        HalfEdgeGraph canon = comm_canonical_graph(adj, lab0);
        result.canon.graph = canon;
        result.canon.encoding = encode_connected(canon);

        bool has_loop = false;
        for (int l : adj.loops) has_loop |= (l > 0);
        bool zero = has_loop;
        if (!zero) {
            CommAdjacency cadj = comm_adjacency(canon);
            std::vector<int> inv0(adj.V);
            for (int v = 0; v < adj.V; ++v) inv0[lab0[v]] = v;
            for (const auto& lab : cc.vertex_labelings) {
                std::vector<int> perm(adj.V);
                for (int p = 0; p < adj.V; ++p) perm[p] = lab[inv0[p]];
                if (comm_automorphism_sign(cadj, perm) < 0) { zero = true; break; }
            }
        }
        result.canon.zero_flag = zero;
        if (zero) { result.coeff = 0; return result; }

        // Sign relating og's orientation to the canonical one.
        std::vector<int> rel(adj.V);
        for (int v = 0; v < adj.V; ++v) rel[lab0[v]] = og.orient.vertex_pos[v];
        int parity = permutation_parity(rel);
        int reversed = 0;
        const auto edges = g.edges();
        for (size_t e = 0; e < edges.size(); ++e) {
            int h = og.orient.head_dart[e];
            int t = g.mate[h];
            if (lab0[g.vertex_of[h]] < lab0[g.vertex_of[t]]) ++reversed;
        }
        result.coeff = ((parity + reversed) & 1) ? -1 : +1;
        return result;
    }

    AssocSearcher searcher(g);
    ConnCanon cc = searcher.run();
    const auto& lab0 = cc.vertex_labelings.front();
    const auto& num0 = cc.dart_numberings.front();
    HalfEdgeGraph canon = assoc_canonical_graph(g, lab0, num0);
    result.canon.graph = canon;
    result.canon.encoding = encode_connected(canon);

    bool zero = false;
    std::vector<int> num0_inv(g.num_darts());
    for (int d = 0; d < g.num_darts(); ++d) num0_inv[num0[d]] = d;
    for (const auto& num : cc.dart_numberings) {
        std::vector<int> dmap(g.num_darts());
        for (int x = 0; x < g.num_darts(); ++x) dmap[x] = num[num0_inv[x]];
        if (assoc_automorphism_sign(canon, dmap) < 0) { zero = true; break; }
    }
    result.canon.zero_flag = zero;
    if (zero) { result.coeff = 0; return result; }

    std::vector<int> rel(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) rel[lab0[v]] = og.orient.vertex_pos[v];
    int parity = permutation_parity(rel);
    int reversed = 0;
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        int h = og.orient.head_dart[e];
        if (num0[h] < num0[g.mate[h]]) ++reversed;
    }
    result.coeff = ((parity + reversed) & 1) ? -1 : +1;
    return result;
}

// Extracts component `which` (by component id) as a standalone oriented
// graph; vertices keep their relative orientation order, darts their
// relative ids, heads carry over.
inline OrientedGraph extract_component(const OrientedGraph& og, const std::vector<int>& comp, int which) {
    const HalfEdgeGraph& g = og.graph;
    std::vector<int> vmap(g.num_vertices, -1);
    std::vector<std::pair<int, int>> by_pos;   // (orientation position, vertex)
    for (int v = 0; v < g.num_vertices; ++v)
        if (comp[v] == which) by_pos.emplace_back(og.orient.vertex_pos[v], v);
    std::sort(by_pos.begin(), by_pos.end());
    OrientedGraph out;
    out.graph.operad = g.operad;
    out.graph.num_vertices = static_cast<int>(by_pos.size());
    out.orient.vertex_pos.resize(by_pos.size());
    for (size_t i = 0; i < by_pos.size(); ++i) {
        vmap[by_pos[i].second] = static_cast<int>(i);
        out.orient.vertex_pos[i] = static_cast<int>(i);
    }
    std::vector<int> dmap(g.num_darts(), -1);
    for (int d = 0; d < g.num_darts(); ++d)
        if (comp[g.vertex_of[d]] == which) {
            dmap[d] = out.graph.num_darts();
            out.graph.vertex_of.push_back(vmap[g.vertex_of[d]]);
            out.graph.mate.push_back(-1);
        }
    for (int d = 0; d < g.num_darts(); ++d)
        if (dmap[d] >= 0) out.graph.mate[dmap[d]] = dmap[g.mate[d]];
    if (g.operad == Operad::Assoc) {
        out.graph.rotation.assign(out.graph.num_vertices, {});
        for (int v = 0; v < g.num_vertices; ++v)
            if (comp[v] == which)
                for (int d : g.rotation[v]) out.graph.rotation[vmap[v]].push_back(dmap[d]);
    }
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e)
        if (dmap[edges[e].first] >= 0) out.orient.head_dart.push_back(dmap[og.orient.head_dart[e]]);
    // Edge order of the extracted graph follows ascending min-dart, which is
    // the same relative order as in the parent, so heads line up.
    return out;
}

} // namespace detail

// Disjoint union; a's vertices/darts first, b's orientation positions offset.
inline OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.graph.operad != b.graph.operad)
        throw std::invalid_argument("disjoint_union: operad mismatch");
    OrientedGraph out = a;
    const int voff = a.graph.num_vertices;
    const int doff = a.graph.num_darts();
    out.graph.num_vertices += b.graph.num_vertices;
    for (int d = 0; d < b.graph.num_darts(); ++d) {
        out.graph.vertex_of.push_back(b.graph.vertex_of[d] + voff);
        out.graph.mate.push_back(b.graph.mate[d] + doff);
    }
    if (out.graph.operad == Operad::Assoc) {
        for (const auto& cyc : b.graph.rotation) {
            std::vector<int> shifted;
            for (int d : cyc) shifted.push_back(d + doff);
            out.graph.rotation.push_back(std::move(shifted));
        }
    }
    for (int v = 0; v < b.graph.num_vertices; ++v)
        out.orient.vertex_pos.push_back(b.orient.vertex_pos[v] + voff);
    for (int h : b.orient.head_dart) out.orient.head_dart.push_back(h + doff);
    return out;
}

// Splits into connected canonical factors sorted by encoding.  The sign
// tracks the vertex-block reordering plus each factor's canonicalization and
// the Koszul cost of sorting (degree = vertex count mod 2); it is 0 when the
// class dies (orientation-reversing automorphism, or a repeated odd factor).
inline ComponentSplit split_canonical(const OrientedGraph& og) {
    {
        auto bad = validate(og);
        if (!bad.empty()) throw std::invalid_argument("split_canonical: invalid graph: " + bad.front());
    }
    const auto comp = detail::component_of_vertices(og.graph);
    const int k = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());

    // Components ranked by first appearance in the orientation order.
    std::vector<int> first_pos(k, og.graph.num_vertices);
    for (int v = 0; v < og.graph.num_vertices; ++v)
        first_pos[comp[v]] = std::min(first_pos[comp[v]], og.orient.vertex_pos[v]);
    std::vector<int> rank_of(k);
    {
        std::vector<std::pair<int, int>> by_first;
        for (int c = 0; c < k; ++c) by_first.emplace_back(first_pos[c], c);
        std::sort(by_first.begin(), by_first.end());
        for (int r = 0; r < k; ++r) rank_of[by_first[r].second] = r;
    }

    // Parity of regrouping the vertex order into component blocks.
    std::vector<std::pair<std::pair<int, int>, int>> keyed;   // ((rank, pos), old pos)
    for (int v = 0; v < og.graph.num_vertices; ++v)
        keyed.push_back({{rank_of[comp[v]], og.orient.vertex_pos[v]}, og.orient.vertex_pos[v]});
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> perm(og.graph.num_vertices);
    for (int newp = 0; newp < static_cast<int>(keyed.size()); ++newp) perm[keyed[newp].second] = newp;
    int sign = permutation_parity(perm) ? -1 : +1;

    ComponentSplit out;
    std::vector<int> comp_by_rank(k);
    for (int c = 0; c < k; ++c) comp_by_rank[rank_of[c]] = c;
    for (int r = 0; r < k; ++r) {
        OrientedGraph piece = detail::extract_component(og, comp, comp_by_rank[r]);
        Canonicalized cc = detail::canonicalize_connected(piece);
        sign *= cc.coeff;
        out.factors.push_back(std::move(cc.canon));
    }

    // Koszul insertion sort by encoding; swapping two odd factors costs -1,
    // and a repeated odd factor kills the class.
    for (size_t i = 1; i < out.factors.size(); ++i) {
        for (size_t j = i; j > 0 && out.factors[j].encoding < out.factors[j - 1].encoding; --j) {
            if (out.factors[j].odd() && out.factors[j - 1].odd()) sign = -sign;
            std::swap(out.factors[j], out.factors[j - 1]);
        }
    }
    for (size_t i = 1; i < out.factors.size(); ++i)
        if (out.factors[i].odd() && out.factors[i].encoding == out.factors[i - 1].encoding) sign = 0;

    out.sign = sign;
    return out;
}

inline Canonicalized canonicalize(const OrientedGraph& og) {
    ComponentSplit split = split_canonical(og);
    Canonicalized out;
    if (split.factors.size() == 1) {
        out.canon = split.factors.front();
        out.coeff = split.sign;
        return out;
    }
    std::ostringstream enc;
    enc << "U" << split.factors.size();
    for (const auto& f : split.factors) enc << "[" << f.encoding << "]";
    OrientedGraph acc = with_default_orientation(split.factors.front().graph);
    for (size_t i = 1; i < split.factors.size(); ++i)
        acc = disjoint_union(acc, with_default_orientation(split.factors[i].graph));
    out.canon.encoding = enc.str();
    out.canon.graph = std::move(acc.graph);
    out.canon.zero_flag = (split.sign == 0) ||
                          std::any_of(split.factors.begin(), split.factors.end(),
                                      [](const CanonicalGraph& f) { return f.zero_flag; });
    out.coeff = split.sign;
    return out;
}

// ----------------------------------------------------------------------
// Encoding parser.
// ----------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_str(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

inline HalfEdgeGraph decode_connected(const std::string& enc) {
    if (enc.empty()) throw std::invalid_argument("decode_encoding: empty encoding");
    HalfEdgeGraph g;
    const char kind = enc[0];
    const auto parts = split_str(enc.substr(1), ':');
    if (kind == 'C') {
        if (parts.size() != 2) throw std::invalid_argument("decode_encoding: bad Comm encoding");
        g.operad = Operad::Comm;
        g.num_vertices = std::stoi(parts[0]);
        if (!parts[1].empty())
            for (const auto& tok : split_str(parts[1], ',')) {
                const auto uv = split_str(tok, '-');
                int u = std::stoi(uv.at(0)) - 1, v = std::stoi(uv.at(1)) - 1;
                int d = g.num_darts();
                g.vertex_of.push_back(u);
                g.vertex_of.push_back(v);
                g.mate.push_back(d + 1);
                g.mate.push_back(d);
            }
        return g;
    }
    if (kind == 'A') {
        if (parts.size() != 3) throw std::invalid_argument("decode_encoding: bad Assoc encoding");
        g.operad = Operad::Assoc;
        g.num_vertices = std::stoi(parts[0]);
        std::vector<int> degs;
        for (const auto& tok : split_str(parts[1], ',')) degs.push_back(std::stoi(tok));
        if (static_cast<int>(degs.size()) != g.num_vertices)
            throw std::invalid_argument("decode_encoding: degree list mismatch");
        int nd = 0;
        g.rotation.assign(g.num_vertices, {});
        for (int v = 0; v < g.num_vertices; ++v)
            for (int i = 0; i < degs[v]; ++i) {
                g.vertex_of.push_back(v);
                g.rotation[v].push_back(nd++);
            }
        g.mate.assign(nd, -1);
        if (!parts[2].empty())
            for (const auto& tok : split_str(parts[2], ',')) {
                const auto ab = split_str(tok, '-');
                int a = std::stoi(ab.at(0)) - 1, b = std::stoi(ab.at(1)) - 1;
                g.mate.at(a) = b;
                g.mate.at(b) = a;
            }
        for (int d = 0; d < nd; ++d)
            if (g.mate[d] < 0) throw std::invalid_argument("decode_encoding: incomplete pairing");
        return g;
    }
    throw std::invalid_argument("decode_encoding: unknown kind '" + std::string(1, kind) + "'");
}

} // namespace detail

inline HalfEdgeGraph decode_encoding(const std::string& enc) {
    if (!enc.empty() && enc[0] == 'U') {
        size_t i = 1;
        while (i < enc.size() && enc[i] != '[') ++i;
        OrientedGraph acc;
        bool first = true;
        while (i < enc.size()) {
            if (enc[i] != '[') throw std::invalid_argument("decode_encoding: bad union encoding");
            size_t j = enc.find(']', i);
            if (j == std::string::npos) throw std::invalid_argument("decode_encoding: unbalanced union");
            HalfEdgeGraph piece = detail::decode_connected(enc.substr(i + 1, j - i - 1));
            if (first) { acc = with_default_orientation(piece); first = false; }
            else acc = disjoint_union(acc, with_default_orientation(piece));
            i = j + 1;
        }
        if (first) throw std::invalid_argument("decode_encoding: empty union");
        return acc.graph;
    }
    return detail::decode_connected(enc);
}

// ----------------------------------------------------------------------
// Dart-level isomorphism search (exhaustive backtracking).  Used for the
// automorphism-group operation and as an independent cross-check; inputs
// at desk scale are tiny.
// ----------------------------------------------------------------------

inline std::vector<std::vector<int>> all_isomorphisms(const HalfEdgeGraph& a, const HalfEdgeGraph& b,
                                                      size_t limit = SIZE_MAX) {
    std::vector<std::vector<int>> found;
    if (a.operad != b.operad || a.num_vertices != b.num_vertices || a.num_darts() != b.num_darts())
        return found;
    const int nd = a.num_darts();
    std::vector<int> dega(a.num_vertices, 0), degb(b.num_vertices, 0);
    for (int d = 0; d < nd; ++d) { dega[a.vertex_of[d]]++; degb[b.vertex_of[d]]++; }

    std::vector<int> na, pa, nb, pb;   // rotation next/prev (Assoc)
    if (a.operad == Operad::Assoc) {
        na = a.rotation_next();
        nb = b.rotation_next();
        pa.assign(nd, -1);
        pb.assign(nd, -1);
        for (int d = 0; d < nd; ++d) { pa[na[d]] = d; pb[nb[d]] = d; }
    }

    std::vector<int> dmap(nd, -1), dused(nd, 0);
    std::vector<int> vmap(a.num_vertices, -1), vused(b.num_vertices, 0);

    auto rec = [&](auto&& self, int d) -> bool {
        if (d == nd) {
            found.push_back(dmap);
            return found.size() >= limit;
        }
        for (int d2 = 0; d2 < nd; ++d2) {
            if (dused[d2]) continue;
            int va = a.vertex_of[d], vb = b.vertex_of[d2];
            if (vmap[va] >= 0) { if (vmap[va] != vb) continue; }
            else { if (vused[vb] || dega[va] != degb[vb]) continue; }
            if (dmap[a.mate[d]] >= 0 && dmap[a.mate[d]] != b.mate[d2]) continue;
            if (dmap[a.mate[d]] < 0 && dused[b.mate[d2]]) continue;
            if (a.operad == Operad::Assoc) {
                if (dmap[na[d]] >= 0 && dmap[na[d]] != nb[d2]) continue;
                if (dmap[pa[d]] >= 0 && dmap[pa[d]] != pb[d2]) continue;
            }
            bool fresh_vertex = (vmap[va] < 0);
            dmap[d] = d2;
            dused[d2] = 1;
            if (fresh_vertex) { vmap[va] = vb; vused[vb] = 1; }
            if (self(self, d + 1)) return true;
            if (fresh_vertex) { vmap[va] = -1; vused[vb] = 0; }
            dmap[d] = -1;
            dused[d2] = 0;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

// Reindex element induced by a dart-level automorphism, relative to the
// graph's default orientation.
inline Reindex reindex_of_automorphism(const HalfEdgeGraph& g, const std::vector<int>& dmap) {
    Reindex r;
    r.vertex_perm.assign(g.num_vertices, -1);
    for (int d = 0; d < g.num_darts(); ++d)
        r.vertex_perm[g.vertex_of[d]] = g.vertex_of[dmap[d]];
    for (const auto& [lo, hi] : g.edges())
        r.flip_edge.push_back(dmap[hi] < dmap[lo] ? 1 : 0);
    return r;
}

struct AutomorphismGroup {
    std::vector<Reindex> elements;       // full enumeration (a generating set)
    std::vector<std::vector<int>> dart_maps;
    Int order = 0;
};

inline AutomorphismGroup automorphism_group(const HalfEdgeGraph& g) {
    AutomorphismGroup out;
    out.dart_maps = all_isomorphisms(g, g);
    for (const auto& m : out.dart_maps) out.elements.push_back(reindex_of_automorphism(g, m));
    out.order = static_cast<long>(out.dart_maps.size());
    return out;
}

namespace detail {

inline std::map<std::string, Int>& aut_order_cache() {
    static std::map<std::string, Int> cache;
    return cache;
}
inline std::mutex& aut_order_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

// |Aut| of a canonical class, memoized by encoding.  Counts decoration-
// preserving automorphisms of the unoriented graph, orientation-reversing
// ones included.
inline Int automorphism_order(const CanonicalGraph& cg) {
    {
        std::lock_guard<std::mutex> lock(detail::aut_order_mutex());
        auto it = detail::aut_order_cache().find(cg.encoding);
        if (it != detail::aut_order_cache().end()) return it->second;
    }
    Int order = static_cast<long>(all_isomorphisms(cg.graph, cg.graph).size());
    std::lock_guard<std::mutex> lock(detail::aut_order_mutex());
    detail::aut_order_cache().emplace(cg.encoding, order);
    return order;
}

} // namespace graphcx
