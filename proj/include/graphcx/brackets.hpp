// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcx/chain.hpp"
#include "graphcx/symtensor.hpp"

namespace graphcx {

// ----------------------------------------------------------------------
// Polygon gluing.  A site is a list of head darts: slot i glues one side of
// the 2n-gon to the edge under dart i, directed toward that dart.  Gluing
// only re-pairs half-edges: the old pairings of the site edges are removed
// and slot i's head is re-paired with slot i+1's tail, directed so the new
// edge runs tail(e_{i+1}) -> head(e_i).  With `contract`, the new edge of
// slot 1 is contracted.
// ----------------------------------------------------------------------

inline Chain glue_polygon(const OrientedGraph& og, const std::vector<int>& site, bool contract) {
    const HalfEdgeGraph& g = og.graph;
    const int n = static_cast<int>(site.size());
    if (n < 1) throw std::invalid_argument("glue_polygon: empty site");
    const auto edge_of = g.edge_of_dart();
    {
        std::set<int> edges_used;
        for (int d : site) {
            if (d < 0 || d >= g.num_darts()) throw std::invalid_argument("glue_polygon: bad dart");
            if (!edges_used.insert(edge_of[d]).second)
                throw std::invalid_argument("glue_polygon: site edges must be pairwise distinct");
        }
    }

    // Orientation representative with each site edge directed per the site.
    OrientedGraph work = og;
    int sign = 1;
    for (int d : site) {
        int e = edge_of[d];
        if (work.orient.head_dart[e] != d) {
            work.orient.head_dart[e] = d;
            sign = -sign;
        }
    }

    std::vector<int> eta(n), tau(n);
    for (int i = 0; i < n; ++i) {
        eta[i] = site[i];
        tau[i] = g.mate[site[i]];
    }
    for (int i = 0; i < n; ++i) {
        int partner = tau[(i + 1) % n];
        work.graph.mate[eta[i]] = partner;
        work.graph.mate[partner] = eta[i];
    }

    // Rebuild edge directions: untouched edges keep their heads, each new
    // edge t_i is headed by eta[i].
    std::vector<int> forced_head(g.num_darts(), -1);
    for (int i = 0; i < n; ++i) {
        forced_head[eta[i]] = eta[i];
        forced_head[tau[(i + 1) % n]] = eta[i];
    }
    std::vector<int> heads;
    for (int d = 0; d < work.graph.num_darts(); ++d) {
        if (d >= work.graph.mate[d]) continue;
        heads.push_back(forced_head[d] >= 0 ? forced_head[d] : work.orient.head_dart[edge_of[d]]);
    }
    work.orient.head_dart = std::move(heads);

    if (!contract) {
        Chain out;
        out.add_canonicalized(canonicalize(work), Rat(sign));
        return out;
    }
    // Contract t_1 = {eta[0], tau[1 mod n]}.
    int t1_index = 0;
    {
        const int lo = std::min(eta[0], work.graph.mate[eta[0]]);
        for (int d = 0; d < lo; ++d)
            if (d < work.graph.mate[d]) ++t1_index;
    }
    return contract_edge(work, t1_index) * Rat(sign);
}

struct GluingSlot {
    int component = 0;   // index into the graph list
    int head_dart = 0;   // dart local to that component
};

// Convenience entry point: glue across a list of separate graphs.
inline Chain glue_polygon(const std::vector<OrientedGraph>& graphs, const std::vector<GluingSlot>& site,
                          bool contract) {
    if (graphs.empty()) throw std::invalid_argument("glue_polygon: no graphs");
    OrientedGraph acc = graphs.front();
    std::vector<int> dart_offset{0};
    for (size_t i = 1; i < graphs.size(); ++i) {
        dart_offset.push_back(acc.graph.num_darts());
        acc = disjoint_union(acc, graphs[i]);
    }
    std::vector<int> darts;
    for (const auto& slot : site) {
        if (slot.component < 0 || slot.component >= static_cast<int>(graphs.size()))
            throw std::invalid_argument("glue_polygon: bad component index");
        darts.push_back(dart_offset[slot.component] + slot.head_dart);
    }
    return glue_polygon(acc, darts, contract);
}

namespace detail {

inline EncodingCache<Chain>& fusion_cache() {
    static EncodingCache<Chain> c;
    return c;
}
inline EncodingCache<Chain>& fusion_open_cache() {
    static EncodingCache<Chain> c;
    return c;
}
inline EncodingCache<SymTensor>& fission_cache() {
    static EncodingCache<SymTensor> c;
    return c;
}

} // namespace detail

// phi_n on one monomial of exactly n connected factors: half the sum of
// contracted polygon gluings over all ordered tuples of directed edges in
// pairwise-distinct factors.  Memoized by monomial.
inline Chain fusion_on_monomial(int n, const std::vector<CanonicalGraph>& factors, bool contract = true) {
    if (static_cast<int>(factors.size()) != n)
        throw std::invalid_argument("fusion: arity mismatch");
    const std::string key = (contract ? "F" : "M") + std::to_string(n) + "|" + monomial_key(factors);
    Chain out;
    auto& cache = contract ? detail::fusion_cache() : detail::fusion_open_cache();
    if (cache.get(key, out)) return out;

    OrientedGraph prod = with_default_orientation(factors.front().graph);
    std::vector<int> comp_of_dart(factors.front().graph.num_darts(), 0);
    for (size_t i = 1; i < factors.size(); ++i) {
        prod = disjoint_union(prod, with_default_orientation(factors[i].graph));
        comp_of_dart.resize(prod.graph.num_darts(), static_cast<int>(i));
    }

    std::vector<int> site(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == n) {
            out += glue_polygon(prod, site, contract);
            return;
        }
        for (int d = 0; d < prod.graph.num_darts(); ++d) {
            const int c = comp_of_dart[d];
            if (used[c]) continue;
            used[c] = 1;
            site[slot] = d;
            self(self, slot + 1);
            used[c] = 0;
        }
    };
    rec(rec, 0);
    out *= half();
    // The n cyclic rotations of a site tuple produce the identical glued
    // oriented graph.  The contracted sum distinguishes them through the
    // choice of contracted side; the open sum does not, so it is divided by
    // n to count each gluing once.  This is what makes phi_n = [d, mu_n]
    // hold on the nose (n = 1 is unaffected).
    if (!contract) out *= make_rat(1, n);

    cache.put(key, out);
    return out;
}

// phi_n on tensors concentrated in S^n.
inline Chain fusion(int n, const SymTensor& t) {
    Chain out;
    for (const auto& [key, term] : t.terms)
        out += fusion_on_monomial(n, term.factors, true) * term.coeff;
    return out;
}

// mu_n: the same gluing sum without the final contraction (the chain
// homotopy witnessing that fusion vanishes on homology).
inline Chain fusion_homotopy(int n, const SymTensor& t) {
    Chain out;
    for (const auto& [key, term] : t.terms)
        out += fusion_on_monomial(n, term.factors, false) * term.coeff;
    return out;
}

// partial_i: sum of contracted polygon gluings over ordered tuples of i
// directed edges with pairwise-distinct underlying edges of one connected
// graph.  No normalization here; theta takes the half.
inline Chain fission_raw(const OrientedGraph& og, int i) {
    if (i < 1) throw std::invalid_argument("fission_raw: need i >= 1");
    if (!graph_stats(og.graph).connected)
        throw std::invalid_argument("fission_raw: connected graphs only");
    Chain out;
    const auto edge_of = og.graph.edge_of_dart();
    std::vector<int> site(i, -1);
    std::vector<char> used(og.graph.num_edges(), 0);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == i) {
            out += glue_polygon(og, site, true);
            return;
        }
        for (int d = 0; d < og.graph.num_darts(); ++d) {
            const int e = edge_of[d];
            if (used[e]) continue;
            used[e] = 1;
            site[slot] = d;
            self(self, slot + 1);
            used[e] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

// theta_i of one connected class: half the i-component part of the split of
// partial_i.  Memoized by encoding.
inline SymTensor fission_on_class(int i, const CanonicalGraph& cg) {
    const std::string key = "T" + std::to_string(i) + "|" + cg.encoding;
    SymTensor out;
    if (detail::fission_cache().get(key, out)) return out;

    Chain raw = fission_raw(with_default_orientation(cg.graph), i);
    for (const auto& [enc, term] : raw.terms) {
        ComponentSplit split = split_canonical(with_default_orientation(term.graph));
        if (static_cast<int>(split.factors.size()) != i) continue;
        out.add(std::move(split.factors), term.coeff * split.sign * half());
    }
    detail::fission_cache().put(key, out);
    return out;
}

inline SymTensor fission(int i, const OrientedGraph& og) {
    Canonicalized cc = canonicalize(og);
    SymTensor out;
    if (cc.coeff == 0) return out;
    if (!graph_stats(og.graph).connected)
        throw std::invalid_argument("fission: connected graphs only");
    out = fission_on_class(i, cc.canon);
    out *= Rat(cc.coeff);
    return out;
}

// ----------------------------------------------------------------------
// Coderivation / derivation extensions to the full symmetric algebra.
// ----------------------------------------------------------------------

namespace detail {

// Unshuffle sign: G_1 ... G_k = eps(I,J) G_I G_J with |I| = n.
inline int unshuffle_sign(const std::vector<CanonicalGraph>& fs, const std::vector<int>& subset) {
    std::vector<char> in_subset(fs.size(), 0);
    for (int i : subset) in_subset[i] = 1;
    int parity = 0;
    for (int i : subset) {
        if (!fs[i].odd()) continue;
        for (int j = 0; j < i; ++j)
            if (!in_subset[j] && fs[j].odd()) parity ^= 1;
    }
    return parity ? -1 : +1;
}

} // namespace detail

// phi_n extended as a coderivation: sum over size-n sub-multisets I with the
// unshuffle sign, fusing the chosen factors and keeping the rest.  The fused
// result stays one tensor slot even when it is disconnected; collapsing it
// into its pieces would let a later fusion draw two edges from what used to
// be a single slot, and the anticommutation identities fail on exactly those
// phantom terms.
inline SymTensor fusion_coderivation(int n, const SymTensor& t) {
    SymTensor out;
    for (const auto& [key, term] : t.terms) {
        const int k = static_cast<int>(term.factors.size());
        if (k < n) continue;
        std::vector<int> subset(n);
        auto rec = [&](auto&& self, int slot, int from) -> void {
            if (slot == n) {
                int eps = detail::unshuffle_sign(term.factors, subset);
                std::vector<CanonicalGraph> chosen;
                for (int i : subset) chosen.push_back(term.factors[i]);
                Chain fused = fusion_on_monomial(n, chosen, true);
                std::vector<char> in_subset(k, 0);
                for (int i : subset) in_subset[i] = 1;
                for (const auto& [enc, ft] : fused.terms) {
                    std::vector<CanonicalGraph> monomial{CanonicalGraph{enc, false, ft.graph}};
                    for (int j = 0; j < k; ++j)
                        if (!in_subset[j]) monomial.push_back(term.factors[j]);
                    out.add(std::move(monomial), term.coeff * eps * ft.coeff);
                }
                return;
            }
            for (int i = from; i < k; ++i) {
                subset[slot] = i;
                self(self, slot + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

// theta_i extended as a derivation (Leibniz over the factors, odd operator).
inline SymTensor fission_derivation(int i, const SymTensor& t) {
    SymTensor out;
    for (const auto& [key, term] : t.terms) {
        const int k = static_cast<int>(term.factors.size());
        int lead_parity = 0;
        for (int m = 0; m < k; ++m) {
            SymTensor sub = fission_on_class(i, term.factors[m]);
            const int sign = (lead_parity & 1) ? -1 : +1;
            for (const auto& [skey, sterm] : sub.terms) {
                std::vector<CanonicalGraph> monomial;
                for (int j = 0; j < m; ++j) monomial.push_back(term.factors[j]);
                for (const auto& f : sterm.factors) monomial.push_back(f);
                for (int j = m + 1; j < k; ++j) monomial.push_back(term.factors[j]);
                out.add(std::move(monomial), term.coeff * sign * sterm.coeff);
            }
            lead_parity += term.factors[m].vcount() & 1;
        }
    }
    return out;
}

// The boundary extended over tensor factors; equals fission_derivation(1, .).
inline SymTensor boundary_derivation(const SymTensor& t) {
    return fission_derivation(1, t);
}

// Aggregated operators phi_I, theta_I.
inline SymTensor fusion_total(const std::vector<int>& arities, const SymTensor& t) {
    SymTensor out;
    for (int n : arities) out += fusion_coderivation(n, t);
    return out;
}

inline SymTensor fission_total(const std::vector<int>& arities, const SymTensor& t) {
    SymTensor out;
    for (int i : arities) out += fission_derivation(i, t);
    return out;
}

} // namespace graphcx
