// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcx/brackets.hpp"
#include "graphcx/chain.hpp"
#include "graphcx/enumerate.hpp"
#include "graphcx/homology.hpp"
#include "graphcx/symtensor.hpp"
#include "graphcx/util.hpp"

namespace graphcx::verify {

struct Options {
    int max_loops = 3;
    unsigned long long seed = 1;
    int trials = 100;
};

struct Result {
    std::string suite;
    bool pass = true;
    long checks = 0;
    std::string witness;   // first counterexample, empty when passing
    std::string notes;     // extra documentation (e.g. the reducible pair)

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
};

// Seeded sampling.  Raw engine output is reduced by modulo so draws do not
// depend on the standard library's distribution implementations.
class Sampler {
  public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    size_t index(size_t n) { return static_cast<size_t>(rng_() % n); }

    Rat coeff() {
        static const int nums[] = {1, -1, 2, -2, 1, -1, 3, -3};
        static const int dens[] = {1, 1, 1, 1, 2, 2, 1, 1};
        size_t k = index(8);
        return make_rat(nums[k], dens[k]);
    }

    const CanonicalGraph& pick(const std::vector<CanonicalGraph>& pool) {
        return pool[index(pool.size())];
    }

    SymTensor tensor(const std::vector<CanonicalGraph>& pool, int degree, int monomials = 1) {
        SymTensor t;
        for (int m = 0; m < monomials; ++m) {
            std::vector<CanonicalGraph> factors;
            for (int i = 0; i < degree; ++i) factors.push_back(pick(pool));
            t.add(std::move(factors), coeff());
        }
        return t;
    }

  private:
    std::mt19937_64 rng_;
};

namespace detail {

inline std::string tensor_brief(const SymTensor& t, size_t cap = 3) {
    std::ostringstream os;
    size_t k = 0;
    for (const auto& [key, term] : t.terms) {
        if (k++ == cap) { os << " ..."; break; }
        if (k > 1) os << " + ";
        os << "(" << to_string(term.coeff) << ")*[" << key << "]";
    }
    if (t.terms.empty()) os << "0";
    return os.str();
}

inline std::string chain_brief(const Chain& c, size_t cap = 3) {
    std::ostringstream os;
    size_t k = 0;
    for (const auto& [enc, term] : c.terms) {
        if (k++ == cap) { os << " ..."; break; }
        if (k > 1) os << " + ";
        os << "(" << to_string(term.coeff) << ")*" << enc;
    }
    if (c.terms.empty()) os << "0";
    return os.str();
}

inline std::vector<CanonicalGraph> filter_max_edges(const std::vector<CanonicalGraph>& pool, int max_edges) {
    std::vector<CanonicalGraph> out;
    for (const auto& g : pool)
        if (g.graph.num_edges() <= max_edges) out.push_back(g);
    return out;
}

inline std::vector<CanonicalGraph> irreducible_pool(Operad op, int max_loops) {
    std::vector<CanonicalGraph> out;
    for (const auto& g : basis_pool(op, max_loops)) {
        GraphStats s = graph_stats(g.graph);
        if (s.connected && !s.has_separating_edge) out.push_back(g);
    }
    return out;
}

inline std::vector<CanonicalGraph> reducible_pool(Operad op, int max_loops) {
    std::vector<CanonicalGraph> out;
    for (const auto& g : basis_pool(op, max_loops)) {
        GraphStats s = graph_stats(g.graph);
        if (s.connected && s.has_separating_edge) out.push_back(g);
    }
    return out;
}

} // namespace detail

// d^2 = 0 on every basis class: Comm up to max_loops, Assoc up to
// min(max_loops, 3).
inline Result dsquare(const Options& opt) {
    Result res{"dsquare"};
    for (Operad op : {Operad::Comm, Operad::Assoc}) {
        const int cap = (op == Operad::Comm) ? opt.max_loops : std::min(opt.max_loops, 3);
        for (int n = 1; n <= cap; ++n)
            for (int V = 1; V <= std::max(1, 2 * n - 2); ++V) {
                BasisSlice slice = enumerate_basis(op, n, V);
                for (const auto& cg : slice.elements) {
                    Chain dd = boundary(boundary_of_class(cg));
                    ++res.checks;
                    if (!dd.zero())
                        res.fail("d(d(" + cg.encoding + ")) = " + detail::chain_brief(dd));
                }
            }
    }
    return res;
}

// Fast canonicalization against the exhaustive oracle, on every connected
// class with V <= 4 within the oracle's E <= 7 bound (killed classes
// included) and on random relabelings.  Assoc slices whose rotation-system
// enumeration would blow up (a vertex of valence > 10) are skipped.
inline Result canonical(const Options& opt) {
    Result res{"canonical"};
    Sampler rand(opt.seed);
    for (Operad op : {Operad::Comm, Operad::Assoc}) {
        for (int n = 1; n <= std::max(opt.max_loops, 7); ++n)
            for (int V = 1; V <= 4; ++V) {
                const int E = V + n - 1;
                if (E > 7) continue;   // oracle cost bound
                if (op == Operad::Assoc && 2 * E - 3 * (V - 1) > 10) continue;
                BasisSlice slice = enumerate_connected(op, n, V, true);
                for (const auto& cg : slice.elements) {
                    OrientedGraph og = with_default_orientation(cg.graph);
                    Canonicalized fast = canonicalize(og);
                    Canonicalized slow = oracle_canonicalize(og);
                    ++res.checks;
                    if (fast.canon.encoding != slow.canon.encoding || fast.coeff != slow.coeff) {
                        res.fail("mismatch on " + cg.encoding + ": fast (" + fast.canon.encoding +
                                 ", " + std::to_string(fast.coeff) + ") vs oracle (" +
                                 slow.canon.encoding + ", " + std::to_string(slow.coeff) + ")");
                        continue;
                    }
                    // Random isomorphic relabelings must agree too.
                    for (int rep = 0; rep < 3; ++rep) {
                        OrientedGraph shuffled = og;
                        Reindex r;
                        r.vertex_perm.resize(og.graph.num_vertices);
                        for (int i = 0; i < og.graph.num_vertices; ++i) r.vertex_perm[i] = i;
                        for (int i = og.graph.num_vertices - 1; i > 0; --i)
                            std::swap(r.vertex_perm[i], r.vertex_perm[rand.index(i + 1)]);
                        r.flip_edge.assign(og.graph.num_edges(), 0);
                        for (size_t e = 0; e < r.flip_edge.size(); ++e) r.flip_edge[e] = rand.index(2);
                        auto [og2, sgn] = apply_reindex(og, r);
                        Canonicalized f2 = canonicalize(og2);
                        Canonicalized s2 = oracle_canonicalize(og2);
                        ++res.checks;
                        if (f2.canon.encoding != s2.canon.encoding || f2.coeff != s2.coeff ||
                            f2.canon.encoding != fast.canon.encoding || f2.coeff != sgn * fast.coeff) {
                            res.fail("relabeled mismatch on " + cg.encoding);
                            break;
                        }
                    }
                }
            }
    }
    return res;
}

// phi_1 = theta_1 = boundary on connected basis classes.
inline Result phi_theta_equal_boundary(const Options& opt) {
    Result res{"phi1-theta1-boundary"};
    for (int n = 1; n <= opt.max_loops; ++n)
        for (int V = 1; V <= std::max(1, 2 * n - 2); ++V)
            for (const auto& cg : enumerate_basis(Operad::Comm, n, V).elements) {
                Chain d = boundary_of_class(cg);
                SymTensor one;
                one.add({cg}, Rat(1));
                Chain phi1 = fusion(1, one);
                SymTensor th1 = fission_on_class(1, cg);
                Chain theta1 = tensor_to_chain(th1);
                ++res.checks;
                if (!(phi1 == d))
                    res.fail("phi_1 != d on " + cg.encoding + ": " + detail::chain_brief(phi1 - d));
                else if (!(theta1 == d))
                    res.fail("theta_1 != d on " + cg.encoding + ": " + detail::chain_brief(theta1 - d));
            }
    return res;
}

namespace detail {

inline bool anticommutator_vanishes(int i, int j, const SymTensor& t, std::string& out_witness,
                                    long& nontrivial) {
    SymTensor inner_j = fusion_coderivation(j, t);
    if (!inner_j.zero()) ++nontrivial;
    SymTensor a = fusion_coderivation(i, inner_j);
    if (i != j) {
        SymTensor inner_i = fusion_coderivation(i, t);
        if (!inner_i.zero()) ++nontrivial;
        a += fusion_coderivation(j, inner_i);
    }
    if (a.zero()) return true;
    out_witness = tensor_brief(a);
    return false;
}

inline bool fission_anticommutator_vanishes(int i, int j, const SymTensor& t, std::string& out_witness,
                                            long& nontrivial) {
    SymTensor inner_j = fission_derivation(j, t);
    if (!inner_j.zero()) ++nontrivial;
    SymTensor a = fission_derivation(i, inner_j);
    if (i != j) {
        SymTensor inner_i = fission_derivation(i, t);
        if (!inner_i.zero()) ++nontrivial;
        a += fission_derivation(j, inner_i);
    }
    if (a.zero()) return true;
    out_witness = tensor_brief(a);
    return false;
}

} // namespace detail

// Theorem 1: the extended fusion operators pairwise anticommute and square
// to zero.  Tensor degrees sit at the critical level for each pair, with
// factor pools sized so the polygon sums stay tractable.
inline Result theorem1(const Options& opt) {
    Result res{"theorem1"};
    const auto pool = basis_pool(Operad::Comm, std::min(opt.max_loops, 3));
    if (pool.empty()) { res.fail("empty basis pool"); return res; }
    const auto small = detail::filter_max_edges(pool, 5);
    const auto tiny = detail::filter_max_edges(pool, 3);   // theta-sized
    Sampler rand(opt.seed);
    std::string w;
    long nontrivial = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
        SymTensor t3 = rand.tensor(pool, 3, 2);
        for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
            ++res.checks;
            if (!detail::anticommutator_vanishes(i, j, t3, w, nontrivial))
                res.fail("phi_" + std::to_string(i) + "phi_" + std::to_string(j) + " on " +
                         detail::tensor_brief(t3) + " -> " + w);
        }
        SymTensor t4 = rand.tensor(small, 4, 1);
        for (auto [i, j] : {std::pair{1, 3}, {2, 3}}) {
            ++res.checks;
            if (!detail::anticommutator_vanishes(i, j, t4, w, nontrivial))
                res.fail("phi_" + std::to_string(i) + "phi_" + std::to_string(j) + " on " +
                         detail::tensor_brief(t4) + " -> " + w);
        }
        // Critical degree 5 for (3,3); one non-theta factor keeps it honest
        // while the gluing sums stay desk-sized.
        std::vector<CanonicalGraph> factors;
        for (int k = 0; k < 4; ++k) factors.push_back(rand.pick(tiny));
        factors.push_back(rand.pick(small));
        SymTensor t5;
        t5.add(std::move(factors), rand.coeff());
        ++res.checks;
        if (!detail::anticommutator_vanishes(3, 3, t5, w, nontrivial))
            res.fail("phi_3phi_3 on " + detail::tensor_brief(t5) + " -> " + w);
    }
    // Ribbon coverage: the same identities over small Assoc classes, at the
    // top critical degree so every pair is exercised.
    const auto ribbon = detail::filter_max_edges(basis_pool(Operad::Assoc, 2), 3);
    if (!ribbon.empty())
        for (int trial = 0; trial < std::max(1, opt.trials / 5); ++trial) {
            SymTensor t = rand.tensor(ribbon, 5, 1);
            if (t.zero()) continue;
            for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
                ++res.checks;
                if (!detail::anticommutator_vanishes(i, j, t, w, nontrivial))
                    res.fail("assoc phi_" + std::to_string(i) + "phi_" + std::to_string(j) + " on " +
                             detail::tensor_brief(t) + " -> " + w);
            }
        }
    res.notes = "nonzero operator applications: " + std::to_string(nontrivial);
    return res;
}

// Theorem 2: extended fission operators anticommute and square to zero on
// connected inputs.  Inputs mix both operads; with max_loops >= 4 a few
// Assoc classes whose theta_3 is nonzero join the pool, so the i = 3 cases
// fire non-vacuously.
inline Result theorem2(const Options& opt) {
    Result res{"theorem2"};
    std::vector<CanonicalGraph> pool = basis_pool(Operad::Comm, std::min(opt.max_loops, 3));
    for (const auto& g : basis_pool(Operad::Assoc, std::min(opt.max_loops, 3))) pool.push_back(g);
    if (pool.empty()) { res.fail("empty basis pool"); return res; }
    if (opt.max_loops >= 4) {
        int live = 0;
        for (const auto& g : enumerate_basis(Operad::Assoc, 4, 6).elements) {
            if (fission_on_class(3, g).zero()) continue;
            pool.push_back(g);
            if (++live == 3) break;
        }
    }
    Sampler rand(opt.seed);
    std::string w;
    long nontrivial = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
        // Connected input: one basis class, sometimes tensored with another
        // of the same operad to exercise the Leibniz extension.
        SymTensor t;
        const CanonicalGraph& first = rand.pick(pool);
        if (trial % 3 == 2) {
            std::vector<const CanonicalGraph*> same;
            for (const auto& g : pool)
                if (g.graph.operad == first.graph.operad) same.push_back(&g);
            t.add({first, *same[rand.index(same.size())]}, rand.coeff());
        } else {
            t.add({first}, rand.coeff());
        }
        if (t.zero()) continue;
        for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
            ++res.checks;
            if (!detail::fission_anticommutator_vanishes(i, j, t, w, nontrivial))
                res.fail("theta_" + std::to_string(i) + "theta_" + std::to_string(j) + " on " +
                         detail::tensor_brief(t) + " -> " + w);
        }
    }
    res.notes = "nonzero operator applications: " + std::to_string(nontrivial);
    return res;
}

namespace detail {

// True when every degree-2 fusion slot of x (.) y stays connected, i.e. the
// three-term expression below is defined (fission needs connected slots).
inline bool bialgebra_expression_defined(const CanonicalGraph& x, const CanonicalGraph& y) {
    SymTensor xy;
    xy.add({x, y}, Rat(1));
    for (const auto& [key, t] : fusion_coderivation(2, xy).terms)
        for (const auto& f : t.factors)
            if (graph_stats(f.graph).component_count > 1) return false;
    return true;
}

// The three-term compatibility expression of degree-2 fusion and fission.
inline SymTensor bialgebra_expression(const CanonicalGraph& x, const CanonicalGraph& y) {
    SymTensor xy;
    xy.add({x, y}, Rat(1));
    SymTensor term1 = fission_derivation(2, fusion_coderivation(2, xy));

    SymTensor tx = fission_on_class(2, x);
    SymTensor txy;
    for (const auto& [key, t] : tx.terms) {
        std::vector<CanonicalGraph> fs = t.factors;
        fs.push_back(y);
        txy.add(std::move(fs), t.coeff);
    }
    SymTensor term2 = fusion_coderivation(2, txy);

    SymTensor ty = fission_on_class(2, y);
    SymTensor xty;
    for (const auto& [key, t] : ty.terms) {
        std::vector<CanonicalGraph> fs{x};
        for (const auto& f : t.factors) fs.push_back(f);
        xty.add(std::move(fs), t.coeff);
    }
    SymTensor term3 = fusion_coderivation(2, xty);
    if (x.vcount() % 2 != 0) term3 *= Rat(-1);

    return term1 + term2 + term3;
}

} // namespace detail

// Theorem 3: the bialgebra compatibility holds on irreducible classes; the
// suite also looks for a reducible pair where the expression is nonzero and
// records it (the restriction genuinely matters).
inline Result theorem3(const Options& opt) {
    Result res{"theorem3"};
    std::vector<CanonicalGraph> pool = detail::irreducible_pool(Operad::Comm, std::min(opt.max_loops, 3));
    {
        auto assoc = detail::irreducible_pool(Operad::Assoc, std::min(opt.max_loops, 3));
        // Pairs are drawn per operad; keep the pools separate.
        Sampler rand(opt.seed);
        std::string dummy;
        (void)dummy;
        int comm_trials = opt.trials / 2 + opt.trials % 2;
        int assoc_trials = opt.trials - comm_trials;
        auto run_pairs = [&](const std::vector<CanonicalGraph>& p, int count) {
            if (p.empty()) return;
            for (int trial = 0; trial < count; ++trial) {
                const CanonicalGraph& x = rand.pick(p);
                const CanonicalGraph& y = rand.pick(p);
                SymTensor expr = detail::bialgebra_expression(x, y);
                ++res.checks;
                if (!expr.zero())
                    res.fail("irreducible pair (" + x.encoding + ", " + y.encoding + ") -> " +
                             detail::tensor_brief(expr));
            }
        };
        run_pairs(pool, comm_trials);
        run_pairs(assoc, assoc_trials);
    }

    // Reducible witness: scan bridged classes for a pair with nonzero
    // expression.  Pairs whose fused slots disconnect are skipped: fission
    // of a disconnected class is out of scope, so the expression is not
    // defined for them.
    bool found = false;
    for (Operad op : {Operad::Assoc, Operad::Comm}) {
        if (found) break;
        const int cap = (op == Operad::Assoc) ? std::min(opt.max_loops, 3) : std::min(opt.max_loops + 2, 5);
        auto reducibles = detail::reducible_pool(op, cap);
        auto irr = detail::irreducible_pool(op, std::min(opt.max_loops, 3));
        std::vector<CanonicalGraph> partners = irr;
        for (const auto& g : reducibles) partners.push_back(g);
        for (const auto& r : reducibles) {
            for (const auto& p : partners) {
                if (!detail::bialgebra_expression_defined(r, p)) continue;
                SymTensor expr = detail::bialgebra_expression(r, p);
                if (!expr.zero()) {
                    res.notes = "reducible pair (" + r.encoding + ", " + p.encoding +
                                ") gives nonzero expression: " + detail::tensor_brief(expr);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    if (!found) res.fail("no reducible pair with nonzero expression found");
    return res;
}

// phi_n = d mu_n - mu_n d for n = 2, 3, plus the cycle corollary.
inline Result homotopy(const Options& opt) {
    Result res{"homotopy"};
    const auto pool = basis_pool(Operad::Comm, std::min(opt.max_loops, 3));
    if (pool.empty()) { res.fail("empty basis pool"); return res; }
    const auto small = detail::filter_max_edges(pool, 5);
    const auto ribbon = basis_pool(Operad::Assoc, 2);
    Sampler rand(opt.seed);
    for (int trial = 0; trial < opt.trials; ++trial) {
        for (int n : {2, 3}) {
            SymTensor t = (n == 2) ? rand.tensor(pool, 2, 2) : rand.tensor(small, 3, 1);
            Chain lhs = fusion(n, t);
            Chain rhs = boundary(fusion_homotopy(n, t)) - fusion_homotopy(n, boundary_derivation(t));
            ++res.checks;
            if (!(lhs == rhs))
                res.fail("phi_" + std::to_string(n) + " != [d, mu_" + std::to_string(n) + "] on " +
                         detail::tensor_brief(t) + ": " + detail::chain_brief(lhs - rhs));
        }
        if (!ribbon.empty() && trial % 2 == 0) {
            const int n = (trial % 4 == 0) ? 2 : 3;
            SymTensor t = rand.tensor(ribbon, n, 1);
            if (t.zero()) continue;
            Chain lhs = fusion(n, t);
            Chain rhs = boundary(fusion_homotopy(n, t)) - fusion_homotopy(n, boundary_derivation(t));
            ++res.checks;
            if (!(lhs == rhs))
                res.fail("assoc phi_" + std::to_string(n) + " != [d, mu_" + std::to_string(n) +
                         "] on " + detail::tensor_brief(t) + ": " + detail::chain_brief(lhs - rhs));
        }
    }
    // Corollary: on cycles, fusion is the boundary of the open gluing.
    std::vector<CanonicalGraph> cycles;
    for (const auto& cg : pool)
        if (boundary_of_class(cg).zero()) cycles.push_back(cg);
    for (size_t a = 0; a < cycles.size(); ++a)
        for (size_t b = a; b < cycles.size(); ++b) {
            SymTensor t;
            t.add({cycles[a], cycles[b]}, Rat(1));
            if (t.zero()) continue;
            Chain lhs = fusion(2, t);
            Chain rhs = boundary(fusion_homotopy(2, t));
            ++res.checks;
            if (!(lhs == rhs))
                res.fail("cycle corollary on (" + cycles[a].encoding + ", " + cycles[b].encoding + ")");
        }
    return res;
}

// Adjointness <dG, H> = <G, dH> over all basis pairs in consecutive slices.
inline Result adjoint(const Options& opt) {
    Result res{"adjoint"};
    for (Operad op : {Operad::Comm, Operad::Assoc}) {
        const int cap = (op == Operad::Comm) ? std::min(opt.max_loops, 3) : std::min(opt.max_loops, 2);
        for (int n = 1; n <= cap; ++n)
            for (int V = 1; V + 1 <= std::max(1, 2 * n - 2); ++V) {
                BasisSlice lo = enumerate_basis(op, n, V);
                BasisSlice hi = enumerate_basis(op, n, V + 1);
                for (const auto& g : lo.elements) {
                    Chain dg = coboundary_of_class(g);
                    Chain gchain;
                    gchain.add(g, Rat(1));
                    for (const auto& h : hi.elements) {
                        Chain hchain;
                        hchain.add(h, Rat(1));
                        Rat lhs = inner_product(dg, hchain);
                        Rat rhs = inner_product(gchain, boundary_of_class(h));
                        ++res.checks;
                        if (lhs != rhs)
                            res.fail("<dG,H> != <G,dH> for G=" + g.encoding + " H=" + h.encoding +
                                     ": " + to_string(lhs) + " vs " + to_string(rhs));
                    }
                }
            }
    }
    return res;
}

// phi_I^2 = 0 and theta_I^2 = 0 for I = {1,2}, {2,3}, {1,2,3}.
inline Result corollaries(const Options& opt) {
    Result res{"corollaries"};
    const auto pool = basis_pool(Operad::Comm, std::min(opt.max_loops, 3));
    if (pool.empty()) { res.fail("empty basis pool"); return res; }
    const auto tiny = detail::filter_max_edges(pool, 3);
    const auto small = detail::filter_max_edges(pool, 5);
    Sampler rand(opt.seed);
    const std::vector<std::vector<int>> families{{1, 2}, {2, 3}, {1, 2, 3}};
    for (int trial = 0; trial < opt.trials; ++trial) {
        for (const auto& I : families) {
            const bool has3 = std::find(I.begin(), I.end(), 3) != I.end();
            SymTensor t;
            if (has3) {
                std::vector<CanonicalGraph> fs;
                for (int k = 0; k < 4; ++k) fs.push_back(rand.pick(tiny));
                fs.push_back(rand.pick(small));
                t.add(std::move(fs), rand.coeff());
            } else {
                t = rand.tensor(pool, 3, 2);
            }
            SymTensor sq = fusion_total(I, fusion_total(I, t));
            ++res.checks;
            if (!sq.zero()) {
                std::string iname;
                for (int i : I) iname += std::to_string(i);
                res.fail("phi_{" + iname + "}^2 on " + detail::tensor_brief(t) + " -> " +
                         detail::tensor_brief(sq));
            }
            SymTensor u;
            u.add({rand.pick(pool)}, rand.coeff());
            SymTensor sq2 = fission_total(I, fission_total(I, u));
            ++res.checks;
            if (!sq2.zero()) {
                std::string iname;
                for (int i : I) iname += std::to_string(i);
                res.fail("theta_{" + iname + "}^2 on " + detail::tensor_brief(u) + " -> " +
                         detail::tensor_brief(sq2));
            }
        }
    }
    // Ribbon coverage: the aggregated fusion operators across bridged slots.
    const auto ribbon = detail::filter_max_edges(basis_pool(Operad::Assoc, 2), 3);
    if (!ribbon.empty())
        for (int trial = 0; trial < std::max(1, opt.trials / 5); ++trial)
            for (const auto& I : families) {
                SymTensor t = rand.tensor(ribbon, 4, 1);
                if (t.zero()) continue;
                SymTensor sq = fusion_total(I, fusion_total(I, t));
                ++res.checks;
                if (!sq.zero()) {
                    std::string iname;
                    for (int i : I) iname += std::to_string(i);
                    res.fail("assoc phi_{" + iname + "}^2 on " + detail::tensor_brief(t) + " -> " +
                             detail::tensor_brief(sq));
                }
            }
    return res;
}

inline Result run_suite(const std::string& name, const Options& opt) {
    if (name == "dsquare") return dsquare(opt);
    if (name == "canonical") return canonical(opt);
    if (name == "theorem1") return theorem1(opt);
    if (name == "theorem2") return theorem2(opt);
    if (name == "theorem3") return theorem3(opt);
    if (name == "homotopy") return homotopy(opt);
    if (name == "adjoint") return adjoint(opt);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline std::vector<std::string> suite_names() {
    return {"dsquare", "canonical", "theorem1", "theorem2", "theorem3", "homotopy", "adjoint"};
}

} // namespace graphcx::verify
