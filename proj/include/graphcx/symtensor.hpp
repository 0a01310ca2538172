// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphcx/canonical.hpp"
#include "graphcx/chain.hpp"
#include "graphcx/rational.hpp"

namespace graphcx {

// Koszul sign of sorting factors by encoding (degree = vertex count mod 2);
// 0 when a repeated odd factor kills the monomial.
inline int koszul_sort(std::vector<CanonicalGraph>& fs) {
    int sign = 1;
    for (size_t i = 1; i < fs.size(); ++i)
        for (size_t j = i; j > 0 && fs[j].encoding < fs[j - 1].encoding; --j) {
            if (fs[j].odd() && fs[j - 1].odd()) sign = -sign;
            std::swap(fs[j], fs[j - 1]);
        }
    for (size_t i = 1; i < fs.size(); ++i)
        if (fs[i].odd() && fs[i].encoding == fs[i - 1].encoding) return 0;
    return sign;
}

inline std::string monomial_key(const std::vector<CanonicalGraph>& fs) {
    std::string key;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i) key.push_back('#');
        key += fs[i].encoding;
    }
    return key;
}

// Element of the symmetric algebra on canonical classes: sparse rational
// combination of sorted multisets of canonical graphs.  Inputs are built
// from connected classes; fusion can produce disconnected slots (U-encoded),
// which stay whole so that repeated fusions never pair two edges inside one
// slot.
struct SymTensor {
    struct Term {
        std::vector<CanonicalGraph> factors;   // sorted by encoding
        Rat coeff;

        int total_vertices() const {
            int v = 0;
            for (const auto& f : factors) v += f.vcount();
            return v;
        }
    };
    std::map<std::string, Term> terms;

    bool zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    // Adds coeff * (factors in the written order), normalizing with Koszul
    // signs.  Zero-flagged factors and killed monomials drop out.
    void add(std::vector<CanonicalGraph> factors, const Rat& coeff) {
        if (is_zero(coeff)) return;
        for (const auto& f : factors)
            if (f.zero_flag) return;
        int sign = koszul_sort(factors);
        if (sign == 0) return;
        const std::string key = monomial_key(factors);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, Term{std::move(factors), coeff * sign});
        } else {
            it->second.coeff += coeff * sign;
            if (is_zero(it->second.coeff)) terms.erase(it);
        }
    }

    SymTensor& operator+=(const SymTensor& o) {
        for (const auto& [key, t] : o.terms) {
            auto it = terms.find(key);
            if (it == terms.end()) {
                terms.emplace(key, t);
            } else {
                it->second.coeff += t.coeff;
                if (is_zero(it->second.coeff)) terms.erase(it);
            }
        }
        return *this;
    }

    SymTensor& operator-=(const SymTensor& o) {
        for (const auto& [key, t] : o.terms) {
            auto it = terms.find(key);
            if (it == terms.end()) {
                terms.emplace(key, Term{t.factors, -t.coeff});
            } else {
                it->second.coeff -= t.coeff;
                if (is_zero(it->second.coeff)) terms.erase(it);
            }
        }
        return *this;
    }

    SymTensor& operator*=(const Rat& s) {
        if (is_zero(s)) { terms.clear(); return *this; }
        for (auto& [key, t] : terms) t.coeff *= s;
        return *this;
    }

    friend SymTensor operator+(SymTensor a, const SymTensor& b) { a += b; return a; }
    friend SymTensor operator-(SymTensor a, const SymTensor& b) { a -= b; return a; }
    friend SymTensor operator*(SymTensor a, const Rat& s) { a *= s; return a; }

    bool operator==(const SymTensor& o) const {
        if (terms.size() != o.terms.size()) return false;
        auto it = o.terms.begin();
        for (auto jt = terms.begin(); jt != terms.end(); ++jt, ++it)
            if (jt->first != it->first || jt->second.coeff != it->second.coeff) return false;
        return true;
    }
};

// The isomorphism G^O = S(PG^O): each chain term becomes the multiset of its
// connected pieces with the block-reordering sign.
inline SymTensor split_components(const Chain& c) {
    SymTensor out;
    for (const auto& [enc, t] : c.terms) {
        ComponentSplit split = split_canonical(with_default_orientation(t.graph));
        out.add(std::move(split.factors), t.coeff * split.sign);
    }
    return out;
}

// Inverse direction: multiply the factors back together.
inline Chain tensor_to_chain(const SymTensor& t) {
    Chain out;
    for (const auto& [key, term] : t.terms) {
        OrientedGraph acc = with_default_orientation(term.factors.front().graph);
        for (size_t i = 1; i < term.factors.size(); ++i)
            acc = disjoint_union(acc, with_default_orientation(term.factors[i].graph));
        out.add_canonicalized(canonicalize(acc), term.coeff);
    }
    return out;
}

// Slot-per-term embedding of a chain: each canonical class, connected or
// not, becomes one tensor factor.
inline SymTensor tensor_of_chain(const Chain& c) {
    SymTensor out;
    for (const auto& [enc, t] : c.terms) out.add({CanonicalGraph{enc, false, t.graph}}, t.coeff);
    return out;
}

} // namespace graphcx
