// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcx/chain.hpp"
#include "graphcx/enumerate.hpp"
#include "graphcx/rational.hpp"
#include "graphcx/util.hpp"

namespace graphcx {

// Matrix of the boundary from the (n, V) slice to the (n, V-1) slice, column
// per source basis class, sparse exact-rational entries.
struct BoundaryMatrix {
    Operad operad = Operad::Comm;
    int loop_number = 0;
    int vertex_count = 0;     // column grading
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Rat>> columns;
};

inline BoundaryMatrix boundary_matrix(Operad op, int n, int V) {
    BasisSlice source = enumerate_basis(op, n, V);
    BasisSlice target = (V >= 2) ? enumerate_basis(op, n, V - 1) : BasisSlice{op, n, 0, {}};

    std::map<std::string, int> row_of;
    for (size_t r = 0; r < target.elements.size(); ++r) row_of.emplace(target.elements[r].encoding, static_cast<int>(r));

    BoundaryMatrix m;
    m.operad = op;
    m.loop_number = n;
    m.vertex_count = V;
    m.rows = static_cast<int>(target.elements.size());
    m.cols = static_cast<int>(source.elements.size());
    m.columns.resize(m.cols);
    parallel_for(m.cols, [&](int c) {
        Chain dc = boundary_of_class(source.elements[c]);
        for (const auto& [enc, term] : dc.terms) {
            auto it = row_of.find(enc);
            if (it == row_of.end())
                throw std::logic_error("boundary_matrix: boundary term outside target slice");
            m.columns[c].emplace(it->second, term.coeff);
        }
    });
    return m;
}

// Fraction-free Bareiss elimination over the integers after clearing column
// denominators; pivots chosen structurally (sparsest column, then lowest
// indices) so the run is deterministic.
inline int matrix_rank(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols, 0));
    for (int c = 0; c < m.cols; ++c) {
        Int den(1);
        for (const auto& [r, val] : m.columns[c]) den = lcm(den, Int(val.get_den()));
        for (const auto& [r, val] : m.columns[c]) {
            Rat scaled = val * Rat(den);
            a[r][c] = Int(scaled.get_num());
        }
    }

    std::vector<char> row_used(m.rows, 0), col_used(m.cols, 0);
    Int prev(1);
    int rank = 0;
    for (;;) {
        int best_col = -1, best_count = -1;
        for (int c = 0; c < m.cols; ++c) {
            if (col_used[c]) continue;
            int count = 0;
            for (int r = 0; r < m.rows; ++r)
                if (!row_used[r] && a[r][c] != 0) ++count;
            if (count == 0) continue;
            if (best_count < 0 || count < best_count) { best_count = count; best_col = c; }
        }
        if (best_col < 0) break;
        int pivot_row = -1;
        for (int r = 0; r < m.rows; ++r)
            if (!row_used[r] && a[r][best_col] != 0) { pivot_row = r; break; }
        const Int pivot = a[pivot_row][best_col];
        for (int r = 0; r < m.rows; ++r) {
            if (row_used[r] || r == pivot_row) continue;
            for (int c = 0; c < m.cols; ++c) {
                if (col_used[c] || c == best_col) continue;
                Int t = a[r][c] * pivot - a[r][best_col] * a[pivot_row][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = t;
            }
            a[r][best_col] = 0;
        }
        prev = pivot;
        row_used[pivot_row] = 1;
        col_used[best_col] = 1;
        ++rank;
    }
    return rank;
}

// Textbook rational Gaussian elimination; the independent rank oracle.
inline int dense_rank_oracle(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols, Rat(0)));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, val] : m.columns[c]) a[r][c] = val;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (!is_zero(a[r][col])) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[row]);
        for (int r = row + 1; r < m.rows; ++r) {
            if (is_zero(a[r][col])) continue;
            Rat f = a[r][col] / a[row][col];
            for (int c = col; c < m.cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

struct HomologyTable {
    Operad operad = Operad::Comm;
    int loop_number = 0;
    struct Row {
        int vertices = 0;
        int dim = 0;
        int boundary_rank = 0;   // rank of d: C_V -> C_{V-1}
        int homology_rank = 0;
    };
    std::vector<Row> rows;

    bool euler_identity_holds() const {
        long lhs = 0, rhs = 0;
        for (const auto& r : rows) {
            const long s = (r.vertices % 2 == 0) ? 1 : -1;
            lhs += s * r.dim;
            rhs += s * r.homology_rank;
        }
        return lhs == rhs;
    }
};

inline HomologyTable homology_table(Operad op, int n) {
    if (n < 1) throw std::invalid_argument("homology_table: need n >= 1");
    HomologyTable table;
    table.operad = op;
    table.loop_number = n;
    const int vmax = std::max(1, 2 * n - 2);
    std::vector<int> dim(vmax + 2, 0), rank(vmax + 2, 0);
    for (int V = 1; V <= vmax; ++V) {
        dim[V] = static_cast<int>(enumerate_basis(op, n, V).size());
        rank[V] = matrix_rank(boundary_matrix(op, n, V));
    }
    for (int V = 1; V <= vmax; ++V) {
        HomologyTable::Row r;
        r.vertices = V;
        r.dim = dim[V];
        r.boundary_rank = rank[V];
        r.homology_rank = dim[V] - rank[V] - (V + 1 <= vmax ? rank[V + 1] : 0);
        table.rows.push_back(r);
    }
    return table;
}

} // namespace graphcx
