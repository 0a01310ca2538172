// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphcx/homology.hpp"

using namespace graphcx;

namespace {

BoundaryMatrix synthetic(int rows, int cols, const std::vector<std::tuple<int, int, Rat>>& entries) {
    BoundaryMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.columns.resize(cols);
    for (const auto& [r, c, v] : entries) m.columns[c][r] = v;
    return m;
}

// Exact product of consecutive boundary matrices.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
    // lower: C_V -> C_{V-1}; upper: C_{V+1} -> C_V.
    for (int c = 0; c < upper.cols; ++c) {
        std::map<int, Rat> image;
        for (const auto& [mid, coeff] : upper.columns[c])
            for (const auto& [row, inner] : lower.columns[mid]) {
                image[row] += coeff * inner;
            }
        for (const auto& [row, val] : image)
            if (!is_zero(val)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("the theta column maps to an empty slice") {
    BoundaryMatrix m = boundary_matrix(Operad::Comm, 2, 2);
    CHECK(m.rows == 0);
    CHECK(m.cols == 1);
    CHECK(matrix_rank(m) == 0);
    CHECK(dense_rank_oracle(m) == 0);
}

TEST_CASE("consecutive boundary matrices compose to zero") {
    for (Operad op : {Operad::Comm, Operad::Assoc}) {
        const int cap = (op == Operad::Comm) ? 4 : 3;
        for (int n = 2; n <= cap; ++n)
            for (int V = 2; V <= std::max(1, 2 * n - 2); ++V) {
                BoundaryMatrix lower = boundary_matrix(op, n, V - 1);
                BoundaryMatrix upper = boundary_matrix(op, n, V);
                CHECK(composes_to_zero(lower, upper));
            }
    }
}

TEST_CASE("rank on synthetic matrices") {
    CHECK(matrix_rank(synthetic(3, 3, {})) == 0);
    CHECK(matrix_rank(synthetic(3, 3,
                                {{0, 0, Rat(1)}, {1, 1, Rat(2)}, {2, 2, make_rat(1, 2)}})) == 3);
    // Rank-1 outer product with rational entries.
    CHECK(matrix_rank(synthetic(2, 2,
                                {{0, 0, make_rat(1, 3)},
                                 {0, 1, make_rat(2, 3)},
                                 {1, 0, Rat(2)},
                                 {1, 1, Rat(4)}})) == 1);
    CHECK(dense_rank_oracle(synthetic(2, 2,
                                      {{0, 0, make_rat(1, 3)},
                                       {0, 1, make_rat(2, 3)},
                                       {1, 0, Rat(2)},
                                       {1, 1, Rat(4)}})) == 1);
}

TEST_CASE("fraction-free and dense ranks agree on every computed matrix") {
    for (Operad op : {Operad::Comm, Operad::Assoc}) {
        const int cap = (op == Operad::Comm) ? 4 : 3;
        for (int n = 2; n <= cap; ++n)
            for (int V = 1; V <= std::max(1, 2 * n - 2); ++V) {
                BoundaryMatrix m = boundary_matrix(op, n, V);
                CHECK(matrix_rank(m) == dense_rank_oracle(m));
            }
    }
}

TEST_CASE("homology tables match the recorded census") {
    // Regression values from the first certified run.
    HomologyTable c2 = homology_table(Operad::Comm, 2);
    REQUIRE(c2.rows.size() == 2);
    CHECK(c2.rows[1].dim == 1);
    CHECK(c2.rows[1].boundary_rank == 0);
    CHECK(c2.rows[1].homology_rank == 1);
    CHECK(c2.euler_identity_holds());

    HomologyTable c3 = homology_table(Operad::Comm, 3);
    REQUIRE(c3.rows.size() == 4);
    const int c3_dim[] = {0, 0, 1, 2};
    const int c3_rank[] = {0, 0, 0, 1};
    const int c3_hom[] = {0, 0, 0, 1};
    for (int i = 0; i < 4; ++i) {
        CHECK(c3.rows[i].dim == c3_dim[i]);
        CHECK(c3.rows[i].boundary_rank == c3_rank[i]);
        CHECK(c3.rows[i].homology_rank == c3_hom[i]);
    }
    CHECK(c3.euler_identity_holds());

    HomologyTable a2 = homology_table(Operad::Assoc, 2);
    REQUIRE(a2.rows.size() == 2);
    CHECK(a2.rows[0].dim == 1);
    CHECK(a2.rows[0].homology_rank == 0);
    CHECK(a2.rows[1].dim == 3);
    CHECK(a2.rows[1].boundary_rank == 1);
    CHECK(a2.rows[1].homology_rank == 2);
    CHECK(a2.euler_identity_holds());
}

TEST_CASE("loop number one gives the all-zero table") {
    HomologyTable t = homology_table(Operad::Comm, 1);
    for (const auto& r : t.rows) {
        CHECK(r.dim == 0);
        CHECK(r.homology_rank == 0);
    }
    CHECK(t.euler_identity_holds());
}
