/* Copyright 2026 The twolie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twolie/zlinalg.hpp"

using namespace twolie;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Integer>> r;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        r.emplace_back();
        for (int x : row) r.back().push_back(x);
        cols = r.back().size();
    }
    return IntMatrix::from_rows(r, cols);
}

IntMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> e(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(gen);
    }
    return m;
}

std::vector<std::vector<mpq_class>> rational(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

void check_hermite_shape(const HermiteForm& f) {
    for (std::size_t r = 0; r < f.rank(); ++r) {
        const std::size_t p = f.pivot_cols[r];
        CHECK(f.H(r, p) > 0);
        for (std::size_t c = 0; c < p; ++c) CHECK(f.H(r, c) == 0);
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(f.H(i, p) >= 0);
            CHECK(f.H(i, p) < f.H(r, p));
        }
        for (std::size_t i = r + 1; i < f.H.rows(); ++i) CHECK(f.H(i, p) == 0);
    }
    for (std::size_t r = f.rank(); r < f.H.rows(); ++r) {
        for (std::size_t c = 0; c < f.H.cols(); ++c) CHECK(f.H(r, c) == 0);
    }
}

}  // namespace

TEST_CASE("hnf examples") {
    auto f = hnf(IntMatrix::identity(3));
    CHECK(f.H == IntMatrix::identity(3));
    CHECK(f.U == IntMatrix::identity(3));
    CHECK(hnf(mat({{2}, {4}})).H == mat({{2}, {0}}));
    CHECK(hnf(mat({{-1, 1}})).H == mat({{1, -1}}));
    CHECK(hnf(mat({{4, 6}, {6, 9}})).H == mat({{2, 3}, {0, 0}}));
}

TEST_CASE("hnf reconstruction on random matrices") {
    std::mt19937 gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> d(0, 7);
        IntMatrix m = random_matrix(gen, d(gen) + 1, d(gen) + 1);
        HermiteForm f = hnf(m);
        CHECK(f.U * m == f.H);
        CHECK(abs(determinant(f.U)) == 1);
        check_hermite_shape(f);
        CHECK(f.rank() == oracle::rational_rank(rational(m)));
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix::identity(5)) == 5);
    CHECK(rank(mat({{2, 4}, {1, 2}})) == 1);
    CHECK(rank(IntMatrix(3, 4)) == 0);
    CHECK(rank(IntMatrix(0, 4)) == 0);
}

TEST_CASE("kernel examples") {
    KernelLattice k = kernel(mat({{-1, 1}}));
    REQUIRE(k.rank() == 1);
    CHECK(k.basis == mat({{1, 1}}));
    CHECK(k.canonical);
    CHECK(kernel(IntMatrix(2, 2)).rank() == 2);
    CHECK(kernel(IntMatrix::identity(3)).rank() == 0);
    // zero-row matrix: the whole space
    CHECK(kernel(IntMatrix(0, 3)).rank() == 3);
    // kernel of [2, 4] is spanned by (2,-1), not (4,-2)
    KernelLattice k2 = kernel(mat({{2, 4}}));
    CHECK(lattice_equal(k2, lattice_from_generators(mat({{2, -1}}))));
}

TEST_CASE("fuzz: kernels annihilate, have the right rank and are pure") {
    std::mt19937 gen(99);
    std::uniform_int_distribution<std::size_t> d(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m = random_matrix(gen, d(gen), d(gen));
        KernelLattice k = kernel(m);
        CHECK(k.rank() == m.cols() - oracle::rational_rank(rational(m)));
        for (std::size_t i = 0; i < k.rank(); ++i) {
            for (const auto& x : m.apply(k.basis.row(i))) CHECK(x == 0);
        }
        for (const auto& f : smith_invariants(k.basis)) CHECK(f == 1);
    }
}

TEST_CASE("smith invariants") {
    auto s = smith_invariants(mat({{2, 0}, {0, 3}}));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == 1);
    CHECK(s[1] == 6);
    s = smith_invariants(mat({{2, 4}, {6, 8}}));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == 2);
    CHECK(s[1] == 4);
    CHECK(smith_invariants(IntMatrix(2, 3)).empty());
    std::mt19937 gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = random_matrix(gen, 4, 4, -4, 4);
        auto inv = smith_invariants(m);
        for (std::size_t i = 1; i < inv.size(); ++i) CHECK(mpz_divisible_p(inv[i].get_mpz_t(), inv[i - 1].get_mpz_t()));
        if (inv.size() == 4) {
            Integer prod = 1;
            for (const auto& x : inv) prod *= x;
            CHECK(prod == abs(determinant(m)));
        } else {
            CHECK(determinant(m) == 0);
        }
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 24);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InvalidInput);
}

TEST_CASE("lattice equality, coordinates and index") {
    KernelLattice x = lattice_from_generators(mat({{1, 1}}));
    CHECK(lattice_equal(x, x));
    CHECK(lattice_equal(x, lattice_from_generators(mat({{-1, -1}}))));
    CHECK_FALSE(lattice_equal(x, lattice_from_generators(mat({{2, 2}}))));
    CHECK_THROWS_AS(lattice_equal(x, lattice_from_generators(mat({{1, 1, 1}}))), InvalidInput);

    KernelLattice full = lattice_from_generators(IntMatrix::identity(2));
    KernelLattice sub = lattice_from_generators(mat({{2, 0}, {0, 3}}));
    CHECK(lattice_index(sub, full) == Integer(6));
    CHECK_FALSE(lattice_index(full, sub).has_value());
    CHECK(lattice_index(x, x) == Integer(1));

    auto c = lattice_coordinates(sub, std::vector<Integer>{4, -9});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == -3);
    CHECK_FALSE(lattice_coordinates(sub, std::vector<Integer>{1, 0}).has_value());

    // coordinates against a non-canonical basis
    KernelLattice raw{2, mat({{1, 1}, {0, 1}}), false};
    auto d = lattice_coordinates(raw, std::vector<Integer>{3, 5});
    REQUIRE(d.has_value());
    CHECK((*d)[0] == 3);
    CHECK((*d)[1] == 2);
}
