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

// Exact integer matrices: Hermite and Smith normal forms, rank, kernels.

#ifndef TWOLIE_ZLINALG_HPP
#define TWOLIE_ZLINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twolie/integer.hpp"

namespace twolie {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    /// Every row must have length cols.
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Integer> row_vector(std::size_t r) const;
    std::vector<Integer> column_vector(std::size_t c) const;

    bool is_zero() const;
    IntMatrix transposed() const;
    /// Rows [begin, end).
    IntMatrix row_block(std::size_t begin, std::size_t end) const;
    std::vector<Integer> apply(std::span<const Integer> x) const;

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row dst -= q * row src
    void sub_row_multiple(std::size_t dst, std::size_t src, const Integer& q);

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct HermiteForm {
    IntMatrix H;  ///< row Hermite normal form, nonzero rows first
    IntMatrix U;  ///< unimodular, H = U * M
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Row-style HNF: pivots positive, entries above a pivot reduced into
/// [0, pivot). Pivot rows are chosen by minimal absolute value.
HermiteForm hnf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws InvalidInput if not square.
Integer determinant(const IntMatrix& m);

/// Integer lattice given by basis rows.
struct KernelLattice {
    std::size_t ambient = 0;
    IntMatrix basis;  ///< rank() x ambient
    bool canonical = false;

    std::size_t rank() const { return basis.rows(); }
};

/// Lattice spanned by the rows of generators, in canonical (HNF) form.
KernelLattice lattice_from_generators(const IntMatrix& generators);
KernelLattice canonicalize(const KernelLattice& x);

/// Basis of {x in Z^cols : M x = 0}, canonical.
KernelLattice kernel(const IntMatrix& m);

/// Throws InvalidInput when ambient dimensions differ.
bool lattice_equal(const KernelLattice& x, const KernelLattice& y);

/// Integer coordinates of v against the lattice basis, or nullopt when v is
/// not in the lattice.
std::optional<std::vector<Integer>> lattice_coordinates(const KernelLattice& lattice, std::span<const Integer> v);

/// [super : sub] when sub is a sublattice of super of the same rank,
/// otherwise nullopt.
std::optional<Integer> lattice_index(const KernelLattice& sub, const KernelLattice& super);

}  // namespace twolie

#endif  // TWOLIE_ZLINALG_HPP
