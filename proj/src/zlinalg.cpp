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

#include "twolie/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace twolie {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Integer> IntMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

std::vector<Integer> IntMatrix::column_vector(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
    if (begin > end || end > rows_) throw InvalidInput("row_block: range out of bounds");
    IntMatrix m(end - begin, cols_);
    std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, m.data_.begin());
    return m;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> x) const {
    if (x.size() != cols_) throw InvalidInput("apply: dimension mismatch");
    std::vector<Integer> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            mpz_addmul(y[i].get_mpz_t(), (*this)(i, j).get_mpz_t(), x[j].get_mpz_t());
        }
    }
    return y;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) mpz_neg((*this)(i, c).get_mpz_t(), (*this)(i, c).get_mpz_t());
}

void IntMatrix::sub_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const Integer& s = (*this)(src, c);
        if (s != 0) mpz_submul((*this)(dst, c).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw InvalidInput("matrix product: dimension mismatch");
    IntMatrix z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Integer& a = x(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) {
                mpz_addmul(z(i, j).get_mpz_t(), a.get_mpz_t(), y(k, j).get_mpz_t());
            }
        }
    }
    return z;
}

std::string IntMatrix::to_string() const {
    std::vector<std::string> cells(data_.size());
    std::size_t width = 1;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        cells[i] = data_[i].get_str();
        width = std::max(width, cells[i].size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& s = cells[r * cols_ + c];
            os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

int cmpabs(const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

// Row operations applied to H and mirrored on U.
struct RowOps {
    IntMatrix& h;
    IntMatrix* u;

    void swap(std::size_t i, std::size_t j) {
        h.swap_rows(i, j);
        if (u) u->swap_rows(i, j);
    }
    void negate(std::size_t i) {
        h.negate_row(i);
        if (u) u->negate_row(i);
    }
    void sub(std::size_t dst, std::size_t src, const Integer& q) {
        h.sub_row_multiple(dst, src, q);
        if (u) u->sub_row_multiple(dst, src, q);
    }
};

std::vector<std::size_t> hermite_in_place(IntMatrix& h, IntMatrix* u) {
    RowOps ops{h, u};
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Integer q;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        bool found = false;
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h(i, c) != 0 && (best == h.rows() || cmpabs(h(i, c), h(best, c)) < 0)) best = i;
            }
            if (best == h.rows()) break;
            found = true;
            ops.swap(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                ops.sub(i, r, q);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        if (h(r, c) < 0) ops.negate(r);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            ops.sub(i, r, q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
    HermiteForm f{m, IntMatrix::identity(m.rows()), {}};
    f.pivot_cols = hermite_in_place(f.H, &f.U);
    return f;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix h = m;
    return hermite_in_place(h, nullptr).size();
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<Integer> out;
    Integer q;
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) swap(a(r, i), a(r, j));
    };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry of the trailing block as pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) != 0 && (pr == rows || cmpabs(a(i, j), a(pr, pc)) < 0)) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) break;
        a.swap_rows(t, pr);
        swap_cols(t, pc);
        for (;;) {
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                a.sub_row_multiple(i, t, q);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t r = 0; r < rows; ++r) {
                    if (a(r, t) != 0) mpz_submul(a(r, j).get_mpz_t(), q.get_mpz_t(), a(r, t).get_mpz_t());
                }
            }
            // a remainder smaller than the pivot becomes the new pivot
            std::size_t br = t, bc = t;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) != 0 && cmpabs(a(i, t), a(br, bc)) < 0) { br = i; bc = t; }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) != 0 && cmpabs(a(t, j), a(br, bc)) < 0) { br = t; bc = j; }
            }
            if (br != t || bc != t) {
                a.swap_rows(t, br);
                swap_cols(t, bc);
                continue;
            }
            bool cross = false;
            for (std::size_t i = t + 1; i < rows && !cross; ++i) {
                if (a(i, t) != 0) cross = true;
            }
            for (std::size_t j = t + 1; j < cols && !cross; ++j) {
                if (a(t, j) != 0) cross = true;
            }
            if (cross) continue;
            // divisibility: fold an offending row into the pivot row
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == rows) break;
            a.sub_row_multiple(t, bad, Integer(-1));
        }
        out.push_back(abs(a(t, t)));
    }
    return out;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

KernelLattice lattice_from_generators(const IntMatrix& generators) {
    IntMatrix h = generators;
    const std::size_t r = hermite_in_place(h, nullptr).size();
    return {generators.cols(), h.row_block(0, r), true};
}

KernelLattice canonicalize(const KernelLattice& x) {
    if (x.canonical) return x;
    KernelLattice c = lattice_from_generators(x.basis);
    c.ambient = x.ambient;
    return c;
}

KernelLattice kernel(const IntMatrix& m) {
    // Rows of U with zero image under M^T span the full kernel, since U is
    // unimodular.
    HermiteForm f = hnf(m.transposed());
    KernelLattice k = lattice_from_generators(f.U.row_block(f.rank(), f.U.rows()));
    k.ambient = m.cols();
    if (k.rank() != m.cols() - f.rank()) throw ConsistencyError("kernel rank mismatch");
    return k;
}

bool lattice_equal(const KernelLattice& x, const KernelLattice& y) {
    if (x.ambient != y.ambient) throw InvalidInput("lattice_equal: ambient dimensions differ");
    return canonicalize(x).basis == canonicalize(y).basis;
}

std::optional<std::vector<Integer>> lattice_coordinates(const KernelLattice& lattice, std::span<const Integer> v) {
    if (v.size() != lattice.ambient) throw InvalidInput("lattice_coordinates: ambient dimension mismatch");
    const KernelLattice c = canonicalize(lattice);
    std::vector<Integer> residual(v.begin(), v.end());
    std::vector<Integer> coords(c.rank());
    for (std::size_t i = 0; i < c.rank(); ++i) {
        std::size_t p = 0;
        while (c.basis(i, p) == 0) ++p;
        if (!mpz_divisible_p(residual[p].get_mpz_t(), c.basis(i, p).get_mpz_t())) return std::nullopt;
        mpz_divexact(coords[i].get_mpz_t(), residual[p].get_mpz_t(), c.basis(i, p).get_mpz_t());
        for (std::size_t j = 0; j < c.ambient; ++j) {
            mpz_submul(residual[j].get_mpz_t(), coords[i].get_mpz_t(), c.basis(i, j).get_mpz_t());
        }
    }
    for (const auto& x : residual) {
        if (x != 0) return std::nullopt;
    }
    // Coordinates refer to the canonical basis; re-express against the given
    // basis when it differs.
    if (!lattice.canonical && !(c.basis == lattice.basis)) {
        // Solve coords_given * B = v by expressing B in the canonical basis.
        IntMatrix t(lattice.rank(), c.rank());
        for (std::size_t i = 0; i < lattice.rank(); ++i) {
            auto row = lattice_coordinates(c, lattice.basis.row(i));
            for (std::size_t j = 0; j < c.rank(); ++j) t(i, j) = (*row)[j];
        }
        // t is unimodular when the given rows form a basis; invert via HNF.
        HermiteForm f = hnf(t);
        // f.U * t = I, so coords_given = coords * f.U
        std::vector<Integer> out(lattice.rank());
        for (std::size_t j = 0; j < lattice.rank(); ++j) {
            for (std::size_t i = 0; i < c.rank(); ++i) {
                mpz_addmul(out[j].get_mpz_t(), coords[i].get_mpz_t(), f.U(i, j).get_mpz_t());
            }
        }
        return out;
    }
    return coords;
}

std::optional<Integer> lattice_index(const KernelLattice& sub, const KernelLattice& super) {
    if (sub.ambient != super.ambient) throw InvalidInput("lattice_index: ambient dimensions differ");
    const KernelLattice s = canonicalize(sub);
    const KernelLattice p = canonicalize(super);
    if (s.rank() != p.rank()) return std::nullopt;
    IntMatrix t(s.rank(), p.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        auto row = lattice_coordinates(p, s.basis.row(i));
        if (!row) return std::nullopt;
        for (std::size_t j = 0; j < p.rank(); ++j) t(i, j) = (*row)[j];
    }
    return abs(determinant(t));
}

}  // namespace twolie
