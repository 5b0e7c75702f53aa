/*
 * Copyright 2026 The agdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "field.hpp"

namespace agdec {

using Vec = std::vector<elem_t>;

/// Dense row-major matrix of raw field elements. The field travels separately.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    elem_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    elem_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::span<elem_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const elem_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

    void append_row(std::span<const elem_t> r);
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    Matrix transposed() const;
    /// Columns [0, n) only (n <= cols).
    Matrix left_columns(std::size_t n) const;
    /// Pads every row with zeros up to n columns (n >= cols).
    Matrix widened(std::size_t n) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<elem_t> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vec multiply(const Field& f, const Matrix& a, std::span<const elem_t> v);
/// v^T * a, i.e. the linear combination of a's rows with weights v.
Vec combine_rows(const Field& f, std::span<const elem_t> weights, const Matrix& a);
elem_t dot(const Field& f, std::span<const elem_t> a, std::span<const elem_t> b);

struct RrefResult {
    Matrix reduced;  // nonzero rows first; zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduced row-echelon form. Zero rows are removed from the result.
RrefResult rref(const Field& f, Matrix m);

/// Solves m x = b; the particular solution with every free variable set to zero.
std::optional<Vec> solve(const Field& f, const Matrix& m, std::span<const elem_t> b);

/// Column-batched solve: rhs has m.rows() rows, one right-hand side per column.
std::vector<std::optional<Vec>> solve_many(const Field& f, const Matrix& m, const Matrix& rhs);

class Subspace;
/// Null space {v : m v = 0} inside F^{m.cols()}.
Subspace kernel(const Field& f, const Matrix& m);

/**
 * Subspace of F^ambient held by its reduced row-echelon basis, which is the
 * canonical representative: two subspaces are equal iff their bases are.
 */
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    /// Row space of the given spanning rows (need not be independent).
    static Subspace span(const Field& f, Matrix rows);
    static Subspace span(const Field& f, const std::vector<Vec>& rows, std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vec vector(std::size_t i) const { return basis_.row_vec(i); }

    /// Reduces v against the basis in place; v ends as the canonical residue
    /// (zero at every pivot column). The map v -> residue is linear with kernel = this.
    void reduce(const Field& f, std::span<elem_t> v) const;
    bool contains(const Field& f, std::span<const elem_t> v) const;
    bool contains(const Field& f, const Subspace& other) const;
    /// Coordinates of v in the rref basis, or nullopt when v is outside.
    std::optional<Vec> coordinates(const Field& f, std::span<const elem_t> v) const;

    Subspace sum(const Field& f, const Subspace& other) const;
    Subspace intersect(const Field& f, const Subspace& other) const;
    /// {w in this : functional(w) = 0} for each row of `functionals`, applied as dot products.
    Subspace restrict_to(const Field& f, const Matrix& functionals) const;

    bool operator==(const Subspace&) const = default;

private:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct Decomposition {
    Vec u1;
    Vec u2;
    Vec z;
};

/// Splits v = u1 + u2 + z along U1 (+) U2 (+) Z. The three must be in direct sum
/// and v must lie in their span.
Decomposition decompose(const Field& f, std::span<const elem_t> v, const Subspace& u1, const Subspace& u2,
                        const Subspace& z);

/// Batched form of decompose for the rows of vs; Z may be the zero subspace.
std::vector<Decomposition> decompose_rows(const Field& f, const Matrix& vs, const Subspace& u1,
                                          const Subspace& u2, const Subspace& z);

/// Picks rows of `whole` (a superspace of `part`) completing part's basis: part (+) result = whole.
Subspace complement(const Field& f, const Subspace& part, const Subspace& whole);

}  // namespace agdec
