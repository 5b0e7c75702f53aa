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

#include "linalg.hpp"

#include <algorithm>

namespace agdec {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, ErrorKind::dimension, "ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

void Matrix::append_row(std::span<const elem_t> r)
{
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    require(r.size() == cols_, ErrorKind::dimension, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept
{
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::left_columns(std::size_t n) const
{
    require(n <= cols_, ErrorKind::dimension, "left_columns beyond width");
    Matrix out(rows_, n);
    for (std::size_t r = 0; r < rows_; ++r) std::copy_n(row(r).begin(), n, out.row(r).begin());
    return out;
}

Matrix Matrix::widened(std::size_t n) const
{
    require(n >= cols_, ErrorKind::dimension, "widened below width");
    Matrix out(rows_, n);
    for (std::size_t r = 0; r < rows_; ++r) std::copy(row(r).begin(), row(r).end(), out.row(r).begin());
    return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b)
{
    require(a.cols() == b.rows(), ErrorKind::dimension, "matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) f.axpy(out.row(i), b.row(k), a(i, k));
    return out;
}

Vec multiply(const Field& f, const Matrix& a, std::span<const elem_t> v)
{
    require(a.cols() == v.size(), ErrorKind::dimension, "matrix-vector shape mismatch");
    Vec out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(f, a.row(i), v);
    return out;
}

Vec combine_rows(const Field& f, std::span<const elem_t> weights, const Matrix& a)
{
    require(weights.size() == a.rows(), ErrorKind::dimension, "row combination shape mismatch");
    Vec out(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) f.axpy(out, a.row(i), weights[i]);
    return out;
}

elem_t dot(const Field& f, std::span<const elem_t> a, std::span<const elem_t> b)
{
    require(a.size() == b.size(), ErrorKind::dimension, "dot product length mismatch");
    elem_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

namespace {

// Gauss-Jordan on the first `pivot_cols` columns; row operations act on whole
// rows. Leaves the rank rows on top and returns their pivot columns.
std::vector<std::size_t> eliminate(const Field& f, Matrix& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t width = m.cols();
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        const elem_t inv = f.inv(m(r, c));
        auto prow = m.row(r).subspan(c, width - c);
        f.scale(prow, inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const elem_t factor = m(i, c);
            if (factor == 0) continue;
            f.axpy(m.row(i).subspan(c, width - c), prow, f.neg(factor));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Field& f, Matrix m)
{
    RrefResult res;
    res.pivots = eliminate(f, m, m.cols());
    res.rank = res.pivots.size();
    res.reduced = Matrix(res.rank, m.cols());
    for (std::size_t i = 0; i < res.rank; ++i)
        std::copy(m.row(i).begin(), m.row(i).end(), res.reduced.row(i).begin());
    return res;
}

std::vector<std::optional<Vec>> solve_many(const Field& f, const Matrix& m, const Matrix& rhs)
{
    require(rhs.rows() == m.rows(), ErrorKind::dimension, "right-hand side length mismatch");
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + rhs.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
        std::copy(rhs.row(i).begin(), rhs.row(i).end(), aug.row(i).begin() + static_cast<std::ptrdiff_t>(n));
    }
    const auto pivots = eliminate(f, aug, n);
    std::vector<std::optional<Vec>> out(rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        bool consistent = true;
        for (std::size_t i = pivots.size(); i < aug.rows() && consistent; ++i)
            if (aug(i, n + j) != 0) consistent = false;
        if (!consistent) continue;
        Vec x(n, 0);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, n + j);
        out[j] = std::move(x);
    }
    return out;
}

std::optional<Vec> solve(const Field& f, const Matrix& m, std::span<const elem_t> b)
{
    require(b.size() == m.rows(), ErrorKind::dimension, "right-hand side length mismatch");
    Matrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    return std::move(solve_many(f, m, rhs).front());
}

Subspace kernel(const Field& f, const Matrix& m)
{
    const std::size_t n = m.cols();
    const RrefResult r = rref(f, m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(n, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, fc));
        basis.append_row(v);
    }
    if (basis.rows() == 0) return Subspace::zero(n);
    return Subspace::span(f, std::move(basis));
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(const Field& f, Matrix rows)
{
    Subspace s(rows.cols());
    RrefResult r = rref(f, std::move(rows));
    s.basis_ = std::move(r.reduced);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(const Field& f, const std::vector<Vec>& rows, std::size_t ambient)
{
    if (rows.empty()) return zero(ambient);
    return span(f, Matrix::from_rows(rows, ambient));
}

void Subspace::reduce(const Field& f, std::span<elem_t> v) const
{
    require(v.size() == ambient_, ErrorKind::dimension, "ambient dimension mismatch");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const elem_t c = v[pivots_[i]];
        if (c != 0) f.axpy(v, basis_.row(i), f.neg(c));
    }
}

bool Subspace::contains(const Field& f, std::span<const elem_t> v) const
{
    Vec w(v.begin(), v.end());
    reduce(f, w);
    return std::all_of(w.begin(), w.end(), [](elem_t x) { return x == 0; });
}

bool Subspace::contains(const Field& f, const Subspace& other) const
{
    require(other.ambient_ == ambient_, ErrorKind::dimension, "ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(f, other.basis_.row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Field& f, std::span<const elem_t> v) const
{
    require(v.size() == ambient_, ErrorKind::dimension, "ambient dimension mismatch");
    Vec coords(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = v[pivots_[i]];
    if (!contains(f, v)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Field& f, const Subspace& other) const
{
    require(other.ambient_ == ambient_, ErrorKind::dimension, "ambient dimension mismatch");
    Matrix stacked(dim() + other.dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i) std::copy(basis_.row(i).begin(), basis_.row(i).end(), stacked.row(i).begin());
    for (std::size_t i = 0; i < other.dim(); ++i)
        std::copy(other.basis_.row(i).begin(), other.basis_.row(i).end(), stacked.row(dim() + i).begin());
    if (stacked.rows() == 0) return zero(ambient_);
    return span(f, std::move(stacked));
}

Subspace Subspace::intersect(const Field& f, const Subspace& other) const
{
    require(other.ambient_ == ambient_, ErrorKind::dimension, "ambient dimension mismatch");
    const std::size_t n = ambient_;
    if (is_zero() || other.is_zero()) return zero(n);
    // Zassenhaus: rows (u | u) and (v | 0); rows with zero left half span U n V
    Matrix z(dim() + other.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) z(i, c) = z(i, n + c) = basis_(i, c);
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) z(dim() + i, c) = other.basis_(i, c);
    const RrefResult r = rref(f, std::move(z));
    Matrix inter;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] < n) continue;
        inter.append_row(r.reduced.row(i).subspan(n, n));
    }
    if (inter.rows() == 0) return zero(n);
    return span(f, std::move(inter));
}

Subspace Subspace::restrict_to(const Field& f, const Matrix& functionals) const
{
    require(functionals.cols() == ambient_, ErrorKind::dimension, "functional length mismatch");
    if (is_zero() || functionals.rows() == 0) return *this;
    Matrix a(functionals.rows(), dim());
    for (std::size_t r = 0; r < functionals.rows(); ++r)
        for (std::size_t i = 0; i < dim(); ++i) a(r, i) = dot(f, functionals.row(r), basis_.row(i));
    const Subspace coeffs = kernel(f, a);
    if (coeffs.is_zero()) return zero(ambient_);
    Matrix rows(coeffs.dim(), ambient_);
    for (std::size_t j = 0; j < coeffs.dim(); ++j) {
        const Vec w = combine_rows(f, coeffs.basis().row(j), basis_);
        std::copy(w.begin(), w.end(), rows.row(j).begin());
    }
    return span(f, std::move(rows));
}

std::vector<Decomposition> decompose_rows(const Field& f, const Matrix& vs, const Subspace& u1,
                                          const Subspace& u2, const Subspace& z)
{
    const std::size_t n = u1.ambient();
    require(u2.ambient() == n && z.ambient() == n && vs.cols() == n, ErrorKind::dimension,
            "ambient dimension mismatch");
    const std::size_t d1 = u1.dim(), d2 = u2.dim(), dz = z.dim();
    Matrix gens(d1 + d2 + dz, n);
    std::size_t r = 0;
    for (const Subspace* s : {&u1, &u2, &z})
        for (std::size_t i = 0; i < s->dim(); ++i, ++r)
            std::copy(s->basis().row(i).begin(), s->basis().row(i).end(), gens.row(r).begin());
    std::vector<Decomposition> out;
    out.reserve(vs.rows());
    if (vs.rows() == 0) return out;
    if (gens.rows() > 0 && rref(f, gens).rank != gens.rows())
        fail(ErrorKind::invalid_argument, "subspaces are not in direct sum");
    const Matrix gt = gens.rows() > 0 ? gens.transposed() : Matrix(n, 0);
    const auto sols = solve_many(f, gt, vs.transposed());
    for (std::size_t k = 0; k < vs.rows(); ++k) {
        if (!sols[k]) fail(ErrorKind::invalid_argument, "vector outside the span of the decomposition");
        const Vec& x = *sols[k];
        Decomposition d{Vec(n, 0), Vec(n, 0), Vec(n, 0)};
        for (std::size_t i = 0; i < d1; ++i) f.axpy(d.u1, u1.basis().row(i), x[i]);
        for (std::size_t i = 0; i < d2; ++i) f.axpy(d.u2, u2.basis().row(i), x[d1 + i]);
        for (std::size_t i = 0; i < dz; ++i) f.axpy(d.z, z.basis().row(i), x[d1 + d2 + i]);
        out.push_back(std::move(d));
    }
    return out;
}

Decomposition decompose(const Field& f, std::span<const elem_t> v, const Subspace& u1, const Subspace& u2,
                        const Subspace& z)
{
    Matrix vs(1, v.size());
    std::copy(v.begin(), v.end(), vs.row(0).begin());
    return std::move(decompose_rows(f, vs, u1, u2, z).front());
}

Subspace complement(const Field& f, const Subspace& part, const Subspace& whole)
{
    require(part.ambient() == whole.ambient(), ErrorKind::dimension, "ambient dimension mismatch");
    Subspace acc = part;
    Matrix added;
    for (std::size_t i = 0; i < whole.dim(); ++i) {
        const auto row = whole.basis().row(i);
        if (acc.contains(f, row)) continue;
        added.append_row(row);
        acc = acc.sum(f, Subspace::span(f, Matrix::from_rows({Vec(row.begin(), row.end())}, row.size())));
    }
    require(acc.dim() == whole.dim(), ErrorKind::invalid_argument, "part is not contained in whole");
    if (added.rows() == 0) return Subspace::zero(part.ambient());
    return Subspace::span(f, std::move(added));
}

}  // namespace agdec
