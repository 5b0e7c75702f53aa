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

#include "agcode.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace agdec {

std::shared_ptr<const AGCode> AGCode::create(CurvePtr curve, std::vector<AffinePoint> points, int degG)
{
    require(curve != nullptr, ErrorKind::invalid_argument, "code needs a curve");
    require(!points.empty(), ErrorKind::invalid_argument, "code needs evaluation points");
    require(degG >= 0, ErrorKind::invalid_argument, "degG must be nonnegative");
    require(static_cast<std::size_t>(degG) < points.size(), ErrorKind::invalid_argument, "degG must be below n");
    std::set<std::pair<elem_t, elem_t>> seen;
    for (const auto& p : points) {
        require(p.index < curve->points().size() && curve->points()[p.index] == p, ErrorKind::invalid_argument,
                "evaluation point is not a rational point of the curve");
        require(seen.insert({p.x, p.y}).second, ErrorKind::invalid_argument, "duplicate evaluation point");
    }
    std::shared_ptr<AGCode> c(new AGCode());
    c->curve_ = std::move(curve);
    c->points_ = std::move(points);
    c->degG_ = degG;
    c->gen_ = monomial_evaluations(*c->curve_, c->points_, c->curve_->basis_size(degG));
    c->space_ = Subspace::span(c->field(), c->gen_);
    require(c->space_.dim() == c->gen_.rows(), ErrorKind::internal, "evaluation map not injective on L(G)");
    c->dual_ = dual(c->field(), c->space_);
    return c;
}

std::shared_ptr<const AGCode> AGCode::create(CurvePtr curve, int degG, std::optional<std::size_t> n)
{
    std::vector<AffinePoint> pts = curve->points();
    if (n) {
        require(*n <= pts.size(), ErrorKind::invalid_argument, "curve has fewer rational points than requested");
        pts.resize(*n);
    }
    return create(std::move(curve), std::move(pts), degG);
}

Vec AGCode::encode(std::span<const elem_t> message) const
{
    require(message.size() == dimension(), ErrorKind::dimension, "message length differs from code dimension");
    return combine_rows(field(), message, gen_);
}

bool AGCode::contains(std::span<const elem_t> word) const
{
    require(word.size() == length(), ErrorKind::dimension, "word length differs from code length");
    const Matrix& h = dual_.basis();
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (dot(field(), h.row(r), word) != 0) return false;
    return true;
}

std::vector<std::size_t> AGCode::point_indices() const
{
    std::vector<std::size_t> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.index);
    return out;
}

Vec ev(const CurveFn& f, const std::vector<AffinePoint>& points)
{
    Vec out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(evaluate(f, p));
    return out;
}

Matrix monomial_evaluations(const CabCurve& curve, const std::vector<AffinePoint>& points, std::size_t count)
{
    const Field& f = curve.field();
    Matrix m(count, points.size());
    for (std::size_t k = 0; k < count; ++k) {
        const Monomial mono = curve.monomial(k);
        for (std::size_t c = 0; c < points.size(); ++c)
            m(k, c) = f.mul(f.pow(points[c].x, mono.i), f.pow(points[c].y, mono.j));
    }
    return m;
}

Subspace ev_space(const CabCurve& curve, const std::vector<AffinePoint>& points, const Subspace& functions)
{
    const Matrix e = monomial_evaluations(curve, points, functions.ambient());
    return Subspace::span(curve.field(), multiply(curve.field(), functions.basis(), e));
}

Subspace dual(const Field& f, const Subspace& code) { return kernel(f, code.basis()); }

Vec star(const Field& f, std::span<const elem_t> a, std::span<const elem_t> b)
{
    require(a.size() == b.size(), ErrorKind::dimension, "star product of vectors of different lengths");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

Subspace star_product(const Field& f, const Subspace& u, const Subspace& v)
{
    require(u.ambient() == v.ambient(), ErrorKind::dimension, "star product of codes of different lengths");
    Matrix rows(0, u.ambient());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) rows.append_row(star(f, u.basis().row(i), v.basis().row(j)));
    return Subspace::span(f, std::move(rows));
}

std::size_t hamming(std::span<const elem_t> a, std::span<const elem_t> b)
{
    require(a.size() == b.size(), ErrorKind::dimension, "hamming distance of vectors of different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::size_t weight(std::span<const elem_t> a)
{
    return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](elem_t x) { return x != 0; }));
}

std::vector<std::size_t> support(std::span<const elem_t> a)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) out.push_back(i);
    return out;
}

std::string format_vector(const Field& f, std::span<const elem_t> v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += f.format(v[i]);
    }
    return out;
}

Vec parse_vector(const Field& f, const std::string& text, std::optional<std::size_t> expected_length)
{
    std::istringstream in(text);
    Vec out;
    for (std::string tok; in >> tok;) out.push_back(f.parse(tok));
    if (expected_length && out.size() != *expected_length)
        fail(ErrorKind::dimension, "vector has " + std::to_string(out.size()) + " entries, expected " +
                                       std::to_string(*expected_length));
    return out;
}

}  // namespace agdec
