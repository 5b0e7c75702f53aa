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

#include "rrspace.hpp"

#include <algorithm>

namespace agdec {

int Divisor::coeff(std::size_t point) const noexcept
{
    auto it = finite_.find(point);
    return it == finite_.end() ? 0 : it->second;
}

int Divisor::degree() const noexcept
{
    int d = inf_;
    for (const auto& [p, c] : finite_) d += c;
    return d;
}

Divisor Divisor::plus_inf(int d) const
{
    Divisor out = *this;
    out.inf_ += d;
    return out;
}

Divisor Divisor::add_point(std::size_t point, int c) const
{
    Divisor out = *this;
    const int v = coeff(point) + c;
    require(v <= 0, ErrorKind::invalid_argument, "divisors may not have affine poles");
    if (v == 0)
        out.finite_.erase(point);
    else
        out.finite_[point] = v;
    return out;
}

Divisor Divisor::minus_points(const std::vector<std::size_t>& points) const
{
    Divisor out = *this;
    for (std::size_t p : points) out.finite_[p] -= 1;
    return out;
}

Divisor Divisor::plus_points(const std::vector<std::size_t>& points) const
{
    Divisor out = *this;
    for (std::size_t p : points) out = out.add_point(p, 1);
    return out;
}

std::string Divisor::to_string() const
{
    std::string s = std::to_string(inf_) + "Q";
    for (const auto& [p, c] : finite_) {
        s += " - ";
        if (c != -1) s += std::to_string(-c);
        s += "P" + std::to_string(p);
    }
    return s;
}

const Matrix& ExpansionCache::at(std::size_t point, std::size_t count, std::size_t prec)
{
    require(point < curve_->points().size(), ErrorKind::invalid_argument, "point index out of range");
    Matrix& m = cache_[point];
    if (m.cols() < count || m.rows() < prec) {
        const std::size_t c = std::max(count, m.cols());
        const std::size_t r = std::max(prec, m.rows());
        m = monomial_expansions(*curve_, curve_->points()[point], c, r);
    }
    return m;
}

Matrix vanishing_conditions(ExpansionCache& cache, const Divisor& divisor, std::size_t count)
{
    Matrix rows(0, count);
    for (const auto& [p, c] : divisor.finite()) {
        const auto m = static_cast<std::size_t>(-c);
        const Matrix& e = cache.at(p, count, m);
        for (std::size_t r = 0; r < m; ++r) rows.append_row(e.row(r).first(count));
    }
    return rows;
}

RRSpace rr_space(ExpansionCache& cache, const Divisor& divisor, int ambient_M)
{
    const CabCurve& curve = *cache.curve();
    require(ambient_M >= divisor.inf_coeff(), ErrorKind::invalid_argument, "ambient too small for divisor");
    const std::size_t ambient = curve.basis_size(ambient_M);
    RRSpace out{divisor, ambient_M, Subspace::zero(ambient)};
    const std::size_t count = curve.basis_size(divisor.inf_coeff());
    if (count == 0) return out;
    const Matrix cond = vanishing_conditions(cache, divisor, count);
    const Subspace k = kernel(curve.field(), cond);
    out.space = Subspace::span(curve.field(), k.basis().widened(ambient));
    return out;
}

RRSpace rr_space(const CurvePtr& curve, const Divisor& divisor, int ambient_M)
{
    ExpansionCache cache(curve);
    return rr_space(cache, divisor, ambient_M);
}

std::size_t ell(ExpansionCache& cache, const Divisor& divisor)
{
    return rr_space(cache, divisor, std::max(divisor.inf_coeff(), 0)).dim();
}

std::size_t ell(const CurvePtr& curve, const Divisor& divisor)
{
    ExpansionCache cache(curve);
    return ell(cache, divisor);
}

CurveFn as_function(const CurvePtr& curve, std::span<const elem_t> coords)
{
    return CurveFn(curve, Vec(coords.begin(), coords.end()));
}

}  // namespace agdec
