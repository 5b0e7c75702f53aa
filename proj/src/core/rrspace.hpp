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

#include <map>
#include <string>
#include <unordered_map>

#include "curve.hpp"

namespace agdec {

/**
 * a*Q - sum m_P P: one point at infinity plus nonpositive multiplicities at
 * affine rational points, keyed by the point's index in CabCurve::points().
 * Zero coefficients are never stored.
 */
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(int inf_coeff) : inf_(inf_coeff) {}

    int inf_coeff() const noexcept { return inf_; }
    const std::map<std::size_t, int>& finite() const noexcept { return finite_; }
    /// Coefficient at an affine point (0 if absent, otherwise negative).
    int coeff(std::size_t point) const noexcept;
    /// Vanishing order demanded at a point: -coeff(point).
    int multiplicity(std::size_t point) const noexcept { return -coeff(point); }
    int degree() const noexcept;
    bool has_finite_support() const noexcept { return !finite_.empty(); }

    Divisor plus_inf(int d) const;
    /// Adds c to the coefficient of one point; the result must stay nonpositive.
    Divisor add_point(std::size_t point, int c) const;
    /// this - sum of the given points (each with coefficient 1).
    Divisor minus_points(const std::vector<std::size_t>& points) const;
    /// this + sum of the given points; they must currently have negative coefficients.
    Divisor plus_points(const std::vector<std::size_t>& points) const;

    bool operator==(const Divisor&) const = default;
    /// e.g. "46Q - 2P3 - P17".
    std::string to_string() const;

private:
    int inf_ = 0;
    std::map<std::size_t, int> finite_;
};

/**
 * Memoized monomial expansions at the curve's points. Not thread-safe: give
 * every decode context its own instance.
 */
class ExpansionCache {
public:
    explicit ExpansionCache(CurvePtr curve) : curve_(std::move(curve)) {}
    const CurvePtr& curve() const noexcept { return curve_; }
    /// Expansion matrix at points()[point] with at least `count` columns and `prec` rows.
    const Matrix& at(std::size_t point, std::size_t count, std::size_t prec);

private:
    CurvePtr curve_;
    std::unordered_map<std::size_t, Matrix> cache_;
};

struct RRSpace {
    Divisor divisor;
    int ambient_M = 0;
    Subspace space;  // over CabCurve::monomial_basis(ambient_M)

    std::size_t dim() const noexcept { return space.dim(); }
};

/// Rows whose kernel inside the first `count` monomials is the vanishing part of L(divisor).
Matrix vanishing_conditions(ExpansionCache& cache, const Divisor& divisor, std::size_t count);

RRSpace rr_space(ExpansionCache& cache, const Divisor& divisor, int ambient_M);
RRSpace rr_space(const CurvePtr& curve, const Divisor& divisor, int ambient_M);

std::size_t ell(ExpansionCache& cache, const Divisor& divisor);
std::size_t ell(const CurvePtr& curve, const Divisor& divisor);

/// Basis vector as a function (coordinates over the monomial basis).
CurveFn as_function(const CurvePtr& curve, std::span<const elem_t> coords);

}  // namespace agdec
