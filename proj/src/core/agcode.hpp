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

#include <string>
#include <vector>

#include "curve.hpp"

namespace agdec {

/// One-point AG code C_L(X, P, degG * Q): evaluations of L(degG * Q) at P.
class AGCode {
public:
    static std::shared_ptr<const AGCode> create(CurvePtr curve, std::vector<AffinePoint> points, int degG);
    /// The first n points of the curve (all of them when n is absent).
    static std::shared_ptr<const AGCode> create(CurvePtr curve, int degG, std::optional<std::size_t> n = {});

    const CurvePtr& curve() const noexcept { return curve_; }
    const Field& field() const noexcept { return curve_->field(); }
    const std::vector<AffinePoint>& points() const noexcept { return points_; }
    std::size_t length() const noexcept { return points_.size(); }
    int degG() const noexcept { return degG_; }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    int designed_distance() const noexcept { return static_cast<int>(points_.size()) - degG_; }
    int genus() const noexcept { return curve_->genus(); }

    /// Row k is ev(monomial(k)).
    const Matrix& generator_matrix() const noexcept { return gen_; }
    const Subspace& space() const noexcept { return space_; }
    /// Basis of the dual code in rref (the parity-check matrix).
    const Subspace& dual_space() const noexcept { return dual_; }

    Vec encode(std::span<const elem_t> message) const;
    bool contains(std::span<const elem_t> word) const;
    /// Point indices (into points()) as the curve knows them.
    std::vector<std::size_t> point_indices() const;

private:
    AGCode() = default;

    CurvePtr curve_;
    std::vector<AffinePoint> points_;
    int degG_ = 0;
    Matrix gen_;
    Subspace space_;
    Subspace dual_;
};

using CodePtr = std::shared_ptr<const AGCode>;

Vec ev(const CurveFn& f, const std::vector<AffinePoint>& points);
/// count x n matrix: row k = ev(monomial(k)) at the given points.
Matrix monomial_evaluations(const CabCurve& curve, const std::vector<AffinePoint>& points, std::size_t count);
/// Image of coefficient vectors (rows, over the monomial basis) under evaluation.
Subspace ev_space(const CabCurve& curve, const std::vector<AffinePoint>& points, const Subspace& functions);

Subspace dual(const Field& f, const Subspace& code);
Subspace star_product(const Field& f, const Subspace& u, const Subspace& v);
Vec star(const Field& f, std::span<const elem_t> a, std::span<const elem_t> b);

std::size_t hamming(std::span<const elem_t> a, std::span<const elem_t> b);
std::size_t weight(std::span<const elem_t> a);
std::vector<std::size_t> support(std::span<const elem_t> a);

/// Whitespace-separated element tokens (comma tuples in extension fields).
std::string format_vector(const Field& f, std::span<const elem_t> v);
Vec parse_vector(const Field& f, const std::string& text, std::optional<std::size_t> expected_length = {});

}  // namespace agdec
