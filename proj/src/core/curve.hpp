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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace agdec {

struct Monomial {
    int i = 0;  // power of x
    int j = 0;  // power of y, always < a in normal form
    bool operator==(const Monomial&) const = default;
};

/// y^a = sum coeff * x^i * y^j (the right-hand side of the curve equation).
struct CurveTerm {
    int i = 0;
    int j = 0;
    elem_t coeff = 0;
};

struct AffinePoint {
    elem_t x = 0;
    elem_t y = 0;
    std::size_t index = 0;  // position in CabCurve::points()

    bool operator==(const AffinePoint& o) const noexcept { return x == o.x && y == o.y; }
    bool operator<(const AffinePoint& o) const noexcept { return x != o.x ? x < o.x : y < o.y; }
};

/**
 * C_{a,b} plane curve y^a = sum c_ij x^i y^j with a single place Q at infinity,
 * where x and y have pole orders a and b. The (b, 0) term is mandatory and every
 * other term satisfies a*i + b*j < a*b, j < a.
 *
 * The genus-0 line is the degenerate member a = b = 1 without a y-variable:
 * L(M Q) is then the polynomials in x of degree <= M.
 *
 * Functions in the coordinate ring are written over the monomial basis sorted
 * by pole order; since gcd(a, b) = 1 and j < a, each pole order belongs to at
 * most one monomial, so a function is a coefficient vector indexed by the
 * position of its monomials in that ordering.
 */
class CabCurve {
public:
    static std::shared_ptr<const CabCurve> create(FieldPtr field, int a, int b, std::vector<CurveTerm> terms,
                                                  std::string name = {});
    static std::shared_ptr<const CabCurve> line(FieldPtr field, std::string name = {});

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int genus() const noexcept { return genus_; }
    bool is_line() const noexcept { return line_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<CurveTerm>& terms() const noexcept { return terms_; }

    /// Every affine rational point, sorted by (x, y) encoding.
    const std::vector<AffinePoint>& points() const noexcept { return points_; }

    int pole_order(Monomial m) const noexcept { return a_ * m.i + b_ * m.j; }
    std::optional<Monomial> monomial_with_pole_order(int s) const noexcept;
    /// Number of monomials with pole order <= bound, i.e. l(bound * Q).
    std::size_t basis_size(int bound) const noexcept;
    /// The monomial at a given position of the pole-order ordering.
    Monomial monomial(std::size_t index) const;
    std::vector<Monomial> monomial_basis(int bound) const;

    elem_t equation_at(elem_t x, elem_t y) const noexcept;  // y^a - rhs
    elem_t dx_at(elem_t x, elem_t y) const noexcept;
    elem_t dy_at(elem_t x, elem_t y) const noexcept;

    /// Curve description in the text format read by parse_curve_spec.
    std::string to_text() const;

private:
    CabCurve() = default;
    void enumerate_points();

    FieldPtr field_;
    int a_ = 1;
    int b_ = 1;
    int genus_ = 0;
    bool line_ = false;
    std::string name_;
    std::vector<CurveTerm> terms_;
    std::vector<AffinePoint> points_;
    std::vector<int> small_orders_;  // semigroup elements below the conductor
};

using CurvePtr = std::shared_ptr<const CabCurve>;

/// Function on the curve in monomial normal form.
class CurveFn {
public:
    CurveFn() = default;
    CurveFn(CurvePtr curve, Vec coeffs);
    static CurveFn zero(CurvePtr curve) { return CurveFn(std::move(curve), {}); }
    static CurveFn constant(CurvePtr curve, elem_t c);
    static CurveFn monomial(CurvePtr curve, Monomial m, elem_t c = 1);

    const CurvePtr& curve() const noexcept { return curve_; }
    /// Coefficients over CabCurve::monomial(0), monomial(1), ... with trailing zeros trimmed.
    const Vec& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero function.
    int pole_order() const noexcept;
    /// Coefficients padded (or checked) to exactly n entries.
    Vec coordinates(std::size_t n) const;

    CurveFn operator+(const CurveFn& o) const;
    CurveFn operator-(const CurveFn& o) const;
    CurveFn operator*(const CurveFn& o) const;
    CurveFn scaled(elem_t c) const;
    bool operator==(const CurveFn& o) const { return curve_ == o.curve_ && coeffs_ == o.coeffs_; }

private:
    void trim();

    CurvePtr curve_;
    Vec coeffs_;
};

CurveFn fn_mul(const CurveFn& f, const CurveFn& g);
elem_t evaluate(const CurveFn& f, const AffinePoint& p);

/// Power-series coefficients of the monomials at p: entry (r, k) is the t^r
/// coefficient of monomial(k), for r < prec and the first `count` monomials.
/// The local parameter is t = x - x0 when dE/dy(p) != 0, else t = y - y0.
Matrix monomial_expansions(const CabCurve& curve, const AffinePoint& p, std::size_t count, std::size_t prec);

/// First prec coefficients of f around p in the local parameter above.
Vec local_expansion(const CurveFn& f, const AffinePoint& p, std::size_t prec);

/// A curve with its optional code description, as read from the text format:
///
///     name hermitian16      (optional)
///     field 2 4
///     cab 4 5               (or: line)
///     term 5 0 1            (y^a = ... + coeff * x^i y^j)
///     term 0 1 1
///     degG 8                (optional)
///     points 64             (optional: use the first n affine points)
struct CurveSpec {
    CurvePtr curve;
    std::optional<int> degG;
    std::optional<std::size_t> npoints;
};

CurveSpec parse_curve_spec(const std::string& text);

}  // namespace agdec
