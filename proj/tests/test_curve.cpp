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


#include <doctest.h>

#include <set>

#include "curve.hpp"
#include "rng.hpp"

using namespace agdec;

namespace {

CurvePtr hermitian16()
{
    const auto f = Field::create(2, 4);
    return CabCurve::create(f, 4, 5, {{5, 0, 1}, {0, 1, 1}}, "hermitian16");
}

CurvePtr hermitian9()
{
    const auto f = Field::create(3, 2);
    return CabCurve::create(f, 3, 4, {{4, 0, 1}, {0, 1, 2}});
}

// Counts solutions of y^a = rhs(x, y) by direct substitution.
std::size_t count_points(const CabCurve& c)
{
    const Field& f = c.field();
    std::size_t n = 0;
    for (elem_t x = 0; x < f.order(); ++x)
        for (elem_t y = 0; y < f.order(); ++y) {
            elem_t rhs = 0;
            for (const auto& t : c.terms())
                rhs = f.add(rhs, f.mul(t.coeff, f.mul(f.pow(x, static_cast<unsigned>(t.i)),
                                                       f.pow(y, static_cast<unsigned>(t.j)))));
            n += f.pow(y, static_cast<unsigned>(c.a())) == rhs;
        }
    return n;
}

// Numerical semigroup <a, b> up to bound.
std::vector<int> semigroup(int a, int b, int bound)
{
    std::set<int> s;
    for (int i = 0; a * i <= bound; ++i)
        for (int j = 0; a * i + b * j <= bound; ++j) s.insert(a * i + b * j);
    return {s.begin(), s.end()};
}

CurveFn random_fn(const CurvePtr& c, std::size_t len, Rng& rng)
{
    Vec v(len);
    for (auto& x : v) x = static_cast<elem_t>(rng.below(c->field().order()));
    return CurveFn(c, v);
}

}  // namespace

TEST_CASE("point counts agree with substitution")
{
    const auto h16 = hermitian16(), h9 = hermitian9();
    CHECK(h16->points().size() == count_points(*h16));
    CHECK(h9->points().size() == count_points(*h9));
    // Hermitian curves over F_{r^2} have r^3 affine points.
    CHECK(h16->points().size() == 64);
    CHECK(h9->points().size() == 27);
    const auto& pts = h16->points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].index == i);
        CHECK(h16->equation_at(pts[i].x, pts[i].y) == 0);
        if (i) CHECK(pts[i - 1] < pts[i]);
    }
}

TEST_CASE("genus")
{
    CHECK(hermitian16()->genus() == 6);
    CHECK(hermitian9()->genus() == 3);
    const auto f49 = Field::create(7, 2);
    CHECK(CabCurve::create(f49, 7, 8, {{8, 0, 1}, {0, 1, f49->neg(1)}})->genus() == 21);
    const auto f11 = Field::create(11, 1);
    CHECK(CabCurve::create(f11, 5, 6, {{6, 0, 1}, {1, 0, 1}, {0, 0, 1}})->genus() == 10);
    CHECK(CabCurve::line(f11)->genus() == 0);
}

TEST_CASE("monomial order follows the Weierstrass semigroup")
{
    const auto c = hermitian16();
    const auto s = semigroup(4, 5, 60);
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Monomial m = c->monomial(k);
        CHECK(c->pole_order(m) == s[k]);
        CHECK(m.j < 4);
    }
    for (int bound = 0; bound <= 60; ++bound) {
        const auto n = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](int v) { return v <= bound; }));
        CHECK(c->basis_size(bound) == n);
        if (bound >= 2 * c->genus() - 1) CHECK(n == static_cast<std::size_t>(bound - c->genus() + 1));
    }
    std::size_t gaps = 0;
    for (int v = 0; v < 12; ++v) gaps += !c->monomial_with_pole_order(v).has_value();
    CHECK(gaps == 6);
    CHECK(c->basis_size(-1) == 0);
}

TEST_CASE("products evaluate to products of values")
{
    Rng rng(8);
    for (const auto& c : {hermitian16(), hermitian9()}) {
        const Field& f = c->field();
        for (int s = 0; s < 15; ++s) {
            const CurveFn a = random_fn(c, 1 + rng.below(14), rng), b = random_fn(c, 1 + rng.below(14), rng);
            const CurveFn ab = fn_mul(a, b);
            if (!a.is_zero() && !b.is_zero()) CHECK(ab.pole_order() == a.pole_order() + b.pole_order());
            const CurveFn sum = a + b, diff = a - b;
            for (const auto& p : c->points()) {
                CHECK(evaluate(ab, p) == f.mul(evaluate(a, p), evaluate(b, p)));
                CHECK(evaluate(sum, p) == f.add(evaluate(a, p), evaluate(b, p)));
                CHECK(evaluate(diff, p) == f.sub(evaluate(a, p), evaluate(b, p)));
            }
        }
    }
}

TEST_CASE("y^a reduces through the curve equation")
{
    const auto c = hermitian16();
    const CurveFn y = CurveFn::monomial(c, {0, 1});
    const CurveFn y4 = fn_mul(fn_mul(y, y), fn_mul(y, y));
    // y^4 = x^5 + y on the curve
    const CurveFn rhs = CurveFn::monomial(c, {5, 0}) + y;
    CHECK(y4 == rhs);
}

TEST_CASE("local expansions")
{
    Rng rng(3);
    const auto c = hermitian9();
    const Field& f = c->field();
    const CurveFn x = CurveFn::monomial(c, {1, 0});
    for (const auto& p : c->points()) {
        const Vec ex = local_expansion(x, p, 4);
        CHECK(ex[0] == p.x);
        const CurveFn g = random_fn(c, 10, rng);
        CHECK(local_expansion(g, p, 3)[0] == evaluate(g, p));
        // the expansion is multiplicative: compare t^0..t^4 of a product
        const CurveFn h = random_fn(c, 8, rng);
        const Vec eg = local_expansion(g, p, 5), eh = local_expansion(h, p, 5), egh = local_expansion(fn_mul(g, h), p, 5);
        for (std::size_t r = 0; r < 5; ++r) {
            elem_t acc = 0;
            for (std::size_t i = 0; i <= r; ++i) acc = f.add(acc, f.mul(eg[i], eh[r - i]));
            CHECK(egh[r] == acc);
        }
    }
}

TEST_CASE("a function with a simple zero has order one")
{
    // x - x0 vanishes to order 1 at P when the tangent is not vertical.
    const auto c = hermitian16();
    for (const auto& p : c->points()) {
        const CurveFn g = CurveFn::monomial(c, {1, 0}) - CurveFn::constant(c, p.x);
        const Vec e = local_expansion(g, p, 3);
        CHECK(e[0] == 0);
        if (c->dy_at(p.x, p.y) != 0) CHECK(e[1] == 1);
    }
}

TEST_CASE("curve validation")
{
    const auto f = Field::create(5, 1);
    // a and b not coprime
    CHECK_THROWS_AS(CabCurve::create(f, 2, 4, {{4, 0, 1}}), Error);
    // missing x^b term
    CHECK_THROWS_AS(CabCurve::create(f, 2, 3, {{1, 0, 1}}), Error);
    // term above the a*b pole order
    CHECK_THROWS_AS(CabCurve::create(f, 2, 3, {{3, 0, 1}, {2, 1, 1}}), Error);
    // y^2 = x^3 is singular at the origin
    CHECK_THROWS_AS(CabCurve::create(f, 2, 3, {{3, 0, 1}}), Error);
    CHECK_NOTHROW(CabCurve::create(f, 2, 3, {{3, 0, 1}, {1, 0, 1}}));
}

TEST_CASE("curve description format")
{
    const CurveSpec s = parse_curve_spec("# comment\nname h9\nfield 3 2\ncab 3 4\nterm 4 0 1\nterm 0 1 2\ndegG 6\npoints 20\n");
    CHECK(s.curve->name() == "h9");
    CHECK(s.curve->genus() == 3);
    CHECK(s.degG == 6);
    CHECK(s.npoints == 20u);
    const CurveSpec line = parse_curve_spec("field 11 1\nline\n");
    CHECK(line.curve->is_line());
    CHECK(line.curve->points().size() == 11);
    CHECK_THROWS_AS(parse_curve_spec("cab 3 4\n"), Error);
    CHECK_THROWS_AS(parse_curve_spec("field 3 2\ncab 3 4\nterm 4 0\n"), Error);
    CHECK_THROWS_AS(parse_curve_spec("field 3 2\nline\ncab 3 4\n"), Error);
    CHECK_THROWS_AS(parse_curve_spec("field 3 2\nwhat 1\n"), Error);
    // round trip through to_text
    const auto h = hermitian16();
    const CurveSpec back = parse_curve_spec(h->to_text());
    CHECK(back.curve->points().size() == 64);
    CHECK(back.curve->genus() == 6);
}

TEST_CASE("line functions are polynomials in x")
{
    const auto f = Field::create(7, 1);
    const auto line = CabCurve::line(f);
    CHECK(line->basis_size(3) == 4);
    const CurveFn g(line, Vec{1, 2, 3});  // 1 + 2x + 3x^2
    for (const auto& p : line->points())
        CHECK(evaluate(g, p) == f->add(1, f->add(f->mul(2, p.x), f->mul(3, f->mul(p.x, p.x)))));
}
