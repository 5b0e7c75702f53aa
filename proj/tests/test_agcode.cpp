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

#include "agcode.hpp"
#include "oracle.hpp"

using namespace agdec;

namespace {

CurvePtr hermitian9()
{
    return CabCurve::create(Field::create(3, 2), 3, 4, {{4, 0, 1}, {0, 1, 2}});
}

CurvePtr hermitian16()
{
    return CabCurve::create(Field::create(2, 4), 4, 5, {{5, 0, 1}, {0, 1, 1}});
}

}  // namespace

TEST_CASE("dimension and generator matrix")
{
    const auto c = hermitian16();
    for (int degG = 11; degG < 64; degG += 7) {
        const auto code = AGCode::create(c, degG);
        CHECK(code->length() == 64);
        CHECK(code->dimension() == static_cast<std::size_t>(degG - 6 + 1));
        CHECK(code->designed_distance() == 64 - degG);
        const Matrix& gm = code->generator_matrix();
        for (std::size_t k = 0; k < gm.rows(); ++k)
            for (std::size_t p = 0; p < 64; ++p)
                CHECK(gm(k, p) == evaluate(CurveFn::monomial(c, c->monomial(k)), c->points()[p]));
    }
}

TEST_CASE("minimum distance by enumeration")
{
    // RS codes are MDS.
    const auto line = CabCurve::line(Field::create(11, 1));
    const auto rs = AGCode::create(line, 3, 10);
    CHECK(rs->dimension() == 4);
    CHECK(min_distance_exhaustive(*rs) == 7);
    // AG codes meet their designed distance.
    const auto h = AGCode::create(hermitian9(), 5);
    CHECK(h->dimension() == 3);
    CHECK(min_distance_exhaustive(*h) >= 22);
}

TEST_CASE("dual of a Hermitian code is again a one-point code")
{
    const auto c = hermitian9();
    for (int degG = 6; degG <= 20; ++degG) {
        const auto code = AGCode::create(c, degG);
        const auto expected = AGCode::create(c, 27 + 2 * 3 - 2 - degG);
        CHECK(code->dual_space() == expected->space());
        CHECK(code->dimension() + code->dual_space().dim() == 27);
        CHECK(dual(c->field(), code->dual_space()) == code->space());
    }
}

TEST_CASE("star product of AG codes")
{
    const auto c = hermitian16();
    const Field& f = c->field();
    for (auto [a, b] : {std::pair{12, 13}, {14, 20}, {12, 30}, {20, 21}}) {
        const auto ca = AGCode::create(c, a), cb = AGCode::create(c, b), cab = AGCode::create(c, a + b);
        CHECK(star_product(f, ca->space(), cb->space()) == cab->space());
    }
}

TEST_CASE("encode and membership")
{
    const auto c = hermitian9();
    const auto code = AGCode::create(c, 8);
    Rng rng(1);
    for (int s = 0; s < 20; ++s) {
        Vec w = random_codeword(*code, rng);
        CHECK(code->contains(w));
        CHECK(code->space().contains(c->field(), w));
        w[rng.below(27)] = c->field().add(w[0], 1);
        const bool in = code->space().contains(c->field(), w);
        CHECK(code->contains(w) == in);
    }
    CHECK_THROWS_AS(code->encode(Vec(3, 0)), Error);
}

TEST_CASE("construction errors")
{
    const auto c = hermitian9();
    CHECK_THROWS_AS(AGCode::create(c, 27), Error);
    CHECK_THROWS_AS(AGCode::create(c, 5, 40), Error);
    const auto p = c->points()[0];
    CHECK_THROWS_AS(AGCode::create(c, {p, p, c->points()[1]}, 1), Error);
    AffinePoint off{1, 1, 0};
    if (c->equation_at(1, 1) != 0) CHECK_THROWS_AS(AGCode::create(c, {off}, 0), Error);
}

TEST_CASE("first n points")
{
    const auto code = AGCode::create(hermitian16(), 10, 40);
    CHECK(code->length() == 40);
    CHECK(code->point_indices() == [] {
        std::vector<std::size_t> v(40);
        for (std::size_t i = 0; i < 40; ++i) v[i] = i;
        return v;
    }());
}

TEST_CASE("vector helpers")
{
    const auto f = Field::create(3, 2);
    const Vec a{0, 1, 2, 5}, b{0, 2, 2, 0};
    CHECK(hamming(a, b) == 2);
    CHECK(weight(a) == 3);
    CHECK(support(b) == std::vector<std::size_t>{1, 2});
    CHECK(star(*f, a, b) == Vec{0, f->mul(1, 2), f->mul(2, 2), 0});
    CHECK(parse_vector(*f, format_vector(*f, a)) == a);
    CHECK(format_vector(*f, a) == "0,0 1,0 2,0 2,1");
    CHECK_THROWS_AS(parse_vector(*f, "1 2", 3), Error);
}
