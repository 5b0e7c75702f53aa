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

#include "field.hpp"

using namespace agdec;

namespace {

// Schoolbook product of two elements viewed as polynomials over F_p, reduced
// by the field's modulus. Shares nothing with the table arithmetic.
elem_t naive_mul(const Field& f, elem_t a, elem_t b)
{
    const unsigned p = f.characteristic(), k = f.degree();
    const auto da = f.decode(a), db = f.decode(b);
    std::vector<unsigned> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& m = f.modulus();
    for (unsigned d = 2 * k - 1; d >= k; --d) {
        const unsigned lead = prod[d];
        for (unsigned i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - lead * m[i]) % p;
    }
    std::vector<long long> low(prod.begin(), prod.begin() + k);
    return f.encode(low);
}

// Monic polynomial of degree k over F_p with no root and no monic factor of
// degree 2..k/2, found by dividing out every candidate.
bool divides(const std::vector<unsigned>& d, std::vector<unsigned> a, unsigned p)
{
    while (a.size() >= d.size()) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = (a[shift + i] + p * p - lead * d[i]) % p;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a.empty();
}

bool irreducible_by_trial(const std::vector<unsigned>& poly, unsigned p)
{
    const unsigned k = static_cast<unsigned>(poly.size() - 1);
    for (unsigned deg = 1; deg <= k / 2; ++deg) {
        unsigned total = 1;
        for (unsigned i = 0; i < deg; ++i) total *= p;
        for (unsigned m = 0; m < total; ++m) {
            std::vector<unsigned> d(deg + 1, 1);
            unsigned v = m;
            for (unsigned i = 0; i < deg; ++i) {
                d[i] = v % p;
                v /= p;
            }
            if (divides(d, poly, p)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("primality")
{
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(65535));
}

TEST_CASE("first irreducible matches trial division and ascending order")
{
    for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {2u, 3u}, {5u, 2u}, {2u, 6u}, {3u, 3u}}) {
        const auto m = first_irreducible(p, k);
        REQUIRE(m.size() == k + 1);
        CHECK(m.back() == 1);
        CHECK(irreducible_by_trial(m, p));
        // every monic polynomial enumerated before it is reducible
        unsigned total = 1;
        for (unsigned i = 0; i < k; ++i) total *= p;
        for (unsigned v = 0; v < total; ++v) {
            std::vector<unsigned> cand(k + 1, 1);
            unsigned x = v;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = x % p;
                x /= p;
            }
            if (cand == m) break;
            CHECK_FALSE(irreducible_by_trial(cand, p));
        }
    }
    CHECK(first_irreducible(2, 4) == std::vector<unsigned>{1, 1, 0, 0, 1});
}

TEST_CASE("table product equals schoolbook product")
{
    for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {7u, 2u}, {2u, 5u}}) {
        const auto f = Field::create(p, k);
        for (elem_t a = 0; a < f->order(); ++a)
            for (elem_t b = 0; b < f->order(); ++b) REQUIRE(f->mul(a, b) == naive_mul(*f, a, b));
    }
}

TEST_CASE("field axioms on F_9, F_16, F_11")
{
    for (auto [p, k] : {std::pair{3u, 2u}, {2u, 4u}, {11u, 1u}}) {
        const auto f = Field::create(p, k);
        const elem_t q = f->order();
        std::set<elem_t> inverses;
        for (elem_t a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->pow(a, q) == a);
            if (a) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                inverses.insert(f->inv(a));
            }
            for (elem_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->sub(f->add(a, b), b) == a);
                if (b) CHECK(f->mul(f->div(a, b), b) == a);
            }
        }
        CHECK(inverses.size() == q - 1);
    }
}

TEST_CASE("multiplicative group is cyclic of order q - 1")
{
    const auto f = Field::create(2, 4);
    std::size_t max_order = 0;
    for (elem_t a = 1; a < 16; ++a) {
        std::size_t ord = 1;
        for (elem_t x = a; x != 1; x = f->mul(x, a)) ++ord;
        max_order = std::max(max_order, ord);
    }
    CHECK(max_order == 15);
}

TEST_CASE("inverse of zero is an error")
{
    const auto f = Field::create(5, 1);
    CHECK_THROWS_AS(f->inv(0), Error);
}

TEST_CASE("invalid fields are rejected")
{
    CHECK_THROWS_AS(Field::create(4, 1), Error);
    CHECK_THROWS_AS(Field::create(2, 0), Error);
    CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 0, 0, 1}), Error);
}

TEST_CASE("reducible modulus yields a ring with zero divisors")
{
    const auto r = Field::with_modulus(2, {1, 0, 0, 0, 1}, false);
    CHECK_FALSE(r->is_field());
    // (x + 1)^4 = x^4 + 1 = 0
    const elem_t xp1 = 3;
    CHECK(r->pow(xp1, 4) == 0);
}

TEST_CASE("format and parse round trip")
{
    const auto f9 = Field::create(3, 2);
    for (elem_t a = 0; a < 9; ++a) CHECK(f9->parse(f9->format(a)) == a);
    CHECK(f9->format(5) == "2,1");
    CHECK(f9->parse("2,1") == 5);
    const auto f11 = Field::create(11, 1);
    CHECK(f11->parse("-1") == 10);
    CHECK(f11->parse("13") == 2);
    CHECK_THROWS_AS(f11->parse("x"), Error);
    CHECK_THROWS_AS(f9->parse("1,2,0"), Error);
}

TEST_CASE("FieldElem operators agree with raw arithmetic")
{
    const auto f = Field::create(3, 2);
    for (elem_t a = 0; a < 9; ++a)
        for (elem_t b = 1; b < 9; ++b) {
            const FieldElem x(f, a), y(f, b);
            CHECK((x * y).value() == f->mul(a, b));
            CHECK((x / y).value() == f->div(a, b));
            CHECK((x - y).value() == f->sub(a, b));
            CHECK((-x).value() == f->neg(a));
        }
    const auto g = Field::create(2, 2);
    CHECK_THROWS_AS(FieldElem(f, 1) + FieldElem(g, 1), Error);
}
