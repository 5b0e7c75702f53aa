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

#include "oracle.hpp"

using namespace agdec;

namespace {

CodePtr rs_code()
{
    return AGCode::create(CabCurve::line(Field::create(5, 1)), 1, 5);  // [5, 2, 4] over F5
}

}  // namespace

TEST_CASE("nearest codewords: every codeword counted once, sorted")
{
    const auto code = rs_code();
    const Vec y{1, 2, 3, 4, 0};
    const auto all = nearest_codewords(*code, y, 5);
    CHECK(all.size() == 25);
    std::set<Vec> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        seen.insert(all[i].codeword);
        CHECK(all[i].distance == hamming(all[i].codeword, y));
        CHECK(code->contains(all[i].codeword));
        if (i) CHECK(all[i - 1].distance <= all[i].distance);
    }
    CHECK(seen.size() == 25);
}

TEST_CASE("radius filter")
{
    const auto code = rs_code();
    Rng rng(1);
    for (int s = 0; s < 20; ++s) {
        const Vec c = random_codeword(*code, rng);
        const auto near = nearest_codewords(*code, c, 1);
        REQUIRE(near.size() == 1);
        CHECK(near[0].codeword == c);
        CHECK(near[0].distance == 0);
    }
}

TEST_CASE("exhaustive minimum distance")
{
    CHECK(min_distance_exhaustive(*rs_code()) == 4);
}

TEST_CASE("enumeration budget")
{
    const auto big = AGCode::create(CabCurve::line(Field::create(11, 1)), 8, 11);
    CHECK_THROWS_AS(min_distance_exhaustive(*big, {1000}), Error);
}

TEST_CASE("random errors have the requested weight")
{
    const auto f = Field::create(3, 2);
    Rng rng(2);
    for (std::size_t t = 0; t <= 10; ++t) {
        const Vec e = random_error(*f, 10, t, rng);
        CHECK(weight(e) == t);
        for (elem_t v : e) CHECK(f->contains(v));
    }
    CHECK_THROWS_AS(random_error(*f, 5, 6, rng), Error);
}

TEST_CASE("worst case words sit between two codewords")
{
    const auto c = CabCurve::create(Field::create(3, 2), 3, 4, {{4, 0, 1}, {0, 1, 2}});
    const auto code = AGCode::create(c, 6);
    Rng rng(3);
    for (int s = 0; s < 5; ++s) {
        const WorstCase wc = worst_case(*code, 11, rng);
        CHECK(code->contains(wc.c1));
        CHECK(code->contains(wc.c2));
        CHECK(wc.c1 != wc.c2);
        CHECK(hamming(wc.y, wc.c1) == 11);
        CHECK(hamming(wc.y, wc.c2) == 11);
    }
    CHECK_THROWS_AS(worst_case(*code, 5, rng), Error);   // 2t below d*
    CHECK_THROWS_AS(worst_case(*code, 14, rng), Error);  // 2t above n
}

TEST_CASE("seeded streams")
{
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(Rng::for_trial(42, 0).next() != Rng::for_trial(42, 1).next());
    Rng r(5);
    std::vector<int> hist(6, 0);
    for (int i = 0; i < 6000; ++i) ++hist[r.below(6)];
    for (int h : hist) CHECK(h > 800);
    const auto s = r.subset(20, 7);
    CHECK(s.size() == 7);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 7);
}
