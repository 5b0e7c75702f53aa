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

#include "radius.hpp"

using namespace agdec;

namespace {

// Largest integer t with den * t <= num, found by scanning.
long largest_t(long num, long den)
{
    long t = -1000;
    while (den * (t + 1) <= num) ++t;
    return t;
}

const Condition& cond(const ParamReport& r, const std::string& name)
{
    for (const auto& c : r.conditions)
        if (c.name == name) return c;
    FAIL("missing condition " << name);
    return r.conditions.front();
}

}  // namespace

TEST_CASE("table rows")
{
    CHECK(half_designed(200, 19) == 90);
    CHECK(sudan_radius(200, 10, 19, 2, SudanVariant::improved) == 107);
    CHECK(power_radius(200, 19, 2) == 113);
    CHECK(half_designed(200, 46) == 76);
    CHECK(sudan_radius(200, 10, 46, 2, SudanVariant::improved) == 80);
    CHECK(power_radius(200, 46, 2) == 86);
}

TEST_CASE("Hermitian code over F16")
{
    CHECK(half_designed(64, 8) == 27);
    CHECK(sudan_radius(64, 6, 8, 2, SudanVariant::improved) == 30);
    CHECK(power_radius(64, 8, 2) == 34);
}

TEST_CASE("floors agree with scanning the defining inequalities")
{
    for (long n = 10; n <= 80; n += 7)
        for (long degG = 0; degG < n; degG += 3)
            for (long ell = 1; ell <= 4; ++ell)
                for (long g = 0; g <= 6; g += 3) {
                    CHECK(half_designed(n, degG) == largest_t(n - degG - 1, 2));
                    CHECK(basic_radius(n, g, degG) == largest_t(n - degG - 1 - g, 2));
                    CHECK(power_radius(n, degG, ell) ==
                          largest_t(2 * ell * n - ell * (ell + 1) * degG - 2 * ell, 2 * (ell + 1)));
                    CHECK(sudan_radius(n, g, degG, ell, SudanVariant::improved) ==
                          largest_t(2 * ell * n - ell * (ell + 1) * degG - 2 - 2 * ell * g, 2 * (ell + 1)));
                    CHECK(sudan_radius(n, g, degG, ell, SudanVariant::basic) ==
                          largest_t(2 * ell * n - ell * (ell + 1) * degG - 2 - 2 * (ell + 1) * g, 2 * (ell + 1)));
                }
}

TEST_CASE("genus zero: both Sudan variants coincide")
{
    for (long degG = 1; degG < 10; ++degG)
        CHECK(sudan_radius(30, 0, degG, 2, SudanVariant::basic) == sudan_radius(30, 0, degG, 2, SudanVariant::improved));
}

TEST_CASE("ell = 1 power radius is half the designed distance")
{
    for (long degG = 0; degG < 50; ++degG) CHECK(power_radius(50, degG, 1) == half_designed(50, degG));
}

TEST_CASE("floor division")
{
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-8, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
}

TEST_CASE("parameter conditions")
{
    const ParamReport row1 = validate_params({200, 10, 19, 2, {}, {}});
    for (const char* name : {"i", "ii", "iii", "iv", "v"}) CHECK(cond(row1, name).holds);

    // Hermitian F16, t = 34: deg F = 46, deg(F + 2G) = 62 < 64, while the developed
    // form 2n - l(l+1)G - 4g(l+1) = 128 - 48 - 72 is positive.
    const ParamReport h = validate_params({64, 6, 8, 2, 34, {}});
    CHECK(cond(h, "ii").holds);
    CHECK(cond(h, "ii").lhs == 2);
    CHECK(cond(h, "ii_at_radius").lhs == 8);
    CHECK(cond(h, "ii_at_radius").expression == "128 - 48 - 72 >= 0");
    CHECK(cond(h, "t_le_dstar_3g_1").lhs == 56 - 18 - 1 - 34);

    const ParamReport low = validate_params({64, 6, 4, 2, {}, {}});
    CHECK_FALSE(cond(low, "v").holds);
    CHECK_FALSE(low.all_hold());
}
