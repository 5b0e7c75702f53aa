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

#include "radius.hpp"

#include <algorithm>

namespace agdec {

long floor_div(long num, long den) noexcept
{
    long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

long half_designed(long n, long degG) noexcept { return floor_div(n - degG - 1, 2); }

long basic_radius(long n, long g, long degG) noexcept { return floor_div(n - degG - 1 - g, 2); }

long sudan_radius(long n, long g, long degG, long ell, SudanVariant variant) noexcept
{
    // (2 n ell - ell (ell+1) degG - 2) / (2 (ell+1)) minus g (basic) or ell g / (ell+1) (improved),
    // brought over the common denominator before flooring.
    const long gterm = variant == SudanVariant::basic ? 2 * (ell + 1) * g : 2 * ell * g;
    return floor_div(2 * n * ell - ell * (ell + 1) * degG - 2 - gterm, 2 * (ell + 1));
}

long power_radius(long n, long degG, long ell) noexcept
{
    return floor_div(2 * ell * n - ell * (ell + 1) * degG - 2 * ell, 2 * (ell + 1));
}

bool ParamReport::all_hold() const noexcept
{
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

namespace {

std::string num(long v) { return std::to_string(v); }

// "a - b - c" with explicit signs for the evaluated terms.
std::string terms(std::initializer_list<long> ts)
{
    std::string s;
    bool first = true;
    for (long t : ts) {
        if (first)
            s += num(t);
        else
            s += t < 0 ? " - " + num(-t) : " + " + num(t);
        first = false;
    }
    return s;
}

}  // namespace

ParamReport validate_params(const CodeParams& p)
{
    ParamReport r;
    const long n = p.n, g = p.g, G = p.degG, l = p.ell;
    const long t = p.t.value_or(power_radius(n, G, l));
    const long degF = p.degF.value_or(t + 2 * g);
    const long dstar = n - G;

    // (i) t within the power-decoding radius: 2(l+1) t <= 2 l n - l(l+1) G - 2 l.
    {
        const long lhs = 2 * l * n - l * (l + 1) * G - 2 * l - 2 * (l + 1) * t;
        r.conditions.push_back({"i", terms({2 * l * n, -l * (l + 1) * G, -2 * l, -2 * (l + 1) * t}) + " >= 0", lhs,
                                lhs >= 0});
    }
    // (ii) deg(F + l G) < n.
    {
        const long lhs = n - degF - l * G;
        r.conditions.push_back({"ii", terms({n, -degF, -l * G}) + " > 0", lhs, lhs > 0});
    }
    // (iii) deg F <= d* - g - 1.
    {
        const long lhs = dstar - g - 1 - degF;
        r.conditions.push_back({"iii", terms({dstar, -g, -1, -degF}) + " >= 0", lhs, lhs >= 0});
    }
    // (iv) radius(l - 1) < radius(l), compared over the common denominator 2 l (l + 1).
    {
        const long prev = (2 * (l - 1) * n - l * (l - 1) * G - 2 * (l - 1)) * (l + 1);
        const long cur = (2 * l * n - l * (l + 1) * G - 2 * l) * l;
        const long lhs = cur - prev;
        r.conditions.push_back({"iv", terms({cur, -prev}) + " > 0", lhs, lhs > 0});
    }
    // (v) deg G >= g - 1.
    {
        const long lhs = G - g + 1;
        r.conditions.push_back({"v", terms({G, -g, 1}) + " >= 0", lhs, lhs >= 0});
    }
    // Developed forms of (ii)-(iv) for t at the radius and deg F = t + 2g.
    {
        const long lhs = 2 * n - l * (l + 1) * G - 4 * g * (l + 1);
        r.conditions.push_back(
            {"ii_at_radius", terms({2 * n, -l * (l + 1) * G, -4 * g * (l + 1)}) + " >= 0", lhs, lhs >= 0});
    }
    {
        const long lhs = 2 * n + (l - 2) * (l + 1) * G - 6 * g * l - 6 * g - 2;
        r.conditions.push_back({"iii_at_radius",
                                terms({2 * n, (l - 2) * (l + 1) * G, -6 * g * l, -6 * g, -2}) + " >= 0", lhs,
                                lhs >= 0});
    }
    {
        const long lhs = 2 * n - l * (l + 1) * G - 2 * (l * l + l + 1);
        r.conditions.push_back(
            {"iv_at_radius", terms({2 * n, -l * (l + 1) * G, -2 * (l * l + l + 1)}) + " >= 0", lhs, lhs >= 0});
    }
    // Hypothesis of the radius theorem.
    {
        const long lhs = dstar - 3 * g - 1 - t;
        r.conditions.push_back({"t_le_dstar_3g_1", terms({dstar, -3 * g, -1, -t}) + " >= 0", lhs, lhs >= 0});
    }
    return r;
}

}  // namespace agdec
