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

#include <optional>
#include <string>
#include <vector>

namespace agdec {

struct CodeParams {
    long n = 0;
    long g = 0;
    long degG = 0;
    long ell = 1;
    std::optional<long> t;
    std::optional<long> degF;  // default t + 2g
};

enum class SudanVariant { basic, improved };

/// Floor division for possibly negative numerators.
long floor_div(long num, long den) noexcept;

long half_designed(long n, long degG) noexcept;
long basic_radius(long n, long g, long degG) noexcept;
long sudan_radius(long n, long g, long degG, long ell, SudanVariant variant) noexcept;
long power_radius(long n, long degG, long ell) noexcept;

struct Condition {
    std::string name;
    std::string expression;  // the evaluated inequality, e.g. "128 - 48 - 72 >= 0"
    long lhs = 0;
    bool holds = false;
};

struct ParamReport {
    std::vector<Condition> conditions;
    bool all_hold() const noexcept;
};

/// Conditions (i)-(v) of the experimental setup plus t <= d* - 3g - 1 and
/// deg(F + ell G) < n when t is given.
ParamReport validate_params(const CodeParams& p);

}  // namespace agdec
