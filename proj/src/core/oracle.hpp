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

#include <cstdint>
#include <vector>

#include "decoder.hpp"
#include "rng.hpp"

namespace agdec {

// Brute-force references. Slow on purpose; they share as little as possible
// with the decoder so that agreement means something.

struct OracleBudget {
    std::uint64_t max_enumeration = 1'000'000;
};

struct NearCodeword {
    Vec codeword;
    std::size_t distance = 0;
};

/// Every codeword within `radius` of y, by distance then lexicographically.
std::vector<NearCodeword> nearest_codewords(const AGCode& code, std::span<const elem_t> y, std::size_t radius,
                                            OracleBudget budget = {});

std::size_t min_distance_exhaustive(const AGCode& code, OracleBudget budget = {});

/// S_i(F) from the definition: stack Lambda_r * f_y^i (one fn_mul per basis
/// function of L(F)) with bases of L(F+iG) and L(F+iG'-D), take the kernel.
Subspace s_space_reference(DecodeContext& ctx, const Divisor& F, int i);

struct WorstCase {
    Vec y;
    Vec c1;
    Vec c2;
};

/// y at distance exactly t from two distinct codewords. Needs a codeword
/// difference of weight 2t; random pairs are tried up to the budget.
WorstCase worst_case(const AGCode& code, std::size_t t, Rng& rng, OracleBudget budget = {});

Vec random_codeword(const AGCode& code, Rng& rng);
/// Uniform support of size t, uniform nonzero values.
Vec random_error(const Field& f, std::size_t n, std::size_t t, Rng& rng);

}  // namespace agdec
