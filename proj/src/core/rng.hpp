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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace agdec {

/// SplitMix64 finalizer; derives independent per-trial seeds from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * mt19937_64 with a bounded draw of our own: the standard distributions are
 * implementation-defined, which would make seeded runs differ across
 * standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial)
    {
        return Rng(splitmix64(splitmix64(seed) ^ trial));
    }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound), rejection sampled.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do v = engine_();
        while (v >= limit);
        return v % bound;
    }
    /// Uniformly random k-subset of [0, n) in increasing order (partial Fisher-Yates).
    std::vector<std::size_t> subset(std::size_t n, std::size_t k)
    {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + below(n - i)]);
        idx.resize(k);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace agdec
