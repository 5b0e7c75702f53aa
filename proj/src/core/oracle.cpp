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

#include "oracle.hpp"

#include <algorithm>

namespace agdec {

namespace {

std::uint64_t message_count(const AGCode& code, OracleBudget budget)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        total *= code.field().order();
        if (total > budget.max_enumeration)
            fail(ErrorKind::budget, "message space exceeds the enumeration budget");
    }
    return total;
}

// Calls fn(codeword) for every codeword, messages in counting order.
template <class Fn>
void for_each_codeword(const AGCode& code, OracleBudget budget, Fn&& fn)
{
    const std::uint64_t total = message_count(code, budget);
    const elem_t q = code.field().order();
    Vec msg(code.dimension(), 0);
    for (std::uint64_t m = 0; m < total; ++m) {
        std::uint64_t v = m;
        for (auto& x : msg) {
            x = static_cast<elem_t>(v % q);
            v /= q;
        }
        fn(code.encode(msg));
    }
}

}  // namespace

std::vector<NearCodeword> nearest_codewords(const AGCode& code, std::span<const elem_t> y, std::size_t radius,
                                            OracleBudget budget)
{
    require(y.size() == code.length(), ErrorKind::dimension, "word length differs from code length");
    std::vector<NearCodeword> out;
    for_each_codeword(code, budget, [&](Vec c) {
        const std::size_t d = hamming(c, y);
        if (d <= radius) out.push_back({std::move(c), d});
    });
    std::sort(out.begin(), out.end(), [](const NearCodeword& a, const NearCodeword& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.codeword < b.codeword;
    });
    return out;
}

std::size_t min_distance_exhaustive(const AGCode& code, OracleBudget budget)
{
    std::size_t best = code.length();
    bool any = false;
    for_each_codeword(code, budget, [&](const Vec& c) {
        const std::size_t w = weight(c);
        if (w == 0) return;
        any = true;
        best = std::min(best, w);
    });
    require(any, ErrorKind::invalid_argument, "the zero code has no minimum distance");
    return best;
}

Subspace s_space_reference(DecodeContext& ctx, const Divisor& F, int i)
{
    const AGCode& code = ctx.code();
    const Field& f = code.field();
    const CurvePtr& curve = code.curve();
    const std::size_t amb = ctx.ambient_dim();
    const Subspace l = ctx.l_space(F);
    const Subspace u1 = ctx.l_space(F.plus_inf(i * code.degG()));
    const Subspace u2 = ctx.l_space(ctx.minus_D(F.plus_inf(i * ctx.degGprime())));
    const CurveFn& fyi = ctx.f_y_power(i);

    // Rows: products, then U1, then U2. A kernel vector of the transpose is a
    // relation sum x_r Lambda_r f_y^i + u1 + u2 = 0; its first block is what we want.
    Matrix stack(0, amb);
    for (std::size_t r = 0; r < l.dim(); ++r)
        stack.append_row(fn_mul(as_function(curve, l.basis().row(r)), fyi).coordinates(amb));
    for (const Subspace* s : {&u1, &u2})
        for (std::size_t r = 0; r < s->dim(); ++r) stack.append_row(s->basis().row(r));
    const Subspace rel = kernel(f, stack.transposed());
    Matrix lambdas(0, amb);
    for (std::size_t r = 0; r < rel.dim(); ++r) {
        const auto x = rel.basis().row(r).first(l.dim());
        lambdas.append_row(combine_rows(f, x, l.basis()));
    }
    if (lambdas.rows() == 0) return Subspace::zero(amb);
    return Subspace::span(f, std::move(lambdas));
}

Vec random_codeword(const AGCode& code, Rng& rng)
{
    Vec msg(code.dimension());
    for (auto& m : msg) m = static_cast<elem_t>(rng.below(code.field().order()));
    return code.encode(msg);
}

Vec random_error(const Field& f, std::size_t n, std::size_t t, Rng& rng)
{
    require(t <= n, ErrorKind::invalid_argument, "error weight exceeds length");
    Vec e(n, 0);
    for (std::size_t pos : rng.subset(n, t)) e[pos] = static_cast<elem_t>(1 + rng.below(f.order() - 1));
    return e;
}

WorstCase worst_case(const AGCode& code, std::size_t t, Rng& rng, OracleBudget budget)
{
    const Field& f = code.field();
    require(2 * t <= code.length(), ErrorKind::invalid_argument, "2t exceeds the code length");
    // Nonzero codewords weigh at least d*, so smaller differences cannot exist.
    require(2 * t >= static_cast<std::size_t>(code.designed_distance()), ErrorKind::invalid_argument,
            "2t is below the designed distance; no codeword pair is that close");
    for (std::uint64_t tries = 0; tries < budget.max_enumeration; ++tries) {
        Vec c1 = random_codeword(code, rng);
        Vec c2 = random_codeword(code, rng);
        Vec d(c1.size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = f.sub(c2[k], c1[k]);
        if (weight(d) != 2 * t) continue;
        const auto supp = support(d);
        Vec y = c1;
        for (std::size_t k : rng.subset(supp.size(), t)) y[supp[k]] = c2[supp[k]];
        return {std::move(y), std::move(c1), std::move(c2)};
    }
    fail(ErrorKind::budget, "no codeword pair at distance 2t found within the budget");
}

}  // namespace agdec
