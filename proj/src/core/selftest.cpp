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

#include <algorithm>
#include <functional>
#include <sstream>

#include "experiment.hpp"
#include "oracle.hpp"
#include "radius.hpp"

namespace agdec {

bool SelftestReport::passed() const noexcept
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

std::string SelftestReport::to_text() const
{
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
        ok += c.passed;
    }
    os << ok << "/" << checks.size() << " checks passed\n";
    return os.str();
}

namespace {

using CheckFn = std::function<std::string()>;  // empty string = pass, otherwise the reason

void run_check(SelftestReport& rep, const std::string& name, const CheckFn& fn)
{
    SelftestCheck c{name, false, {}};
    try {
        c.detail = fn();
        c.passed = c.detail.empty();
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    rep.checks.push_back(std::move(c));
}

std::string field_axioms(const Field& f, Rng& rng)
{
    const elem_t q = f.order();
    for (elem_t a = 1; a < q; ++a)
        if (f.mul(a, f.inv(a)) != 1) return "no inverse for " + f.format(a);
    for (elem_t a = 0; a < q; ++a) {
        if (f.pow(a, q) != a) return "Frobenius fixes not " + f.format(a);
        if (f.add(a, f.neg(a)) != 0) return "additive inverse";
    }
    for (int s = 0; s < 1000; ++s) {
        const auto a = static_cast<elem_t>(rng.below(q)), b = static_cast<elem_t>(rng.below(q)),
                   c = static_cast<elem_t>(rng.below(q));
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return "distributivity";
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return "associativity";
        if (f.mul(a, b) != f.mul_reference(a, b)) return "table and reference products differ";
    }
    return {};
}

std::string linalg_invariants(const Field& f, Rng& rng)
{
    for (int s = 0; s < 20; ++s) {
        Matrix m(5, 8);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 8; ++c) m(r, c) = static_cast<elem_t>(rng.below(f.order()));
        const RrefResult r = rref(f, m);
        const Subspace k = kernel(f, m);
        if (r.rank + k.dim() != 8) return "rank-nullity";
        for (std::size_t i = 0; i < k.dim(); ++i) {
            const Vec mv = multiply(f, m, k.basis().row(i));
            if (weight(mv) != 0) return "kernel vector not annihilated";
        }
        if (rref(f, r.reduced).reduced != r.reduced) return "rref not idempotent";
    }
    return {};
}

CurvePtr hermitian(const FieldPtr& f)
{
    // y^(r+1) + y = x^(r+1) over F_{r^2}, in the y^a = ... convention (characteristic 2 here).
    return CabCurve::create(f, 4, 5, {{5, 0, 1}, {0, 1, f->neg(1)}}, "hermitian");
}

std::string curve_invariants(const CurvePtr& c, Rng& rng)
{
    if (c->points().size() != 64) return "expected 64 affine points, got " + std::to_string(c->points().size());
    int gaps = 0;
    for (int s = 0; s < 2 * c->genus(); ++s) gaps += !c->monomial_with_pole_order(s).has_value();
    if (gaps != c->genus()) return "gap count differs from genus";
    const Field& f = c->field();
    for (int s = 0; s < 10; ++s) {
        Vec a(12), b(12);
        for (auto& v : a) v = static_cast<elem_t>(rng.below(f.order()));
        for (auto& v : b) v = static_cast<elem_t>(rng.below(f.order()));
        const CurveFn fa(c, a), fb(c, b), prod = fn_mul(fa, fb);
        for (const auto& p : c->points())
            if (evaluate(prod, p) != f.mul(evaluate(fa, p), evaluate(fb, p))) return "evaluation not multiplicative";
    }
    return {};
}

std::string rr_invariants(const CurvePtr& c)
{
    const int g = c->genus();
    for (int a = 2 * g - 1; a <= 4 * g; ++a)
        if (ell(c, Divisor(a)) != static_cast<std::size_t>(a - g + 1)) return "l(aQ) at a = " + std::to_string(a);
    for (int a = 0; a <= 2 * g - 2; ++a)
        if (2 * ell(c, Divisor(a)) > static_cast<std::size_t>(2 + a)) return "Clifford bound at a = " + std::to_string(a);
    ExpansionCache cache(c);
    const Divisor F(20);
    const std::size_t base = ell(cache, F);
    for (std::size_t p = 0; p < 8; ++p) {
        const std::size_t d = ell(cache, F.add_point(p, -1));
        if (d + 1 < base || d > base) return "one-point drop out of range";
    }
    return {};
}

std::string code_invariants(const CurvePtr& c, Rng& rng)
{
    const auto code = AGCode::create(c, 12);
    const Field& f = code->field();
    if (!(dual(f, code->dual_space()) == code->space())) return "double dual differs";
    const auto code2 = AGCode::create(c, 13);
    const auto sum = AGCode::create(c, 25);
    if (!(star_product(f, code->space(), code2->space()) == sum->space())) return "star product of AG codes";
    for (int s = 0; s < 20; ++s) {
        Vec a(64), b(64), d(64);
        for (std::size_t i = 0; i < 64; ++i) {
            a[i] = static_cast<elem_t>(rng.below(f.order()));
            b[i] = static_cast<elem_t>(rng.below(f.order()));
            d[i] = static_cast<elem_t>(rng.below(f.order()));
        }
        if (dot(f, star(f, a, b), d) != dot(f, a, star(f, b, d))) return "star adjunction";
    }
    return {};
}

std::string decode_trials(const CurvePtr& c, int ell, int t, int trials, Rng& rng,
                          PointPolicy policy = PointPolicy::first_hit)
{
    const auto code = AGCode::create(c, 8);
    DecoderConfig cfg;
    cfg.ell = ell;
    cfg.t = t;
    cfg.policy = policy;
    for (int s = 0; s < trials; ++s) {
        const Vec cw = random_codeword(*code, rng);
        const Vec e = random_error(code->field(), code->length(), static_cast<std::size_t>(t), rng);
        Vec y(cw.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = code->field().add(cw[i], e[i]);
        const DecodeResult r = decode(code, y, cfg, &e);
        if (!r.outcome.success) return std::string("decode failed: ") + to_string(r.outcome.reason);
        if (r.outcome.codeword != cw) return "decoded to the wrong codeword";
    }
    return {};
}

std::string s_space_agreement(const CurvePtr& c, Rng& rng)
{
    const auto code = AGCode::create(c, 8);
    for (int s = 0; s < 2; ++s) {
        const Vec cw = random_codeword(*code, rng);
        const Vec e = random_error(code->field(), code->length(), 34, rng);
        Vec y(cw.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = code->field().add(cw[i], e[i]);
        DecodeContext ctx(code, y, {2, 34, {}, {}, {}, PointPolicy::first_hit});
        const Divisor F(ctx.degF());
        for (int i = 1; i <= 2; ++i)
            if (!(ctx.s_space(F, i) == s_space_reference(ctx, F, i))) return "S_i(F) differs from reference";
    }
    return {};
}

std::string rs_oracle(const FieldPtr& f, Rng& rng)
{
    const auto line = CabCurve::line(f);
    const auto code = AGCode::create(line, 3, 10);
    for (int s = 0; s < 20; ++s) {
        const std::size_t t = rng.below(4);
        const Vec cw = random_codeword(*code, rng);
        const Vec e = random_error(*f, code->length(), t, rng);
        Vec y(cw.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = f->add(cw[i], e[i]);
        const auto near = nearest_codewords(*code, y, t);
        if (near.size() != 1) return "oracle did not find a unique codeword";
        DecoderConfig cfg;
        cfg.t = static_cast<int>(t);
        const DecodeResult r = decode(code, y, cfg);
        if (!r.outcome.success || r.outcome.codeword != near.front().codeword) return "decoder disagrees with oracle";
    }
    return {};
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, const std::string& fault)
{
    if (!fault.empty() && fault != "modulus") fail(ErrorKind::invalid_argument, "unknown fault '" + fault + "'");
    SelftestReport rep;
    Rng rng(seed);
    // The field every suite runs over; the injected fault swaps in a reducible modulus, x^4 + 1 = (x + 1)^4.
    const FieldPtr f16 =
        fault == "modulus" ? Field::with_modulus(2, {1, 0, 0, 0, 1}, false) : Field::create(2, 4);
    const FieldPtr f9 = Field::create(3, 2);
    const FieldPtr f11 = Field::create(11, 1);

    run_check(rep, "field axioms F16", [&] { return field_axioms(*f16, rng); });
    run_check(rep, "field axioms F9", [&] { return field_axioms(*f9, rng); });
    run_check(rep, "linear algebra invariants F9", [&] { return linalg_invariants(*f9, rng); });
    CurvePtr herm;
    run_check(rep, "hermitian curve over F16", [&] {
        herm = hermitian(f16);
        return curve_invariants(herm, rng);
    });
    auto with_curve = [&](const CheckFn& fn) -> CheckFn {
        return [&, fn] { return herm ? fn() : std::string("curve unavailable"); };
    };
    run_check(rep, "Riemann-Roch dimensions", with_curve([&] { return rr_invariants(herm); }));
    run_check(rep, "code duality and star products", with_curve([&] { return code_invariants(herm, rng); }));
    run_check(rep, "S_i(F) matches the reference", with_curve([&] { return s_space_agreement(herm, rng); }));
    run_check(rep, "unique decoding ell=1 t=27", with_curve([&] { return decode_trials(herm, 1, 27, 5, rng); }));
    // Power decoding succeeds only with high probability, so it runs on a fixed stream.
    run_check(rep, "power decoding ell=2 t=34", with_curve([&] {
        Rng fixed(1);
        return decode_trials(herm, 2, 34, 3, fixed, PointPolicy::max_drop);
    }));
    run_check(rep, "RS decoding agrees with nearest-codeword oracle", [&] { return rs_oracle(f11, rng); });
    run_check(rep, "radius anchors", [] {
        if (half_designed(200, 19) != 90 || sudan_radius(200, 10, 19, 2, SudanVariant::improved) != 107 ||
            power_radius(200, 19, 2) != 113)
            return std::string("row 1");
        if (half_designed(200, 46) != 76 || sudan_radius(200, 10, 46, 2, SudanVariant::improved) != 80 ||
            power_radius(200, 46, 2) != 86)
            return std::string("row 2");
        return std::string();
    });
    return rep;
}

}  // namespace agdec
