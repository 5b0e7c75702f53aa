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

#include "decoder.hpp"

#include <algorithm>

namespace agdec {

const char* to_string(FailureReason r) noexcept
{
    switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::s_zero: return "S_zero";
    case FailureReason::no_lambda: return "no_Lambda";
    case FailureReason::recovery_inconsistent: return "recovery_inconsistent";
    case FailureReason::weight_exceeded: return "weight_exceeded";
    case FailureReason::not_codeword: return "not_codeword";
    }
    return "unknown";
}

const char* to_string(PointPolicy p) noexcept
{
    return p == PointPolicy::first_hit ? "first-hit" : "max-drop";
}

std::optional<PointPolicy> parse_point_policy(const std::string& s) noexcept
{
    if (s == "first-hit") return PointPolicy::first_hit;
    if (s == "max-drop") return PointPolicy::max_drop;
    return std::nullopt;
}

CurveFn lift_received(const AGCode& code, std::span<const elem_t> y, int degGprime)
{
    require(y.size() == code.length(), ErrorKind::dimension, "received word length differs from code length");
    const CabCurve& curve = *code.curve();
    const Matrix e = monomial_evaluations(curve, code.points(), curve.basis_size(degGprime));
    auto x = solve(curve.field(), e.transposed(), y);
    require(x.has_value(), ErrorKind::internal, "evaluation on L(G') is not surjective; increase degG'");
    return CurveFn(code.curve(), std::move(*x));
}

DecodeContext::DecodeContext(CodePtr code, Vec y, DecoderConfig config)
    : code_(std::move(code)), y_(std::move(y)), cache_(code_->curve())
{
    const int g = code_->genus();
    const int n = static_cast<int>(code_->length());
    require(config.ell >= 1, ErrorKind::invalid_argument, "ell must be at least 1");
    require(config.t >= 0 && config.t < n, ErrorKind::invalid_argument, "t must lie in [0, n)");
    require(y_.size() == code_->length(), ErrorKind::dimension, "received word length differs from code length");
    for (elem_t v : y_) require(code_->field().contains(v), ErrorKind::invalid_argument, "symbol outside the field");
    ell_ = config.ell;
    t_ = config.t;
    degF_ = config.degF.value_or(t_ + 2 * g);
    degGp_ = config.degGprime.value_or(n + 2 * g - 1);
    max_steps_ = config.max_steps.value_or(g + 1);
    policy_ = config.policy;
    require(degF_ >= t_ + g, ErrorKind::invalid_argument, "deg F must be at least t + g");
    require(degGp_ >= n + 2 * g - 1, ErrorKind::invalid_argument, "deg G' must be at least n + 2g - 1");
    require(degGp_ >= code_->degG(), ErrorKind::invalid_argument, "G' must dominate G");
    require(max_steps_ >= 0, ErrorKind::invalid_argument, "max_steps must be nonnegative");

    const CurvePtr& curve = code_->curve();
    ambient_M_ = degF_ + ell_ * degGp_;
    ambient_ = curve->basis_size(ambient_M_);
    n_f_ = curve->basis_size(degF_);

    powers_.push_back(lift_received(*code_, y_, degGp_));
    for (int i = 2; i <= ell_; ++i) powers_.push_back(fn_mul(powers_.back(), powers_.front()));
    for (int i = 1; i <= ell_; ++i) {
        Matrix m(n_f_, ambient_);
        for (std::size_t k = 0; k < n_f_; ++k) {
            const CurveFn p = fn_mul(CurveFn::monomial(curve, curve->monomial(k)), powers_[i - 1]);
            std::copy(p.coeffs().begin(), p.coeffs().end(), m.row(k).begin());
        }
        products_.push_back(std::move(m));
    }
}

Subspace DecodeContext::l_space(const Divisor& d)
{
    if (d.inf_coeff() > ambient_M_) fail(ErrorKind::invalid_argument, "divisor exceeds the ambient space");
    return rr_space(cache_, d, ambient_M_).space;
}

Vec DecodeContext::product(std::span<const elem_t> lambda, int i) const
{
    return combine_rows(code_->field(), lambda.first(n_f_), products_[static_cast<std::size_t>(i - 1)]);
}

DecodeContext::State DecodeContext::compute_state(const Divisor& F)
{
    require(F.inf_coeff() == degF_, ErrorKind::invalid_argument, "F_j must keep the pole order of F");
    const Field& f = code_->field();
    State st{F, l_space(F), {}, {}, {}, Subspace::zero(ambient_)};
    const int degG = code_->degG();
    std::vector<Matrix> blocks;
    for (int i = 1; i <= ell_; ++i) {
        st.u1.push_back(l_space(F.plus_inf(i * degG)));
        st.u2.push_back(l_space(minus_D(F.plus_inf(i * degGp_))));
        const Subspace w = st.u1.back().sum(f, st.u2.back());
        st.direct.push_back(w.dim() == st.u1.back().dim() + st.u2.back().dim());
        // Residue of Lambda * f_y^i modulo U1 + U2, one row per basis function of L(F_j).
        Matrix res(st.l.dim(), ambient_);
        for (std::size_t r = 0; r < st.l.dim(); ++r) {
            Vec v = product(st.l.basis().row(r), i);
            w.reduce(f, v);
            std::copy(v.begin(), v.end(), res.row(r).begin());
        }
        blocks.push_back(std::move(res));
    }
    Matrix all(st.l.dim(), ambient_ * blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t r = 0; r < st.l.dim(); ++r)
            std::copy(blocks[b].row(r).begin(), blocks[b].row(r).end(), all.row(r).begin() + b * ambient_);
    const Subspace combos = kernel(f, all.transposed());
    st.s = combos.is_zero() ? Subspace::zero(ambient_) : Subspace::span(f, multiply(f, combos.basis(), st.l.basis()));
    return st;
}

Subspace DecodeContext::s_space(const Divisor& F, int i)
{
    require(i >= 1 && i <= ell_, ErrorKind::invalid_argument, "power index out of range");
    const Field& f = code_->field();
    const Subspace l = l_space(F);
    const Subspace u1 = l_space(F.plus_inf(i * code_->degG()));
    const Subspace u2 = l_space(minus_D(F.plus_inf(i * degGp_)));
    const Subspace w = u1.sum(f, u2);
    Matrix res(l.dim(), ambient_);
    for (std::size_t r = 0; r < l.dim(); ++r) {
        Vec v = product(l.basis().row(r), i);
        w.reduce(f, v);
        std::copy(v.begin(), v.end(), res.row(r).begin());
    }
    const Subspace combos = kernel(f, res.transposed());
    if (combos.is_zero()) return Subspace::zero(ambient_);
    return Subspace::span(f, multiply(f, combos.basis(), l.basis()));
}

Subspace DecodeContext::s_intersection(const Divisor& F) { return compute_state(F).s; }

std::size_t DecodeContext::prec_needed(const Divisor& F) const
{
    int m = 0;
    for (const auto& [p, c] : F.finite()) m = std::max(m, -c);
    return static_cast<std::size_t>(m) + 2;
}

std::vector<std::size_t> DecodeContext::scan_dims_full(const Divisor& F)
{
    std::vector<std::size_t> out;
    for (std::size_t idx : code_->point_indices()) out.push_back(compute_state(F.add_point(idx, -1)).s.dim());
    return out;
}

std::vector<std::size_t> DecodeContext::scan_dims(const Divisor& F) { return scan(compute_state(F)); }

std::vector<std::size_t> DecodeContext::scan(const State& st)
{
    const Divisor& F = st.divisor;
    const bool all_direct = std::all_of(st.direct.begin(), st.direct.end(), [](bool b) { return b; });
    if (!all_direct) return scan_dims_full(F);

    // With U1 (+) U2 direct, Lambda in S(F - P) iff Lambda and the two parts of
    // each Lambda f_y^i vanish one order deeper at P; that is 1 + 2 ell linear
    // conditions on S(F), so dim S(F - P) = dim S(F) - rank.
    const Field& f = code_->field();
    const std::size_t d = st.s.dim();
    std::vector<Decomposition> parts;  // parts[(i-1)*d + r]
    for (int i = 1; i <= ell_; ++i) {
        Matrix vs(d, ambient_);
        for (std::size_t r = 0; r < d; ++r) {
            const Vec v = product(st.s.basis().row(r), i);
            std::copy(v.begin(), v.end(), vs.row(r).begin());
        }
        auto dec = decompose_rows(f, vs, st.u1[i - 1], st.u2[i - 1], Subspace::zero(ambient_));
        for (auto& x : dec) parts.push_back(std::move(x));
    }
    const std::size_t prec = prec_needed(F);
    std::vector<std::size_t> out;
    for (std::size_t idx : code_->point_indices()) {
        const std::size_t m = static_cast<std::size_t>(F.multiplicity(idx));
        const Matrix& e = cache_.at(idx, ambient_, prec);
        const auto at_m = e.row(m).first(ambient_);
        const auto at_m1 = e.row(m + 1).first(ambient_);
        Matrix cond(1 + 2 * static_cast<std::size_t>(ell_), d);
        for (std::size_t r = 0; r < d; ++r) {
            cond(0, r) = dot(f, at_m, st.s.basis().row(r));
            for (int i = 1; i <= ell_; ++i) {
                const Decomposition& p = parts[(i - 1) * d + r];
                cond(2 * i - 1, r) = dot(f, at_m, p.u1);
                cond(2 * i, r) = dot(f, at_m1, p.u2);
            }
        }
        out.push_back(d - rref(f, std::move(cond)).rank);
    }
    return out;
}

std::optional<PointChoice> DecodeContext::adapt_step(const Divisor& F) { return choose(compute_state(F)); }

std::optional<PointChoice> DecodeContext::choose(const State& st)
{
    const Divisor& F = st.divisor;
    const std::size_t dim = st.s.dim();
    const std::vector<std::size_t> dims = scan(st);
    std::optional<PointChoice> best;
    const auto idx = code_->point_indices();
    for (std::size_t pos = 0; pos < dims.size(); ++pos) {
        if (dims[pos] + 2 > dim) continue;
        const std::size_t drop = dim - dims[pos];
        if (!best || drop > best->drop) best = PointChoice{pos, F.add_point(idx[pos], -1), dims[pos], drop};
        if (policy_ == PointPolicy::first_hit) break;
    }
    return best;
}

std::optional<CurveFn> DecodeContext::recover(const CurveFn& lambda, const Divisor& F)
{
    const Field& f = code_->field();
    const CurvePtr& curve = code_->curve();
    require(!lambda.is_zero(), ErrorKind::invalid_argument, "locator candidate is zero");
    require(lambda.coeffs().size() <= n_f_, ErrorKind::invalid_argument, "locator candidate outside L(F)");
    const Subspace u1 = l_space(F.plus_inf(code_->degG()));
    const Subspace u2 = l_space(minus_D(F.plus_inf(degGp_)));
    if (u1.sum(f, u2).dim() != u1.dim() + u2.dim()) return std::nullopt;
    const Vec v = product(lambda.coordinates(ambient_), 1);
    Decomposition parts;
    try {
        parts = decompose(f, v, u1, u2, Subspace::zero(ambient_));
    } catch (const Error&) {
        return std::nullopt;
    }
    // Lambda * g = h over g in L(G').
    const std::size_t ng = curve->basis_size(degGp_);
    Matrix cols(ng, ambient_);
    for (std::size_t k = 0; k < ng; ++k) {
        const CurveFn p = fn_mul(lambda, CurveFn::monomial(curve, curve->monomial(k)));
        std::copy(p.coeffs().begin(), p.coeffs().end(), cols.row(k).begin());
    }
    auto g = solve(f, cols.transposed(), parts.u2);
    if (!g) return std::nullopt;
    return CurveFn(curve, std::move(*g));
}

DecodeResult DecodeContext::run(const Vec* true_error)
{
    DecodeResult res;
    const Field& f = code_->field();
    const int n = static_cast<int>(code_->length());
    const int g = code_->genus();
    std::vector<std::size_t> error_points;
    if (true_error) {
        require(true_error->size() == code_->length(), ErrorKind::dimension, "true error has the wrong length");
        const auto idx = code_->point_indices();
        for (std::size_t pos : support(*true_error)) error_points.push_back(idx[pos]);
        res.trace.pts_in_De = true;
    }

    auto record = [&](const State& st, std::size_t j) {
        StepRecord rec;
        rec.j = j;
        rec.divisor = st.divisor;
        rec.dim_s = st.s.dim();
        rec.direct = st.direct;
        for (int i = 1; i <= ell_; ++i) {
            const Subspace big = l_space(st.divisor.plus_inf(i * degGp_));
            rec.dim_z.push_back(static_cast<long>(big.dim()) - static_cast<long>(st.u1[i - 1].dim()) -
                                static_cast<long>(st.u2[i - 1].dim()));
            rec.dim_z_formula.push_back(n - st.divisor.degree() - i * code_->degG() + g - 1);
        }
        if (true_error) {
            rec.ell_minus_error = l_space(st.divisor.minus_points(error_points)).dim();
            rec.delta = static_cast<long>(rec.dim_s) - static_cast<long>(*rec.ell_minus_error);
        }
        res.trace.steps.push_back(std::move(rec));
    };

    Divisor F(degF_);
    State st = compute_state(F);
    record(st, 0);
    std::size_t steps = 0;
    bool stalled = false;
    while (st.s.dim() > 0) {
        auto choice = choose(st);
        if (!choice) break;
        if (steps == static_cast<std::size_t>(max_steps_)) {
            stalled = true;
            break;
        }
        StepRecord& last = res.trace.steps.back();
        last.chosen = choice->position;
        F = choice->divisor;
        st = compute_state(F);
        last.drop = last.dim_s - st.s.dim();
        if (true_error && std::find(error_points.begin(), error_points.end(),
                                    code_->points()[choice->position].index) == error_points.end())
            res.trace.pts_in_De = false;
        ++steps;
        record(st, steps);
    }
    if (true_error) {
        res.trace.delta0 = res.trace.steps.front().delta;
        for (std::size_t j = 0; j + 1 < res.trace.steps.size(); ++j)
            res.trace.delta_gaps.push_back(*res.trace.steps[j].delta - *res.trace.steps[j + 1].delta);
    }

    Outcome& out = res.outcome;
    if (st.s.dim() == 0) {
        out.reason = FailureReason::s_zero;
        return res;
    }
    if (stalled) {
        out.reason = FailureReason::no_lambda;
        return res;
    }
    const CurveFn lambda(code_->curve(), st.s.vector(0));
    auto fe = recover(lambda, F);
    if (!fe) {
        out.reason = FailureReason::recovery_inconsistent;
        return res;
    }
    out.f_e = fe;
    out.error = ev(*fe, code_->points());
    out.codeword.resize(y_.size());
    for (std::size_t k = 0; k < y_.size(); ++k) out.codeword[k] = f.sub(y_[k], out.error[k]);
    if (weight(out.error) > static_cast<std::size_t>(t_)) {
        out.reason = FailureReason::weight_exceeded;
        return res;
    }
    if (!code_->contains(out.codeword)) {
        out.reason = FailureReason::not_codeword;
        return res;
    }
    out.success = true;
    return res;
}

DecodeResult decode(const CodePtr& code, const Vec& y, const DecoderConfig& config, const Vec* true_error)
{
    DecodeContext ctx(code, y, config);
    return ctx.run(true_error);
}

Subspace evaluate_space(const AGCode& code, const Subspace& functions)
{
    return ev_space(*code.curve(), code.points(), functions);
}

Subspace k_space(const AGCode& code, int degF, std::span<const elem_t> y, int i)
{
    require(i >= 1, ErrorKind::invalid_argument, "power index must be positive");
    require(y.size() == code.length(), ErrorKind::dimension, "received word length differs from code length");
    const Field& f = code.field();
    const CabCurve& curve = *code.curve();
    const std::size_t n = code.length();
    auto ev_of = [&](int deg) {
        return ev_space(curve, code.points(), Subspace::full(curve.basis_size(deg)));
    };
    const Subspace a = ev_of(degF);
    const Subspace b = dual(f, ev_of(degF + code.degG()));
    Subspace w = dual(f, b);
    for (int r = 1; r < i; ++r) w = star_product(f, w, code.space());
    const Subspace w_perp = dual(f, w);

    Vec yi(n, 1);
    for (int r = 0; r < i; ++r) yi = star(f, yi, y);
    Matrix m(a.dim(), w_perp.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        const Vec ay = star(f, a.basis().row(r), yi);
        for (std::size_t s = 0; s < w_perp.dim(); ++s) m(r, s) = dot(f, ay, w_perp.basis().row(s));
    }
    const Subspace combos = kernel(f, m.transposed());
    if (combos.is_zero()) return Subspace::zero(n);
    return Subspace::span(f, multiply(f, combos.basis(), a.basis()));
}

}  // namespace agdec
