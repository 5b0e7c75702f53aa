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

#include "agcode.hpp"
#include "rrspace.hpp"

namespace agdec {

enum class PointPolicy { first_hit, max_drop };

struct DecoderConfig {
    int ell = 1;
    int t = 0;
    std::optional<int> degF;       // default t + 2g
    std::optional<int> degGprime;  // default n + 2g - 1
    std::optional<int> max_steps;  // default g + 1
    PointPolicy policy = PointPolicy::first_hit;
};

enum class FailureReason { none, s_zero, no_lambda, recovery_inconsistent, weight_exceeded, not_codeword };

const char* to_string(FailureReason r) noexcept;
const char* to_string(PointPolicy p) noexcept;
std::optional<PointPolicy> parse_point_policy(const std::string& s) noexcept;

struct StepRecord {
    std::size_t j = 0;
    Divisor divisor;
    std::size_t dim_s = 0;
    std::optional<std::size_t> chosen;  // position in the code's point list
    std::size_t drop = 0;               // dim S(F_j) - dim S(F_{j+1}) when a point was chosen
    /// Per i = 1..ell: whether L(F_j+iG) + L(F_j+iG'-D) is direct, the complement
    /// dimension computed from the spaces, and the closed form n - deg F_j - i degG + g - 1.
    std::vector<bool> direct;
    std::vector<long> dim_z;
    std::vector<long> dim_z_formula;
    std::optional<std::size_t> ell_minus_error;  // l(F_j - D_e), instrumentation only
    std::optional<long> delta;                   // dim S(F_j) - l(F_j - D_e)
};

struct DecodeTrace {
    std::vector<StepRecord> steps;
    std::optional<long> delta0;
    std::vector<long> delta_gaps;   // Delta_j - Delta_{j+1} along the accepted steps
    std::optional<bool> pts_in_De;  // every chosen point is an error position
};

struct Outcome {
    bool success = false;
    FailureReason reason = FailureReason::none;
    std::optional<CurveFn> f_e;
    Vec error;
    Vec codeword;
};

struct DecodeResult {
    Outcome outcome;
    DecodeTrace trace;
};

struct PointChoice {
    std::size_t position = 0;  // in the code's point list
    Divisor divisor;           // F_j - P
    std::size_t dim_s = 0;     // dim S(F_j - P)
    std::size_t drop = 0;
};

/**
 * Everything fixed for one received word: the lift f_y, its powers, the
 * ambient coordinate system over L(M Q) with M = deg F + ell deg G', and the
 * products monomial * f_y^i that every S_i(F_j) is built from.
 */
class DecodeContext {
public:
    DecodeContext(CodePtr code, Vec y, DecoderConfig config);

    const AGCode& code() const noexcept { return *code_; }
    const CodePtr& code_ptr() const noexcept { return code_; }
    const Vec& received() const noexcept { return y_; }
    int ell() const noexcept { return ell_; }
    int t() const noexcept { return t_; }
    int degF() const noexcept { return degF_; }
    int degGprime() const noexcept { return degGp_; }
    int max_steps() const noexcept { return max_steps_; }
    PointPolicy policy() const noexcept { return policy_; }
    int ambient_M() const noexcept { return ambient_M_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    const CurveFn& f_y() const noexcept { return powers_.front(); }
    /// f_y^i for 1 <= i <= ell.
    const CurveFn& f_y_power(int i) const { return powers_.at(static_cast<std::size_t>(i - 1)); }
    /// d - D, where D is the sum of all evaluation points.
    Divisor minus_D(const Divisor& d) const { return d.minus_points(code_->point_indices()); }

    /// L(divisor) in ambient coordinates.
    Subspace l_space(const Divisor& d);
    Subspace s_space(const Divisor& F, int i);
    Subspace s_intersection(const Divisor& F);

    /// Qualifying point for F_j (drop >= 2) under the configured policy.
    std::optional<PointChoice> adapt_step(const Divisor& F);
    /// dim S(F - P) for every evaluation point, by the incremental scan when the
    /// sums are direct and by recomputation otherwise.
    std::vector<std::size_t> scan_dims(const Divisor& F);
    /// Same, always by full recomputation. Slow; for cross-checks.
    std::vector<std::size_t> scan_dims_full(const Divisor& F);

    /// f_e from a locator candidate; nullopt when the division is inconsistent.
    std::optional<CurveFn> recover(const CurveFn& lambda, const Divisor& F);

    DecodeResult run(const Vec* true_error = nullptr);

private:
    struct State {
        Divisor divisor;
        Subspace l;
        std::vector<Subspace> u1, u2;
        std::vector<bool> direct;
        Subspace s;
    };
    State compute_state(const Divisor& F);
    std::vector<std::size_t> scan(const State& st);
    std::optional<PointChoice> choose(const State& st);
    Vec product(std::span<const elem_t> lambda, int i) const;
    std::size_t prec_needed(const Divisor& F) const;

    CodePtr code_;
    Vec y_;
    int ell_, t_, degF_, degGp_, max_steps_;
    PointPolicy policy_;
    int ambient_M_;
    std::size_t ambient_;
    std::size_t n_f_;  // basis size of L(deg F * Q)
    ExpansionCache cache_;
    std::vector<CurveFn> powers_;
    std::vector<Matrix> products_;  // products_[i-1] row k = monomial(k) * f_y^i
};

/// Lift of y to L(degGprime * Q) with free variables zero.
CurveFn lift_received(const AGCode& code, std::span<const elem_t> y, int degGprime);

DecodeResult decode(const CodePtr& code, const Vec& y, const DecoderConfig& config, const Vec* true_error = nullptr);

/// Code-domain K_y^(i) for F = degF * Q, built from duals and star products only.
Subspace k_space(const AGCode& code, int degF, std::span<const elem_t> y, int i);

/// Reduced-echelon image of a function subspace at the code points.
Subspace evaluate_space(const AGCode& code, const Subspace& functions);

}  // namespace agdec
