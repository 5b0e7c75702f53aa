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
#include <optional>
#include <string>
#include <vector>

#include "decoder.hpp"

namespace agdec {

enum class ErrorModel { uniform, worst_case };
enum class OutputFormat { csv, json, markdown };

/**
 * Line-oriented `key = value` configuration:
 *
 *     curve = hermitian16.curve      (or curve_inline = field 2 4; cab 4 5; term 5 0 1; term 0 1 1)
 *     degG = 8
 *     ell = 2
 *     t = radius                     (integer, radius, radius+1 or half_designed)
 *     trials = 50
 *     seed = 42
 *     error_model = uniform          (or worst-case)
 *     point_policy = first-hit       (or max-drop)
 *     format = csv                   (or json, markdown)
 *
 * Optional: npoints, degF, degGprime, max_steps, include_timing (true/false).
 */
struct ExperimentConfig {
    std::string curve_text;
    std::string curve_source;  // path or "inline"
    std::optional<int> degG;
    std::optional<std::size_t> npoints;
    int ell = 1;
    std::string t = "radius";
    int trials = 1;
    std::uint64_t seed = 0;
    ErrorModel error_model = ErrorModel::uniform;
    PointPolicy policy = PointPolicy::first_hit;
    OutputFormat format = OutputFormat::csv;
    std::optional<int> degF;
    std::optional<int> degGprime;
    std::optional<int> max_steps;
    bool include_timing = false;

    /// Relative curve paths resolve against base_dir.
    static ExperimentConfig parse(const std::string& text, const std::string& base_dir = ".");
};

std::optional<OutputFormat> parse_output_format(const std::string& s) noexcept;

struct TrialRecord {
    std::size_t trial = 0;
    bool success = false;
    FailureReason reason = FailureReason::none;
    std::optional<long> delta0;
    std::vector<long> delta_gaps;
    bool pts_in_De = true;
    std::size_t steps = 0;
    double wall_ms = 0;
};

struct ExperimentSummary {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_rate = 0;
    double mean_delta0 = 0;
    std::optional<long> modal_gap;
    double pts_in_De_rate = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    CodePtr code;
    std::string curve_label;
    long half_designed = 0;
    long sudan = 0;  // improved variant
    long power_radius = 0;
    long t = 0;
    std::vector<TrialRecord> trials;
    ExperimentSummary summary;
};

/// Resolves a symbolic or integer t for the given parameters.
long resolve_t(const std::string& spec, long n, long degG, long ell);

/// A readable label: the curve's name, else its equation.
std::string curve_label(const CabCurve& curve);

ExperimentResult run_experiment(const ExperimentConfig& config);

std::string format_result(const ExperimentResult& r, OutputFormat format);
std::string format_csv(const ExperimentResult& r);
std::string format_json(const ExperimentResult& r);
std::string format_markdown(const ExperimentResult& r);

/// Small-scale invariant checks across all modules.
struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool passed() const noexcept;
    std::string to_text() const;
};

/// fault: "" for none, or "modulus" to run the suites over a reducible modulus.
SelftestReport run_selftest(std::uint64_t seed, const std::string& fault = {});

}  // namespace agdec
