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


#include "agdec/agdec.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/experiment.hpp"
#include "core/radius.hpp"

using namespace agdec;

struct agdec_code {
    CodePtr code;
};

struct agdec_result {
    CodePtr code;
    DecodeResult result;
};

namespace {

thread_local std::string last_error;

agdec_status status_of(ErrorKind k)
{
    switch (k) {
    case ErrorKind::invalid_argument: return AGDEC_ERR_INVALID_ARG;
    case ErrorKind::parse: return AGDEC_ERR_PARSE;
    case ErrorKind::dimension: return AGDEC_ERR_DIMENSION;
    case ErrorKind::budget: return AGDEC_ERR_BUDGET;
    case ErrorKind::internal: return AGDEC_ERR_INTERNAL;
    }
    return AGDEC_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the thread's message.
template <class Fn>
agdec_status guarded(Fn&& fn) noexcept
{
    try {
        fn();
        last_error.clear();
        return AGDEC_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown exception";
    }
    return AGDEC_ERR_INTERNAL;
}

void need(const void* p, const char* what)
{
    if (!p) fail(ErrorKind::invalid_argument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void check_radius_args(long n, long g, long degG, long ell)
{
    require(n > 0, ErrorKind::invalid_argument, "n must be positive");
    require(g >= 0, ErrorKind::invalid_argument, "g must be non-negative");
    require(degG >= 0 && degG < n, ErrorKind::invalid_argument, "degG must lie in [0, n)");
    require(ell >= 1, ErrorKind::invalid_argument, "ell must be at least 1");
}

nlohmann::ordered_json step_json(const StepRecord& s)
{
    nlohmann::ordered_json j = {{"j", s.j}, {"divisor", s.divisor.to_string()}, {"dim_S", s.dim_s}};
    j["chosen"] = s.chosen ? nlohmann::ordered_json(*s.chosen) : nlohmann::ordered_json(nullptr);
    j["drop"] = s.drop;
    j["direct"] = s.direct;
    j["dim_Z"] = s.dim_z;
    j["dim_Z_formula"] = s.dim_z_formula;
    if (s.ell_minus_error) j["ell_F_minus_De"] = *s.ell_minus_error;
    if (s.delta) j["delta"] = *s.delta;
    return j;
}

}  // namespace

extern "C" {

const char* agdec_version(void) { return "1.0.0"; }

const char* agdec_last_error(void) { return last_error.c_str(); }

const char* agdec_status_name(agdec_status s)
{
    switch (s) {
    case AGDEC_OK: return "ok";
    case AGDEC_ERR_INVALID_ARG: return "invalid argument";
    case AGDEC_ERR_PARSE: return "parse error";
    case AGDEC_ERR_DIMENSION: return "dimension mismatch";
    case AGDEC_ERR_BUDGET: return "budget exceeded";
    case AGDEC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void agdec_string_free(char* s) { std::free(s); }

agdec_status agdec_radius(long n, long g, long degG, long ell, agdec_radii* out)
{
    return guarded([&] {
        need(out, "out");
        check_radius_args(n, g, degG, ell);
        out->half_designed = half_designed(n, degG);
        out->basic = basic_radius(n, g, degG);
        out->sudan_basic = sudan_radius(n, g, degG, ell, SudanVariant::basic);
        out->sudan_improved = sudan_radius(n, g, degG, ell, SudanVariant::improved);
        out->power = power_radius(n, degG, ell);
    });
}

agdec_status agdec_check_params(long n, long g, long degG, long ell, long t, long degF, char** report,
                                int* all_hold)
{
    return guarded([&] {
        need(report, "report");
        check_radius_args(n, g, degG, ell);
        CodeParams p{n, g, degG, ell, {}, {}};
        if (t >= 0) p.t = t;
        if (degF >= 0) p.degF = degF;
        const ParamReport r = validate_params(p);
        std::string text;
        for (const auto& c : r.conditions)
            text += "(" + c.name + ") " + c.expression + "  " + (c.holds ? "holds" : "violated") + "\n";
        *report = dup_string(text);
        if (all_hold) *all_hold = r.all_hold();
    });
}

agdec_status agdec_code_from_text(const char* curve_text, int degG, size_t npoints, agdec_code** out)
{
    return guarded([&] {
        need(curve_text, "curve_text");
        need(out, "out");
        const CurveSpec spec = parse_curve_spec(curve_text);
        const std::optional<int> d = degG >= 0 ? std::optional<int>(degG) : spec.degG;
        if (!d) fail(ErrorKind::invalid_argument, "degG given neither as an argument nor in the curve description");
        const std::optional<std::size_t> n = npoints > 0 ? std::optional<std::size_t>(npoints) : spec.npoints;
        *out = new agdec_code{AGCode::create(spec.curve, *d, n)};
    });
}

void agdec_code_free(agdec_code* code) { delete code; }

agdec_status agdec_code_info_get(const agdec_code* code, agdec_code_info* out)
{
    return guarded([&] {
        need(code, "code");
        need(out, "out");
        const AGCode& c = *code->code;
        *out = {c.field().order(), c.length(), c.dimension(), c.genus(), c.degG(), c.designed_distance()};
    });
}

agdec_status agdec_code_label(const agdec_code* code, char** out)
{
    return guarded([&] {
        need(code, "code");
        need(out, "out");
        *out = dup_string(curve_label(*code->code->curve()));
    });
}

agdec_status agdec_code_encode(const agdec_code* code, const uint32_t* message, uint32_t* out)
{
    return guarded([&] {
        need(code, "code");
        need(message, "message");
        need(out, "out");
        const AGCode& c = *code->code;
        for (std::size_t i = 0; i < c.dimension(); ++i)
            require(c.field().contains(message[i]), ErrorKind::invalid_argument, "message entry outside the field");
        const Vec w = c.encode({message, c.dimension()});
        std::copy(w.begin(), w.end(), out);
    });
}

agdec_status agdec_code_parse_word(const agdec_code* code, const char* text, uint32_t* out)
{
    return guarded([&] {
        need(code, "code");
        need(text, "text");
        need(out, "out");
        const Vec w = parse_vector(code->code->field(), text, code->code->length());
        std::copy(w.begin(), w.end(), out);
    });
}

agdec_status agdec_code_format_word(const agdec_code* code, const uint32_t* word, char** out)
{
    return guarded([&] {
        need(code, "code");
        need(word, "word");
        need(out, "out");
        *out = dup_string(format_vector(code->code->field(), {word, code->code->length()}));
    });
}

void agdec_decode_options_init(agdec_decode_options* opts)
{
    if (opts) *opts = {1, 0, -1, -1, -1, AGDEC_FIRST_HIT};
}

agdec_status agdec_decode(const agdec_code* code, const uint32_t* received, const agdec_decode_options* opts,
                          const uint32_t* true_error, agdec_result** out)
{
    return guarded([&] {
        need(code, "code");
        need(received, "received");
        need(opts, "opts");
        need(out, "out");
        const AGCode& c = *code->code;
        const std::size_t n = c.length();
        auto check_word = [&](const uint32_t* w) {
            for (std::size_t i = 0; i < n; ++i)
                require(c.field().contains(w[i]), ErrorKind::invalid_argument, "word entry outside the field");
            return Vec(w, w + n);
        };
        const Vec y = check_word(received);
        DecoderConfig cfg;
        cfg.ell = opts->ell;
        cfg.t = opts->t;
        if (opts->degF >= 0) cfg.degF = opts->degF;
        if (opts->degGprime >= 0) cfg.degGprime = opts->degGprime;
        if (opts->max_steps >= 0) cfg.max_steps = opts->max_steps;
        require(opts->policy == AGDEC_FIRST_HIT || opts->policy == AGDEC_MAX_DROP, ErrorKind::invalid_argument,
                "unknown point policy");
        cfg.policy = opts->policy == AGDEC_MAX_DROP ? PointPolicy::max_drop : PointPolicy::first_hit;
        std::optional<Vec> e;
        if (true_error) e = check_word(true_error);
        auto* r = new agdec_result{code->code, decode(code->code, y, cfg, e ? &*e : nullptr)};
        *out = r;
    });
}

void agdec_result_free(agdec_result* r) { delete r; }

int agdec_result_success(const agdec_result* r) { return r && r->result.outcome.success ? 1 : 0; }

const char* agdec_result_reason(const agdec_result* r)
{
    return r ? to_string(r->result.outcome.reason) : "none";
}

agdec_status agdec_result_error(const agdec_result* r, uint32_t* out)
{
    return guarded([&] {
        need(r, "result");
        need(out, "out");
        require(r->result.outcome.success, ErrorKind::invalid_argument, "decoding failed; there is no error vector");
        std::copy(r->result.outcome.error.begin(), r->result.outcome.error.end(), out);
    });
}

agdec_status agdec_result_codeword(const agdec_result* r, uint32_t* out)
{
    return guarded([&] {
        need(r, "result");
        need(out, "out");
        require(r->result.outcome.success, ErrorKind::invalid_argument, "decoding failed; there is no codeword");
        std::copy(r->result.outcome.codeword.begin(), r->result.outcome.codeword.end(), out);
    });
}

size_t agdec_result_steps(const agdec_result* r)
{
    return r && !r->result.trace.steps.empty() ? r->result.trace.steps.size() - 1 : 0;
}

int agdec_result_delta0(const agdec_result* r, long* delta0)
{
    if (!r || !r->result.trace.delta0) return 0;
    if (delta0) *delta0 = *r->result.trace.delta0;
    return 1;
}

agdec_status agdec_result_json(const agdec_result* r, char** out)
{
    return guarded([&] {
        need(r, "result");
        need(out, "out");
        using nlohmann::ordered_json;
        const Field& f = r->code->field();
        const auto& o = r->result.outcome;
        const auto& tr = r->result.trace;
        ordered_json j;
        j["success"] = o.success;
        j["reason"] = to_string(o.reason);
        j["error"] = o.success ? ordered_json(format_vector(f, o.error)) : ordered_json(nullptr);
        j["codeword"] = o.success ? ordered_json(format_vector(f, o.codeword)) : ordered_json(nullptr);
        j["error_weight"] = o.success ? ordered_json(weight(o.error)) : ordered_json(nullptr);
        j["delta0"] = tr.delta0 ? ordered_json(*tr.delta0) : ordered_json(nullptr);
        j["delta_gaps"] = tr.delta_gaps;
        j["pts_in_De"] = tr.pts_in_De ? ordered_json(*tr.pts_in_De) : ordered_json(nullptr);
        ordered_json steps = ordered_json::array();
        for (const auto& s : tr.steps) steps.push_back(step_json(s));
        j["steps"] = std::move(steps);
        *out = dup_string(j.dump(2) + "\n");
    });
}

agdec_status agdec_experiment_run(const char* config_text, const char* base_dir, const char* format, char** output,
                                  char** summary)
{
    return guarded([&] {
        need(config_text, "config_text");
        need(output, "output");
        ExperimentConfig cfg = ExperimentConfig::parse(config_text, base_dir ? base_dir : ".");
        if (format) {
            const auto f = parse_output_format(format);
            if (!f) fail(ErrorKind::invalid_argument, std::string("unknown output format '") + format + "'");
            cfg.format = *f;
        }
        const ExperimentResult r = run_experiment(cfg);
        std::string text = format_result(r, cfg.format);
        std::string sum;
        if (summary) {
            const auto& s = r.summary;
            char buf[160];
            std::snprintf(buf, sizeof buf, "success %zu/%zu, mean Delta_0 %.3f, modal gap %s, pts in D_e %.3f\n",
                          s.successes, s.trials, s.mean_delta0,
                          s.modal_gap ? std::to_string(*s.modal_gap).c_str() : "-", s.pts_in_De_rate);
            sum = buf;
        }
        char* o = dup_string(text);
        if (summary) {
            try {
                *summary = dup_string(sum);
            } catch (...) {
                std::free(o);
                throw;
            }
        }
        *output = o;
    });
}

agdec_status agdec_selftest(uint64_t seed, const char* fault, char** report, int* passed)
{
    return guarded([&] {
        need(report, "report");
        const SelftestReport r = run_selftest(seed, fault ? fault : "");
        *report = dup_string(r.to_text());
        if (passed) *passed = r.passed();
    });
}

}  // extern "C"
