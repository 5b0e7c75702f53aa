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


// Command-line front end. Talks to the library through the C interface only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agdec/agdec.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_decode_failure = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(agdec_status s)
{
    if (s != AGDEC_OK) throw UsageError(std::string(agdec_status_name(s)) + ": " + agdec_last_error());
}

struct StringDeleter {
    void operator()(char* s) const { agdec_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct CodeDeleter {
    void operator()(agdec_code* c) const { agdec_code_free(c); }
};
struct ResultDeleter {
    void operator()(agdec_result* r) const { agdec_result_free(r); }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- radius ----

struct RadiusArgs {
    long n = 0, g = 0, degG = 0, ell = 2;
    long t = -1, degF = -1;
};

int cmd_radius(const RadiusArgs& a)
{
    agdec_radii r{};
    check(agdec_radius(a.n, a.g, a.degG, a.ell, &r));
    std::printf("n=%ld g=%ld degG=%ld ell=%ld\n", a.n, a.g, a.degG, a.ell);
    std::printf("(d*-1)/2, Sudan, dec. radius: %ld, %ld, %ld\n", r.half_designed, r.sudan_improved, r.power);
    std::printf("half_designed   %ld\n", r.half_designed);
    std::printf("basic           %ld\n", r.basic);
    std::printf("sudan_basic     %ld\n", r.sudan_basic);
    std::printf("sudan_improved  %ld\n", r.sudan_improved);
    std::printf("power_radius    %ld\n", r.power);
    char* report = nullptr;
    int all_hold = 0;
    check(agdec_check_params(a.n, a.g, a.degG, a.ell, a.t, a.degF, &report, &all_hold));
    OwnedString owned(report);
    std::printf("conditions (t=%s):\n%s", a.t >= 0 ? std::to_string(a.t).c_str() : "power radius", report);
    std::printf("all conditions hold: %s\n", all_hold ? "yes" : "no");
    return exit_ok;
}

// ---- decode ----

struct DecodeArgs {
    std::string curve, received, true_error;
    int degG = -1;
    std::size_t npoints = 0;
    agdec_decode_options opts{};
    std::string policy = "first-hit";
    bool json = false;
};

std::unique_ptr<agdec_code, CodeDeleter> load_code(const std::string& path, int degG, std::size_t npoints)
{
    agdec_code* code = nullptr;
    check(agdec_code_from_text(read_file(path).c_str(), degG, npoints, &code));
    return std::unique_ptr<agdec_code, CodeDeleter>(code);
}

std::string format_word(const agdec_code* code, const std::vector<uint32_t>& w)
{
    char* s = nullptr;
    check(agdec_code_format_word(code, w.data(), &s));
    return OwnedString(s).get();
}

int cmd_decode(DecodeArgs a)
{
    const auto code = load_code(a.curve, a.degG, a.npoints);
    agdec_code_info info{};
    check(agdec_code_info_get(code.get(), &info));
    std::vector<uint32_t> y(info.n), e(info.n);
    check(agdec_code_parse_word(code.get(), read_file(a.received).c_str(), y.data()));
    const bool have_error = !a.true_error.empty();
    if (have_error) check(agdec_code_parse_word(code.get(), read_file(a.true_error).c_str(), e.data()));
    if (a.policy == "first-hit")
        a.opts.policy = AGDEC_FIRST_HIT;
    else if (a.policy == "max-drop")
        a.opts.policy = AGDEC_MAX_DROP;
    else
        throw UsageError("policy must be first-hit or max-drop");

    agdec_result* raw = nullptr;
    check(agdec_decode(code.get(), y.data(), &a.opts, have_error ? e.data() : nullptr, &raw));
    const std::unique_ptr<agdec_result, ResultDeleter> res(raw);
    const bool ok = agdec_result_success(res.get());

    if (a.json) {
        char* j = nullptr;
        check(agdec_result_json(res.get(), &j));
        std::fputs(OwnedString(j).get(), stdout);
        return ok ? exit_ok : exit_decode_failure;
    }
    std::printf("code: q=%u n=%zu k=%zu g=%d degG=%d d*=%d\n", info.q, info.n, info.k, info.genus, info.degG,
                info.designed_distance);
    std::printf("outcome: %s\n", ok ? "success" : "failure");
    if (!ok) std::printf("reason: %s\n", agdec_result_reason(res.get()));
    if (ok) {
        std::vector<uint32_t> err(info.n), cw(info.n);
        check(agdec_result_error(res.get(), err.data()));
        check(agdec_result_codeword(res.get(), cw.data()));
        std::size_t w = 0;
        for (uint32_t v : err) w += v != 0;
        std::printf("error weight: %zu\n", w);
        std::printf("e: %s\n", format_word(code.get(), err).c_str());
        std::printf("c: %s\n", format_word(code.get(), cw).c_str());
    }
    std::printf("steps: %zu\n", agdec_result_steps(res.get()));
    long d0 = 0;
    if (agdec_result_delta0(res.get(), &d0)) std::printf("Delta_0: %ld\n", d0);
    char* j = nullptr;
    check(agdec_result_json(res.get(), &j));
    std::printf("trace:\n%s", OwnedString(j).get());
    return ok ? exit_ok : exit_decode_failure;
}

// ---- experiment ----

struct ExperimentArgs {
    std::string config, format, output;
};

int cmd_experiment(const ExperimentArgs& a)
{
    const std::string text = read_file(a.config);
    const std::string base = std::filesystem::path(a.config).parent_path().string();
    char* out = nullptr;
    char* summary = nullptr;
    check(agdec_experiment_run(text.c_str(), base.empty() ? "." : base.c_str(), a.format.empty() ? nullptr : a.format.c_str(),
                               &out, &summary));
    OwnedString o(out), s(summary);
    if (a.output.empty()) {
        std::fputs(out, stdout);
    } else {
        std::ofstream f(a.output, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + a.output + "'");
        f << out;
    }
    std::fputs(summary, stderr);
    return exit_ok;
}

// ---- selftest ----

int cmd_selftest(std::uint64_t seed, const std::string& fault)
{
    char* report = nullptr;
    int passed = 0;
    check(agdec_selftest(seed, fault.c_str(), &report, &passed));
    std::fputs(OwnedString(report).get(), stdout);
    return passed ? exit_ok : exit_usage;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Power decoding of one-point AG codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", agdec_version());

    RadiusArgs ra;
    auto* radius = app.add_subcommand("radius", "Decoding radii and parameter conditions");
    radius->add_option("--n", ra.n, "code length")->required();
    radius->add_option("--g", ra.g, "genus")->required();
    radius->add_option("--degG", ra.degG, "deg G")->required();
    radius->add_option("--ell", ra.ell, "powers used")->capture_default_str();
    radius->add_option("--t", ra.t, "error count for the conditions (default: power radius)");
    radius->add_option("--degF", ra.degF, "deg F (default: t + 2g)");

    DecodeArgs da;
    agdec_decode_options_init(&da.opts);
    auto* decode = app.add_subcommand("decode", "Decode one received word");
    decode->add_option("--curve", da.curve, "curve description file")->required()->check(CLI::ExistingFile);
    decode->add_option("--received", da.received, "received word file")->required()->check(CLI::ExistingFile);
    decode->add_option("--degG", da.degG, "deg G (default: from the curve file)");
    decode->add_option("--npoints", da.npoints, "use the first n points");
    decode->add_option("--ell", da.opts.ell, "powers used")->capture_default_str();
    decode->add_option("--t", da.opts.t, "number of errors to correct")->required();
    decode->add_option("--degF", da.opts.degF, "deg F (default: t + 2g)");
    decode->add_option("--degGprime", da.opts.degGprime, "deg G' (default: n + 2g - 1)");
    decode->add_option("--max-steps", da.opts.max_steps, "point-adaptation steps (default: g + 1)");
    decode->add_option("--policy", da.policy, "first-hit or max-drop")->capture_default_str();
    decode->add_option("--true-error", da.true_error, "known error vector, enables the Delta trace")
        ->check(CLI::ExistingFile);
    decode->add_flag("--json", da.json, "print the full result as JSON");

    ExperimentArgs ea;
    auto* experiment = app.add_subcommand("experiment", "Run a seeded multi-trial experiment");
    experiment->add_option("config", ea.config, "key = value config file")->required()->check(CLI::ExistingFile);
    experiment->add_option("--format", ea.format, "csv, json or markdown (overrides the config)");
    experiment->add_option("-o,--output", ea.output, "write the table here instead of stdout");

    std::uint64_t seed = 1;
    std::string fault;
    auto* selftest = app.add_subcommand("selftest", "Small-scale invariant checks of every module");
    selftest->add_option("--seed", seed, "random instance seed")->capture_default_str();
    selftest->add_option("--inject-fault", fault, "run over a corrupted component")
        ->check(CLI::IsMember({"modulus"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*radius) return cmd_radius(ra);
        if (*decode) return cmd_decode(da);
        if (*experiment) return cmd_experiment(ea);
        if (*selftest) return cmd_selftest(seed, fault);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
