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

#include "experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"
#include "radius.hpp"

namespace agdec {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long to_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::parse, "config key '" + key + "' expects an integer, got '" + v + "'");
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(ErrorKind::parse, "cannot read curve file '" + p.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fixed3(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string join_gaps(const std::vector<long>& gaps)
{
    std::string s;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(gaps[i]);
    }
    return s;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* error_model_name(ErrorModel m) { return m == ErrorModel::uniform ? "uniform" : "worst-case"; }

const char* format_name(OutputFormat f)
{
    switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::markdown: return "markdown";
    }
    return "csv";
}

}  // namespace

std::optional<OutputFormat> parse_output_format(const std::string& s) noexcept
{
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "markdown") return OutputFormat::markdown;
    return std::nullopt;
}

ExperimentConfig ExperimentConfig::parse(const std::string& text, const std::string& base_dir)
{
    ExperimentConfig c;
    bool have_seed = false;
    std::istringstream in(text);
    std::string raw;
    std::map<std::string, bool> seen;
    while (std::getline(in, raw)) {
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(ErrorKind::parse, "config line without '=': '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (seen[key]) fail(ErrorKind::parse, "config key '" + key + "' given twice");
        seen[key] = true;
        if (key == "curve") {
            const std::filesystem::path p = std::filesystem::path(base_dir) / value;
            c.curve_text = read_file(std::filesystem::path(value).is_absolute() ? std::filesystem::path(value) : p);
            c.curve_source = value;
        } else if (key == "curve_inline") {
            c.curve_text = value;
            for (char& ch : c.curve_text)
                if (ch == ';') ch = '\n';
            c.curve_source = "inline";
        } else if (key == "degG") {
            c.degG = static_cast<int>(to_int(key, value));
        } else if (key == "npoints") {
            const long long n = to_int(key, value);
            if (n < 1) fail(ErrorKind::parse, "npoints must be positive");
            c.npoints = static_cast<std::size_t>(n);
        } else if (key == "ell") {
            c.ell = static_cast<int>(to_int(key, value));
            if (c.ell < 1) fail(ErrorKind::parse, "ell must be at least 1");
        } else if (key == "t") {
            c.t = value;
        } else if (key == "trials") {
            c.trials = static_cast<int>(to_int(key, value));
            if (c.trials < 1) fail(ErrorKind::parse, "trials must be at least 1");
        } else if (key == "seed") {
            try {
                std::size_t used = 0;
                c.seed = std::stoull(value, &used, 0);
                if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
            } catch (const std::exception&) {
                fail(ErrorKind::parse, "seed must be an unsigned 64-bit integer");
            }
            have_seed = true;
        } else if (key == "error_model") {
            if (value == "uniform")
                c.error_model = ErrorModel::uniform;
            else if (value == "worst-case")
                c.error_model = ErrorModel::worst_case;
            else
                fail(ErrorKind::parse, "error_model must be uniform or worst-case");
        } else if (key == "point_policy") {
            auto p = parse_point_policy(value);
            if (!p) fail(ErrorKind::parse, "point_policy must be first-hit or max-drop");
            c.policy = *p;
        } else if (key == "format") {
            auto f = parse_output_format(value);
            if (!f) fail(ErrorKind::parse, "format must be csv, json or markdown");
            c.format = *f;
        } else if (key == "degF") {
            c.degF = static_cast<int>(to_int(key, value));
        } else if (key == "degGprime") {
            c.degGprime = static_cast<int>(to_int(key, value));
        } else if (key == "max_steps") {
            c.max_steps = static_cast<int>(to_int(key, value));
        } else if (key == "include_timing") {
            if (value != "true" && value != "false") fail(ErrorKind::parse, "include_timing must be true or false");
            c.include_timing = value == "true";
        } else {
            fail(ErrorKind::parse, "unknown config key '" + key + "'");
        }
    }
    if (c.curve_text.empty()) fail(ErrorKind::parse, "config needs 'curve' or 'curve_inline'");
    if (seen["curve"] && seen["curve_inline"]) fail(ErrorKind::parse, "give only one of 'curve' and 'curve_inline'");
    if (!have_seed) fail(ErrorKind::parse, "config needs an explicit 'seed'");
    return c;
}

long resolve_t(const std::string& spec, long n, long degG, long ell)
{
    long t;
    if (spec == "radius")
        t = power_radius(n, degG, ell);
    else if (spec == "radius+1")
        t = power_radius(n, degG, ell) + 1;
    else if (spec == "half_designed")
        t = half_designed(n, degG);
    else
        t = to_int("t", spec);
    if (t < 0 || t >= n) fail(ErrorKind::invalid_argument, "t resolves to " + std::to_string(t) + ", outside [0, n)");
    return t;
}

std::string curve_label(const CabCurve& curve)
{
    if (!curve.name().empty()) return curve.name();
    const Field& f = curve.field();
    const std::string field = "F" + std::to_string(f.order());
    if (curve.is_line()) return "line/" + field;
    auto mono = [](int i, int j) {
        std::string s;
        if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
        if (j > 0) s += j == 1 ? "y" : "y^" + std::to_string(j);
        return s.empty() ? std::string("1") : s;
    };
    std::string s = "y^" + std::to_string(curve.a()) + "=";
    auto terms = curve.terms();
    std::sort(terms.begin(), terms.end(), [&](const CurveTerm& a, const CurveTerm& b) {
        return curve.pole_order({a.i, a.j}) > curve.pole_order({b.i, b.j});
    });
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) s += "+";
        const std::string m = mono(terms[k].i, terms[k].j);
        if (terms[k].coeff != 1)
            s += "(" + f.format(terms[k].coeff) + ")" + (m == "1" ? "" : m);
        else
            s += m;
    }
    return s + "/" + field;
}

ExperimentResult run_experiment(const ExperimentConfig& config)
{
    ExperimentResult r;
    r.config = config;
    const CurveSpec spec = parse_curve_spec(config.curve_text);
    const auto degG = config.degG ? config.degG : spec.degG;
    if (!degG) fail(ErrorKind::invalid_argument, "degG not given in the config or the curve description");
    const auto npoints = config.npoints ? config.npoints : spec.npoints;
    r.code = AGCode::create(spec.curve, *degG, npoints);
    r.curve_label = curve_label(*spec.curve);
    const long n = static_cast<long>(r.code->length()), g = r.code->genus(), G = *degG, l = config.ell;
    r.half_designed = half_designed(n, G);
    r.sudan = sudan_radius(n, g, G, l, SudanVariant::improved);
    r.power_radius = power_radius(n, G, l);
    r.t = resolve_t(config.t, n, G, l);

    DecoderConfig dc;
    dc.ell = config.ell;
    dc.t = static_cast<int>(r.t);
    dc.degF = config.degF;
    dc.degGprime = config.degGprime;
    dc.max_steps = config.max_steps;
    dc.policy = config.policy;
    const Field& f = r.code->field();

    std::map<long, std::size_t> gap_counts;
    double delta_sum = 0;
    std::size_t delta_n = 0, pts_n = 0;
    for (int trial = 0; trial < config.trials; ++trial) {
        Rng rng = Rng::for_trial(config.seed, static_cast<std::uint64_t>(trial));
        Vec c, e, y;
        if (config.error_model == ErrorModel::uniform) {
            c = random_codeword(*r.code, rng);
            e = random_error(f, r.code->length(), static_cast<std::size_t>(r.t), rng);
            y.resize(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) y[k] = f.add(c[k], e[k]);
        } else {
            WorstCase wc = worst_case(*r.code, static_cast<std::size_t>(r.t), rng);
            y = wc.y;
            c = wc.c1;
            e.resize(y.size());
            for (std::size_t k = 0; k < y.size(); ++k) e[k] = f.sub(y[k], c[k]);
        }
        const auto t0 = std::chrono::steady_clock::now();
        const DecodeResult dr = decode(r.code, y, dc, &e);
        const auto t1 = std::chrono::steady_clock::now();

        TrialRecord rec;
        rec.trial = static_cast<std::size_t>(trial);
        rec.success = dr.outcome.success &&
                      (config.error_model == ErrorModel::worst_case || dr.outcome.codeword == c);
        rec.reason = dr.outcome.success && !rec.success ? FailureReason::not_codeword : dr.outcome.reason;
        rec.delta0 = dr.trace.delta0;
        rec.delta_gaps = dr.trace.delta_gaps;
        rec.pts_in_De = dr.trace.pts_in_De.value_or(true);
        rec.steps = dr.trace.steps.size() - 1;
        rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.summary.successes += rec.success;
        if (rec.delta0) {
            delta_sum += static_cast<double>(*rec.delta0);
            ++delta_n;
        }
        pts_n += rec.pts_in_De;
        for (long gap : rec.delta_gaps) ++gap_counts[gap];
        r.trials.push_back(std::move(rec));
    }
    ExperimentSummary& s = r.summary;
    s.trials = r.trials.size();
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    s.mean_delta0 = delta_n ? delta_sum / static_cast<double>(delta_n) : 0;
    s.pts_in_De_rate = static_cast<double>(pts_n) / static_cast<double>(s.trials);
    std::size_t best = 0;
    for (const auto& [gap, count] : gap_counts)
        if (count > best) {
            best = count;
            s.modal_gap = gap;
        }
    return r;
}

std::string format_csv(const ExperimentResult& r)
{
    std::ostringstream os;
    os << "ell,q,curve,g,n,degG,half_designed,sudan,power_radius,t,pts_in_De,delta0,delta_gaps,success";
    if (r.config.include_timing) os << ",wall_ms";
    os << '\n';
    const std::string prefix = std::to_string(r.config.ell) + "," + std::to_string(r.code->field().order()) + "," +
                               csv_field(r.curve_label) + "," + std::to_string(r.code->genus()) + "," +
                               std::to_string(r.code->length()) + "," + std::to_string(r.code->degG()) + "," +
                               std::to_string(r.half_designed) + "," + std::to_string(r.sudan) + "," +
                               std::to_string(r.power_radius) + "," + std::to_string(r.t) + ",";
    for (const auto& t : r.trials) {
        os << prefix << (t.pts_in_De ? "true" : "false") << ',' << (t.delta0 ? std::to_string(*t.delta0) : "")
           << ',' << join_gaps(t.delta_gaps) << ',' << (t.success ? "true" : "false");
        if (r.config.include_timing) os << ',' << fixed3(t.wall_ms);
        os << '\n';
    }
    return os.str();
}

std::string format_json(const ExperimentResult& r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["config"] = {{"curve", r.config.curve_source},
                   {"ell", r.config.ell},
                   {"t", r.config.t},
                   {"trials", r.config.trials},
                   {"seed", r.config.seed},
                   {"error_model", error_model_name(r.config.error_model)},
                   {"point_policy", to_string(r.config.policy)},
                   {"format", format_name(r.config.format)}};
    j["params"] = {{"q", r.code->field().order()},
                   {"curve", r.curve_label},
                   {"g", r.code->genus()},
                   {"n", r.code->length()},
                   {"degG", r.code->degG()},
                   {"k", r.code->dimension()},
                   {"half_designed", r.half_designed},
                   {"sudan", r.sudan},
                   {"power_radius", r.power_radius},
                   {"t", r.t}};
    ordered_json trials = ordered_json::array();
    for (const auto& t : r.trials) {
        ordered_json rec = {{"trial", t.trial},
                            {"success", t.success},
                            {"reason", to_string(t.reason)},
                            {"delta0", t.delta0 ? ordered_json(*t.delta0) : ordered_json(nullptr)},
                            {"delta_gaps", t.delta_gaps},
                            {"pts_in_De", t.pts_in_De},
                            {"steps", t.steps}};
        if (r.config.include_timing) rec["wall_ms"] = t.wall_ms;
        trials.push_back(std::move(rec));
    }
    j["trials"] = std::move(trials);
    const auto& s = r.summary;
    j["summary"] = {{"trials", s.trials},
                    {"successes", s.successes},
                    {"success_rate", s.success_rate},
                    {"mean_delta0", s.mean_delta0},
                    {"modal_gap", s.modal_gap ? ordered_json(*s.modal_gap) : ordered_json(nullptr)},
                    {"pts_in_De_rate", s.pts_in_De_rate}};
    return j.dump(2) + "\n";
}

std::string format_markdown(const ExperimentResult& r)
{
    std::ostringstream os;
    os << "| q | curve | g | n | deg G | (d*-1)/2 | Sudan | dec. radius | t | ell | pts in D_e | Delta_0 "
          "| Delta gaps | success |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& t : r.trials) {
        os << "| " << r.code->field().order() << " | " << r.curve_label << " | " << r.code->genus() << " | "
           << r.code->length() << " | " << r.code->degG() << " | " << r.half_designed << " | " << r.sudan << " | "
           << r.power_radius << " | " << r.t << " | " << r.config.ell << " | " << (t.pts_in_De ? "yes" : "no")
           << " | " << (t.delta0 ? std::to_string(*t.delta0) : "") << " | " << join_gaps(t.delta_gaps) << " | "
           << (t.success ? "yes" : "no") << " |\n";
    }
    const auto& s = r.summary;
    os << "\nsuccess rate: " << s.successes << "/" << s.trials << " (" << fixed3(s.success_rate)
       << "), mean Delta_0: " << fixed3(s.mean_delta0)
       << ", modal Delta gap: " << (s.modal_gap ? std::to_string(*s.modal_gap) : "-")
       << ", pts in D_e: " << fixed3(s.pts_in_De_rate) << "\n";
    return os.str();
}

std::string format_result(const ExperimentResult& r, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv: return format_csv(r);
    case OutputFormat::json: return format_json(r);
    case OutputFormat::markdown: return format_markdown(r);
    }
    return format_csv(r);
}

}  // namespace agdec
