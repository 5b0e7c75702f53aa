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


// Exercises the shared library through its C interface only.

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "agdec/agdec.h"

namespace {

const char* hermitian9 = "field 3 2\ncab 3 4\nterm 4 0 1\nterm 0 1 2\ndegG 6\n";

std::string take(char* s)
{
    std::string out = s ? s : "";
    agdec_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("radius")
{
    agdec_radii r{};
    REQUIRE(agdec_radius(200, 10, 19, 2, &r) == AGDEC_OK);
    CHECK(r.half_designed == 90);
    CHECK(r.sudan_improved == 107);
    CHECK(r.power == 113);
    REQUIRE(agdec_radius(200, 10, 46, 2, &r) == AGDEC_OK);
    CHECK(r.half_designed == 76);
    CHECK(r.sudan_improved == 80);
    CHECK(r.power == 86);
    CHECK(agdec_radius(200, 10, 19, 0, &r) == AGDEC_ERR_INVALID_ARG);
    CHECK(std::strlen(agdec_last_error()) > 0);
    CHECK(agdec_radius(200, 10, 19, 2, nullptr) == AGDEC_ERR_INVALID_ARG);

    char* report = nullptr;
    int all = 0;
    REQUIRE(agdec_check_params(200, 10, 19, 2, -1, -1, &report, &all) == AGDEC_OK);
    const std::string text = take(report);
    CHECK(text.find("(i) ") != std::string::npos);
    CHECK(text.find("(v) ") != std::string::npos);
}

TEST_CASE("code lifecycle, encoding and decoding")
{
    agdec_code* code = nullptr;
    REQUIRE(agdec_code_from_text(hermitian9, -1, 0, &code) == AGDEC_OK);
    agdec_code_info info{};
    REQUIRE(agdec_code_info_get(code, &info) == AGDEC_OK);
    CHECK(info.q == 9);
    CHECK(info.n == 27);
    CHECK(info.k == 4);
    CHECK(info.genus == 3);
    CHECK(info.designed_distance == 21);

    std::vector<uint32_t> msg{1, 2, 3, 4}, c(info.n);
    REQUIRE(agdec_code_encode(code, msg.data(), c.data()) == AGDEC_OK);
    // Symbols are raw element encodings in [0, 9); shifting one gives a different element.
    std::vector<uint32_t> y = c;
    for (std::size_t i : {0u, 5u, 9u, 13u, 20u}) y[i] = (c[i] + 1) % 9;

    agdec_decode_options opts;
    agdec_decode_options_init(&opts);
    opts.t = 5;
    agdec_result* res = nullptr;
    REQUIRE(agdec_decode(code, y.data(), &opts, nullptr, &res) == AGDEC_OK);
    REQUIRE(agdec_result_success(res));
    CHECK(std::string(agdec_result_reason(res)) == "none");
    std::vector<uint32_t> got(info.n);
    REQUIRE(agdec_result_codeword(res, got.data()) == AGDEC_OK);
    CHECK(got == c);
    long d0 = 0;
    CHECK_FALSE(agdec_result_delta0(res, &d0));
    char* json = nullptr;
    REQUIRE(agdec_result_json(res, &json) == AGDEC_OK);
    CHECK(take(json).find("\"success\": true") != std::string::npos);
    agdec_result_free(res);

    char* word = nullptr;
    REQUIRE(agdec_code_format_word(code, c.data(), &word) == AGDEC_OK);
    std::vector<uint32_t> back(info.n);
    CHECK(agdec_code_parse_word(code, word, back.data()) == AGDEC_OK);
    CHECK(back == c);
    agdec_string_free(word);
    CHECK(agdec_code_parse_word(code, "1 2 3", back.data()) == AGDEC_ERR_DIMENSION);

    opts.t = 40;
    CHECK(agdec_decode(code, y.data(), &opts, nullptr, &res) == AGDEC_ERR_INVALID_ARG);
    y[0] = 99;
    opts.t = 5;
    CHECK(agdec_decode(code, y.data(), &opts, nullptr, &res) == AGDEC_ERR_INVALID_ARG);
    agdec_code_free(code);
}

TEST_CASE("decode failure is a result, not an error")
{
    agdec_code* code = nullptr;
    REQUIRE(agdec_code_from_text(hermitian9, -1, 0, &code) == AGDEC_OK);
    agdec_code_info info{};
    agdec_code_info_get(code, &info);
    // 13 symbols changed: far beyond what t = 10 allows for a random word
    std::vector<uint32_t> msg{0, 0, 0, 0}, c(info.n);
    agdec_code_encode(code, msg.data(), c.data());
    std::vector<uint32_t> y = c;
    for (std::size_t i = 0; i < 26; i += 2) y[i] = 1 + static_cast<uint32_t>(i % 8);
    agdec_decode_options opts;
    agdec_decode_options_init(&opts);
    opts.t = 10;
    agdec_result* res = nullptr;
    REQUIRE(agdec_decode(code, y.data(), &opts, nullptr, &res) == AGDEC_OK);
    if (!agdec_result_success(res)) {
        std::vector<uint32_t> out(info.n);
        CHECK(agdec_result_error(res, out.data()) == AGDEC_ERR_INVALID_ARG);
        CHECK(std::string(agdec_result_reason(res)) != "none");
    }
    agdec_result_free(res);
    agdec_code_free(code);
}

TEST_CASE("parse errors")
{
    agdec_code* code = nullptr;
    CHECK(agdec_code_from_text("field 3 2\ncab 3\n", -1, 0, &code) == AGDEC_ERR_PARSE);
    CHECK(code == nullptr);
    CHECK(std::string(agdec_last_error()).find("wrong number of fields") != std::string::npos);
    CHECK(agdec_code_from_text("field 3 2\ncab 3 4\nterm 4 0 1\nterm 0 1 2\n", -1, 0, &code) ==
          AGDEC_ERR_INVALID_ARG);  // no degG anywhere
    CHECK(agdec_code_from_text(nullptr, 3, 0, &code) == AGDEC_ERR_INVALID_ARG);
}

TEST_CASE("experiment and selftest")
{
    const char* cfg = "curve_inline = field 11 1; line\ndegG = 3\nnpoints = 10\nt = half_designed\ntrials = 3\nseed = 5\n";
    char* out = nullptr;
    char* summary = nullptr;
    REQUIRE(agdec_experiment_run(cfg, nullptr, nullptr, &out, &summary) == AGDEC_OK);
    const std::string csv = take(out);
    CHECK(csv.rfind("ell,q,curve,g,n,degG,half_designed,sudan,power_radius,t,pts_in_De,delta0,delta_gaps,success", 0) == 0);
    CHECK(take(summary).find("success 3/3") != std::string::npos);
    REQUIRE(agdec_experiment_run(cfg, nullptr, "json", &out, nullptr) == AGDEC_OK);
    CHECK(take(out).find("\"summary\"") != std::string::npos);
    CHECK(agdec_experiment_run(cfg, nullptr, "xml", &out, nullptr) == AGDEC_ERR_INVALID_ARG);
    CHECK(agdec_experiment_run("degG = 3\n", nullptr, nullptr, &out, nullptr) == AGDEC_ERR_PARSE);

    char* report = nullptr;
    int passed = 0;
    REQUIRE(agdec_selftest(4, nullptr, &report, &passed) == AGDEC_OK);
    CHECK(passed == 1);
    take(report);
    REQUIRE(agdec_selftest(4, "modulus", &report, &passed) == AGDEC_OK);
    CHECK(passed == 0);
    CHECK(take(report).find("FAIL") != std::string::npos);
    CHECK(agdec_selftest(4, "other", &report, &passed) == AGDEC_ERR_INVALID_ARG);
}

TEST_CASE("status names")
{
    CHECK(std::string(agdec_status_name(AGDEC_OK)) == "ok");
    CHECK(std::string(agdec_status_name(AGDEC_ERR_BUDGET)) == "budget exceeded");
    CHECK(std::string(agdec_version()).size() > 0);
}
