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

/* C interface to the agdec library. Every function returns an agdec_status;
 * on failure a message for the calling thread is available from
 * agdec_last_error(). Strings handed out by the library are released with
 * agdec_string_free, handles with their own free function. */

#ifndef AGDEC_AGDEC_H
#define AGDEC_AGDEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(AGDEC_BUILDING)
#define AGDEC_API __declspec(dllexport)
#else
#define AGDEC_API __declspec(dllimport)
#endif
#else
#define AGDEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum agdec_status {
    AGDEC_OK = 0,
    AGDEC_ERR_INVALID_ARG = 1,
    AGDEC_ERR_PARSE = 2,
    AGDEC_ERR_DIMENSION = 3,
    AGDEC_ERR_BUDGET = 4,
    AGDEC_ERR_INTERNAL = 5
} agdec_status;

typedef struct agdec_code agdec_code;
typedef struct agdec_result agdec_result;

AGDEC_API const char* agdec_version(void);
/* Message of the last failed call on this thread; "" if none. */
AGDEC_API const char* agdec_last_error(void);
AGDEC_API const char* agdec_status_name(agdec_status s);
AGDEC_API void agdec_string_free(char* s);

/* ---- radius ---- */

typedef struct agdec_radii {
    long half_designed;
    long basic;
    long sudan_basic;
    long sudan_improved;
    long power;
} agdec_radii;

AGDEC_API agdec_status agdec_radius(long n, long g, long degG, long ell, agdec_radii* out);

/* Parameter conditions, one line per condition. t < 0 selects the power
 * radius; degF < 0 selects t + 2g. */
AGDEC_API agdec_status agdec_check_params(long n, long g, long degG, long ell, long t, long degF, char** report,
                                          int* all_hold);

/* ---- codes ---- */

/* curve_text is the curve description format (field, cab|line, term, degG,
 * points). degG < 0 and npoints == 0 defer to the description. */
AGDEC_API agdec_status agdec_code_from_text(const char* curve_text, int degG, size_t npoints, agdec_code** out);
AGDEC_API void agdec_code_free(agdec_code* code);

typedef struct agdec_code_info {
    uint32_t q;
    size_t n;
    size_t k;
    int genus;
    int degG;
    int designed_distance;
} agdec_code_info;

AGDEC_API agdec_status agdec_code_info_get(const agdec_code* code, agdec_code_info* out);
AGDEC_API agdec_status agdec_code_label(const agdec_code* code, char** out);
/* message has info.k entries, out has info.n. */
AGDEC_API agdec_status agdec_code_encode(const agdec_code* code, const uint32_t* message, uint32_t* out);
/* Whitespace-separated field elements; integers or comma tuples. */
AGDEC_API agdec_status agdec_code_parse_word(const agdec_code* code, const char* text, uint32_t* out);
AGDEC_API agdec_status agdec_code_format_word(const agdec_code* code, const uint32_t* word, char** out);

/* ---- decoding ---- */

typedef enum agdec_point_policy { AGDEC_FIRST_HIT = 0, AGDEC_MAX_DROP = 1 } agdec_point_policy;

/* Negative values select the defaults: degF = t + 2g, degGprime = n + 2g - 1,
 * max_steps = g + 1. */
typedef struct agdec_decode_options {
    int ell;
    int t;
    int degF;
    int degGprime;
    int max_steps;
    agdec_point_policy policy;
} agdec_decode_options;

AGDEC_API void agdec_decode_options_init(agdec_decode_options* opts);

/* true_error may be NULL; when given, the trace carries the Delta statistics. */
AGDEC_API agdec_status agdec_decode(const agdec_code* code, const uint32_t* received,
                                    const agdec_decode_options* opts, const uint32_t* true_error,
                                    agdec_result** out);
AGDEC_API void agdec_result_free(agdec_result* r);

AGDEC_API int agdec_result_success(const agdec_result* r);
/* "none", "S_zero", "no_Lambda", "recovery_inconsistent", "weight_exceeded", "not_codeword". */
AGDEC_API const char* agdec_result_reason(const agdec_result* r);
/* Copies n entries; fails with AGDEC_ERR_INVALID_ARG when the decode failed. */
AGDEC_API agdec_status agdec_result_error(const agdec_result* r, uint32_t* out);
AGDEC_API agdec_status agdec_result_codeword(const agdec_result* r, uint32_t* out);
AGDEC_API size_t agdec_result_steps(const agdec_result* r);
/* Whether Delta_0 is known (only with a true error); value through delta0. */
AGDEC_API int agdec_result_delta0(const agdec_result* r, long* delta0);
/* Outcome, vectors and per-step trace as a JSON document. */
AGDEC_API agdec_status agdec_result_json(const agdec_result* r, char** out);

/* ---- experiments and self-test ---- */

/* Runs a key = value experiment config. Relative curve paths resolve against
 * base_dir (NULL for the working directory). format overrides the config's
 * output format when not NULL ("csv", "json", "markdown"). summary may be NULL. */
AGDEC_API agdec_status agdec_experiment_run(const char* config_text, const char* base_dir, const char* format,
                                            char** output, char** summary);

/* fault is NULL, "" or "modulus". */
AGDEC_API agdec_status agdec_selftest(uint64_t seed, const char* fault, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* AGDEC_AGDEC_H */
