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


// Writes the decode fixtures used by the CLI tests: a codeword, a received
// word with 9 random errors and its error vector, and a word halfway between
// two codewords, all for the Hermitian code over F9 described in
// hermitian9.curve.
//
//     gen_fixtures <data dir>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oracle.hpp"

using namespace agdec;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const Field& f, const Vec& v)
{
    std::ofstream(path) << format_vector(f, v) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <data dir>\n";
        return 1;
    }
    const std::string dir = argv[1];
    try {
        const CurveSpec spec = parse_curve_spec(slurp(dir + "/hermitian9.curve"));
        const auto code = AGCode::create(spec.curve, *spec.degG);
        const Field& f = code->field();
        Rng rng(20260101);

        const Vec c = random_codeword(*code, rng);
        write(dir + "/hermitian9_codeword.received", f, c);

        const Vec e = random_error(f, code->length(), 9, rng);
        Vec y(c.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(c[i], e[i]);
        write(dir + "/hermitian9_t9.received", f, y);
        write(dir + "/hermitian9_t9.error", f, e);

        const WorstCase wc = worst_case(*code, 11, rng);
        write(dir + "/hermitian9_worst.received", f, wc.y);
    } catch (const std::exception& ex) {
        std::cerr << "gen_fixtures: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
