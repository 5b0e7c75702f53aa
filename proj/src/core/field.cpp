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

#include "field.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

namespace agdec {

namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, low-to-high

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo a monic m, over F_p
Poly poly_mod(Poly a, const Poly& m, unsigned p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const unsigned sub = static_cast<unsigned>((static_cast<unsigned long long>(lead) * m[i]) % p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<unsigned> prime_factors(std::uint32_t n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(unsigned n) noexcept
{
    if (n < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly)
{
    Poly f = poly;
    trim(f);
    require(!f.empty() && f.back() == 1, ErrorKind::invalid_argument, "polynomial must be monic");
    const std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        // every monic divisor candidate of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly m(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                m[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            m[d] = 1;
            if (poly_mod(f, m, p).empty()) return false;
        }
    }
    return true;
}

std::vector<unsigned> first_irreducible(unsigned p, unsigned k)
{
    if (k == 1) return {0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly m(k + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        m[k] = 1;
        if (is_irreducible(p, m)) return m;
    }
    fail(ErrorKind::internal, "no irreducible polynomial found");
}

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < k; ++i) q_ *= p;
}

std::shared_ptr<const Field> Field::create(unsigned p, unsigned k)
{
    require(is_prime(p), ErrorKind::invalid_argument, "field characteristic must be prime");
    require(k >= 1, ErrorKind::invalid_argument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        require(q <= max_order, ErrorKind::invalid_argument, "field order too large");
    }
    return with_modulus(p, first_irreducible(p, k), true);
}

std::shared_ptr<const Field> Field::with_modulus(unsigned p, std::vector<unsigned> modulus, bool verify)
{
    require(is_prime(p), ErrorKind::invalid_argument, "field characteristic must be prime");
    require(modulus.size() >= 2 && modulus.back() == 1, ErrorKind::invalid_argument,
            "modulus must be monic of degree >= 1");
    for (unsigned c : modulus) require(c < p, ErrorKind::invalid_argument, "modulus coefficient out of range");
    const auto k = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        require(q <= max_order, ErrorKind::invalid_argument, "field order too large");
    }
    if (verify) require(is_irreducible(p, modulus), ErrorKind::invalid_argument, "modulus is reducible");
    std::shared_ptr<Field> f(new Field(p, k, std::move(modulus)));
    f->build_tables();
    return f;
}

void Field::build_tables()
{
    if (p_ != 2 && k_ > 1) {
        neg_table_.resize(q_);
        for (elem_t a = 0; a < q_; ++a) {
            elem_t r = 0, w = 1, v = a;
            for (unsigned i = 0; i < k_; ++i) {
                const unsigned c = v % p_;
                v /= p_;
                r += ((p_ - c) % p_) * w;
                w *= p_;
            }
            neg_table_[a] = r;
        }
        if (q_ <= 1331) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (elem_t a = 0; a < q_; ++a)
                for (elem_t b = 0; b < q_; ++b)
                    add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(add_digitwise(a, b));
        }
    }

    // primitive element search with reference arithmetic; a reducible modulus
    // has none and keeps the table-free path
    const std::uint32_t group = q_ - 1;
    const auto factors = prime_factors(group);
    for (elem_t g = 1; g < q_; ++g) {
        bool primitive = pow(g, group) == 1;
        for (unsigned r : factors) {
            if (!primitive) break;
            if (pow(g, group / r) == 1) primitive = false;
        }
        if (!primitive) continue;
        exp_.assign(2 * static_cast<std::size_t>(group) + 1, 0);
        log_.assign(q_, 0);
        elem_t x = 1;
        for (std::uint32_t i = 0; i < group; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_reference(x, g);
        }
        for (std::uint32_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];
        tables_ = true;
        return;
    }
}

elem_t Field::add_digitwise(elem_t a, elem_t b) const noexcept
{
    elem_t r = 0, w = 1;
    for (unsigned i = 0; i < k_; ++i) {
        const unsigned s = (a % p_ + b % p_) % p_;
        a /= p_;
        b /= p_;
        r += s * w;
        w *= p_;
    }
    return r;
}

elem_t Field::mul_reference(elem_t a, elem_t b) const noexcept
{
    Poly pa(k_), pb(k_);
    for (unsigned i = 0; i < k_; ++i) {
        pa[i] = a % p_;
        a /= p_;
        pb[i] = b % p_;
        b /= p_;
    }
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = static_cast<unsigned>((prod[i + j] + static_cast<unsigned long long>(pa[i]) * pb[j]) % p_);
    const Poly r = poly_mod(prod, modulus_, p_);
    elem_t out = 0, w = 1;
    for (unsigned i = 0; i < r.size(); ++i) {
        out += r[i] * w;
        w *= p_;
    }
    return out;
}

elem_t Field::inv(elem_t a) const
{
    require(a != 0 && a < q_, ErrorKind::invalid_argument, "division by zero");
    if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

elem_t Field::pow(elem_t a, std::uint64_t e) const noexcept
{
    elem_t result = 1;
    elem_t base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

elem_t Field::from_int(long long v) const noexcept
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<elem_t>(r);
}

elem_t Field::encode(std::span<const long long> coeffs) const
{
    require(coeffs.size() <= k_, ErrorKind::invalid_argument, "too many coefficients for field element");
    elem_t out = 0, w = 1;
    for (long long c : coeffs) {
        out += from_int(c) * w;
        w *= p_;
    }
    return out;
}

std::vector<unsigned> Field::decode(elem_t a) const
{
    std::vector<unsigned> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

void Field::axpy(std::span<elem_t> dst, std::span<const elem_t> src, elem_t c) const noexcept
{
    if (c == 0) return;
    const std::size_t n = dst.size();
    if (tables_) {
        const std::uint32_t lc = log_[c];
        const std::uint32_t* lg = log_.data();
        const std::uint32_t* ex = exp_.data();
        if (p_ == 2) {
            for (std::size_t j = 0; j < n; ++j)
                if (const elem_t s = src[j]) dst[j] ^= ex[lc + lg[s]];
            return;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (const elem_t s = src[j]) dst[j] = add(dst[j], ex[lc + lg[s]]);
        return;
    }
    for (std::size_t j = 0; j < n; ++j) dst[j] = add(dst[j], mul(c, src[j]));
}

void Field::scale(std::span<elem_t> v, elem_t c) const noexcept
{
    for (auto& x : v) x = mul(x, c);
}

std::string Field::format(elem_t a) const
{
    if (k_ == 1) return std::to_string(a);
    std::string out;
    const auto c = decode(a);
    for (unsigned i = 0; i < k_; ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

elem_t Field::parse(const std::string& token) const
{
    auto parse_int = [&](std::string_view s) {
        long long v = 0;
        const char* b = s.data();
        const char* e = s.data() + s.size();
        if (b != e && *b == '+') ++b;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || ptr != e || b == e) fail(ErrorKind::parse, "bad field element token '" + token + "'");
        return v;
    };
    if (token.find(',') == std::string::npos) return from_int(parse_int(token));
    std::vector<long long> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = token.find(',', start);
        coeffs.push_back(parse_int(std::string_view(token).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coeffs.size() > k_) fail(ErrorKind::parse, "field element '" + token + "' has too many coefficients");
    return encode(coeffs);
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "F_" << q_;
    if (k_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i > 1) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

FieldElem::FieldElem(FieldPtr field, elem_t value) : field_(std::move(field)), value_(value)
{
    require(field_ != nullptr, ErrorKind::invalid_argument, "null field");
    require(field_->contains(value_), ErrorKind::invalid_argument, "element out of range");
}

FieldElem FieldElem::from_int(FieldPtr field, long long v)
{
    const elem_t e = field->from_int(v);
    return FieldElem(std::move(field), e);
}

const Field& FieldElem::check(const FieldElem& o) const
{
    require(field_->same_as(*o.field_), ErrorKind::invalid_argument, "mixed-field operands");
    return *field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return {field_, check(o).add(value_, o.value_)}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {field_, check(o).sub(value_, o.value_)}; }
FieldElem FieldElem::operator*(const FieldElem& o) const { return {field_, check(o).mul(value_, o.value_)}; }
FieldElem FieldElem::operator/(const FieldElem& o) const { return {field_, check(o).div(value_, o.value_)}; }
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inv() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
bool FieldElem::operator==(const FieldElem& o) const
{
    check(o);
    return value_ == o.value_;
}

}  // namespace agdec
