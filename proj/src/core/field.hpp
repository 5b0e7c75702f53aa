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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace agdec {

/// Raw element encoding: the polynomial-basis coordinates (c_0, ..., c_{k-1})
/// packed as the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Zero is 0, one is 1.
using elem_t = std::uint32_t;

/**
 * Finite field F_{p^k} in polynomial representation.
 *
 * The modulus is the first monic irreducible polynomial of degree k when the
 * monic candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are enumerated by the
 * integer c_0 + c_1 p + ... + c_{k-1} p^{k-1} in increasing order.
 *
 * Multiplication goes through exp/log tables built from a primitive element;
 * results coincide with plain polynomial arithmetic modulo the modulus
 * (see mul_reference), the tables only make it faster.
 */
class Field {
public:
    static constexpr std::uint32_t max_order = 1u << 20;

    static std::shared_ptr<const Field> create(unsigned p, unsigned k);

    /// Field over an explicit monic modulus (coefficients low-to-high, length k+1).
    /// With verify = false a reducible modulus is accepted and arithmetic falls
    /// back to the table-free path; this exists so self-tests can inject faults.
    static std::shared_ptr<const Field> with_modulus(unsigned p, std::vector<unsigned> modulus,
                                                     bool verify = true);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    bool is_field() const noexcept { return tables_; }
    bool same_as(const Field& other) const noexcept
    {
        return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
    }

    elem_t add(elem_t a, elem_t b) const noexcept
    {
        if (p_ == 2) return a ^ b;
        if (k_ == 1) {
            elem_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_digitwise(a, b);
    }
    elem_t neg(elem_t a) const noexcept
    {
        if (p_ == 2) return a;
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_table_[a];
    }
    elem_t sub(elem_t a, elem_t b) const noexcept { return add(a, neg(b)); }
    elem_t mul(elem_t a, elem_t b) const noexcept
    {
        if (a == 0 || b == 0) return 0;
        if (!tables_) return mul_reference(a, b);
        return exp_[log_[a] + log_[b]];
    }
    elem_t inv(elem_t a) const;
    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
    elem_t pow(elem_t a, std::uint64_t e) const noexcept;

    /// Schoolbook product modulo the modulus; no tables involved.
    elem_t mul_reference(elem_t a, elem_t b) const noexcept;

    /// Image of an integer under Z -> F_p -> F_q.
    elem_t from_int(long long v) const noexcept;
    elem_t encode(std::span<const long long> coeffs) const;
    std::vector<unsigned> decode(elem_t a) const;
    bool contains(elem_t a) const noexcept { return a < q_; }

    /// dst += c * src, elementwise.
    void axpy(std::span<elem_t> dst, std::span<const elem_t> src, elem_t c) const noexcept;
    void scale(std::span<elem_t> v, elem_t c) const noexcept;

    /// "3" for prime fields, "1,0,1" (low-to-high residues) for extensions.
    std::string format(elem_t a) const;
    elem_t parse(const std::string& token) const;

    std::string describe() const;

private:
    Field(unsigned p, unsigned k, std::vector<unsigned> modulus);
    void build_tables();
    elem_t add_digitwise(elem_t a, elem_t b) const noexcept;

    unsigned p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    bool tables_ = false;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;
    std::vector<elem_t> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(unsigned n) noexcept;

/// Exhaustive irreducibility test over F_p (coefficients low-to-high, monic).
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

/// First monic irreducible of the given degree, in the enumeration order above.
std::vector<unsigned> first_irreducible(unsigned p, unsigned k);

/**
 * Checked element value: carries its field and refuses mixed-field arithmetic.
 * Convenient at API boundaries; bulk code works on elem_t directly.
 */
class FieldElem {
public:
    FieldElem(FieldPtr field, elem_t value);
    static FieldElem from_int(FieldPtr field, long long v);

    const FieldPtr& field() const noexcept { return field_; }
    elem_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const;
    bool operator==(const FieldElem& o) const;

    std::string to_string() const { return field_->format(value_); }

private:
    const Field& check(const FieldElem& o) const;

    FieldPtr field_;
    elem_t value_;
};

}  // namespace agdec
