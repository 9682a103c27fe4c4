// Copyright 2026 The qlrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLRC_GF_H
#define QLRC_GF_H

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qlrc {

/// Integer encoding of a field element: the base-p little-endian value of its
/// polynomial coefficients, so elements of GF(p^m) are exactly [0, p^m).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest supported field cardinality.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// GF(p^m) represented as GF(p)[x] / (irreducible).
///
/// Immutable after construction; all member functions are safe to call
/// concurrently. Arithmetic runs through log/exp tables (and full add/mul
/// tables for q <= 256) that are built from plain polynomial arithmetic at
/// construction time.
class Field {
   public:
    /// Builds GF(p^m). When `irreducible` (coefficients c_0..c_m, monic) is
    /// omitted, the monic irreducible of degree m with the smallest integer
    /// encoding is used.
    static FieldPtr create(std::uint32_t p, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt);

    /// Default-polynomial field of cardinality q (cached), e.g. of_order(9) is GF(3^2).
    static FieldPtr of_order(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t> &irreducible() const { return irreducible_; }
    /// Integer encoding of the irreducible polynomial (sum c_i p^i, 0 <= i <= m).
    std::uint64_t poly_code() const;
    /// `q=<int> p=<int> m=<int> poly=<int>`.
    std::string header() const;

    bool same_as(const Field &other) const;
    bool contains(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^(p^t).
    Elem frobenius(Elem a, std::uint32_t t) const;

    /// True when m is even, so the field is a quadratic extension of GF(p^(m/2)).
    bool is_quadratic_extension() const { return m_ % 2 == 0; }
    /// x -> x^(p^(m/2)), the conjugation behind the Hermitian product.
    Elem conjugate(Elem a) const;
    /// Cardinality of the index-2 subfield, p^(m/2).
    std::uint32_t subfield_order() const;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;
    /// Smallest-encoded generator of the multiplicative group.
    Elem primitive_element() const { return primitive_; }
    /// Multiplication through polynomial arithmetic alone (no tables).
    Elem mul_reference(Elem a, Elem b) const;

   private:
    Field() = default;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> irreducible_;
    std::vector<Elem> neg_;
    std::vector<Elem> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;  // q*q for small fields
    std::vector<Elem> mul_table_;
    Elem primitive_ = 1;
};

/// Value-style element bound to its field.
class FieldElement {
   public:
    FieldElement(FieldPtr field, Elem value);
    static FieldElement from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs);

    const FieldPtr &field() const { return field_; }
    Elem value() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement &o) const;
    FieldElement operator-(const FieldElement &o) const;
    FieldElement operator*(const FieldElement &o) const;
    FieldElement operator/(const FieldElement &o) const;
    FieldElement operator-() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius(std::uint32_t t) const;
    bool operator==(const FieldElement &o) const;

   private:
    void check_same(const FieldElement &o) const;

    FieldPtr field_;
    Elem value_;
};

enum class FieldOp { add, sub, mul, div, pow };

/// Dispatches one arithmetic operation; for `pow` the exponent is b's integer
/// encoding.
FieldElement arith(const FieldElement &a, const FieldElement &b, FieldOp op);

/// Canonical embedding of GF(q) into GF(q^2): the generator of the source
/// maps to the smallest-encoded root of the source's irreducible polynomial
/// inside the target.
Elem subfield_embed(const Field &source, Elem a, const Field &target);
FieldElement subfield_embed(const FieldElement &a, const FieldPtr &target);

bool is_prime(std::uint64_t v);

/// True iff the monic polynomial (c_0..c_m over GF(p)) has no monic factor of
/// degree 1..m/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace qlrc

#endif
