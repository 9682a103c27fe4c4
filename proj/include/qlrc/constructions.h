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

#ifndef QLRC_CONSTRUCTIONS_H
#define QLRC_CONSTRUCTIONS_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlrc/code.h"
#include "qlrc/qlocality.h"
#include "qlrc/symp.h"

namespace qlrc {

/// The n1 x n2 grid of common zeros of X^n1 - X and Y^n2 - Y over GF(q).
struct GridSpec {
    FieldPtr field;
    size_t n1 = 0;
    size_t n2 = 0;
    /// Ordered lexicographically by (encoding of x, encoding of y).
    std::vector<std::pair<Elem, Elem>> points;

    /// Requires n1, n2 >= 2 with (n1 - 1) | (q - 1) and (n2 - 1) | (q - 1).
    static GridSpec create(FieldPtr field, size_t n1, size_t n2);
    size_t n() const { return points.size(); }
};

enum class DeltaKind { rect, step2, step2_sigma, custom };

const char *delta_kind_name(DeltaKind kind);

/// Parameters the construction is claimed to achieve. Stored apart from
/// anything measured; reports print both.
struct DeltaClaims {
    size_t r = 0;
    size_t delta = 0;
    size_t n = 0;
    std::int64_t k = 0;
    size_t d = 0;
};

/// Exponent set of the monomials X^e1 Y^e2 that generate an evaluation code.
struct DeltaSet {
    size_t n1 = 0;
    size_t n2 = 0;
    DeltaKind kind = DeltaKind::custom;
    /// (i, j) for rect, (i, s) for step2, (j, s) for step2_sigma.
    std::pair<size_t, size_t> params{0, 0};
    /// Sorted lexicographically, duplicate-free.
    std::vector<std::pair<size_t, size_t>> exponents;
    std::optional<DeltaClaims> claims;

    /// Closed under coordinatewise <=.
    bool is_decreasing() const;
    /// `rect(5,6)`, `step2(3,1)`, `step2s(3,1)` or `custom`.
    std::string tag() const;
};

/// rect(i,j) = {e1 <= i, e2 <= j};
/// step2(i,s) = {e1 <= i, e2 <= n2-2} u {(e1, n2-1) : e1 <= s};
/// step2_sigma(j,s) is step2 with the variables swapped.
/// Only the exponent box is checked (ConstraintViolated otherwise).
DeltaSet delta_family(DeltaKind kind, size_t a, size_t b, size_t n1, size_t n2);

/// As above, and additionally checks the hypotheses under which the family
/// is claimed to give optimal dual-containing codes over the grid's field
/// (including p | n1 and p | n2), attaching the claimed parameters. Throws
/// ConstraintViolated naming the first failed hypothesis.
DeltaSet delta_family_with_claims(DeltaKind kind, size_t a, size_t b, const GridSpec &grid);

/// Custom exponent set; with require_decreasing, a set not closed under <=
/// is a ConstraintViolated error.
DeltaSet custom_delta(size_t n1, size_t n2, std::vector<std::pair<size_t, size_t>> exponents,
                      bool require_decreasing);

/// Row t is the evaluation of the t-th monomial of delta at the grid points.
Matrix evaluation_matrix(const GridSpec &grid, const DeltaSet &delta);

/// Row space of evaluation_matrix. Its dimension is measured: for custom
/// sets it may fall below |delta| (compare k() with exponents.size()).
LinearCode affine_variety_code(const GridSpec &grid, const DeltaSet &delta);

struct GrsSpec {
    FieldPtr field;
    std::vector<Elem> points;
    /// Appends the point at infinity as a final coordinate.
    bool infinity = false;
    /// One per coordinate (including infinity), all nonzero.
    std::vector<Elem> multipliers;
    size_t k = 0;

    size_t n() const { return points.size() + (infinity ? 1 : 0); }
};

/// Rows v_j alpha_j^t for t < k; the coordinate at infinity carries v only
/// in row k - 1. Throws RepeatedPoints, ZeroMultiplier, BadParameters.
LinearCode grs_code(const GrsSpec &spec);

struct GrsSearchResult {
    GrsSpec spec;
    LinearCode code;
    /// Multiplier tuples examined before the hit.
    std::uint64_t tried = 0;
};

/// Exhaustive search over multiplier tuples (lexicographic, with the start
/// rotated by `seed`) for a Hermitian dual-containing [n,k]_{q2} GRS code.
/// Points are the first n field elements, plus infinity when n = q2 + 1.
/// Throws NotFound when no tuple works.
GrsSearchResult search_hermitian_dual_containing_grs(std::uint32_t q2, size_t n, size_t k, std::uint64_t seed = 0);

/// [(q^m - 1)/(q - 1), n - m, 3]_q Hamming code with parity-check columns the
/// normalized nonzero vectors of GF(q)^m in ascending encoding.
LinearCode hamming_code(size_t m, std::uint32_t q);

/// C_H x C_H for C_H the [7,3,4]_2 dual of the Hamming code.
SymplecticCode steane_symplectic();

struct CssPair {
    /// c2^perp x c1^perp.
    SymplecticCode stabilizer;
    QuantumCodeParams params;
};

/// Requires c2^perp inside c1 (NotNested otherwise).
CssPair css_pair(const LinearCode &c1, const LinearCode &c2, std::uint64_t budget = kDefaultBudget);

}  // namespace qlrc

#endif
