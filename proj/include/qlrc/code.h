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

#ifndef QLRC_CODE_H
#define QLRC_CODE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qlrc/index_set.h"
#include "qlrc/matrix.h"

namespace qlrc {

/// Default cap on enumeration work (codewords visited or subsets examined).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// An [n,k]_q linear code stored by its canonical (RREF, no zero rows)
/// generator matrix, so two codes are equal iff their generators are equal.
class LinearCode {
   public:
    /// Row space of `generators`; zero and dependent rows are allowed.
    explicit LinearCode(const Matrix &generators);
    static LinearCode zero(FieldPtr field, size_t n);
    static LinearCode full(FieldPtr field, size_t n);

    const FieldPtr &field() const { return gen_.field(); }
    const Field &f() const { return gen_.f(); }
    size_t n() const { return gen_.cols(); }
    size_t k() const { return gen_.rows(); }
    bool is_zero() const { return gen_.rows() == 0; }
    const Matrix &generator() const { return gen_; }
    /// Canonical basis of the Euclidean dual, i.e. a full-rank parity-check matrix.
    Matrix parity_check() const;
    bool contains(std::span<const Elem> word) const;
    Vec encode(std::span<const Elem> message) const;

    bool operator==(const LinearCode &other) const { return gen_ == other.gen_; }

   private:
    Matrix gen_;
};

LinearCode dual_euclidean(const LinearCode &c);
/// Dual under sum x_j y_j^s with s = sqrt(q); the field must have even degree.
LinearCode dual_hermitian(const LinearCode &c);
/// {c_R : c in C}.
LinearCode puncture(const LinearCode &c, const IndexSet &r);
/// {c_R : c in C, supp(c) inside R}.
LinearCode shorten(const LinearCode &c, const IndexSet &r);
/// a is a subcode of b.
bool is_subcode(const LinearCode &a, const LinearCode &b);

size_t hamming_weight(std::span<const Elem> v);

/// Visits all q^k codewords, messages in ascending base-q order with digit 0
/// least significant. Throws BudgetExceeded when q^k > budget. The callback
/// returns false to stop early.
void for_each_codeword(const LinearCode &c, std::uint64_t budget, const std::function<bool(const Vec &)> &fn);

enum class DistanceStrategy { automatic, enumerate, dependency };

struct DistanceResult {
    size_t d;
    /// A codeword of weight d.
    Vec witness;
};

/// Exact minimum distance of a nonzero code. `enumerate` visits every
/// codeword (q^k within budget); `dependency` finds the smallest set of
/// linearly dependent parity-check columns (each level's subset count
/// within budget). `automatic` picks whichever estimate is cheaper and
/// falls back to the other on BudgetExceeded.
DistanceResult min_distance(const LinearCode &c, DistanceStrategy strategy = DistanceStrategy::automatic,
                            std::uint64_t budget = kDefaultBudget);

/// True iff C is nonzero and has no nonzero codeword of weight < w.
bool distance_at_least(const LinearCode &c, size_t w, std::uint64_t budget = kDefaultBudget);

/// Smallest w <= max_w such that the columns of h belonging to some w of
/// the given column groups are linearly dependent; returns those group
/// indices (lexicographically first at that level). Groups are singletons
/// for Hamming weight and {j, n+j} pairs for symplectic weight. Throws
/// BudgetExceeded when a level has more than `budget` subsets.
std::optional<std::vector<size_t>> find_dependent_groups(const Matrix &h,
                                                         const std::vector<std::vector<size_t>> &groups,
                                                         size_t max_w, std::uint64_t budget = kDefaultBudget);

/// (w_1, ..., w_tmax) with w_t = min{|J| : dim shorten(C, J) >= t}.
std::vector<size_t> generalized_hamming_weights(const LinearCode &c, size_t t_max,
                                                std::uint64_t budget = kDefaultBudget);

}  // namespace qlrc

#endif
