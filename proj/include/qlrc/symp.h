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

#ifndef QLRC_SYMP_H
#define QLRC_SYMP_H

#include <span>
#include <vector>

#include "qlrc/code.h"

namespace qlrc {

/// A subspace of F_q^{2n} in block layout (a_1..a_n | b_1..b_n): column j
/// (0-based) is a_{j+1} and column n + j is b_{j+1}.
class SymplecticCode {
   public:
    /// `generators` must have an even number of columns.
    explicit SymplecticCode(const Matrix &generators);
    explicit SymplecticCode(const LinearCode &code);
    static SymplecticCode zero(FieldPtr field, size_t n);

    const FieldPtr &field() const { return code_.field(); }
    const Field &f() const { return code_.f(); }
    /// Number of qudit positions.
    size_t n() const { return code_.n() / 2; }
    size_t dim() const { return code_.k(); }
    bool is_zero() const { return code_.is_zero(); }
    const Matrix &generator() const { return code_.generator(); }
    /// The same subspace viewed as a length-2n linear code.
    const LinearCode &as_linear() const { return code_; }

    bool operator==(const SymplecticCode &other) const { return code_ == other.code_; }

   private:
    LinearCode code_;
};

/// a.d - b.c for x = (a|b), y = (c|d).
Elem symplectic_form(const Field &f, std::span<const Elem> x, std::span<const Elem> y);

SymplecticCode dual_symplectic(const SymplecticCode &c);

enum class Form { symplectic, hermitian, euclidean };

const char *form_name(Form form);

/// Every pair of generator rows is orthogonal under `form`. Symplectic
/// codes accept only Form::symplectic and linear codes only the other two;
/// anything else raises FormMismatch.
bool is_self_orthogonal(const SymplecticCode &c, Form form = Form::symplectic);
bool is_self_orthogonal(const LinearCode &c, Form form);

/// Keeps a- and b-coordinates at the positions in J.
SymplecticCode puncture_paired(const SymplecticCode &c, const IndexSet &j);
/// Codewords whose a- and b-blocks are both supported inside J, restricted to J.
SymplecticCode shorten_paired(const SymplecticCode &c, const IndexSet &j);

/// Number of positions j with (a_j, b_j) != (0, 0); x has length 2n.
size_t symplectic_weight(std::span<const Elem> x);

/// Minimum symplectic weight over nonzero codewords, with a witness.
DistanceResult min_symplectic_weight(const SymplecticCode &c,
                                     DistanceStrategy strategy = DistanceStrategy::automatic,
                                     std::uint64_t budget = kDefaultBudget);

/// gsw_t(C) = min{|J| : dim shorten_paired(C, J) >= t}, 1 <= t <= dim C.
size_t gsw(const SymplecticCode &c, size_t t, std::uint64_t budget = kDefaultBudget);
/// (gsw_1, ..., gsw_tmax).
std::vector<size_t> gsw_hierarchy(const SymplecticCode &c, size_t t_max, std::uint64_t budget = kDefaultBudget);

/// A self-dual C_max with C inside C_max = C_max^perp_s, grown greedily: at
/// each step the first row of the canonical basis of the current code's
/// dual that is not yet in the code is adjoined. Requires C self-orthogonal.
SymplecticCode maximal_self_dual_extension(const SymplecticCode &c);

/// {(a|b) : a in C1, b in C2}.
SymplecticCode css_product(const LinearCode &c1, const LinearCode &c2);

/// Generator rows (-b|a) whose Euclidean kernel is the symplectic dual.
Matrix symplectic_twist(const Matrix &gen);

}  // namespace qlrc

#endif
