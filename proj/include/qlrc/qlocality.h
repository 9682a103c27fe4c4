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

#ifndef QLRC_QLOCALITY_H
#define QLRC_QLOCALITY_H

#include <cstdint>
#include <optional>
#include <string>

#include "qlrc/locality.h"
#include "qlrc/symp.h"

namespace qlrc {

enum class QuantumForm { symplectic, hermitian, euclidean, css };

const char *quantum_form_name(QuantumForm form);

/// The classical object a stabilizer code is built from, in the
/// self-orthogonal orientation the (I,J) criteria are stated in:
///  - symplectic: C inside C^perp_s, the stabilizer itself;
///  - euclidean / hermitian: D inside D^perp under that form;
///  - css: a pair with c2^perp_e inside c1 (the stabilizer is c2^perp x c1^perp).
class QuantumCarrier {
   public:
    static QuantumCarrier symplectic(SymplecticCode c);
    static QuantumCarrier euclidean(LinearCode d);
    static QuantumCarrier hermitian(LinearCode d);
    static QuantumCarrier css(LinearCode c1, LinearCode c2);
    /// Q'(C) = Q(C^perp) for a code C that contains its dual under `form`
    /// (euclidean or hermitian).
    static QuantumCarrier derived(const LinearCode &c, Form form);

    QuantumForm form() const { return form_; }
    size_t n() const;
    /// Logical dimension exponent k.
    std::int64_t k() const;
    const SymplecticCode &symplectic_code() const { return *symp_; }
    const LinearCode &code() const { return *code_; }
    const LinearCode &c1() const { return *code_; }
    const LinearCode &c2() const { return *code2_; }
    /// The stabilizer as a symplectic code over the same field, when one
    /// exists (every form except hermitian).
    std::optional<SymplecticCode> symplectic_stabilizer() const;

   private:
    QuantumForm form_ = QuantumForm::symplectic;
    std::optional<SymplecticCode> symp_;
    std::optional<LinearCode> code_;
    std::optional<LinearCode> code2_;
};

/// sigma_I(C) = sigma_I(C^perp_s): Q(C) corrects erasures at I.
bool corrects_erasures_at(const SymplecticCode &c, const IndexSet &i);

/// sigma_I[pi_J(C^perp_s)] = sigma_I(C), with I re-indexed inside J on the
/// left. Requires C self-orthogonal and an empty-free strict nesting I in J.
bool ij_recoverable(const SymplecticCode &c, const IndexSet &i, const IndexSet &j);
/// sigma_I[pi_J(C^perp_h)] = sigma_I(C) for Hermitian self-orthogonal C.
bool ij_recoverable_hermitian(const LinearCode &c, const IndexSet &i, const IndexSet &j);
/// sigma_I[pi_J(C^perp_e)] = sigma_I(C) for Euclidean self-orthogonal C.
bool ij_recoverable_euclidean(const LinearCode &c, const IndexSet &i, const IndexSet &j);
/// For c2^perp inside c1 (stabilizer c2^perp x c1^perp):
/// sigma_I[pi_J(c2)] = sigma_I(c1^perp) and sigma_I[pi_J(c1)] = sigma_I(c2^perp).
bool ij_recoverable_css(const LinearCode &c1, const LinearCode &c2, const IndexSet &i, const IndexSet &j);
/// Dispatches on the carrier's form.
bool ij_recoverable(const QuantumCarrier &q, const IndexSet &i, const IndexSet &j);

/// Classical erasure criterion: erasures of C at I are correctable from
/// J \ I iff sigma_I[pi_J(C)] = {0}.
bool classical_ij_recoverable(const LinearCode &c, const IndexSet &i, const IndexSet &j);

/// |J| >= n - swt(C^perp_s) + |I| + 1, which makes every I of that size
/// recoverable inside every J of that size.
bool sufficient_filter(const SymplecticCode &c, size_t i_size, size_t j_size);
bool sufficient_filter_from(size_t n, size_t swt_dual, size_t i_size, size_t j_size);

/// With t = n + k - 2|J| + 2|I|: true iff t > 0 and gsw_t(C^perp_s) >= n - |J| + 1,
/// in which case no (I,J) of those sizes is recoverable. Requires
/// swt(C) >= |I| + 1 (HypothesisNotMet otherwise).
bool impossibility_filter(const SymplecticCode &c, size_t n, std::int64_t k, size_t i_size, size_t j_size);
/// Same test from precomputed swt(C) and gsw hierarchy of C^perp_s.
bool impossibility_filter_from(size_t n, std::int64_t k, size_t swt_code, const std::vector<size_t> &gsw_dual,
                               size_t i_size, size_t j_size);

/// Decides whether the quantum code is an (r,delta)-LRC: every qudit i lies
/// in some J with |J| <= r + delta - 1 such that the (I,J) criterion holds
/// for every I inside J with |I| = delta - 1. The impossibility filter may
/// discard whole candidate sizes (and is cited in the notes); Certified
/// verdicts always rest on explicit checks of every (I,J).
LocalityResult verify_quantum_rdelta_lrc(const QuantumCarrier &q, size_t r, size_t delta,
                                         const std::optional<LocalityCertificate> &certificate = std::nullopt,
                                         const SearchOptions &options = {});

/// Runs the classical verifier on a dual-containing C and transfers the
/// verdict to Q'(C). Throws HypothesisNotMet when delta > d(C^perp).
LocalityResult bridge_classical_quantum(const LinearCode &c, Form form, size_t r, size_t delta,
                                        const std::optional<LocalityCertificate> &certificate = std::nullopt,
                                        const SearchOptions &options = {});

/// (I,J)-level bridge: when |I| <= d(C^perp) - 1, Q'(C) is (I,J)-recoverable
/// iff classical_ij_recoverable(C, I, J). Throws HypothesisNotMet otherwise.
bool bridge_ij(const LinearCode &c, Form form, const IndexSet &i, const IndexSet &j);

struct PurityReport {
    bool pure = false;
    size_t d_code = 0;
    /// nullopt when the dual is the zero code (no nonzero words).
    std::optional<size_t> d_dual;
};

/// d(C) <= d(C^perp) for a code containing its dual under `form`.
PurityReport purity_check(const LinearCode &c, Form form, std::uint64_t budget = kDefaultBudget);

struct QuantumCodeParams {
    size_t n = 0;
    std::int64_t k = 0;
    size_t d = 0;
    /// d is the exact quantum distance (otherwise a lower bound).
    bool d_exact = false;
    bool pure = false;
    /// Alphabet size of the quantum code (sqrt of the field size for hermitian).
    std::uint32_t q = 0;
    QuantumForm source = QuantumForm::symplectic;

    /// `[[n,k,d]]_q`, with `>=` before d when it is only a lower bound.
    std::string to_string() const;
};

/// Parameters of Q(C) for symplectic self-orthogonal C; d is the minimum
/// symplectic weight of C^perp_s \ C when enumerable.
QuantumCodeParams quantum_params(const SymplecticCode &c, std::uint64_t budget = kDefaultBudget);
/// Parameters of Q'(C) = Q(C^perp) for dual-containing C: k = 2 dim C - n,
/// d = d(C), exact when the code is pure in the strict sense d(C) < d(C^perp).
QuantumCodeParams derived_quantum_params(const LinearCode &c, Form form, std::uint64_t budget = kDefaultBudget);
/// CSS parameters for c2^perp inside c1: k = k1 + k2 - n and
/// d = min wt over (c1 \ c2^perp) u (c2 \ c1^perp), falling back to the lower
/// bound min(d(c1), d(c2)) when the enumeration exceeds the budget.
QuantumCodeParams css_params(const LinearCode &c1, const LinearCode &c2, std::uint64_t budget = kDefaultBudget);

/// k + 2d + 2(ceil((n+k)/(2r)) - 1)(delta - 1) <= n + 2; n + k must be even.
BoundReport quantum_singleton(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r, std::int64_t delta);

/// k <= (1 - 2/(r+1)) n - 2(d - 1 - ceil((d-1)/r)), evaluated exactly; lhs is
/// k, rhs the floor of the right side, attained iff k equals that floor.
BoundReport quantum_r_lrc_bound(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r);

}  // namespace qlrc

#endif
