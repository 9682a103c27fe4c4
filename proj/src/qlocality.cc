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

#include "qlrc/qlocality.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "qlrc/error.h"

namespace qlrc {

namespace {

// Budget for precomputing the gsw hierarchy used by the impossibility filter.
constexpr std::uint64_t kFilterBudget = std::uint64_t{1} << 16;

void check_nesting(const IndexSet &i, const IndexSet &j, size_t n) {
    if (i.n() != n || j.n() != n) {
        fail(ErrorCode::DimensionMismatch, "index sets must range over the " + std::to_string(n) + " positions");
    }
    if (i.empty() || !i.is_subset_of(j) || i.size() == j.size()) {
        fail(ErrorCode::BadNesting, "need nonempty I strictly inside J; got I=" + i.to_string() + " J=" + j.to_string());
    }
}

// Column offsets of the positions in `labels` (1-based) inside a code of
// `n` positions; paired codes also take the b-block columns n + j.
std::vector<size_t> columns_of(const std::vector<size_t> &labels, size_t n, bool paired) {
    std::vector<size_t> cols;
    for (auto l : labels) {
        cols.push_back(l - 1);
    }
    if (paired) {
        for (auto l : labels) {
            cols.push_back(n + l - 1);
        }
    }
    return cols;
}

LinearCode restrict_columns(const LinearCode &c, const std::vector<size_t> &cols) {
    return LinearCode(c.generator().select_columns(cols));
}

// Codewords vanishing outside `keep`, restricted to `keep`.
LinearCode shorten_columns(const LinearCode &c, const std::vector<size_t> &keep) {
    if (keep.size() == c.n()) {
        return restrict_columns(c, keep);
    }
    std::vector<bool> kept(c.n(), false);
    for (auto k : keep) {
        kept[k] = true;
    }
    std::vector<size_t> outside;
    for (size_t j = 0; j < c.n(); j++) {
        if (!kept[j]) {
            outside.push_back(j);
        }
    }
    Matrix messages = kernel(c.generator().select_columns(outside).transpose());
    Matrix words = messages.multiply(c.generator());
    return LinearCode(words.select_columns(keep));
}

// One equality sigma_I[pi_J(t)] = sigma_I(s) of an (I,J) criterion.
struct CriterionPart {
    LinearCode s;
    LinearCode t;
};

struct Criterion {
    size_t n;
    bool paired;
    std::vector<CriterionPart> parts;

    bool holds(const IndexSet &i, const IndexSet &j) const {
        auto jl = j.members();
        auto rel = i.relative_to(j).members();
        for (const auto &p : parts) {
            LinearCode pj = restrict_columns(p.t, columns_of(jl, n, paired));
            LinearCode left = shorten_columns(pj, columns_of(rel, jl.size(), paired));
            LinearCode right = shorten_columns(p.s, columns_of(i.members(), n, paired));
            if (!(left == right)) {
                return false;
            }
        }
        return true;
    }
};

Criterion criterion_for(const QuantumCarrier &q) {
    switch (q.form()) {
        case QuantumForm::symplectic: {
            const auto &c = q.symplectic_code();
            return {c.n(), true, {{c.as_linear(), dual_symplectic(c).as_linear()}}};
        }
        case QuantumForm::euclidean:
            return {q.n(), false, {{q.code(), dual_euclidean(q.code())}}};
        case QuantumForm::hermitian:
            return {q.n(), false, {{q.code(), dual_hermitian(q.code())}}};
        case QuantumForm::css:
            return {q.n(),
                    false,
                    {{dual_euclidean(q.c1()), q.c2()}, {dual_euclidean(q.c2()), q.c1()}}};
    }
    fail(ErrorCode::BadParameters, "unknown quantum form");
}

bool contains_dual(const LinearCode &c, Form form) {
    LinearCode dual = form == Form::hermitian ? dual_hermitian(c) : dual_euclidean(c);
    return is_subcode(dual, c);
}

std::string rational_string(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) {
        g = 1;
    }
    num /= g;
    den /= g;
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

const char *quantum_form_name(QuantumForm form) {
    switch (form) {
        case QuantumForm::symplectic: return "symplectic";
        case QuantumForm::hermitian: return "hermitian";
        case QuantumForm::euclidean: return "euclidean";
        case QuantumForm::css: return "css";
    }
    return "unknown";
}

QuantumCarrier QuantumCarrier::symplectic(SymplecticCode c) {
    if (!is_self_orthogonal(c)) {
        fail(ErrorCode::NotSelfOrthogonal, "stabilizer must satisfy C inside C^perp_s");
    }
    QuantumCarrier q;
    q.form_ = QuantumForm::symplectic;
    q.symp_ = std::move(c);
    return q;
}

QuantumCarrier QuantumCarrier::euclidean(LinearCode d) {
    if (!is_self_orthogonal(d, Form::euclidean)) {
        fail(ErrorCode::NotSelfOrthogonal, "code is not Euclidean self-orthogonal");
    }
    QuantumCarrier q;
    q.form_ = QuantumForm::euclidean;
    q.code_ = std::move(d);
    return q;
}

QuantumCarrier QuantumCarrier::hermitian(LinearCode d) {
    if (!is_self_orthogonal(d, Form::hermitian)) {
        fail(ErrorCode::NotSelfOrthogonal, "code is not Hermitian self-orthogonal");
    }
    QuantumCarrier q;
    q.form_ = QuantumForm::hermitian;
    q.code_ = std::move(d);
    return q;
}

QuantumCarrier QuantumCarrier::css(LinearCode c1, LinearCode c2) {
    if (c1.n() != c2.n()) {
        fail(ErrorCode::DimensionMismatch, "CSS codes must have equal length");
    }
    if (!is_subcode(dual_euclidean(c2), c1)) {
        fail(ErrorCode::NotNested, "CSS pair needs C2^perp inside C1");
    }
    QuantumCarrier q;
    q.form_ = QuantumForm::css;
    q.code_ = std::move(c1);
    q.code2_ = std::move(c2);
    return q;
}

QuantumCarrier QuantumCarrier::derived(const LinearCode &c, Form form) {
    switch (form) {
        case Form::euclidean: return euclidean(dual_euclidean(c));
        case Form::hermitian: return hermitian(dual_hermitian(c));
        case Form::symplectic: break;
    }
    fail(ErrorCode::FormMismatch, "Q'(C) is defined for the Euclidean and Hermitian forms");
}

size_t QuantumCarrier::n() const {
    return form_ == QuantumForm::symplectic ? symp_->n() : code_->n();
}

std::int64_t QuantumCarrier::k() const {
    auto n = static_cast<std::int64_t>(this->n());
    switch (form_) {
        case QuantumForm::symplectic: return n - static_cast<std::int64_t>(symp_->dim());
        case QuantumForm::euclidean:
        case QuantumForm::hermitian: return n - 2 * static_cast<std::int64_t>(code_->k());
        case QuantumForm::css:
            return static_cast<std::int64_t>(code_->k()) + static_cast<std::int64_t>(code2_->k()) - n;
    }
    return 0;
}

std::optional<SymplecticCode> QuantumCarrier::symplectic_stabilizer() const {
    switch (form_) {
        case QuantumForm::symplectic: return *symp_;
        case QuantumForm::euclidean: return css_product(*code_, *code_);
        case QuantumForm::css: return css_product(dual_euclidean(*code2_), dual_euclidean(*code_));
        case QuantumForm::hermitian: return std::nullopt;
    }
    return std::nullopt;
}

bool corrects_erasures_at(const SymplecticCode &c, const IndexSet &i) {
    if (!is_self_orthogonal(c)) {
        fail(ErrorCode::NotSelfOrthogonal, "stabilizer must satisfy C inside C^perp_s");
    }
    if (i.n() != c.n()) {
        fail(ErrorCode::DimensionMismatch, "index set over the wrong number of positions");
    }
    if (i.empty() || i.size() == c.n()) {
        fail(ErrorCode::BadNesting, "erasure set must be nonempty and proper");
    }
    return shorten_paired(c, i) == shorten_paired(dual_symplectic(c), i);
}

bool ij_recoverable(const SymplecticCode &c, const IndexSet &i, const IndexSet &j) {
    return ij_recoverable(QuantumCarrier::symplectic(c), i, j);
}

bool ij_recoverable_hermitian(const LinearCode &c, const IndexSet &i, const IndexSet &j) {
    return ij_recoverable(QuantumCarrier::hermitian(c), i, j);
}

bool ij_recoverable_euclidean(const LinearCode &c, const IndexSet &i, const IndexSet &j) {
    return ij_recoverable(QuantumCarrier::euclidean(c), i, j);
}

bool ij_recoverable_css(const LinearCode &c1, const LinearCode &c2, const IndexSet &i, const IndexSet &j) {
    return ij_recoverable(QuantumCarrier::css(c1, c2), i, j);
}

bool ij_recoverable(const QuantumCarrier &q, const IndexSet &i, const IndexSet &j) {
    check_nesting(i, j, q.n());
    return criterion_for(q).holds(i, j);
}

bool classical_ij_recoverable(const LinearCode &c, const IndexSet &i, const IndexSet &j) {
    check_nesting(i, j, c.n());
    return shorten(puncture(c, j), i.relative_to(j)).is_zero();
}

bool sufficient_filter_from(size_t n, size_t swt_dual, size_t i_size, size_t j_size) {
    return j_size + swt_dual >= n + i_size + 1;
}

bool sufficient_filter(const SymplecticCode &c, size_t i_size, size_t j_size) {
    SymplecticCode dual = dual_symplectic(c);
    if (dual.is_zero()) {
        return true;
    }
    return sufficient_filter_from(c.n(), min_symplectic_weight(dual).d, i_size, j_size);
}

bool impossibility_filter_from(size_t n, std::int64_t k, size_t swt_code, const std::vector<size_t> &gsw_dual,
                               size_t i_size, size_t j_size) {
    if (swt_code < i_size + 1) {
        fail(ErrorCode::HypothesisNotMet, "impossibility filter needs swt(C) >= |I| + 1; swt(C) = " +
                                              std::to_string(swt_code) + ", |I| = " + std::to_string(i_size));
    }
    std::int64_t t = static_cast<std::int64_t>(n) + k - 2 * static_cast<std::int64_t>(j_size) +
                     2 * static_cast<std::int64_t>(i_size);
    if (t <= 0) {
        return false;
    }
    if (static_cast<size_t>(t) > gsw_dual.size()) {
        fail(ErrorCode::TOutOfRange, "gsw index " + std::to_string(t) + " exceeds the supplied hierarchy");
    }
    return gsw_dual[static_cast<size_t>(t) - 1] + j_size >= n + 1;
}

bool impossibility_filter(const SymplecticCode &c, size_t n, std::int64_t k, size_t i_size, size_t j_size) {
    if (c.is_zero()) {
        fail(ErrorCode::HypothesisNotMet, "impossibility filter needs a nonzero stabilizer");
    }
    size_t swt_code = min_symplectic_weight(c).d;
    if (swt_code < i_size + 1) {
        return impossibility_filter_from(n, k, swt_code, {}, i_size, j_size);
    }
    std::int64_t t = static_cast<std::int64_t>(n) + k - 2 * static_cast<std::int64_t>(j_size) +
                     2 * static_cast<std::int64_t>(i_size);
    if (t <= 0) {
        return false;
    }
    SymplecticCode dual = dual_symplectic(c);
    auto hierarchy = gsw_hierarchy(dual, static_cast<size_t>(t));
    return impossibility_filter_from(n, k, swt_code, hierarchy, i_size, j_size);
}

LocalityResult verify_quantum_rdelta_lrc(const QuantumCarrier &q, size_t r, size_t delta,
                                         const std::optional<LocalityCertificate> &certificate,
                                         const SearchOptions &options) {
    if (r < 1) {
        fail(ErrorCode::BadParameters, "locality r must be at least 1");
    }
    if (delta < 2) {
        fail(ErrorCode::BadParameters, "delta must be at least 2 (delta = 1 is vacuous)");
    }
    size_t n = q.n();
    size_t i_size = delta - 1;
    Criterion crit = criterion_for(q);

    // sigma_I(s) depends only on I; cache it across candidate sets.
    std::vector<std::map<std::uint64_t, LinearCode>> right_cache(crit.parts.size());
    std::mutex cache_mu;
    auto right_side = [&](size_t part, const IndexSet &i) {
        std::uint64_t key = i.mask();
        {
            std::lock_guard<std::mutex> lock(cache_mu);
            auto it = right_cache[part].find(key);
            if (it != right_cache[part].end()) {
                return it->second;
            }
        }
        LinearCode value = shorten_columns(crit.parts[part].s, columns_of(i.members(), n, crit.paired));
        std::lock_guard<std::mutex> lock(cache_mu);
        return right_cache[part].emplace(key, value).first->second;
    };

    SetPredicate valid = [&](const IndexSet &j) {
        if (j.size() <= i_size) {
            return false;
        }
        auto jl = j.members();
        std::vector<LinearCode> punctured;
        for (const auto &p : crit.parts) {
            punctured.push_back(restrict_columns(p.t, columns_of(jl, n, crit.paired)));
        }
        return for_each_subset(j.size(), i_size, [&](const std::vector<size_t> &rel) {
            std::vector<size_t> labels;
            for (auto x : rel) {
                labels.push_back(jl[x - 1]);
            }
            IndexSet i(n, labels);
            for (size_t p = 0; p < crit.parts.size(); p++) {
                LinearCode left = shorten_columns(punctured[p], columns_of(rel, jl.size(), crit.paired));
                if (!(left == right_side(p, i))) {
                    return false;
                }
            }
            return true;
        });
    };

    if (certificate) {
        return check_locality_certificate(n, r, delta, *certificate, valid);
    }

    // Filters need the stabilizer in symplectic form and a gsw hierarchy.
    std::optional<size_t> swt_code;
    std::optional<size_t> swt_dual;
    std::vector<size_t> gsw_dual;
    std::string filter_note;
    auto stab = q.symplectic_stabilizer();
    if (stab && !stab->is_zero()) {
        try {
            SymplecticCode dual = dual_symplectic(*stab);
            swt_code = min_symplectic_weight(*stab, DistanceStrategy::automatic, kFilterBudget).d;
            swt_dual = min_symplectic_weight(dual, DistanceStrategy::automatic, kFilterBudget).d;
            if (*swt_code >= i_size + 1) {
                gsw_dual = gsw_hierarchy(dual, dual.dim(), kFilterBudget);
            } else {
                filter_note = "impossibility filter not applicable: swt(C) = " + std::to_string(*swt_code) +
                              " <= |I| = " + std::to_string(i_size);
            }
        } catch (const Error &e) {
            if (e.code() != ErrorCode::BudgetExceeded) {
                throw;
            }
            gsw_dual.clear();
            filter_note = "filters disabled: weight hierarchy exceeds the filter budget";
        }
    }
    bool first = true;
    auto plan = [&](size_t s) {
        LevelPlan p;
        if (first) {
            p.note = filter_note;
            first = false;
        }
        if (!gsw_dual.empty() &&
            impossibility_filter_from(n, q.k(), *swt_code, gsw_dual, i_size, s)) {
            std::int64_t t = static_cast<std::int64_t>(n) + q.k() - 2 * static_cast<std::int64_t>(s) +
                             2 * static_cast<std::int64_t>(i_size);
            p.skip = true;
            p.note = "impossibility filter: |I| = " + std::to_string(i_size) + ", |J| = " + std::to_string(s) +
                     ", t = " + std::to_string(t) + ", gsw_t(C^perp_s) = " +
                     std::to_string(gsw_dual[static_cast<size_t>(t) - 1]) + " >= " + std::to_string(n - s + 1) +
                     ", so no set of this size is valid";
        } else if (swt_dual && sufficient_filter_from(n, *swt_dual, i_size, s)) {
            p.note = "sufficient filter predicts every |J| = " + std::to_string(s) +
                     " succeeds; checked explicitly";
        }
        return p;
    };
    return run_locality_search(n, r, delta, valid, plan, options);
}

LocalityResult bridge_classical_quantum(const LinearCode &c, Form form, size_t r, size_t delta,
                                        const std::optional<LocalityCertificate> &certificate,
                                        const SearchOptions &options) {
    if (form == Form::symplectic) {
        fail(ErrorCode::FormMismatch, "the bridge applies to Euclidean or Hermitian dual-containing codes");
    }
    if (!contains_dual(c, form)) {
        fail(ErrorCode::NotSelfOrthogonal, std::string("code does not contain its ") + form_name(form) + " dual");
    }
    LinearCode dual = form == Form::hermitian ? dual_hermitian(c) : dual_euclidean(c);
    std::string hyp = "infinity (zero dual)";
    if (!dual.is_zero()) {
        size_t dd = min_distance(dual).d;
        if (delta > dd) {
            fail(ErrorCode::HypothesisNotMet,
                 "bridge needs delta <= d(C^perp) = " + std::to_string(dd) + ", got delta = " + std::to_string(delta));
        }
        hyp = std::to_string(dd);
    }
    LocalityResult res = verify_rdelta_lrc(c, r, delta, certificate, options);
    res.notes.push_back(std::string("classical verdict transferred to Q'(C): delta = ") + std::to_string(delta) +
                        " <= d(C^perp) = " + hyp);
    return res;
}

bool bridge_ij(const LinearCode &c, Form form, const IndexSet &i, const IndexSet &j) {
    if (!contains_dual(c, form)) {
        fail(ErrorCode::NotSelfOrthogonal, std::string("code does not contain its ") + form_name(form) + " dual");
    }
    LinearCode dual = form == Form::hermitian ? dual_hermitian(c) : dual_euclidean(c);
    if (!dual.is_zero() && i.size() + 1 > min_distance(dual).d) {
        fail(ErrorCode::HypothesisNotMet, "(I,J) bridge needs |I| <= d(C^perp) - 1");
    }
    return classical_ij_recoverable(c, i, j);
}

PurityReport purity_check(const LinearCode &c, Form form, std::uint64_t budget) {
    if (form == Form::symplectic) {
        fail(ErrorCode::FormMismatch, "purity is reported for Euclidean or Hermitian dual-containing codes");
    }
    if (!contains_dual(c, form)) {
        fail(ErrorCode::NotSelfOrthogonal, std::string("code does not contain its ") + form_name(form) + " dual");
    }
    LinearCode dual = form == Form::hermitian ? dual_hermitian(c) : dual_euclidean(c);
    PurityReport rep;
    rep.d_code = min_distance(c, DistanceStrategy::automatic, budget).d;
    if (!dual.is_zero()) {
        rep.d_dual = min_distance(dual, DistanceStrategy::automatic, budget).d;
    }
    rep.pure = !rep.d_dual || rep.d_code <= *rep.d_dual;
    return rep;
}

std::string QuantumCodeParams::to_string() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d_exact ? "" : ">=") + std::to_string(d) +
           "]]_" + std::to_string(q);
}

QuantumCodeParams quantum_params(const SymplecticCode &c, std::uint64_t budget) {
    if (!is_self_orthogonal(c)) {
        fail(ErrorCode::NotSelfOrthogonal, "stabilizer must satisfy C inside C^perp_s");
    }
    QuantumCodeParams p;
    p.n = c.n();
    p.k = static_cast<std::int64_t>(c.n()) - static_cast<std::int64_t>(c.dim());
    p.q = c.f().q();
    p.source = QuantumForm::symplectic;
    SymplecticCode dual = dual_symplectic(c);
    size_t swt_dual = min_symplectic_weight(dual, DistanceStrategy::automatic, budget).d;
    if (p.k == 0) {
        p.d = c.is_zero() ? 0 : min_symplectic_weight(c, DistanceStrategy::automatic, budget).d;
        p.d_exact = true;
        p.pure = true;
        return p;
    }
    if (capped_power(c.f().q(), dual.dim(), budget) > budget) {
        p.d = swt_dual;
        p.d_exact = false;
        p.pure = false;
        return p;
    }
    const Matrix &dual_gen = dual.generator();
    size_t best = c.n() + 1;
    for_each_codeword(dual.as_linear(), budget, [&](const Vec &w) {
        size_t wt = symplectic_weight(w);
        if (wt == 0 || wt >= best) {
            return true;
        }
        // w is in C iff it is symplectic-orthogonal to all of C^perp_s.
        bool in_c = true;
        for (size_t r = 0; r < dual_gen.rows() && in_c; r++) {
            in_c = symplectic_form(c.f(), w, dual_gen.row(r)) == 0;
        }
        if (!in_c) {
            best = wt;
        }
        return true;
    });
    p.d = best;
    p.d_exact = true;
    p.pure = swt_dual == best;
    return p;
}

QuantumCodeParams derived_quantum_params(const LinearCode &c, Form form, std::uint64_t budget) {
    PurityReport rep = purity_check(c, form, budget);
    QuantumCodeParams p;
    p.n = c.n();
    p.k = 2 * static_cast<std::int64_t>(c.k()) - static_cast<std::int64_t>(c.n());
    p.d = rep.d_code;
    p.d_exact = !rep.d_dual || rep.d_code < *rep.d_dual;
    p.pure = rep.pure;
    p.q = form == Form::hermitian ? c.f().subfield_order() : c.f().q();
    p.source = form == Form::hermitian ? QuantumForm::hermitian : QuantumForm::euclidean;
    return p;
}

namespace {

// Minimum weight of a \ b for a subcode b of a whose dual is b_dual; nullopt
// when a = b. Sets *exact = false when only the lower bound d(a) is known.
std::optional<size_t> difference_weight(const LinearCode &a, const LinearCode &b, const LinearCode &b_dual,
                                        std::uint64_t budget, bool *exact) {
    if (a.k() == b.k()) {
        return std::nullopt;
    }
    size_t da = min_distance(a, DistanceStrategy::automatic, budget).d;
    if (b.is_zero() || da < min_distance(b, DistanceStrategy::automatic, budget).d) {
        return da;
    }
    if (capped_power(a.f().q(), a.k(), budget) > budget) {
        *exact = false;
        return da;
    }
    const Matrix &h = b_dual.generator();
    const Field &f = a.f();
    size_t best = a.n() + 1;
    for_each_codeword(a, budget, [&](const Vec &w) {
        size_t wt = hamming_weight(w);
        if (wt == 0 || wt >= best) {
            return true;
        }
        bool in_b = true;
        for (size_t r = 0; r < h.rows() && in_b; r++) {
            Elem acc = 0;
            for (size_t j = 0; j < w.size(); j++) {
                acc = f.add(acc, f.mul(w[j], h.at(r, j)));
            }
            in_b = acc == 0;
        }
        if (!in_b) {
            best = wt;
        }
        return true;
    });
    return best;
}

}  // namespace

QuantumCodeParams css_params(const LinearCode &c1, const LinearCode &c2, std::uint64_t budget) {
    QuantumCarrier carrier = QuantumCarrier::css(c1, c2);
    QuantumCodeParams p;
    p.n = c1.n();
    p.k = carrier.k();
    p.q = c1.f().q();
    p.source = QuantumForm::css;
    bool exact = true;
    auto t1 = difference_weight(c1, dual_euclidean(c2), c2, budget, &exact);
    auto t2 = difference_weight(c2, dual_euclidean(c1), c1, budget, &exact);
    size_t d1 = c1.is_zero() ? 0 : min_distance(c1, DistanceStrategy::automatic, budget).d;
    size_t d2 = c2.is_zero() ? 0 : min_distance(c2, DistanceStrategy::automatic, budget).d;
    size_t lower = std::min(d1, d2);
    if (!t1 && !t2) {
        p.d = lower;
        p.d_exact = false;
    } else {
        p.d = std::min(t1.value_or(c1.n() + 1), t2.value_or(c1.n() + 1));
        p.d_exact = exact;
    }
    p.pure = p.d == lower;
    return p;
}

BoundReport quantum_singleton(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r, std::int64_t delta) {
    if (r < 1) {
        fail(ErrorCode::BadParameters, "locality r must be at least 1");
    }
    if ((n + k) % 2 != 0) {
        fail(ErrorCode::ParityViolation, "n + k = " + std::to_string(n + k) + " is odd");
    }
    BoundReport b;
    b.name = "quantum-singleton";
    b.lhs = k + 2 * d + 2 * (ceil_div(n + k, 2 * r) - 1) * (delta - 1);
    b.rhs = n + 2;
    b.rhs_exact = std::to_string(b.rhs);
    b.attained = b.lhs == b.rhs;
    b.inputs = {{"n", n}, {"k", k}, {"d", d}, {"r", r}, {"delta", delta}};
    return b;
}

BoundReport quantum_r_lrc_bound(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r) {
    if (r < 1) {
        fail(ErrorCode::BadParameters, "locality r must be at least 1");
    }
    // (1 - 2/(r+1)) n - 2(d - 1 - ceil((d-1)/r)) = num / (r + 1).
    std::int64_t den = r + 1;
    std::int64_t num = (r - 1) * n - 2 * den * (d - 1 - ceil_div(d - 1, r));
    BoundReport b;
    b.name = "quantum-r-lrc";
    b.lhs = k;
    b.rhs = floor_div(num, den);
    b.rhs_exact = rational_string(num, den);
    b.attained = b.lhs == b.rhs;
    b.inputs = {{"n", n}, {"k", k}, {"d", d}, {"r", r}};
    return b;
}

}  // namespace qlrc
