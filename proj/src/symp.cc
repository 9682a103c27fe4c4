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

#include "qlrc/symp.h"

#include <algorithm>

#include "qlrc/error.h"

namespace qlrc {

namespace {

const Matrix &check_even(const Matrix &m) {
    if (m.cols() % 2 != 0) {
        fail(ErrorCode::DimensionMismatch, "symplectic generators need an even column count, got " +
                                               std::to_string(m.cols()));
    }
    return m;
}

const LinearCode &check_even(const LinearCode &c) {
    check_even(c.generator());
    return c;
}

std::vector<size_t> paired_columns(const IndexSet &j, size_t n) {
    std::vector<size_t> cols;
    auto pos = j.positions();
    cols.reserve(2 * pos.size());
    for (auto p : pos) {
        cols.push_back(p);
    }
    for (auto p : pos) {
        cols.push_back(n + p);
    }
    return cols;
}

void check_positions(const SymplecticCode &c, const IndexSet &j) {
    if (j.n() != c.n()) {
        fail(ErrorCode::DimensionMismatch, "index set over " + std::to_string(j.n()) + " positions for a code on " +
                                               std::to_string(c.n()) + " positions");
    }
    if (j.empty()) {
        fail(ErrorCode::EmptyIndexSet, "index set must be nonempty");
    }
}

// Sum x_j * y_j^e where e is 1 (Euclidean) or sqrt(q) (Hermitian).
Elem bilinear(const Field &f, std::span<const Elem> x, std::span<const Elem> y, bool hermitian) {
    Elem acc = 0;
    std::uint32_t t = hermitian ? f.m() / 2 : 0;
    for (size_t i = 0; i < x.size(); i++) {
        Elem yy = hermitian ? f.frobenius(y[i], t) : y[i];
        acc = f.add(acc, f.mul(x[i], yy));
    }
    return acc;
}

}  // namespace

SymplecticCode::SymplecticCode(const Matrix &generators) : code_(check_even(generators)) {
}

SymplecticCode::SymplecticCode(const LinearCode &code) : code_(check_even(code)) {
}

SymplecticCode SymplecticCode::zero(FieldPtr field, size_t n) {
    return SymplecticCode(Matrix(std::move(field), 0, 2 * n));
}

Elem symplectic_form(const Field &f, std::span<const Elem> x, std::span<const Elem> y) {
    if (x.size() != y.size() || x.size() % 2 != 0) {
        fail(ErrorCode::DimensionMismatch, "symplectic form needs two vectors of equal even length");
    }
    size_t n = x.size() / 2;
    Elem acc = 0;
    for (size_t j = 0; j < n; j++) {
        acc = f.add(acc, f.mul(x[j], y[n + j]));
        acc = f.sub(acc, f.mul(x[n + j], y[j]));
    }
    return acc;
}

Matrix symplectic_twist(const Matrix &gen) {
    const Field &f = gen.f();
    size_t n = gen.cols() / 2;
    Matrix out(gen.field(), gen.rows(), gen.cols());
    for (size_t r = 0; r < gen.rows(); r++) {
        for (size_t j = 0; j < n; j++) {
            out.set(r, j, f.neg(gen.at(r, n + j)));
            out.set(r, n + j, gen.at(r, j));
        }
    }
    return out;
}

SymplecticCode dual_symplectic(const SymplecticCode &c) {
    return SymplecticCode(kernel(symplectic_twist(c.generator())));
}

const char *form_name(Form form) {
    switch (form) {
        case Form::symplectic: return "symplectic";
        case Form::hermitian: return "hermitian";
        case Form::euclidean: return "euclidean";
    }
    return "unknown";
}

bool is_self_orthogonal(const SymplecticCode &c, Form form) {
    if (form != Form::symplectic) {
        fail(ErrorCode::FormMismatch, std::string("a symplectic code is checked under the symplectic form, not ") +
                                          form_name(form));
    }
    const Matrix &g = c.generator();
    for (size_t a = 0; a < g.rows(); a++) {
        for (size_t b = a + 1; b < g.rows(); b++) {
            if (symplectic_form(c.f(), g.row(a), g.row(b)) != 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_self_orthogonal(const LinearCode &c, Form form) {
    if (form == Form::symplectic) {
        fail(ErrorCode::FormMismatch, "a linear code is checked under the Euclidean or Hermitian form");
    }
    bool hermitian = form == Form::hermitian;
    if (hermitian && !c.f().is_quadratic_extension()) {
        fail(ErrorCode::NotAQuadraticExtension, "Hermitian form needs GF(q^2); got " + c.f().header());
    }
    const Matrix &g = c.generator();
    for (size_t a = 0; a < g.rows(); a++) {
        for (size_t b = a; b < g.rows(); b++) {
            if (bilinear(c.f(), g.row(a), g.row(b), hermitian) != 0) {
                return false;
            }
        }
    }
    return true;
}

SymplecticCode puncture_paired(const SymplecticCode &c, const IndexSet &j) {
    check_positions(c, j);
    return SymplecticCode(c.generator().select_columns(paired_columns(j, c.n())));
}

SymplecticCode shorten_paired(const SymplecticCode &c, const IndexSet &j) {
    check_positions(c, j);
    if (j.size() == c.n()) {
        return c;
    }
    size_t n = c.n();
    auto outside = paired_columns(j.complement(), n);
    Matrix messages = kernel(c.generator().select_columns(outside).transpose());
    Matrix words = messages.multiply(c.generator());
    return SymplecticCode(words.select_columns(paired_columns(j, n)));
}

size_t symplectic_weight(std::span<const Elem> x) {
    if (x.size() % 2 != 0) {
        fail(ErrorCode::DimensionMismatch, "symplectic vectors have even length");
    }
    size_t n = x.size() / 2;
    size_t w = 0;
    for (size_t j = 0; j < n; j++) {
        if (x[j] != 0 || x[n + j] != 0) {
            w++;
        }
    }
    return w;
}

namespace {

DistanceResult swt_by_enumeration(const SymplecticCode &c, std::uint64_t budget) {
    DistanceResult best{c.n() + 1, {}};
    for_each_codeword(c.as_linear(), budget, [&](const Vec &w) {
        size_t wt = symplectic_weight(w);
        if (wt == 0) {
            return true;
        }
        if (wt < best.d || (wt == best.d && w < best.witness)) {
            best.d = wt;
            best.witness = w;
        }
        return true;
    });
    return best;
}

DistanceResult swt_by_dependency(const SymplecticCode &c, std::uint64_t budget) {
    size_t n = c.n();
    Matrix h = c.as_linear().parity_check();
    std::vector<std::vector<size_t>> groups(n);
    for (size_t j = 0; j < n; j++) {
        groups[j] = {j, n + j};
    }
    auto found = find_dependent_groups(h, groups, n, budget);
    if (!found) {
        fail(ErrorCode::BadParameters, "nonzero code without a dependent position set");
    }
    std::vector<size_t> cols;
    for (auto g : *found) {
        cols.push_back(g);
    }
    for (auto g : *found) {
        cols.push_back(n + g);
    }
    Matrix local = kernel(h.select_columns(cols));
    Vec witness(2 * n, 0);
    for (size_t i = 0; i < cols.size(); i++) {
        witness[cols[i]] = local.at(0, i);
    }
    return {found->size(), std::move(witness)};
}

}  // namespace

DistanceResult min_symplectic_weight(const SymplecticCode &c, DistanceStrategy strategy, std::uint64_t budget) {
    if (c.is_zero()) {
        fail(ErrorCode::ZeroCode, "minimum symplectic weight of the zero code is undefined");
    }
    switch (strategy) {
        case DistanceStrategy::enumerate:
            return swt_by_enumeration(c, budget);
        case DistanceStrategy::dependency:
            return swt_by_dependency(c, budget);
        case DistanceStrategy::automatic:
            break;
    }
    std::uint64_t words = capped_power(c.f().q(), c.dim(), budget);
    if (words <= std::min(budget, std::uint64_t{1} << 20)) {
        return swt_by_enumeration(c, budget);
    }
    try {
        return swt_by_dependency(c, budget);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::BudgetExceeded || words > budget) {
            throw;
        }
    }
    return swt_by_enumeration(c, budget);
}

std::vector<size_t> gsw_hierarchy(const SymplecticCode &c, size_t t_max, std::uint64_t budget) {
    if (t_max < 1 || t_max > c.dim()) {
        fail(ErrorCode::TOutOfRange, "t must lie in [1, dim C] = [1, " + std::to_string(c.dim()) + "]");
    }
    size_t n = c.n();
    size_t k = c.dim();
    std::vector<size_t> weights;
    std::uint64_t work = 0;
    size_t start = min_symplectic_weight(c, DistanceStrategy::automatic, budget).d;
    // dim shorten_paired(C, J) = dim C - rank(G on the paired complement of J).
    for (size_t s = start; weights.size() < t_max && s <= n; s++) {
        std::uint64_t level = binomial(n, s);
        if (work + level > budget) {
            fail(ErrorCode::BudgetExceeded, "gsw scan exceeds the budget at |J| = " + std::to_string(s));
        }
        work += level;
        size_t best = 0;
        for_each_subset(n, n - s, [&](const std::vector<size_t> &outside) {
            std::vector<size_t> cols;
            for (auto o : outside) {
                cols.push_back(o - 1);
            }
            for (auto o : outside) {
                cols.push_back(n + o - 1);
            }
            size_t dim = k - (cols.empty() ? 0 : rank(c.generator().select_columns(cols)));
            best = std::max(best, dim);
            return best < t_max;
        });
        while (weights.size() < t_max && weights.size() < best) {
            weights.push_back(s);
        }
    }
    return weights;
}

size_t gsw(const SymplecticCode &c, size_t t, std::uint64_t budget) {
    return gsw_hierarchy(c, t, budget).back();
}

SymplecticCode maximal_self_dual_extension(const SymplecticCode &c) {
    if (!is_self_orthogonal(c)) {
        fail(ErrorCode::NotSelfOrthogonal, "C_max exists only for symplectic self-orthogonal codes");
    }
    Matrix current = c.generator();
    while (current.rows() < c.n()) {
        Matrix dual = kernel(symplectic_twist(current));
        bool grown = false;
        for (size_t r = 0; r < dual.rows() && !grown; r++) {
            Matrix candidate = current;
            candidate.append_row(dual.row(r));
            if (rank(candidate) > current.rows()) {
                current = canonical_basis(candidate);
                grown = true;
            }
        }
        if (!grown) {
            fail(ErrorCode::BadParameters, "greedy extension stalled below dimension n");
        }
    }
    return SymplecticCode(current);
}

SymplecticCode css_product(const LinearCode &c1, const LinearCode &c2) {
    if (c1.n() != c2.n()) {
        fail(ErrorCode::DimensionMismatch, "CSS factors must have equal length");
    }
    if (!c1.f().same_as(c2.f())) {
        fail(ErrorCode::FieldMismatch, "CSS factors over different fields");
    }
    size_t n = c1.n();
    Matrix g(c1.field(), 0, 2 * n);
    Vec row(2 * n);
    for (size_t r = 0; r < c1.k(); r++) {
        std::fill(row.begin(), row.end(), 0);
        auto src = c1.generator().row(r);
        std::copy(src.begin(), src.end(), row.begin());
        g.append_row(row);
    }
    for (size_t r = 0; r < c2.k(); r++) {
        std::fill(row.begin(), row.end(), 0);
        auto src = c2.generator().row(r);
        std::copy(src.begin(), src.end(), row.begin() + n);
        g.append_row(row);
    }
    return SymplecticCode(g);
}

}  // namespace qlrc
