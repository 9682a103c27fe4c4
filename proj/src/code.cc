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

#include "qlrc/code.h"

#include <algorithm>

#include "qlrc/error.h"

namespace qlrc {

namespace {

void check_n(const LinearCode &c, const IndexSet &r) {
    if (r.n() != c.n()) {
        fail(ErrorCode::DimensionMismatch,
             "index set over " + std::to_string(r.n()) + " coordinates for a length-" + std::to_string(c.n()) + " code");
    }
    if (r.empty()) {
        fail(ErrorCode::EmptyIndexSet, "index set must be nonempty");
    }
}

// Incrementally maintained echelon basis of column vectors; each stored
// vector is zero at the pivots of all vectors stored before it.
class ColumnBasis {
   public:
    ColumnBasis(const Field &f, size_t m) : f_(f), m_(m) {
    }

    // Reduces v in place; returns true if it is independent of the basis
    // (and then stores it).
    bool insert(Vec v) {
        for (size_t b = 0; b < pivots_.size(); b++) {
            Elem x = v[pivots_[b]];
            if (x == 0) {
                continue;
            }
            const Vec &row = rows_[b];
            for (size_t i = 0; i < m_; i++) {
                if (row[i] != 0) {
                    v[i] = f_.sub(v[i], f_.mul(x, row[i]));
                }
            }
        }
        size_t piv = 0;
        while (piv < m_ && v[piv] == 0) {
            piv++;
        }
        if (piv == m_) {
            return false;
        }
        Elem inv = f_.inv(v[piv]);
        for (auto &x : v) {
            x = f_.mul(x, inv);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    size_t size() const { return rows_.size(); }

    void truncate(size_t s) {
        rows_.resize(s);
        pivots_.resize(s);
    }

   private:
    const Field &f_;
    size_t m_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

struct GroupScan {
    const Matrix &h;
    const std::vector<std::vector<size_t>> &groups;
    size_t w;
    ColumnBasis basis;
    std::vector<size_t> chosen;

    // True when the columns of group g are independent of the basis (and
    // are added to it); on false the basis is restored.
    bool add_group(size_t g) {
        size_t before = basis.size();
        for (auto col : groups[g]) {
            Vec v(h.rows());
            for (size_t r = 0; r < h.rows(); r++) {
                v[r] = h.at(r, col);
            }
            if (!basis.insert(std::move(v))) {
                basis.truncate(before);
                return false;
            }
        }
        return true;
    }

    bool rec(size_t start) {
        size_t depth = chosen.size();
        for (size_t g = start; g + (w - depth) <= groups.size(); g++) {
            size_t before = basis.size();
            bool independent = add_group(g);
            if (!independent) {
                if (depth + 1 == w) {
                    chosen.push_back(g);
                    return true;
                }
                continue;
            }
            if (depth + 1 < w) {
                chosen.push_back(g);
                if (rec(g + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
            basis.truncate(before);
        }
        return false;
    }
};

}  // namespace

LinearCode::LinearCode(const Matrix &generators) : gen_(canonical_basis(generators)) {
}

LinearCode LinearCode::zero(FieldPtr field, size_t n) {
    return LinearCode(Matrix(std::move(field), 0, n));
}

LinearCode LinearCode::full(FieldPtr field, size_t n) {
    return LinearCode(Matrix::identity(std::move(field), n));
}

Matrix LinearCode::parity_check() const {
    return kernel(gen_);
}

bool LinearCode::contains(std::span<const Elem> word) const {
    if (word.size() != n()) {
        fail(ErrorCode::DimensionMismatch, "word length differs from code length");
    }
    Matrix w(field(), 0, n());
    w.append_row(word);
    return subspace_contains(gen_, w);
}

Vec LinearCode::encode(std::span<const Elem> message) const {
    return gen_.combine_rows(message);
}

LinearCode dual_euclidean(const LinearCode &c) {
    return LinearCode(kernel(c.generator()));
}

LinearCode dual_hermitian(const LinearCode &c) {
    if (!c.f().is_quadratic_extension()) {
        fail(ErrorCode::NotAQuadraticExtension, "Hermitian dual needs GF(q^2); got " + c.f().header());
    }
    // y in C^perp_h iff sum conj(x_j) y_j = 0 for all x in C.
    return LinearCode(kernel(c.generator().frobenius(c.f().m() / 2)));
}

LinearCode puncture(const LinearCode &c, const IndexSet &r) {
    check_n(c, r);
    auto cols = r.positions();
    return LinearCode(c.generator().select_columns(cols));
}

LinearCode shorten(const LinearCode &c, const IndexSet &r) {
    check_n(c, r);
    if (r.size() == c.n()) {
        return c;
    }
    auto outside = r.complement().positions();
    // Messages u with u * G zero outside R.
    Matrix messages = kernel(c.generator().select_columns(outside).transpose());
    Matrix words = messages.multiply(c.generator());
    return LinearCode(words.select_columns(r.positions()));
}

bool is_subcode(const LinearCode &a, const LinearCode &b) {
    if (a.n() != b.n()) {
        fail(ErrorCode::DimensionMismatch, "codes of different length");
    }
    return subspace_contains(b.generator(), a.generator());
}

size_t hamming_weight(std::span<const Elem> v) {
    return static_cast<size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

void for_each_codeword(const LinearCode &c, std::uint64_t budget, const std::function<bool(const Vec &)> &fn) {
    const Field &F = c.f();
    size_t k = c.k();
    std::uint64_t total = capped_power(F.q(), k, budget);
    if (total > budget) {
        fail(ErrorCode::BudgetExceeded, "enumerating q^k codewords exceeds the budget of " + std::to_string(budget));
    }
    const Matrix &g = c.generator();
    size_t n = c.n();
    Vec word(n, 0);
    std::vector<Elem> digits(k, 0);
    while (true) {
        if (!fn(word)) {
            return;
        }
        // Odometer step; word tracks sum_i digits[i] * g_i.
        size_t i = 0;
        while (i < k) {
            Elem old = digits[i];
            Elem next = old + 1 == F.q() ? 0 : old + 1;
            digits[i] = next;
            Elem delta = F.sub(next, old);
            auto row = g.row(i);
            for (size_t j = 0; j < n; j++) {
                if (row[j] != 0) {
                    word[j] = F.add(word[j], F.mul(delta, row[j]));
                }
            }
            if (next != 0) {
                break;
            }
            i++;
        }
        if (i == k) {
            return;
        }
    }
}

std::optional<std::vector<size_t>> find_dependent_groups(const Matrix &h,
                                                         const std::vector<std::vector<size_t>> &groups,
                                                         size_t max_w, std::uint64_t budget) {
    max_w = std::min(max_w, groups.size());
    for (size_t w = 1; w <= max_w; w++) {
        if (binomial(groups.size(), w) > budget) {
            fail(ErrorCode::BudgetExceeded, "dependency scan level " + std::to_string(w) + " has C(" +
                                                std::to_string(groups.size()) + "," + std::to_string(w) +
                                                ") subsets, over the budget of " + std::to_string(budget));
        }
        GroupScan scan{h, groups, w, ColumnBasis(h.f(), h.rows()), {}};
        if (scan.rec(0)) {
            return scan.chosen;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<size_t>> singleton_groups(size_t n) {
    std::vector<std::vector<size_t>> g(n);
    for (size_t j = 0; j < n; j++) {
        g[j] = {j};
    }
    return g;
}

DistanceResult distance_by_enumeration(const LinearCode &c, std::uint64_t budget) {
    DistanceResult best{c.n() + 1, {}};
    for_each_codeword(c, budget, [&](const Vec &w) {
        size_t wt = hamming_weight(w);
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

DistanceResult distance_by_dependency(const LinearCode &c, std::uint64_t budget) {
    Matrix h = c.parity_check();
    auto groups = singleton_groups(c.n());
    auto found = find_dependent_groups(h, groups, c.n() - c.k() + 1, budget);
    if (!found) {
        fail(ErrorCode::BadParameters, "no dependent column set within the Singleton bound");
    }
    std::vector<size_t> cols = *found;
    Matrix local = kernel(h.select_columns(cols));
    Vec witness(c.n(), 0);
    for (size_t i = 0; i < cols.size(); i++) {
        witness[cols[i]] = local.at(0, i);
    }
    return {cols.size(), std::move(witness)};
}

}  // namespace

DistanceResult min_distance(const LinearCode &c, DistanceStrategy strategy, std::uint64_t budget) {
    if (c.is_zero()) {
        fail(ErrorCode::ZeroCode, "minimum distance of the zero code is undefined");
    }
    switch (strategy) {
        case DistanceStrategy::enumerate:
            return distance_by_enumeration(c, budget);
        case DistanceStrategy::dependency:
            return distance_by_dependency(c, budget);
        case DistanceStrategy::automatic:
            break;
    }
    std::uint64_t words = capped_power(c.f().q(), c.k(), budget);
    if (words <= std::min(budget, std::uint64_t{1} << 20)) {
        return distance_by_enumeration(c, budget);
    }
    try {
        return distance_by_dependency(c, budget);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::BudgetExceeded || words > budget) {
            throw;
        }
    }
    return distance_by_enumeration(c, budget);
}

bool distance_at_least(const LinearCode &c, size_t w, std::uint64_t budget) {
    if (c.is_zero()) {
        return false;
    }
    if (w <= 1) {
        return true;
    }
    if (w > c.n() - c.k() + 1) {
        return false;
    }
    std::uint64_t subsets = 0;
    for (size_t s = 1; s < w; s++) {
        subsets += binomial(c.n(), s);
    }
    std::uint64_t words = capped_power(c.f().q(), c.k(), budget);
    if (words <= budget && words <= subsets) {
        bool ok = true;
        for_each_codeword(c, budget, [&](const Vec &v) {
            size_t wt = hamming_weight(v);
            if (wt > 0 && wt < w) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }
    return !find_dependent_groups(c.parity_check(), singleton_groups(c.n()), w - 1, budget).has_value();
}

std::vector<size_t> generalized_hamming_weights(const LinearCode &c, size_t t_max, std::uint64_t budget) {
    if (t_max < 1 || t_max > c.k()) {
        fail(ErrorCode::TOutOfRange, "t_max must lie in [1, k]");
    }
    size_t n = c.n();
    size_t k = c.k();
    std::vector<size_t> weights;
    weights.push_back(min_distance(c, DistanceStrategy::automatic, budget).d);
    std::uint64_t work = 0;
    // dim shorten(C, J) = k - rank(G restricted to the complement of J).
    for (size_t s = weights.back() + 1; weights.size() < t_max && s <= n; s++) {
        std::uint64_t level = binomial(n, s);
        if (work + level > budget) {
            fail(ErrorCode::BudgetExceeded, "generalized weight scan exceeds the budget at |J| = " + std::to_string(s));
        }
        work += level;
        size_t best = 0;
        for_each_subset(n, n - s, [&](const std::vector<size_t> &outside) {
            std::vector<size_t> cols(outside.size());
            for (size_t i = 0; i < outside.size(); i++) {
                cols[i] = outside[i] - 1;
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

}  // namespace qlrc
