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

#include "qlrc/oracle.h"

#include <bit>
#include <functional>
#include <set>

#include "qlrc/error.h"

namespace qlrc::oracle {

namespace {

struct System {
    bool consistent = false;
    Vec particular;
    std::vector<Vec> null_basis;
};

// Gauss-Jordan on [a | b] with the pivot taken from the LAST eligible row,
// which deliberately differs from the library's elimination order.
System naive_solve(const Field &f, std::vector<Vec> a, Vec b, size_t unknowns) {
    size_t m = a.size();
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < unknowns && rank < m; c++) {
        size_t pr = m;
        for (size_t r = m; r-- > rank;) {
            if (a[r][c] != 0) {
                pr = r;
                break;
            }
        }
        if (pr == m) {
            continue;
        }
        std::swap(a[pr], a[rank]);
        std::swap(b[pr], b[rank]);
        Elem inv = f.inv(a[rank][c]);
        for (size_t k = 0; k < unknowns; k++) {
            a[rank][k] = f.mul(a[rank][k], inv);
        }
        b[rank] = f.mul(b[rank], inv);
        for (size_t r = 0; r < m; r++) {
            if (r == rank || a[r][c] == 0) {
                continue;
            }
            Elem factor = a[r][c];
            for (size_t k = 0; k < unknowns; k++) {
                a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
            }
            b[r] = f.sub(b[r], f.mul(factor, b[rank]));
        }
        pivot_col.push_back(c);
        rank++;
    }
    System sys;
    for (size_t r = rank; r < m; r++) {
        if (b[r] != 0) {
            return sys;
        }
    }
    sys.consistent = true;
    sys.particular.assign(unknowns, 0);
    std::vector<bool> is_pivot(unknowns, false);
    for (size_t r = 0; r < rank; r++) {
        sys.particular[pivot_col[r]] = b[r];
        is_pivot[pivot_col[r]] = true;
    }
    for (size_t free = 0; free < unknowns; free++) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(unknowns, 0);
        v[free] = 1;
        for (size_t r = 0; r < rank; r++) {
            v[pivot_col[r]] = f.neg(a[r][free]);
        }
        sys.null_basis.push_back(std::move(v));
    }
    return sys;
}

std::vector<Vec> rows_of(const Matrix &m) {
    std::vector<Vec> rows;
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row_vec(r));
    }
    return rows;
}

Elem symp_product(const Field &f, const Vec &x, const Vec &y) {
    size_t n = x.size() / 2;
    Elem acc = 0;
    for (size_t j = 0; j < n; j++) {
        acc = f.add(acc, f.sub(f.mul(x[j], y[n + j]), f.mul(x[n + j], y[j])));
    }
    return acc;
}

std::uint64_t checked_count(std::uint64_t q, size_t exp) {
    std::uint64_t total = capped_power(q, exp, kOracleBudget);
    if (total > kOracleBudget) {
        fail(ErrorCode::BudgetExceeded, "oracle enumeration of " + std::to_string(q) + "^" + std::to_string(exp) +
                                            " exceeds " + std::to_string(kOracleBudget));
    }
    return total;
}

// Every linear combination of `rows`, coefficient vectors in ascending
// base-q order.
void enumerate_span(const Field &f, const std::vector<Vec> &rows, size_t len, const std::function<void(const Vec &)> &fn) {
    std::uint64_t total = checked_count(f.q(), rows.size());
    std::vector<Elem> coef(rows.size(), 0);
    Vec w(len, 0);
    for (std::uint64_t it = 0; it < total; it++) {
        std::fill(w.begin(), w.end(), 0);
        for (size_t r = 0; r < rows.size(); r++) {
            if (coef[r] == 0) {
                continue;
            }
            for (size_t j = 0; j < len; j++) {
                w[j] = f.add(w[j], f.mul(coef[r], rows[r][j]));
            }
        }
        fn(w);
        for (size_t r = 0; r < rows.size(); r++) {
            if (++coef[r] < f.q()) {
                break;
            }
            coef[r] = 0;
        }
    }
}

// Weight hierarchy from support masks: dims[J] = log_q #{words with supp in J}.
std::vector<size_t> hierarchy_from_supports(const std::vector<std::uint64_t> &supports, size_t n, std::uint32_t q,
                                            size_t dim) {
    if (n > 20) {
        fail(ErrorCode::BudgetExceeded, "brute-force hierarchy limited to n <= 20");
    }
    std::vector<std::uint64_t> count(std::size_t{1} << n, 0);
    for (auto s : supports) {
        count[s]++;
    }
    for (size_t b = 0; b < n; b++) {
        for (std::uint64_t m = 0; m < count.size(); m++) {
            if (m >> b & 1) {
                count[m] += count[m ^ (std::uint64_t{1} << b)];
            }
        }
    }
    std::vector<size_t> best(dim, n + 1);
    for (std::uint64_t m = 0; m < count.size(); m++) {
        size_t d = 0;
        for (std::uint64_t c = count[m]; c >= q; c /= q) {
            d++;
        }
        auto size = static_cast<size_t>(std::popcount(m));
        for (size_t t = 1; t <= d && t <= dim; t++) {
            best[t - 1] = std::min(best[t - 1], size);
        }
    }
    return best;
}

std::vector<std::uint64_t> supports_of(const Field &f, const std::vector<Vec> &rows, size_t len, bool paired) {
    std::vector<std::uint64_t> out;
    size_t n = paired ? len / 2 : len;
    enumerate_span(f, rows, len, [&](const Vec &w) {
        std::uint64_t m = 0;
        for (size_t j = 0; j < n; j++) {
            if (w[j] != 0 || (paired && w[n + j] != 0)) {
                m |= std::uint64_t{1} << j;
            }
        }
        out.push_back(m);
    });
    return out;
}

// Decodes against explicit stabilizer rows over `n` positions; `in_stab`
// tests membership in the stabilizer they span.
DecodeResult decode_rows(const Field &f, const std::vector<Vec> &stab, size_t n, std::span<const Elem> syndrome,
                         const std::vector<size_t> &positions, const std::function<bool(const Vec &)> &in_stab) {
    size_t u = 2 * positions.size();
    std::vector<Vec> a;
    for (const auto &g : stab) {
        // g .s e = sum_j g_a[j] e_b[j] - g_b[j] e_a[j]; unknowns (e_a | e_b) on I.
        Vec row(u, 0);
        for (size_t t = 0; t < positions.size(); t++) {
            size_t j = positions[t];
            row[t] = f.neg(g[n + j]);
            row[positions.size() + t] = g[j];
        }
        a.push_back(std::move(row));
    }
    System sys = naive_solve(f, a, Vec(syndrome.begin(), syndrome.end()), u);
    DecodeResult res;
    if (!sys.consistent) {
        res.status = DecodeStatus::Inconsistent;
        return res;
    }
    auto embed = [&](const Vec &x) {
        Vec e(2 * n, 0);
        for (size_t t = 0; t < positions.size(); t++) {
            e[positions[t]] = x[t];
            e[n + positions[t]] = x[positions.size() + t];
        }
        return e;
    };
    for (const auto &h : sys.null_basis) {
        if (!in_stab(embed(h))) {
            res.status = DecodeStatus::Ambiguous;
            return res;
        }
    }
    res.status = DecodeStatus::UniqueModC;
    res.word = embed(sys.particular);
    return res;
}

}  // namespace

const char *decode_status_name(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Recovered: return "Recovered";
        case DecodeStatus::UniqueModC: return "UniqueModC";
        case DecodeStatus::Ambiguous: return "Ambiguous";
        case DecodeStatus::Inconsistent: return "Inconsistent";
    }
    return "Unknown";
}

size_t naive_rank(const Field &f, std::vector<Vec> rows) {
    if (rows.empty()) {
        return 0;
    }
    size_t cols = rows[0].size();
    System sys = naive_solve(f, [&] {
        // Transposed system: rank of rows = rank of columns.
        std::vector<Vec> t(cols, Vec(rows.size(), 0));
        for (size_t r = 0; r < rows.size(); r++) {
            for (size_t c = 0; c < cols; c++) {
                t[c][r] = rows[r][c];
            }
        }
        return t;
    }(), Vec(cols, 0), rows.size());
    return rows.size() - sys.null_basis.size();
}

DecodeResult erasure_decode(const LinearCode &c, std::span<const Elem> received, const IndexSet &erased) {
    const Field &f = c.f();
    size_t n = c.n();
    if (received.size() != n || erased.n() != n) {
        fail(ErrorCode::DimensionMismatch, "received word and erasure set must have length n");
    }
    // Parity checks: the null space of the generator, computed naively.
    System h = naive_solve(f, rows_of(c.generator()), Vec(c.k(), 0), n);
    std::vector<bool> is_erased(n, false);
    for (auto p : erased.positions()) {
        is_erased[p] = true;
    }
    auto pos = erased.positions();
    std::vector<Vec> a;
    Vec b;
    for (const auto &row : h.null_basis) {
        Vec coeffs;
        Elem rhs = 0;
        for (auto p : pos) {
            coeffs.push_back(row[p]);
        }
        for (size_t j = 0; j < n; j++) {
            if (!is_erased[j]) {
                rhs = f.sub(rhs, f.mul(row[j], received[j]));
            }
        }
        a.push_back(std::move(coeffs));
        b.push_back(rhs);
    }
    System sys = naive_solve(f, a, b, pos.size());
    DecodeResult res;
    if (!sys.consistent) {
        res.status = DecodeStatus::Inconsistent;
    } else if (!sys.null_basis.empty()) {
        res.status = DecodeStatus::Ambiguous;
    } else {
        res.status = DecodeStatus::Recovered;
        res.word.assign(received.begin(), received.end());
        for (size_t t = 0; t < pos.size(); t++) {
            res.word[pos[t]] = sys.particular[t];
        }
    }
    return res;
}

Vec symplectic_syndrome(const SymplecticCode &c, std::span<const Elem> error) {
    if (error.size() != 2 * c.n()) {
        fail(ErrorCode::DimensionMismatch, "error must have length 2n");
    }
    Vec e(error.begin(), error.end());
    Vec s;
    for (const auto &g : rows_of(c.generator())) {
        s.push_back(symp_product(c.f(), g, e));
    }
    return s;
}

DecodeResult symplectic_erasure_decode(const SymplecticCode &c, std::span<const Elem> syndrome, const IndexSet &i) {
    const Field &f = c.f();
    auto gens = rows_of(c.generator());
    if (syndrome.size() != gens.size()) {
        fail(ErrorCode::SyndromeLengthMismatch, "syndrome has " + std::to_string(syndrome.size()) +
                                                    " entries, code has dimension " + std::to_string(gens.size()));
    }
    if (i.n() != c.n()) {
        fail(ErrorCode::DimensionMismatch, "erasure set over the wrong number of positions");
    }
    if (i.empty()) {
        fail(ErrorCode::BadNesting, "erasure set must be nonempty");
    }
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            if (symp_product(f, gens[a], gens[b]) != 0) {
                fail(ErrorCode::NotSelfOrthogonal, "stabilizer must satisfy C inside C^perp_s");
            }
        }
    }
    size_t dim = gens.size();
    auto in_c = [&](const Vec &v) {
        auto rows = gens;
        rows.push_back(v);
        return naive_rank(f, rows) == dim;
    };
    return decode_rows(f, gens, c.n(), syndrome, i.positions(), in_c);
}

bool exhaustive_ij_check(const SymplecticCode &c, const IndexSet &i, const IndexSet &j) {
    const Field &f = c.f();
    size_t n = c.n();
    if (i.n() != n || j.n() != n) {
        fail(ErrorCode::DimensionMismatch, "index sets over the wrong number of positions");
    }
    if (i.empty() || !i.is_subset_of(j) || i.size() == j.size()) {
        fail(ErrorCode::BadNesting, "need nonempty I strictly inside J");
    }
    auto jp = j.positions();
    size_t m = jp.size();
    std::vector<bool> in_j(n, false);
    for (auto p : jp) {
        in_j[p] = true;
    }
    // sigma_J(C): codewords vanishing (pairwise) outside J, restricted to J.
    std::set<Vec> local;
    enumerate_span(f, rows_of(c.generator()), 2 * n, [&](const Vec &w) {
        for (size_t p = 0; p < n; p++) {
            if (!in_j[p] && (w[p] != 0 || w[n + p] != 0)) {
                return;
            }
        }
        Vec r(2 * m);
        for (size_t t = 0; t < m; t++) {
            r[t] = w[jp[t]];
            r[m + t] = w[n + jp[t]];
        }
        local.insert(std::move(r));
    });
    // A spanning subset of the local words, grown while the rank increases.
    std::vector<Vec> stab;
    for (const auto &w : local) {
        auto trial = stab;
        trial.push_back(w);
        if (naive_rank(f, trial) > stab.size()) {
            stab = std::move(trial);
        }
        if (checked_count(f.q(), stab.size()) == local.size()) {
            break;
        }
    }
    auto in_stab = [&](const Vec &v) { return local.count(v) > 0; };

    std::vector<size_t> rel;
    for (auto p : i.positions()) {
        for (size_t t = 0; t < m; t++) {
            if (jp[t] == p) {
                rel.push_back(t);
            }
        }
    }
    std::uint64_t errors = checked_count(f.q(), 2 * rel.size());
    std::vector<Elem> digits(2 * rel.size(), 0);
    for (std::uint64_t it = 0; it < errors; it++) {
        Vec e(2 * m, 0);
        for (size_t t = 0; t < rel.size(); t++) {
            e[rel[t]] = digits[t];
            e[m + rel[t]] = digits[rel.size() + t];
        }
        Vec syn;
        for (const auto &g : stab) {
            syn.push_back(symp_product(f, g, e));
        }
        DecodeResult d = decode_rows(f, stab, m, syn, rel, in_stab);
        if (d.status != DecodeStatus::UniqueModC) {
            return false;
        }
        Vec diff(2 * m);
        for (size_t t = 0; t < 2 * m; t++) {
            diff[t] = f.sub(e[t], d.word[t]);
        }
        if (!in_stab(diff)) {
            return false;
        }
        for (size_t t = 0; t < digits.size(); t++) {
            if (++digits[t] < f.q()) {
                break;
            }
            digits[t] = 0;
        }
    }
    return true;
}

size_t brute_force_distance(const LinearCode &c) {
    if (c.is_zero()) {
        fail(ErrorCode::ZeroCode, "the zero code has no minimum distance");
    }
    size_t best = c.n() + 1;
    enumerate_span(c.f(), rows_of(c.generator()), c.n(), [&](const Vec &w) {
        size_t wt = 0;
        for (auto x : w) {
            wt += x != 0;
        }
        if (wt > 0) {
            best = std::min(best, wt);
        }
    });
    return best;
}

size_t brute_force_symplectic_weight(const SymplecticCode &c) {
    if (c.is_zero()) {
        fail(ErrorCode::ZeroCode, "the zero code has no minimum weight");
    }
    size_t n = c.n();
    size_t best = n + 1;
    enumerate_span(c.f(), rows_of(c.generator()), 2 * n, [&](const Vec &w) {
        size_t wt = 0;
        for (size_t j = 0; j < n; j++) {
            wt += w[j] != 0 || w[n + j] != 0;
        }
        if (wt > 0) {
            best = std::min(best, wt);
        }
    });
    return best;
}

std::vector<size_t> brute_force_ghw(const LinearCode &c) {
    auto sup = supports_of(c.f(), rows_of(c.generator()), c.n(), false);
    return hierarchy_from_supports(sup, c.n(), c.f().q(), c.k());
}

std::vector<size_t> brute_force_gsw(const SymplecticCode &c) {
    auto sup = supports_of(c.f(), rows_of(c.generator()), 2 * c.n(), true);
    return hierarchy_from_supports(sup, c.n(), c.f().q(), c.dim());
}

}  // namespace qlrc::oracle
