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

#ifndef QLRC_TESTS_TEST_UTIL_H
#define QLRC_TESTS_TEST_UTIL_H

// Hand-rolled generators and brute-force helpers shared by the tests. The
// helpers here only use field arithmetic, never the library's elimination,
// so they can serve as oracles for it.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "qlrc/code.h"
#include "qlrc/error.h"
#include "qlrc/gf.h"
#include "qlrc/matrix.h"
#include "qlrc/symp.h"

namespace qlrc::testing {

using Rng = std::mt19937_64;

inline Elem random_elem(const Field &f, Rng &rng) {
    return static_cast<Elem>(rng() % f.q());
}

inline Vec random_vec(const Field &f, size_t n, Rng &rng) {
    Vec v(n);
    for (auto &x : v) {
        x = random_elem(f, rng);
    }
    return v;
}

inline Matrix random_matrix(const FieldPtr &f, size_t rows, size_t cols, Rng &rng) {
    Matrix m(f, rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, random_elem(*f, rng));
        }
    }
    return m;
}

/// All vectors of GF(q)^n in ascending base-q order (digit 0 least significant).
inline void for_each_vector(const Field &f, size_t n, const std::function<void(const Vec &)> &fn) {
    Vec v(n, 0);
    while (true) {
        fn(v);
        size_t i = 0;
        while (i < n && ++v[i] == f.q()) {
            v[i++] = 0;
        }
        if (i == n) {
            return;
        }
    }
}

/// The row space of `rows` as an explicit set, by enumerating combinations.
inline std::set<Vec> span_set(const Field &f, const std::vector<Vec> &rows, size_t n) {
    std::set<Vec> out;
    for_each_vector(f, rows.size(), [&](const Vec &coef) {
        Vec w(n, 0);
        for (size_t r = 0; r < rows.size(); r++) {
            for (size_t j = 0; j < n; j++) {
                w[j] = f.add(w[j], f.mul(coef[r], rows[r][j]));
            }
        }
        out.insert(w);
    });
    return out;
}

inline std::vector<Vec> rows_of(const Matrix &m) {
    std::vector<Vec> rows;
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row_vec(r));
    }
    return rows;
}

inline std::set<Vec> span_set(const Matrix &m) {
    return span_set(m.f(), rows_of(m), m.cols());
}

inline Elem dot(const Field &f, const Vec &x, const Vec &y) {
    Elem acc = 0;
    for (size_t j = 0; j < x.size(); j++) {
        acc = f.add(acc, f.mul(x[j], y[j]));
    }
    return acc;
}

/// sum x_j y_j^s with s = sqrt(q).
inline Elem hermitian_dot(const Field &f, const Vec &x, const Vec &y) {
    Elem acc = 0;
    for (size_t j = 0; j < x.size(); j++) {
        acc = f.add(acc, f.mul(x[j], f.pow(y[j], f.subfield_order())));
    }
    return acc;
}

inline Elem symp_dot(const Field &f, const Vec &x, const Vec &y) {
    size_t n = x.size() / 2;
    Elem acc = 0;
    for (size_t j = 0; j < n; j++) {
        acc = f.add(acc, f.sub(f.mul(x[j], y[n + j]), f.mul(x[n + j], y[j])));
    }
    return acc;
}

/// Brute-force dual: every vector orthogonal to all rows under `form`.
inline std::set<Vec> dual_set(const Field &f, const std::vector<Vec> &rows, size_t n,
                              const std::function<Elem(const Field &, const Vec &, const Vec &)> &form) {
    std::set<Vec> out;
    for_each_vector(f, n, [&](const Vec &v) {
        for (const auto &r : rows) {
            if (form(f, v, r) != 0) {
                return;
            }
        }
        out.insert(v);
    });
    return out;
}

/// Random code of dimension at most k_max (rows may be dependent).
inline LinearCode random_code(const FieldPtr &f, size_t n, size_t k_max, Rng &rng) {
    size_t k = rng() % (k_max + 1);
    return LinearCode(random_matrix(f, k, n, rng));
}

/// Random isotropic subspace under `form`, grown by rejection sampling:
/// each new vector is orthogonal to itself and to the current basis and
/// outside the current span. Dimension is `dim` unless sampling gives up.
inline std::vector<Vec> random_isotropic(const Field &f, size_t len, size_t dim, Rng &rng,
                                         const std::function<Elem(const Field &, const Vec &, const Vec &)> &form) {
    std::vector<Vec> basis;
    std::set<Vec> span = {Vec(len, 0)};
    for (int attempt = 0; basis.size() < dim && attempt < 20000; attempt++) {
        Vec v = random_vec(f, len, rng);
        if (span.count(v) || form(f, v, v) != 0) {
            continue;
        }
        bool ok = true;
        for (const auto &b : basis) {
            ok = ok && form(f, v, b) == 0;
        }
        if (!ok) {
            continue;
        }
        basis.push_back(v);
        span = span_set(f, basis, len);
    }
    return basis;
}

inline SymplecticCode random_symplectic_self_orthogonal(const FieldPtr &f, size_t n, size_t dim, Rng &rng) {
    auto rows = random_isotropic(*f, 2 * n, dim, rng, symp_dot);
    return SymplecticCode(Matrix::from_rows(f, 2 * n, rows));
}

/// Minimum Hamming weight over a set of words, ignoring zero; n + 1 if none.
inline size_t min_weight(const std::set<Vec> &words, size_t n) {
    size_t best = n + 1;
    for (const auto &w : words) {
        size_t wt = 0;
        for (auto x : w) {
            wt += x != 0;
        }
        if (wt > 0) {
            best = std::min(best, wt);
        }
    }
    return best;
}

template <typename Fn>
ErrorCode error_of(Fn &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

}  // namespace qlrc::testing

#endif
