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

#ifndef QLRC_MATRIX_H
#define QLRC_MATRIX_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qlrc/gf.h"

namespace qlrc {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a single field.
///
/// A 0 x n matrix is a valid value and is how the zero subspace of F_q^n is
/// represented throughout the library.
class Matrix {
   public:
    Matrix(FieldPtr field, size_t rows, size_t cols);
    static Matrix from_rows(FieldPtr field, size_t cols, const std::vector<Vec> &rows);
    static Matrix identity(FieldPtr field, size_t n);

    const FieldPtr &field() const { return field_; }
    const Field &f() const { return *field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Elem at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, Elem v) { data_[r * cols_ + c] = v; }
    std::span<const Elem> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row_mut(size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(size_t r) const;
    const std::vector<Elem> &data() const { return data_; }

    void append_row(std::span<const Elem> values);
    /// Columns in the given (0-based) order.
    Matrix select_columns(std::span<const size_t> columns) const;
    Matrix transpose() const;
    /// this * other.
    Matrix multiply(const Matrix &other) const;
    /// Row vector times this matrix: sum_r v[r] * row(r).
    Vec combine_rows(std::span<const Elem> coefficients) const;
    /// Entrywise a -> a^(p^t).
    Matrix frobenius(std::uint32_t t) const;
    bool is_zero() const;

    bool operator==(const Matrix &other) const;
    std::string to_string() const;

   private:
    FieldPtr field_;
    size_t rows_;
    size_t cols_;
    std::vector<Elem> data_;
};

struct Echelon {
    Matrix form;
    std::vector<size_t> pivots;
};

/// Reduced row echelon form. Pivot columns are strictly increasing, each
/// pivot is 1 and is the only nonzero entry of its column. The pivot row
/// at each step is the first row (top to bottom) with a nonzero entry.
Echelon rref(const Matrix &m);

/// RREF with zero rows dropped: the unique representative of the row space.
Matrix canonical_basis(const Matrix &m);

size_t rank(const Matrix &m);

/// Basis of {x : m * x^T = 0}; it has cols - rank rows and is itself canonical.
Matrix kernel(const Matrix &m);

struct Solution {
    enum class Kind { Unique, None, Many };
    Kind kind;
    Vec particular;
    /// Basis of the homogeneous solutions (rows); empty unless kind == Many.
    Matrix homogeneous;
};

/// Classifies m * x^T = s^T.
Solution solve(const Matrix &m, std::span<const Elem> s);

/// Row spaces coincide.
bool subspace_equal(const Matrix &a, const Matrix &b);
/// Row space of a is contained in the row space of b.
bool subspace_contains(const Matrix &b, const Matrix &a);
/// Rows of a followed by rows of b.
Matrix vstack(const Matrix &a, const Matrix &b);

}  // namespace qlrc

#endif
