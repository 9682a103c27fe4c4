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

#include "qlrc/matrix.h"

#include <sstream>

#include "qlrc/error.h"

namespace qlrc {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

Matrix Matrix::from_rows(FieldPtr field, size_t cols, const std::vector<Vec> &rows) {
    Matrix m(std::move(field), 0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(std::move(field), n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, 1);
    }
    return m;
}

Vec Matrix::row_vec(size_t r) const {
    auto s = row(r);
    return Vec(s.begin(), s.end());
}

void Matrix::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) {
        fail(ErrorCode::DimensionMismatch,
             "row of length " + std::to_string(values.size()) + " for " + std::to_string(cols_) + " columns");
    }
    for (auto v : values) {
        if (!field_->contains(v)) {
            fail(ErrorCode::IndexOutOfRange, "entry " + std::to_string(v) + " outside the field");
        }
    }
    data_.insert(data_.end(), values.begin(), values.end());
    rows_++;
}

Matrix Matrix::select_columns(std::span<const size_t> columns) const {
    Matrix out(field_, rows_, columns.size());
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < columns.size(); c++) {
            if (columns[c] >= cols_) {
                fail(ErrorCode::IndexOutOfRange, "column " + std::to_string(columns[c]) + " out of range");
            }
            out.set(r, c, at(r, columns[c]));
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.set(c, r, at(r, c));
        }
    }
    return out;
}

Matrix Matrix::multiply(const Matrix &other) const {
    if (cols_ != other.rows_) {
        fail(ErrorCode::DimensionMismatch, "inner dimensions differ");
    }
    if (!field_->same_as(*other.field_)) {
        fail(ErrorCode::FieldMismatch, "matrices over different fields");
    }
    const Field &F = *field_;
    Matrix out(field_, rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            Elem a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out.set(r, c, F.add(out.at(r, c), F.mul(a, other.at(k, c))));
            }
        }
    }
    return out;
}

Vec Matrix::combine_rows(std::span<const Elem> coefficients) const {
    if (coefficients.size() != rows_) {
        fail(ErrorCode::DimensionMismatch, "coefficient count differs from row count");
    }
    const Field &F = *field_;
    Vec out(cols_, 0);
    for (size_t r = 0; r < rows_; r++) {
        Elem a = coefficients[r];
        if (a == 0) {
            continue;
        }
        for (size_t c = 0; c < cols_; c++) {
            out[c] = F.add(out[c], F.mul(a, at(r, c)));
        }
    }
    return out;
}

Matrix Matrix::frobenius(std::uint32_t t) const {
    Matrix out = *this;
    for (auto &v : out.data_) {
        v = field_->frobenius(v, t);
    }
    return out;
}

bool Matrix::is_zero() const {
    for (auto v : data_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

bool Matrix::operator==(const Matrix &other) const {
    return field_->same_as(*other.field_) && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? " " : "") << at(r, c);
        }
        out << "\n";
    }
    return out.str();
}

Echelon rref(const Matrix &m) {
    const Field &F = m.f();
    Matrix a = m;
    std::vector<size_t> pivots;
    size_t rows = a.rows();
    size_t cols = a.cols();
    size_t lead = 0;
    for (size_t c = 0; c < cols && lead < rows; c++) {
        size_t r = lead;
        while (r < rows && a.at(r, c) == 0) {
            r++;
        }
        if (r == rows) {
            continue;
        }
        if (r != lead) {
            auto x = a.row_mut(r);
            auto y = a.row_mut(lead);
            std::swap_ranges(x.begin() + c, x.end(), y.begin() + c);
        }
        auto prow = a.row_mut(lead);
        Elem inv = F.inv(prow[c]);
        for (size_t j = c; j < cols; j++) {
            prow[j] = F.mul(prow[j], inv);
        }
        for (size_t other = 0; other < rows; other++) {
            if (other == lead) {
                continue;
            }
            auto orow = a.row_mut(other);
            Elem factor = orow[c];
            if (factor == 0) {
                continue;
            }
            for (size_t j = c; j < cols; j++) {
                orow[j] = F.sub(orow[j], F.mul(factor, prow[j]));
            }
        }
        pivots.push_back(c);
        lead++;
    }
    return {std::move(a), std::move(pivots)};
}

Matrix canonical_basis(const Matrix &m) {
    auto e = rref(m);
    Matrix out(m.field(), 0, m.cols());
    for (size_t r = 0; r < e.pivots.size(); r++) {
        out.append_row(e.form.row(r));
    }
    return out;
}

size_t rank(const Matrix &m) {
    return rref(m).pivots.size();
}

Matrix kernel(const Matrix &m) {
    const Field &F = m.f();
    auto e = rref(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    Matrix basis(m.field(), 0, cols);
    Vec x(cols);
    for (size_t free = 0; free < cols; free++) {
        if (is_pivot[free]) {
            continue;
        }
        std::fill(x.begin(), x.end(), 0);
        x[free] = 1;
        for (size_t r = 0; r < e.pivots.size(); r++) {
            x[e.pivots[r]] = F.neg(e.form.at(r, free));
        }
        basis.append_row(x);
    }
    return canonical_basis(basis);
}

Solution solve(const Matrix &m, std::span<const Elem> s) {
    if (s.size() != m.rows()) {
        fail(ErrorCode::DimensionMismatch, "right-hand side has length " + std::to_string(s.size()) + ", expected " +
                                               std::to_string(m.rows()));
    }
    size_t cols = m.cols();
    Matrix aug(m.field(), m.rows(), cols + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < cols; c++) {
            aug.set(r, c, m.at(r, c));
        }
        aug.set(r, cols, s[r]);
    }
    auto e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == cols) {
        return {Solution::Kind::None, {}, Matrix(m.field(), 0, cols)};
    }
    Vec x(cols, 0);
    for (size_t r = 0; r < e.pivots.size(); r++) {
        x[e.pivots[r]] = e.form.at(r, cols);
    }
    Matrix hom = kernel(m);
    if (hom.empty()) {
        return {Solution::Kind::Unique, std::move(x), std::move(hom)};
    }
    return {Solution::Kind::Many, std::move(x), std::move(hom)};
}

bool subspace_equal(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols()) {
        fail(ErrorCode::DimensionMismatch, "subspaces of different ambient length");
    }
    if (!a.field()->same_as(*b.field())) {
        fail(ErrorCode::FieldMismatch, "subspaces over different fields");
    }
    return canonical_basis(a) == canonical_basis(b);
}

bool subspace_contains(const Matrix &b, const Matrix &a) {
    if (a.cols() != b.cols()) {
        fail(ErrorCode::DimensionMismatch, "subspaces of different ambient length");
    }
    return rank(vstack(b, a)) == rank(b);
}

Matrix vstack(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols()) {
        fail(ErrorCode::DimensionMismatch, "cannot stack matrices with different column counts");
    }
    if (!a.field()->same_as(*b.field())) {
        fail(ErrorCode::FieldMismatch, "matrices over different fields");
    }
    Matrix out = a;
    for (size_t r = 0; r < b.rows(); r++) {
        out.append_row(b.row(r));
    }
    return out;
}

}  // namespace qlrc
