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

#include <gtest/gtest.h>

#include "qlrc/constructions.h"
#include "qlrc/error.h"
#include "qlrc/oracle.h"
#include "test_util.h"

using namespace qlrc;
using namespace qlrc::testing;

namespace {

SymplecticCode random_symp(Rng &rng, std::vector<std::uint64_t> qs = {2, 3, 4}) {
    auto f = Field::of_order(qs[rng() % qs.size()]);
    size_t n = 1 + rng() % 3;
    return SymplecticCode(random_matrix(f, rng() % (2 * n + 1), 2 * n, rng));
}

IndexSet random_nonempty(size_t n, Rng &rng) {
    std::uint64_t mask = 0;
    while (mask == 0) {
        mask = rng() & ((std::uint64_t{1} << n) - 1);
    }
    return IndexSet::from_mask(n, mask);
}

}  // namespace

TEST(Symp, FormIsAlternatingAndMatchesReference) {
    Rng rng(21);
    for (std::uint64_t q : {2, 3, 4, 5, 9}) {
        auto f = Field::of_order(q);
        for (int t = 0; t < 100; t++) {
            size_t n = 1 + rng() % 4;
            Vec x = random_vec(*f, 2 * n, rng), y = random_vec(*f, 2 * n, rng);
            EXPECT_EQ(symplectic_form(*f, x, y), symp_dot(*f, x, y));
            EXPECT_EQ(symplectic_form(*f, x, x), 0u);
            EXPECT_EQ(symplectic_form(*f, x, y), f->neg(symplectic_form(*f, y, x)));
        }
    }
}

TEST(Symp, DualMatchesBruteForceAndIsAnInvolution) {
    Rng rng(22);
    for (int t = 0; t < 200; t++) {
        auto c = random_symp(rng);
        auto d = dual_symplectic(c);
        EXPECT_EQ(span_set(d.generator()), dual_set(c.f(), rows_of(c.generator()), 2 * c.n(), symp_dot));
        EXPECT_EQ(dual_symplectic(d), c);
        EXPECT_EQ(c.dim() + d.dim(), 2 * c.n());
        // The twisted generator's Euclidean kernel is the symplectic dual.
        EXPECT_EQ(LinearCode(kernel(symplectic_twist(c.generator()))), d.as_linear());
    }
}

TEST(Symp, PunctureShortenDuality) {
    Rng rng(23);
    for (int t = 0; t < 300; t++) {
        auto c = random_symp(rng);
        auto j = random_nonempty(c.n(), rng);
        EXPECT_EQ(dual_symplectic(puncture_paired(c, j)), shorten_paired(dual_symplectic(c), j));
    }
}

TEST(Symp, PairedShortenMatchesBruteForce) {
    Rng rng(24);
    for (int t = 0; t < 200; t++) {
        auto c = random_symp(rng);
        auto j = random_nonempty(c.n(), rng);
        size_t n = c.n();
        std::set<Vec> expected;
        for (const auto &w : span_set(c.generator())) {
            bool inside = true;
            Vec a, b;
            for (size_t p = 0; p < n; p++) {
                if (j.contains(p + 1)) {
                    a.push_back(w[p]);
                    b.push_back(w[n + p]);
                } else if (w[p] != 0 || w[n + p] != 0) {
                    inside = false;
                }
            }
            if (inside) {
                a.insert(a.end(), b.begin(), b.end());
                expected.insert(a);
            }
        }
        EXPECT_EQ(span_set(shorten_paired(c, j).generator()), expected);
    }
}

TEST(Symp, SteaneWeightsAgainstOracle) {
    auto s = steane_symplectic();
    EXPECT_EQ(s.n(), 7u);
    EXPECT_EQ(s.dim(), 6u);
    EXPECT_TRUE(is_self_orthogonal(s));
    auto dual = dual_symplectic(s);
    EXPECT_EQ(dual.dim(), 8u);
    EXPECT_EQ(min_symplectic_weight(s).d, 4u);
    EXPECT_EQ(oracle::brute_force_symplectic_weight(s), 4u);
    EXPECT_EQ(min_symplectic_weight(dual).d, 3u);
    EXPECT_EQ(oracle::brute_force_symplectic_weight(dual), 3u);
    EXPECT_EQ(gsw_hierarchy(dual, 8), (std::vector<size_t>{3, 3, 5, 5, 6, 6, 7, 7}));
    EXPECT_EQ(oracle::brute_force_gsw(dual), (std::vector<size_t>{3, 3, 5, 5, 6, 6, 7, 7}));
    EXPECT_EQ(gsw(s, 1), 4u);
}

TEST(Symp, WeightsAgreeWithOracleOnRandomCodes) {
    Rng rng(25);
    for (int t = 0; t < 200; t++) {
        auto c = random_symp(rng);
        if (c.is_zero()) {
            EXPECT_EQ(error_of([&] { min_symplectic_weight(c); }), ErrorCode::ZeroCode);
            continue;
        }
        auto res = min_symplectic_weight(c, DistanceStrategy::dependency);
        EXPECT_EQ(res.d, oracle::brute_force_symplectic_weight(c));
        EXPECT_EQ(min_symplectic_weight(c, DistanceStrategy::enumerate).d, res.d);
        EXPECT_EQ(symplectic_weight(res.witness), res.d);
        EXPECT_TRUE(c.as_linear().contains(res.witness));
        EXPECT_EQ(gsw_hierarchy(c, c.dim()), oracle::brute_force_gsw(c));
    }
}

TEST(Symp, MaximalExtensionIsSelfDualAndContainsC) {
    Rng rng(26);
    for (int t = 0; t < 100; t++) {
        auto f = Field::of_order(std::vector<std::uint64_t>{2, 3, 4}[rng() % 3]);
        size_t n = 1 + rng() % 4;
        auto c = random_symplectic_self_orthogonal(f, n, rng() % (n + 1), rng);
        auto m = maximal_self_dual_extension(c);
        EXPECT_EQ(m.dim(), n);
        EXPECT_EQ(dual_symplectic(m), m);
        EXPECT_TRUE(is_subcode(c.as_linear(), m.as_linear()));
    }
    auto f2 = Field::of_order(2);
    SymplecticCode bad(Matrix::from_rows(f2, 2, {{1, 0}, {0, 1}}));
    EXPECT_EQ(error_of([&] { maximal_self_dual_extension(bad); }), ErrorCode::NotSelfOrthogonal);
}

TEST(Symp, CssProductAndOrthogonality) {
    auto h = hamming_code(3, 2);
    auto simplex = dual_euclidean(h);
    auto prod = css_product(simplex, simplex);
    EXPECT_EQ(prod, steane_symplectic());
    EXPECT_TRUE(is_self_orthogonal(prod));
    // X-type Hamming rows against Z-type simplex rows commute; Hamming is
    // not self-orthogonal so the product with itself is not isotropic.
    EXPECT_TRUE(is_self_orthogonal(css_product(h, simplex)));
    EXPECT_FALSE(is_self_orthogonal(css_product(h, h)));
    EXPECT_TRUE(is_self_orthogonal(simplex, Form::euclidean));
    EXPECT_FALSE(is_self_orthogonal(h, Form::euclidean));
    EXPECT_EQ(error_of([&] { css_product(h, LinearCode::full(Field::of_order(2), 3)); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(error_of([&] { css_product(h, LinearCode::full(Field::of_order(3), 7)); }), ErrorCode::FieldMismatch);
}

TEST(Symp, HermitianSelfOrthogonality) {
    auto f4 = Field::of_order(4);
    // (1, w, w^2) over GF(4): 1 + w^3 + w^6 = 1 + 1 + 1 = 1, not isotropic;
    // (1, 1) is: 1 + 1 = 0.
    EXPECT_TRUE(is_self_orthogonal(LinearCode(Matrix::from_rows(f4, 2, {{1, 1}})), Form::hermitian));
    EXPECT_FALSE(is_self_orthogonal(LinearCode(Matrix::from_rows(f4, 3, {{1, 2, 3}})), Form::hermitian));
    EXPECT_EQ(error_of([] { is_self_orthogonal(LinearCode::full(Field::of_order(3), 2), Form::hermitian); }),
              ErrorCode::NotAQuadraticExtension);
}

TEST(Symp, Errors) {
    auto f = Field::of_order(2);
    EXPECT_EQ(error_of([&] { SymplecticCode(Matrix(f, 1, 3)); }), ErrorCode::DimensionMismatch);
    auto s = steane_symplectic();
    EXPECT_EQ(error_of([&] { is_self_orthogonal(s, Form::euclidean); }), ErrorCode::FormMismatch);
    EXPECT_EQ(error_of([&] { is_self_orthogonal(LinearCode::full(f, 2), Form::symplectic); }),
              ErrorCode::FormMismatch);
    EXPECT_EQ(error_of([&] { puncture_paired(s, IndexSet::none(7)); }), ErrorCode::EmptyIndexSet);
    EXPECT_EQ(error_of([&] { puncture_paired(s, IndexSet::full(6)); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(error_of([&] { gsw(s, 7); }), ErrorCode::TOutOfRange);
    EXPECT_EQ(error_of([&] { symplectic_form(*f, Vec{1, 0}, Vec{1, 0, 0, 0}); }), ErrorCode::DimensionMismatch);
}
