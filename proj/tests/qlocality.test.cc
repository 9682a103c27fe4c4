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

#include <gtest/gtest.h>

#include "qlrc/constructions.h"
#include "qlrc/error.h"
#include "test_util.h"

using namespace qlrc;
using namespace qlrc::testing;

namespace {

using FormFn = std::function<Elem(const Field &, const Vec &, const Vec &)>;

std::vector<size_t> cols_for(const IndexSet &s, size_t n, bool paired) {
    std::vector<size_t> out;
    for (auto p : s.positions()) {
        out.push_back(p);
    }
    if (paired) {
        for (auto p : s.positions()) {
            out.push_back(n + p);
        }
    }
    return out;
}

// {w restricted to cols(I) : w in words, w zero on cols(J) \ cols(I)}; with
// J = all positions this is plain shortening to I.
std::set<Vec> local_part(const std::set<Vec> &words, size_t n, bool paired, const IndexSet &i, const IndexSet &j) {
    auto ci = cols_for(i, n, paired);
    auto cj = cols_for(j, n, paired);
    std::set<size_t> in_i(ci.begin(), ci.end());
    std::set<Vec> out;
    for (const auto &w : words) {
        bool ok = true;
        for (auto c : cj) {
            ok = ok && (in_i.count(c) || w[c] == 0);
        }
        if (ok) {
            Vec v;
            for (auto c : ci) {
                v.push_back(w[c]);
            }
            out.insert(v);
        }
    }
    return out;
}

// One (s, t) pair of the criterion as explicit word sets: the test is
// local_part(t, I, J) == local_part(s, I, all).
struct BrutePart {
    std::set<Vec> s, t;
};

struct BruteCriterion {
    size_t n;
    bool paired;
    std::vector<BrutePart> parts;

    bool holds(const IndexSet &i, const IndexSet &j) const {
        auto all = IndexSet::full(n);
        for (const auto &p : parts) {
            if (local_part(p.t, n, paired, i, j) != local_part(p.s, n, paired, i, all)) {
                return false;
            }
        }
        return true;
    }
};

BruteCriterion brute_symplectic(const SymplecticCode &c) {
    auto rows = rows_of(c.generator());
    return {c.n(), true, {{span_set(c.generator()), dual_set(c.f(), rows, 2 * c.n(), symp_dot)}}};
}

BruteCriterion brute_linear(const LinearCode &d, const FormFn &form) {
    return {d.n(), false, {{span_set(d.generator()), dual_set(d.f(), rows_of(d.generator()), d.n(), form)}}};
}

BruteCriterion brute_css(const LinearCode &c1, const LinearCode &c2) {
    auto &f = c1.f();
    auto c1_dual = dual_set(f, rows_of(c1.generator()), c1.n(), dot);
    auto c2_dual = dual_set(f, rows_of(c2.generator()), c2.n(), dot);
    return {c1.n(), false, {{c1_dual, span_set(c2.generator())}, {c2_dual, span_set(c1.generator())}}};
}

// Every nonempty I strictly inside J, over all J.
template <typename Fn>
void for_each_nesting(size_t n, Fn &&fn) {
    for (std::uint64_t jm = 1; jm < (std::uint64_t{1} << n); jm++) {
        for (std::uint64_t im = (jm - 1) & jm; im > 0; im = (im - 1) & jm) {
            fn(IndexSet::from_mask(n, im), IndexSet::from_mask(n, jm));
        }
    }
}

FieldPtr small_field(Rng &rng) {
    return Field::of_order(rng() % 2 ? 2 : 3);
}

SymplecticCode random_stabilizer(Rng &rng, size_t max_n = 4) {
    auto f = small_field(rng);
    size_t n = 2 + rng() % (max_n - 1);
    return random_symplectic_self_orthogonal(f, n, rng() % (n + 1), rng);
}

LinearCode random_self_orthogonal(const FieldPtr &f, size_t n, Rng &rng, const FormFn &form) {
    auto rows = random_isotropic(*f, n, rng() % (n / 2 + 1), rng, form);
    return LinearCode(Matrix::from_rows(f, n, rows));
}

std::pair<LinearCode, LinearCode> random_css(Rng &rng) {
    auto f = small_field(rng);
    size_t n = 2 + rng() % 4;
    auto c2 = random_code(f, n, n, rng);
    auto rows = rows_of(dual_euclidean(c2).generator());
    for (size_t e = rng() % 3; e > 0; e--) {
        rows.push_back(random_vec(*f, n, rng));
    }
    return {LinearCode(Matrix::from_rows(f, n, rows)), c2};
}

// Naive quantum locality: first J by (|J|, lex) passing every (I,J) test.
std::map<size_t, IndexSet> naive_quantum_scan(const BruteCriterion &b, size_t r, size_t delta) {
    size_t n = b.n;
    std::map<size_t, IndexSet> out;
    for (size_t i = 1; i <= n; i++) {
        for (size_t s = delta; s <= std::min(n, r + delta - 1) && !out.count(i); s++) {
            for_each_subset(n, s, [&](const std::vector<size_t> &idx) {
                IndexSet j(n, idx);
                if (!j.contains(i)) {
                    return true;
                }
                bool all = for_each_subset(s, delta - 1, [&](const std::vector<size_t> &rel) {
                    std::vector<size_t> labels;
                    for (auto x : rel) {
                        labels.push_back(idx[x - 1]);
                    }
                    return b.holds(IndexSet(n, labels), j);
                });
                if (all) {
                    out.emplace(i, j);
                    return false;
                }
                return true;
            });
        }
    }
    return out;
}

// Steane stabilizer on 7 qubits plus a Z stabilizer on an 8th qubit.
SymplecticCode steane_with_z8() {
    auto s = steane_symplectic();
    auto f = s.field();
    std::vector<Vec> rows;
    for (size_t r = 0; r < s.dim(); r++) {
        Vec v = s.generator().row_vec(r);
        Vec w(16, 0);
        for (size_t j = 0; j < 7; j++) {
            w[j] = v[j];
            w[8 + j] = v[7 + j];
        }
        rows.push_back(w);
    }
    Vec z8(16, 0);
    z8[15] = 1;
    rows.push_back(z8);
    return SymplecticCode(Matrix::from_rows(f, 16, rows));
}

}  // namespace

TEST(QLocality, SymplecticCriterionMatchesBruteForce) {
    Rng rng(41);
    for (int t = 0; t < 60; t++) {
        auto c = random_stabilizer(rng);
        auto b = brute_symplectic(c);
        for_each_nesting(c.n(), [&](const IndexSet &i, const IndexSet &j) {
            ASSERT_EQ(ij_recoverable(c, i, j), b.holds(i, j)) << i.to_string() << " in " << j.to_string();
        });
        // With J the whole set the criterion is erasure correction at I.
        auto full = IndexSet::full(c.n());
        for (std::uint64_t im = 1; im + 1 < (std::uint64_t{1} << c.n()); im++) {
            auto i = IndexSet::from_mask(c.n(), im);
            EXPECT_EQ(ij_recoverable(c, i, full), corrects_erasures_at(c, i));
        }
    }
}

TEST(QLocality, LinearCriteriaMatchBruteForce) {
    Rng rng(42);
    for (int t = 0; t < 40; t++) {
        auto f = small_field(rng);
        auto d = random_self_orthogonal(f, 2 + rng() % 4, rng, dot);
        auto b = brute_linear(d, dot);
        for_each_nesting(d.n(), [&](const IndexSet &i, const IndexSet &j) {
            ASSERT_EQ(ij_recoverable_euclidean(d, i, j), b.holds(i, j));
        });
    }
    auto f4 = Field::of_order(4);
    for (int t = 0; t < 30; t++) {
        auto d = random_self_orthogonal(f4, 2 + rng() % 3, rng, hermitian_dot);
        auto b = brute_linear(d, hermitian_dot);
        for_each_nesting(d.n(), [&](const IndexSet &i, const IndexSet &j) {
            ASSERT_EQ(ij_recoverable_hermitian(d, i, j), b.holds(i, j));
        });
    }
    for (int t = 0; t < 40; t++) {
        auto [c1, c2] = random_css(rng);
        auto b = brute_css(c1, c2);
        for_each_nesting(c1.n(), [&](const IndexSet &i, const IndexSet &j) {
            ASSERT_EQ(ij_recoverable_css(c1, c2, i, j), b.holds(i, j));
        });
    }
}

TEST(QLocality, CarriersAgreeWithTheirSymplecticStabilizer) {
    Rng rng(43);
    for (int t = 0; t < 30; t++) {
        auto f = small_field(rng);
        auto d = random_self_orthogonal(f, 2 + rng() % 4, rng, dot);
        auto q = QuantumCarrier::euclidean(d);
        auto stab = q.symplectic_stabilizer();
        ASSERT_TRUE(stab.has_value());
        EXPECT_EQ(static_cast<std::int64_t>(stab->n()) - static_cast<std::int64_t>(stab->dim()), q.k());
        for_each_nesting(d.n(), [&](const IndexSet &i, const IndexSet &j) {
            ASSERT_EQ(ij_recoverable(q, i, j), ij_recoverable(*stab, i, j));
        });
    }
    for (int t = 0; t < 30; t++) {
        auto [c1, c2] = random_css(rng);
        auto q = QuantumCarrier::css(c1, c2);
        auto stab = q.symplectic_stabilizer();
        ASSERT_TRUE(stab.has_value());
        EXPECT_TRUE(is_self_orthogonal(*stab));
        EXPECT_EQ(static_cast<std::int64_t>(stab->n()) - static_cast<std::int64_t>(stab->dim()), q.k());
        for_each_nesting(c1.n(), [&](const IndexSet &i, const IndexSet &j) {
            ASSERT_EQ(ij_recoverable(q, i, j), ij_recoverable(*stab, i, j));
        });
    }
    EXPECT_FALSE(QuantumCarrier::hermitian(LinearCode::zero(Field::of_order(4), 3)).symplectic_stabilizer());
}

TEST(QLocality, SteaneRecoverability) {
    auto s = steane_symplectic();
    // Every single erasure is recoverable from the other six qubits.
    for (size_t i = 1; i <= 7; i++) {
        auto j = IndexSet(7, {i}).complement().with(i);
        EXPECT_TRUE(ij_recoverable(s, IndexSet(7, {i}), IndexSet::full(7)));
        for (size_t drop = 1; drop <= 7; drop++) {
            if (drop != i) {
                EXPECT_TRUE(ij_recoverable(s, IndexSet(7, {i}), j.without(drop)));
            }
        }
    }
    // Two qubits never suffice: {1} from {1,3} fails.
    EXPECT_FALSE(ij_recoverable(s, IndexSet(7, {1}), IndexSet(7, {1, 3})));
    auto q = QuantumCarrier::symplectic(s);
    auto six = verify_quantum_rdelta_lrc(q, 5, 2);
    EXPECT_EQ(six.verdict, Verdict::Certified);
    auto two = verify_quantum_rdelta_lrc(q, 2, 2);
    EXPECT_EQ(two.verdict, Verdict::Refuted);
    // Both candidate sizes are dismissed by the impossibility filter.
    EXPECT_EQ(two.evaluations, 0u);
    size_t skipped = 0;
    for (const auto &note : two.notes) {
        skipped += note.rfind("impossibility filter", 0) == 0;
    }
    EXPECT_EQ(skipped, 2u);
}

TEST(QLocality, QuantumVerifierMatchesNaiveScan) {
    Rng rng(44);
    int certified = 0;
    for (int t = 0; t < 60; t++) {
        auto c = random_stabilizer(rng);
        size_t r = 1 + rng() % 3, delta = 2 + rng() % 2;
        auto res = verify_quantum_rdelta_lrc(QuantumCarrier::symplectic(c), r, delta);
        auto expected = naive_quantum_scan(brute_symplectic(c), r, delta);
        EXPECT_EQ(res.certificate.sets, expected);
        bool all = expected.size() == c.n();
        EXPECT_EQ(res.verdict, all ? Verdict::Certified : Verdict::Refuted);
        certified += all;
    }
    EXPECT_GT(certified, 5);
}

TEST(QLocality, RecoverabilityIsMonotoneInJ) {
    Rng rng(45);
    for (int t = 0; t < 40; t++) {
        auto c = random_stabilizer(rng);
        size_t n = c.n();
        for_each_nesting(n, [&](const IndexSet &i, const IndexSet &j) {
            if (!ij_recoverable(c, i, j)) {
                return;
            }
            for (size_t extra = 1; extra <= n; extra++) {
                if (!j.contains(extra)) {
                    EXPECT_TRUE(ij_recoverable(c, i, j.with(extra)));
                }
            }
        });
    }
}

TEST(QLocality, FiltersAreSound) {
    Rng rng(46);
    int impossible = 0, sufficient = 0;
    for (int t = 0; t < 80; t++) {
        auto c = random_stabilizer(rng);
        if (c.is_zero()) {
            continue;
        }
        size_t n = c.n();
        auto dual = dual_symplectic(c);
        size_t swt_c = min_symplectic_weight(c).d;
        size_t swt_d = min_symplectic_weight(dual).d;
        auto gsw_d = gsw_hierarchy(dual, dual.dim());
        std::int64_t k = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(c.dim());
        for (size_t is = 1; is < n; is++) {
            for (size_t js = is + 1; js <= n; js++) {
                bool none = true, all = true;
                for_each_nesting(n, [&](const IndexSet &i, const IndexSet &j) {
                    if (i.size() == is && j.size() == js) {
                        bool ok = ij_recoverable(c, i, j);
                        none = none && !ok;
                        all = all && ok;
                    }
                });
                if (swt_c >= is + 1 && impossibility_filter_from(n, k, swt_c, gsw_d, is, js)) {
                    EXPECT_TRUE(none);
                    EXPECT_TRUE(impossibility_filter(c, n, k, is, js));
                    impossible++;
                }
                if (sufficient_filter_from(n, swt_d, is, js)) {
                    EXPECT_TRUE(all);
                    EXPECT_TRUE(sufficient_filter(c, is, js));
                    sufficient++;
                }
            }
        }
    }
    EXPECT_GT(impossible, 10);
    EXPECT_GT(sufficient, 10);
    EXPECT_EQ(error_of([] { impossibility_filter(steane_symplectic(), 7, 1, 4, 6); }), ErrorCode::HypothesisNotMet);
}

TEST(QLocality, QuantumParameters) {
    auto steane = quantum_params(steane_symplectic());
    EXPECT_EQ(steane.to_string(), "[[7,1,3]]_2");
    EXPECT_TRUE(steane.pure);
    auto z8 = quantum_params(steane_with_z8());
    EXPECT_EQ(z8.to_string(), "[[8,1,3]]_2");
    EXPECT_FALSE(z8.pure);
    auto full_space = quantum_params(SymplecticCode::zero(Field::of_order(3), 4));
    EXPECT_EQ(full_space.to_string(), "[[4,4,1]]_3");
    auto h = hamming_code(3, 2);
    auto css = css_params(h, h);
    EXPECT_EQ(css.to_string(), "[[7,1,3]]_2");
    auto derived = derived_quantum_params(h, Form::euclidean);
    EXPECT_EQ(derived.to_string(), "[[7,1,3]]_2");
    EXPECT_TRUE(derived.pure);
    EXPECT_EQ(QuantumCarrier::derived(h, Form::euclidean).k(), 1);
    // Budget too small to enumerate C^perp_s: the symplectic weight is a lower bound.
    auto bounded = quantum_params(steane_symplectic(), 64);
    EXPECT_FALSE(bounded.d_exact);
    EXPECT_EQ(bounded.to_string(), "[[7,1,>=3]]_2");
}

TEST(QLocality, QuantumParamsAgreeWithBruteForceDistance) {
    Rng rng(47);
    for (int t = 0; t < 60; t++) {
        auto c = random_stabilizer(rng);
        auto p = quantum_params(c);
        if (p.k == 0) {
            continue;
        }
        auto words = span_set(c.generator());
        auto dual = dual_set(c.f(), rows_of(c.generator()), 2 * c.n(), symp_dot);
        size_t best = c.n() + 1, best_dual = c.n() + 1;
        for (const auto &w : dual) {
            size_t wt = 0;
            for (size_t j = 0; j < c.n(); j++) {
                wt += w[j] != 0 || w[c.n() + j] != 0;
            }
            if (wt > 0) {
                best_dual = std::min(best_dual, wt);
                if (!words.count(w)) {
                    best = std::min(best, wt);
                }
            }
        }
        EXPECT_EQ(p.d, best);
        EXPECT_EQ(p.pure, best_dual == best);
    }
}

TEST(QLocality, BoundArithmetic) {
    // [[49,35,2]]_7 with r = 6: 35 + 4 + 2(7 - 1) = 51 = n + 2.
    auto s = quantum_singleton(49, 35, 2, 6, 2);
    EXPECT_EQ(s.lhs, 51);
    EXPECT_EQ(s.rhs, 51);
    EXPECT_TRUE(s.attained);
    // [[25,15,2]]_5 with r = 4: 15 + 4 + 2(5 - 1) = 27.
    EXPECT_TRUE(quantum_singleton(25, 15, 2, 4, 2).attained);
    // [[7,1,3]] with r = 6: 1 + 6 + 0 = 7 < 9.
    auto steane = quantum_singleton(7, 1, 3, 6, 2);
    EXPECT_TRUE(steane.holds());
    EXPECT_FALSE(steane.attained);
    EXPECT_EQ(error_of([] { quantum_singleton(7, 2, 2, 2, 2); }), ErrorCode::ParityViolation);

    // (7,1,3), r = 3: ((2)(7) - 2(4)(2 - 1)) / 4 = 3/2, floor 1 = k.
    auto lrc = quantum_r_lrc_bound(7, 1, 3, 3);
    EXPECT_EQ(lrc.rhs, 1);
    EXPECT_EQ(lrc.rhs_exact, "3/2");
    EXPECT_TRUE(lrc.attained);
    auto rect = quantum_r_lrc_bound(49, 35, 2, 6);
    EXPECT_EQ(rect.rhs, 35);
    EXPECT_EQ(rect.rhs_exact, "35");
    EXPECT_TRUE(rect.attained);
    // (25,11,4), r = 4: (3 * 25 - 2 * 5 * (3 - 1)) / 5 = 11.
    auto step = quantum_r_lrc_bound(25, 11, 4, 4);
    EXPECT_EQ(step.rhs, 11);
    EXPECT_TRUE(step.attained);
    EXPECT_FALSE(quantum_r_lrc_bound(25, 12, 4, 4).holds());
}

TEST(QLocality, BridgeAgreesWithDirectRoute) {
    Rng rng(48);
    auto h = hamming_code(3, 2);
    for (size_t r : {2, 3, 5, 6}) {
        for (size_t delta : {2, 3}) {
            if (r + delta - 1 > 7) {
                continue;
            }
            auto bridged = bridge_classical_quantum(h, Form::euclidean, r, delta);
            auto direct = verify_quantum_rdelta_lrc(QuantumCarrier::derived(h, Form::euclidean), r, delta);
            EXPECT_EQ(bridged.verdict, direct.verdict) << "r=" << r << " delta=" << delta;
            EXPECT_EQ(bridged.certificate.sets, direct.certificate.sets);
        }
    }
    EXPECT_EQ(error_of([&] { bridge_classical_quantum(h, Form::euclidean, 2, 5); }), ErrorCode::HypothesisNotMet);
    EXPECT_EQ(error_of([&] { bridge_classical_quantum(h, Form::symplectic, 2, 2); }), ErrorCode::FormMismatch);
    EXPECT_EQ(error_of([&] { bridge_classical_quantum(dual_euclidean(h), Form::euclidean, 2, 2); }),
              ErrorCode::NotSelfOrthogonal);

    for (int t = 0; t < 60; t++) {
        auto f = small_field(rng);
        size_t n = 3 + rng() % 4;
        auto d = random_self_orthogonal(f, n, rng, dot);
        auto c = dual_euclidean(d);
        size_t dd = d.is_zero() ? n : min_distance(d).d;
        size_t r = 1 + rng() % 3, delta = 2 + rng() % 2;
        if (delta > dd) {
            continue;
        }
        auto bridged = bridge_classical_quantum(c, Form::euclidean, r, delta);
        auto direct = verify_quantum_rdelta_lrc(QuantumCarrier::euclidean(d), r, delta);
        EXPECT_EQ(bridged.verdict, direct.verdict);
        EXPECT_EQ(bridged.certificate.sets, direct.certificate.sets);
    }
}

TEST(QLocality, IjBridgeMatchesQuantumCriterion) {
    Rng rng(49);
    for (int t = 0; t < 40; t++) {
        bool herm = t % 3 == 0;
        auto f = herm ? Field::of_order(4) : small_field(rng);
        size_t n = 3 + rng() % (herm ? 2 : 3);
        auto d = random_self_orthogonal(f, n, rng, herm ? FormFn(hermitian_dot) : FormFn(dot));
        Form form = herm ? Form::hermitian : Form::euclidean;
        auto c = herm ? dual_hermitian(d) : dual_euclidean(d);
        auto q = QuantumCarrier::derived(c, form);
        size_t dd = d.is_zero() ? n + 1 : min_distance(d).d;
        for_each_nesting(n, [&](const IndexSet &i, const IndexSet &j) {
            if (i.size() + 1 <= dd) {
                ASSERT_EQ(bridge_ij(c, form, i, j), ij_recoverable(q, i, j));
            } else {
                ASSERT_EQ(error_of([&] { bridge_ij(c, form, i, j); }), ErrorCode::HypothesisNotMet);
            }
        });
    }
}

TEST(QLocality, ClassicalIjCriterion) {
    Rng rng(50);
    for (int t = 0; t < 60; t++) {
        auto f = small_field(rng);
        auto c = random_code(f, 2 + rng() % 4, 4, rng);
        auto words = span_set(c.generator());
        for_each_nesting(c.n(), [&](const IndexSet &i, const IndexSet &j) {
            // Recoverable iff no nonzero codeword restricted to J lives inside I.
            auto local = local_part(words, c.n(), false, i, j);
            ASSERT_EQ(classical_ij_recoverable(c, i, j), local.size() == 1);
        });
    }
}

TEST(QLocality, DualContainingCodesArePure) {
    Rng rng(51);
    for (int t = 0; t < 60; t++) {
        auto f = small_field(rng);
        auto d = random_self_orthogonal(f, 2 + rng() % 5, rng, dot);
        auto c = dual_euclidean(d);
        auto rep = purity_check(c, Form::euclidean);
        EXPECT_TRUE(rep.pure);
        EXPECT_EQ(rep.d_dual.has_value(), !d.is_zero());
    }
    auto h = hamming_code(3, 2);
    auto rep = purity_check(h, Form::euclidean);
    EXPECT_EQ(rep.d_code, 3u);
    EXPECT_EQ(rep.d_dual, 4u);
    EXPECT_EQ(error_of([&] { purity_check(dual_euclidean(h), Form::euclidean); }), ErrorCode::NotSelfOrthogonal);
}

TEST(QLocality, CarrierAndNestingErrors) {
    auto f = Field::of_order(2);
    auto s = steane_symplectic();
    EXPECT_EQ(error_of([&] { QuantumCarrier::symplectic(SymplecticCode(Matrix::from_rows(f, 2, {{1, 0}, {0, 1}}))); }),
              ErrorCode::NotSelfOrthogonal);
    auto h = hamming_code(3, 2);
    EXPECT_EQ(error_of([&] { QuantumCarrier::euclidean(h); }), ErrorCode::NotSelfOrthogonal);
    EXPECT_EQ(error_of([&] { QuantumCarrier::css(dual_euclidean(h), dual_euclidean(h)); }), ErrorCode::NotNested);
    EXPECT_EQ(error_of([&] { QuantumCarrier::derived(h, Form::symplectic); }), ErrorCode::FormMismatch);
    EXPECT_EQ(error_of([&] { ij_recoverable(s, IndexSet(7, {1, 2}), IndexSet(7, {1, 2})); }), ErrorCode::BadNesting);
    EXPECT_EQ(error_of([&] { ij_recoverable(s, IndexSet(7, {4}), IndexSet(7, {1, 2})); }), ErrorCode::BadNesting);
    EXPECT_EQ(error_of([&] { ij_recoverable(s, IndexSet(6, {1}), IndexSet(6, {1, 2})); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(error_of([&] { verify_quantum_rdelta_lrc(QuantumCarrier::symplectic(s), 2, 1); }),
              ErrorCode::BadParameters);
}
