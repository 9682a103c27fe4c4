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

#include "qlrc/constructions.h"

#include <algorithm>
#include <set>

#include "qlrc/error.h"

namespace qlrc {

namespace {

// Multiplier tuples beyond this count are not searched.
constexpr std::uint64_t kGrsSearchCap = std::uint64_t{1} << 20;

void violated(const std::string &constraint) {
    fail(ErrorCode::ConstraintViolated, "constraint violated: " + constraint);
}

std::vector<Elem> axis_points(const Field &f, size_t n_axis) {
    std::vector<Elem> pts;
    for (Elem x = 0; x < f.q(); x++) {
        if (f.pow(x, n_axis) == x) {
            pts.push_back(x);
        }
    }
    return pts;
}

}  // namespace

GridSpec GridSpec::create(FieldPtr field, size_t n1, size_t n2) {
    std::uint32_t q = field->q();
    for (size_t side : {n1, n2}) {
        if (side < 2 || (q - 1) % (side - 1) != 0) {
            fail(ErrorCode::BadGrid, "grid side " + std::to_string(side) + " needs (side - 1) | (q - 1) = " +
                                         std::to_string(q - 1));
        }
    }
    GridSpec g;
    g.n1 = n1;
    g.n2 = n2;
    auto xs = axis_points(*field, n1);
    auto ys = axis_points(*field, n2);
    if (xs.size() != n1 || ys.size() != n2) {
        fail(ErrorCode::BadGrid, "zero set has the wrong size");
    }
    for (auto x : xs) {
        for (auto y : ys) {
            g.points.emplace_back(x, y);
        }
    }
    g.field = std::move(field);
    return g;
}

const char *delta_kind_name(DeltaKind kind) {
    switch (kind) {
        case DeltaKind::rect: return "rect";
        case DeltaKind::step2: return "step2";
        case DeltaKind::step2_sigma: return "step2s";
        case DeltaKind::custom: return "custom";
    }
    return "unknown";
}

bool DeltaSet::is_decreasing() const {
    std::set<std::pair<size_t, size_t>> all(exponents.begin(), exponents.end());
    for (auto [a, b] : exponents) {
        if ((a > 0 && !all.count({a - 1, b})) || (b > 0 && !all.count({a, b - 1}))) {
            return false;
        }
    }
    return true;
}

std::string DeltaSet::tag() const {
    if (kind == DeltaKind::custom) {
        return "custom";
    }
    return std::string(delta_kind_name(kind)) + "(" + std::to_string(params.first) + "," +
           std::to_string(params.second) + ")";
}

DeltaSet delta_family(DeltaKind kind, size_t a, size_t b, size_t n1, size_t n2) {
    DeltaSet d;
    d.n1 = n1;
    d.n2 = n2;
    d.kind = kind;
    d.params = {a, b};
    switch (kind) {
        case DeltaKind::rect:
            if (a >= n1 || b >= n2) {
                violated("rect(i,j) needs i <= n1 - 1 and j <= n2 - 1");
            }
            for (size_t e1 = 0; e1 <= a; e1++) {
                for (size_t e2 = 0; e2 <= b; e2++) {
                    d.exponents.emplace_back(e1, e2);
                }
            }
            break;
        case DeltaKind::step2:
            if (a >= n1 || b >= n1 || n2 < 2) {
                violated("step2(i,s) needs i, s <= n1 - 1");
            }
            for (size_t e1 = 0; e1 < n1; e1++) {
                for (size_t e2 = 0; e2 < n2; e2++) {
                    if ((e1 <= a && e2 + 2 <= n2) || (e2 == n2 - 1 && e1 <= b)) {
                        d.exponents.emplace_back(e1, e2);
                    }
                }
            }
            break;
        case DeltaKind::step2_sigma:
            if (a >= n2 || b >= n2 || n1 < 2) {
                violated("step2s(j,s) needs j, s <= n2 - 1");
            }
            for (size_t e1 = 0; e1 < n1; e1++) {
                for (size_t e2 = 0; e2 < n2; e2++) {
                    if ((e2 <= a && e1 + 2 <= n1) || (e1 == n1 - 1 && e2 <= b)) {
                        d.exponents.emplace_back(e1, e2);
                    }
                }
            }
            break;
        case DeltaKind::custom:
            fail(ErrorCode::BadParameters, "use custom_delta for custom exponent sets");
    }
    return d;
}

DeltaSet delta_family_with_claims(DeltaKind kind, size_t a, size_t b, const GridSpec &grid) {
    DeltaSet d = delta_family(kind, a, b, grid.n1, grid.n2);
    auto n1 = static_cast<std::int64_t>(grid.n1);
    auto n2 = static_cast<std::int64_t>(grid.n2);
    auto i = static_cast<std::int64_t>(a);
    auto s = static_cast<std::int64_t>(b);
    std::uint32_t p = grid.field->p();
    if (grid.n1 % p != 0 || grid.n2 % p != 0) {
        violated("p = " + std::to_string(p) + " must divide n1 and n2");
    }
    DeltaClaims c;
    c.n = grid.n();
    switch (kind) {
        case DeltaKind::rect: {
            auto j = s;
            if (2 * i > n1 && j == n2 - 1) {
                c.r = a + 1;
                c.delta = grid.n1 - a;
            } else if (i == n1 - 1 && 2 * j > n2) {
                c.r = b + 1;
                c.delta = grid.n2 - b;
            } else {
                violated("rect(i,j) needs (i > n1/2 and j = n2 - 1) or (i = n1 - 1 and j > n2/2)");
            }
            c.k = 2 * (i + 1) * (j + 1) - n1 * n2;
            c.d = static_cast<size_t>((n1 - i) * (n2 - j));
            break;
        }
        case DeltaKind::step2:
        case DeltaKind::step2_sigma: {
            // step2_sigma is step2 on the transposed grid.
            bool sigma = kind == DeltaKind::step2_sigma;
            std::int64_t m1 = sigma ? n2 : n1;
            std::int64_t m2 = sigma ? n1 : n2;
            if (!(2 * i > m1 - 1 && i <= m1 - 2)) {
                violated(sigma ? "(n2 - 1)/2 < j <= n2 - 2" : "(n1 - 1)/2 < i <= n1 - 2");
            }
            if (!(i > s && s >= std::max(m1 - i - 1, 2 * i - m1))) {
                violated(sigma ? "j > s >= max{n2 - j - 1, 2j - n2}" : "i > s >= max{n1 - i - 1, 2i - n1}");
            }
            c.r = a + 1;
            c.delta = static_cast<size_t>(m1 - i);
            c.k = 2 * ((i + 1) * (m2 - 1) + s + 1) - n1 * n2;
            c.d = static_cast<size_t>(m1 - s);
            break;
        }
        case DeltaKind::custom: break;
    }
    d.claims = c;
    return d;
}

DeltaSet custom_delta(size_t n1, size_t n2, std::vector<std::pair<size_t, size_t>> exponents,
                      bool require_decreasing) {
    DeltaSet d;
    d.n1 = n1;
    d.n2 = n2;
    d.kind = DeltaKind::custom;
    for (auto [a, b] : exponents) {
        if (a >= n1 || b >= n2) {
            violated("exponent (" + std::to_string(a) + "," + std::to_string(b) + ") outside the box");
        }
    }
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    d.exponents = std::move(exponents);
    if (require_decreasing && !d.is_decreasing()) {
        violated("custom exponent set must be closed under coordinatewise <=");
    }
    return d;
}

Matrix evaluation_matrix(const GridSpec &grid, const DeltaSet &delta) {
    if (delta.exponents.empty()) {
        fail(ErrorCode::EmptyDelta, "exponent set is empty");
    }
    if (delta.n1 != grid.n1 || delta.n2 != grid.n2) {
        fail(ErrorCode::DimensionMismatch, "exponent box does not match the grid");
    }
    const Field &f = *grid.field;
    Matrix m(grid.field, delta.exponents.size(), grid.n());
    for (size_t t = 0; t < delta.exponents.size(); t++) {
        auto [e1, e2] = delta.exponents[t];
        for (size_t j = 0; j < grid.n(); j++) {
            auto [x, y] = grid.points[j];
            m.set(t, j, f.mul(f.pow(x, e1), f.pow(y, e2)));
        }
    }
    return m;
}

LinearCode affine_variety_code(const GridSpec &grid, const DeltaSet &delta) {
    return LinearCode(evaluation_matrix(grid, delta));
}

LinearCode grs_code(const GrsSpec &spec) {
    const Field &f = *spec.field;
    size_t n = spec.n();
    if (spec.multipliers.size() != n) {
        fail(ErrorCode::DimensionMismatch, "need one multiplier per coordinate");
    }
    if (spec.k == 0 || spec.k > n) {
        fail(ErrorCode::BadParameters, "GRS needs 1 <= k <= n; got k = " + std::to_string(spec.k) +
                                           ", n = " + std::to_string(n));
    }
    std::set<Elem> seen;
    for (auto x : spec.points) {
        if (!f.contains(x)) {
            fail(ErrorCode::BadParameters, "evaluation point outside the field");
        }
        if (!seen.insert(x).second) {
            fail(ErrorCode::RepeatedPoints, "evaluation point " + std::to_string(x) + " repeated");
        }
    }
    for (auto v : spec.multipliers) {
        if (v == 0 || !f.contains(v)) {
            fail(ErrorCode::ZeroMultiplier, "multipliers must be nonzero field elements");
        }
    }
    Matrix g(spec.field, spec.k, n);
    for (size_t t = 0; t < spec.k; t++) {
        for (size_t j = 0; j < spec.points.size(); j++) {
            g.set(t, j, f.mul(spec.multipliers[j], f.pow(spec.points[j], t)));
        }
        if (spec.infinity) {
            g.set(t, n - 1, t + 1 == spec.k ? spec.multipliers[n - 1] : 0);
        }
    }
    return LinearCode(g);
}

GrsSearchResult search_hermitian_dual_containing_grs(std::uint32_t q2, size_t n, size_t k, std::uint64_t seed) {
    FieldPtr field = Field::of_order(q2);
    if (!field->is_quadratic_extension()) {
        fail(ErrorCode::NotAQuadraticExtension, "GF(" + std::to_string(q2) + ") is not a quadratic extension");
    }
    if (n == 0 || n > static_cast<size_t>(q2) + 1) {
        fail(ErrorCode::BadParameters, "GRS length must be at most q2 + 1");
    }
    GrsSpec spec;
    spec.field = field;
    spec.k = k;
    spec.infinity = n == static_cast<size_t>(q2) + 1;
    for (Elem x = 0; spec.points.size() + (spec.infinity ? 1 : 0) < n; x++) {
        spec.points.push_back(x);
    }
    std::uint64_t base = q2 - 1;
    std::uint64_t total = capped_power(base, n, kGrsSearchCap);
    if (total > kGrsSearchCap) {
        fail(ErrorCode::BudgetExceeded, "multiplier search space exceeds " + std::to_string(kGrsSearchCap));
    }
    spec.multipliers.assign(n, 1);
    for (std::uint64_t step = 0; step < total; step++) {
        std::uint64_t idx = (seed + step) % total;
        // Digit 0 is the most significant, so tuples run in lexicographic order.
        for (size_t j = n; j-- > 0;) {
            spec.multipliers[j] = static_cast<Elem>(idx % base) + 1;
            idx /= base;
        }
        LinearCode c = grs_code(spec);
        if (is_self_orthogonal(dual_hermitian(c), Form::hermitian)) {
            return {spec, c, step + 1};
        }
    }
    fail(ErrorCode::NotFound, "no Hermitian dual-containing GRS [" + std::to_string(n) + "," + std::to_string(k) +
                                  "] over GF(" + std::to_string(q2) + ")");
}

LinearCode hamming_code(size_t m, std::uint32_t q) {
    if (m < 2) {
        fail(ErrorCode::BadParameters, "Hamming codes need redundancy m >= 2");
    }
    FieldPtr field = Field::of_order(q);
    std::uint64_t total = capped_power(q, m, kMaxFieldSize);
    if (total > kMaxFieldSize) {
        fail(ErrorCode::UnsupportedSize, "Hamming code too long");
    }
    // Column v has digits v_0..v_{m-1} (v_0 least significant); keep those
    // whose leading (highest nonzero) digit is 1.
    std::vector<std::vector<Elem>> cols;
    for (std::uint64_t v = 1; v < total; v++) {
        std::vector<Elem> digits(m);
        std::uint64_t x = v;
        for (size_t i = 0; i < m; i++) {
            digits[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        size_t top = m;
        while (digits[top - 1] == 0) {
            top--;
        }
        if (digits[top - 1] == 1) {
            cols.push_back(digits);
        }
    }
    Matrix h(field, m, cols.size());
    for (size_t j = 0; j < cols.size(); j++) {
        for (size_t i = 0; i < m; i++) {
            h.set(i, j, cols[j][i]);
        }
    }
    return LinearCode(kernel(h));
}

SymplecticCode steane_symplectic() {
    LinearCode ch = dual_euclidean(hamming_code(3, 2));
    SymplecticCode c = css_product(ch, ch);
    if (!is_self_orthogonal(c)) {
        fail(ErrorCode::NotSelfOrthogonal, "Steane construction is not self-orthogonal");
    }
    return c;
}

CssPair css_pair(const LinearCode &c1, const LinearCode &c2, std::uint64_t budget) {
    QuantumCarrier carrier = QuantumCarrier::css(c1, c2);
    return {*carrier.symplectic_stabilizer(), css_params(c1, c2, budget)};
}

}  // namespace qlrc
