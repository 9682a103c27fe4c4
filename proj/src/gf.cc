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

#include "qlrc/gf.h"

#include <map>
#include <mutex>
#include <sstream>

#include "qlrc/error.h"

namespace qlrc {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly &f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over GF(p); g must be nonzero after trimming.
Poly poly_mod(Poly f, Poly g, std::uint32_t p) {
    trim(f);
    trim(g);
    std::uint32_t lead_inv = inv_mod_p(g.back(), p);
    while (f.size() >= g.size()) {
        std::uint64_t factor = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); i++) {
            std::uint64_t sub = factor * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p) {
    Poly f;
    while (code) {
        f.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return f;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; i++) {
        r *= base;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; d++) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) {
                v /= d;
            }
        }
    }
    if (v > 1) {
        out.push_back(v);
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= v; d++) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    size_t degree = f.size() - 1;
    if (degree == 1) {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..degree/2.
    for (size_t d = 1; d <= degree / 2; d++) {
        std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint64_t low = 0; low < count; low++) {
            Poly g = poly_from_code(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> irreducible) {
    if (!is_prime(p)) {
        fail(ErrorCode::NonPrimeP, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        fail(ErrorCode::UnsupportedSize, "extension degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; i++) {
        q *= p;
        if (q > kMaxFieldSize) {
            fail(ErrorCode::UnsupportedSize, "p^m exceeds 2^20");
        }
    }
    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<std::uint32_t>(q);
    if (irreducible.has_value()) {
        Poly f = *irreducible;
        for (auto c : f) {
            if (c >= p) {
                fail(ErrorCode::ReduciblePolynomial, "coefficient out of range for GF(p)");
            }
        }
        trim(f);
        if (f.size() != m + 1 || f.back() != 1) {
            fail(ErrorCode::ReduciblePolynomial, "polynomial must be monic of degree m");
        }
        if (!is_irreducible(p, f)) {
            fail(ErrorCode::ReduciblePolynomial, "polynomial is reducible over GF(p)");
        }
        field->irreducible_ = f;
    } else {
        bool found = false;
        for (std::uint64_t low = 0; low < q && !found; low++) {
            Poly f = poly_from_code(low, p);
            f.resize(m + 1, 0);
            f[m] = 1;
            if (is_irreducible(p, f)) {
                field->irreducible_ = f;
                found = true;
            }
        }
        if (!found) {
            fail(ErrorCode::UnsupportedSize, "no irreducible polynomial found");
        }
    }
    field->build_tables();
    return field;
}

FieldPtr Field::of_order(std::uint64_t q) {
    auto factors = prime_factors(q);
    if (q < 2 || factors.size() != 1) {
        fail(ErrorCode::NonPrimeP, "field order " + std::to_string(q) + " is not a prime power");
    }
    std::uint32_t p = static_cast<std::uint32_t>(factors[0]);
    std::uint32_t m = 0;
    for (std::uint64_t v = q; v > 1; v /= p) {
        m++;
    }
    static std::mutex mu;
    static std::map<std::uint64_t, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) {
        return it->second;
    }
    auto f = create(p, m);
    cache.emplace(q, f);
    return f;
}

std::uint64_t Field::poly_code() const {
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    for (auto c : irreducible_) {
        code += c * scale;
        scale *= p_;
    }
    return code;
}

std::string Field::header() const {
    std::ostringstream out;
    out << "q=" << q_ << " p=" << p_ << " m=" << m_ << " poly=" << poly_code();
    return out.str();
}

bool Field::same_as(const Field &other) const {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && irreducible_ == other.irreducible_);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(m_, 0);
    for (std::uint32_t i = 0; i < m_; i++) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != m_) {
        fail(ErrorCode::DimensionMismatch, "coefficient vector must have length m");
    }
    Elem v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) {
            fail(ErrorCode::IndexOutOfRange, "coefficient outside [0, p)");
        }
        v = v * p_ + c[i];
    }
    return v;
}

Elem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) {
        r += p_;
    }
    return static_cast<Elem>(r);
}

Elem Field::mul_reference(Elem a, Elem b) const {
    auto ca = coeffs(a);
    auto cb = coeffs(b);
    Poly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; i++) {
        for (std::uint32_t j = 0; j < m_; j++) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
        }
    }
    Poly r = poly_mod(prod, irreducible_, p_);
    r.resize(m_, 0);
    return from_coeffs(r);
}

void Field::build_tables() {
    neg_.resize(q_);
    for (Elem a = 0; a < q_; a++) {
        auto c = coeffs(a);
        for (auto &x : c) {
            x = (p_ - x) % p_;
        }
        neg_[a] = from_coeffs(c);
    }

    // Primitive element: smallest encoding whose order is exactly q-1.
    std::uint64_t order = q_ - 1;
    auto factors = prime_factors(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        Elem base = a;
        while (e) {
            if (e & 1) {
                r = mul_reference(r, base);
            }
            base = mul_reference(base, base);
            e >>= 1;
        }
        return r;
    };
    primitive_ = 1;
    if (q_ > 2) {
        for (Elem g = 2; g < q_; g++) {
            bool ok = true;
            for (auto f : factors) {
                if (slow_pow(g, order / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = g;
                break;
            }
        }
    }

    exp_.assign(2 * order, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < order; i++) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_reference(x, primitive_);
    }

    if (q_ <= 256) {
        add_table_.resize(static_cast<size_t>(q_) * q_);
        mul_table_.resize(static_cast<size_t>(q_) * q_);
        for (Elem a = 0; a < q_; a++) {
            auto ca = coeffs(a);
            for (Elem b = 0; b < q_; b++) {
                auto cb = coeffs(b);
                std::vector<std::uint32_t> s(m_);
                for (std::uint32_t i = 0; i < m_; i++) {
                    s[i] = (ca[i] + cb[i]) % p_;
                }
                add_table_[a * q_ + b] = from_coeffs(s);
                mul_table_[a * q_ + b] = (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
            }
        }
    }
}

Elem Field::add(Elem a, Elem b) const {
    if (!add_table_.empty()) {
        return add_table_[a * q_ + b];
    }
    if (p_ == 2) {
        return a ^ b;
    }
    Elem result = 0;
    Elem scale = 1;
    for (std::uint32_t i = 0; i < m_; i++) {
        result += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return result;
}

Elem Field::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) {
        return mul_table_[a * q_ + b];
    }
    if (a == 0 || b == 0) {
        return 0;
    }
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) {
        fail(ErrorCode::DivisionByZero, "inverse of zero");
    }
    std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    std::uint64_t order = q_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Elem Field::frobenius(Elem a, std::uint32_t t) const {
    t %= m_;
    Elem r = a;
    for (std::uint32_t i = 0; i < t; i++) {
        r = pow(r, p_);
    }
    return r;
}

Elem Field::conjugate(Elem a) const {
    if (!is_quadratic_extension()) {
        fail(ErrorCode::NotAQuadraticExtension, "field " + header() + " has odd extension degree");
    }
    return frobenius(a, m_ / 2);
}

std::uint32_t Field::subfield_order() const {
    if (!is_quadratic_extension()) {
        fail(ErrorCode::NotAQuadraticExtension, "field " + header() + " has odd extension degree");
    }
    return static_cast<std::uint32_t>(ipow(p_, m_ / 2));
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_->contains(value_)) {
        fail(ErrorCode::IndexOutOfRange, "element encoding outside [0, q)");
    }
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs) {
    Elem v = field->from_coeffs(coeffs);
    return FieldElement(std::move(field), v);
}

void FieldElement::check_same(const FieldElement &o) const {
    if (!field_->same_as(*o.field_)) {
        fail(ErrorCode::FieldMismatch, field_->header() + " vs " + o.field_->header());
    }
}

FieldElement FieldElement::operator+(const FieldElement &o) const {
    check_same(o);
    return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement &o) const {
    check_same(o);
    return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement &o) const {
    check_same(o);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement &o) const {
    check_same(o);
    return {field_, field_->div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const {
    return {field_, field_->neg(value_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return {field_, field_->pow(value_, e)};
}

FieldElement FieldElement::frobenius(std::uint32_t t) const {
    return {field_, field_->frobenius(value_, t)};
}

bool FieldElement::operator==(const FieldElement &o) const {
    return field_->same_as(*o.field_) && value_ == o.value_;
}

FieldElement arith(const FieldElement &a, const FieldElement &b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
        case FieldOp::pow: return a.pow(b.value());
    }
    fail(ErrorCode::BadParameters, "unknown field operation");
}

Elem subfield_embed(const Field &source, Elem a, const Field &target) {
    if (source.p() != target.p() || target.m() != 2 * source.m()) {
        fail(ErrorCode::NotAnExtension, target.header() + " is not a quadratic extension of " + source.header());
    }
    if (!source.contains(a)) {
        fail(ErrorCode::IndexOutOfRange, "element outside source field");
    }
    auto ca = source.coeffs(a);
    if (source.m() == 1) {
        return ca[0];
    }
    // Smallest root of the source's defining polynomial inside the target.
    const auto &f = source.irreducible();
    Elem root = 0;
    bool found = false;
    for (Elem x = 0; x < target.q() && !found; x++) {
        Elem val = 0;
        for (size_t i = f.size(); i-- > 0;) {
            val = target.add(target.mul(val, x), target.from_int(f[i]));
        }
        if (val == 0) {
            root = x;
            found = true;
        }
    }
    if (!found) {
        fail(ErrorCode::NotAnExtension, "source polynomial has no root in target");
    }
    Elem result = 0;
    Elem power = 1;
    for (size_t i = 0; i < ca.size(); i++) {
        result = target.add(result, target.mul(target.from_int(ca[i]), power));
        power = target.mul(power, root);
    }
    return result;
}

FieldElement subfield_embed(const FieldElement &a, const FieldPtr &target) {
    return {target, subfield_embed(*a.field(), a.value(), *target)};
}

}  // namespace qlrc
