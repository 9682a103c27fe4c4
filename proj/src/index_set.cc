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

#include "qlrc/index_set.h"

#include <algorithm>
#include <limits>

#include "qlrc/error.h"

namespace qlrc {

IndexSet::IndexSet(size_t n, std::vector<size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (size_t i = 0; i < members_.size(); i++) {
        if (members_[i] < 1 || members_[i] > n_) {
            fail(ErrorCode::IndexOutOfRange,
                 "index " + std::to_string(members_[i]) + " outside [1, " + std::to_string(n_) + "]");
        }
        if (i > 0 && members_[i] == members_[i - 1]) {
            fail(ErrorCode::BadParameters, "duplicate index " + std::to_string(members_[i]));
        }
    }
}

IndexSet IndexSet::full(size_t n) {
    std::vector<size_t> m(n);
    for (size_t i = 0; i < n; i++) {
        m[i] = i + 1;
    }
    return IndexSet(n, std::move(m));
}

IndexSet IndexSet::none(size_t n) {
    return IndexSet(n, {});
}

IndexSet IndexSet::from_mask(size_t n, std::uint64_t mask) {
    if (n > 64) {
        fail(ErrorCode::UnsupportedSize, "bitmask index sets need n <= 64");
    }
    std::vector<size_t> m;
    for (size_t b = 0; b < n; b++) {
        if (mask >> b & 1) {
            m.push_back(b + 1);
        }
    }
    return IndexSet(n, std::move(m));
}

bool IndexSet::contains(size_t label) const {
    return std::binary_search(members_.begin(), members_.end(), label);
}

bool IndexSet::is_subset_of(const IndexSet &other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::vector<size_t> IndexSet::positions() const {
    std::vector<size_t> out(members_.size());
    for (size_t i = 0; i < members_.size(); i++) {
        out[i] = members_[i] - 1;
    }
    return out;
}

std::uint64_t IndexSet::mask() const {
    if (n_ > 64) {
        fail(ErrorCode::UnsupportedSize, "bitmask index sets need n <= 64");
    }
    std::uint64_t m = 0;
    for (auto i : members_) {
        m |= std::uint64_t{1} << (i - 1);
    }
    return m;
}

IndexSet IndexSet::complement() const {
    std::vector<size_t> out;
    size_t j = 0;
    for (size_t i = 1; i <= n_; i++) {
        if (j < members_.size() && members_[j] == i) {
            j++;
        } else {
            out.push_back(i);
        }
    }
    return IndexSet(n_, std::move(out));
}

IndexSet IndexSet::with(size_t label) const {
    if (contains(label)) {
        return *this;
    }
    auto m = members_;
    m.push_back(label);
    return IndexSet(n_, std::move(m));
}

IndexSet IndexSet::without(size_t label) const {
    auto m = members_;
    m.erase(std::remove(m.begin(), m.end(), label), m.end());
    return IndexSet(n_, std::move(m));
}

IndexSet IndexSet::relative_to(const IndexSet &outer) const {
    std::vector<size_t> out;
    out.reserve(members_.size());
    const auto &om = outer.members_;
    for (auto label : members_) {
        auto it = std::lower_bound(om.begin(), om.end(), label);
        if (it == om.end() || *it != label) {
            fail(ErrorCode::BadNesting, "index " + std::to_string(label) + " is not in " + outer.to_string());
        }
        out.push_back(static_cast<size_t>(it - om.begin()) + 1);
    }
    return IndexSet(outer.size(), std::move(out));
}

bool IndexSet::operator<(const IndexSet &other) const {
    if (members_.size() != other.members_.size()) {
        return members_.size() < other.members_.size();
    }
    return members_ < other.members_;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < members_.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(members_[i]);
    }
    return s + "}";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t capped_power(std::uint64_t base, size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (size_t i = 0; i < exp; i++) {
        if (base != 0 && r > cap / base) {
            return cap + 1;
        }
        r *= base;
    }
    return r;
}

}  // namespace qlrc
