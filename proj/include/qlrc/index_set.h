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

#ifndef QLRC_INDEX_SET_H
#define QLRC_INDEX_SET_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qlrc {

/// A set of coordinate labels drawn from {1, ..., n}.
///
/// Labels are 1-based and always name the coordinates that are KEPT by a
/// puncture or shortening. Members are sorted and duplicate-free.
class IndexSet {
   public:
    IndexSet(size_t n, std::vector<size_t> members);
    static IndexSet full(size_t n);
    static IndexSet none(size_t n);
    /// Bit b of `mask` selects label b + 1. Requires n <= 64.
    static IndexSet from_mask(size_t n, std::uint64_t mask);

    size_t n() const { return n_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<size_t> &members() const { return members_; }
    bool contains(size_t label) const;
    bool is_subset_of(const IndexSet &other) const;
    /// 0-based offsets of the members.
    std::vector<size_t> positions() const;
    std::uint64_t mask() const;

    IndexSet complement() const;
    IndexSet with(size_t label) const;
    IndexSet without(size_t label) const;
    /// Re-labels the members of this set (which must lie inside `outer`) by
    /// their rank within `outer`; the result lives in {1, ..., |outer|}.
    IndexSet relative_to(const IndexSet &outer) const;

    bool operator==(const IndexSet &other) const = default;
    bool operator<(const IndexSet &other) const;
    /// `{1,2,5}`.
    std::string to_string() const;

   private:
    size_t n_;
    std::vector<size_t> members_;
};

/// Visits every k-subset of {1..n} in lexicographic order. The callback
/// returns false to stop early; the function returns false if stopped.
template <typename Fn>
bool for_each_subset(size_t n, size_t k, Fn &&fn) {
    if (k > n) {
        return true;
    }
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; i++) {
        idx[i] = i + 1;
    }
    while (true) {
        if (!fn(static_cast<const std::vector<size_t> &>(idx))) {
            return false;
        }
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i) {
            i--;
        }
        if (i == 0) {
            return true;
        }
        idx[i - 1]++;
        for (size_t j = i; j < k; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// base^exp, or cap + 1 if that exceeds cap.
std::uint64_t capped_power(std::uint64_t base, size_t exp, std::uint64_t cap);

}  // namespace qlrc

#endif
