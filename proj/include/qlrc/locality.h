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

#ifndef QLRC_LOCALITY_H
#define QLRC_LOCALITY_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlrc/code.h"

namespace qlrc {

enum class Verdict { Certified, Refuted, Inconclusive };

const char *verdict_name(Verdict v);

/// Coordinate i -> recovery set J_i, with i in J_i and |J_i| <= r + delta - 1.
struct LocalityCertificate {
    size_t n = 0;
    size_t r = 0;
    size_t delta = 0;
    std::map<size_t, IndexSet> sets;
};

struct SearchOptions {
    /// Maximum number of candidate sets J that may be evaluated.
    std::uint64_t budget = kDefaultBudget;
    /// 0 = default_thread_count(). Results never depend on this value.
    size_t threads = 0;
};

struct LocalityResult {
    Verdict verdict = Verdict::Inconclusive;
    /// Recovery sets found so far; complete iff Certified.
    LocalityCertificate certificate;
    /// Coordinates left without a recovery set (empty iff Certified).
    std::vector<size_t> unresolved;
    /// Candidate sets whose predicate was evaluated.
    std::uint64_t evaluations = 0;
    /// Human-readable justifications, e.g. filters that discarded a level.
    std::vector<std::string> notes;
};

/// Outcome of a Singleton-like bound evaluation. `lhs <= rhs` is the bound
/// itself; for bounds with a non-integral right-hand side `rhs` is its floor
/// and `rhs_exact` its exact rational value.
struct BoundReport {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool attained = false;
    std::string rhs_exact;
    std::vector<std::pair<std::string, std::int64_t>> inputs;

    bool holds() const { return lhs <= rhs; }
};

/// For each candidate size s, either a list of candidate masks (bit b =
/// label b + 1) or "every s-subset"; a level may also be skipped outright.
struct LevelPlan {
    bool skip = false;
    std::string note;
    std::optional<std::vector<std::uint64_t>> candidates;
};

using SetPredicate = std::function<bool(const IndexSet &)>;

/// Shared search engine for classical and quantum locality. For every
/// coordinate i it finds the first J containing i, ordered by (|J|, lex),
/// with delta <= |J| <= r + delta - 1 and valid(J). Candidates are evaluated
/// in fixed-size chunks (optionally in parallel); a candidate is skipped only
/// when all of its members were already resolved by earlier candidates, so
/// the outcome matches a sequential per-coordinate scan. Requires n <= 64.
LocalityResult run_locality_search(size_t n, size_t r, size_t delta, const SetPredicate &valid,
                                   const std::function<LevelPlan(size_t)> &plan, const SearchOptions &options);

/// Checks a supplied certificate entry by entry.
LocalityResult check_locality_certificate(size_t n, size_t r, size_t delta, const LocalityCertificate &cert,
                                          const SetPredicate &valid);

/// R is a recovery set for i: d(puncture(C, R + {i})) >= 2. Requires i not in R.
bool is_recovery_set(const LinearCode &c, size_t i, const IndexSet &r);

/// d(puncture(C, J)) >= delta, false when the punctured code is zero. Requires i in J.
bool is_rdelta_recovery_set(const LinearCode &c, size_t i, const IndexSet &j, size_t delta);

/// Decides whether C is an (r,delta)-LRC. With a certificate, only its sets
/// are checked. Without one, recovery sets are searched; candidates are
/// restricted to unions of supports of dual codewords (every valid J has
/// that form) whenever the dual is small enough to enumerate.
LocalityResult verify_rdelta_lrc(const LinearCode &c, size_t r, size_t delta,
                                 const std::optional<LocalityCertificate> &certificate = std::nullopt,
                                 const SearchOptions &options = {});

/// k + d + (ceil(k/r) - 1)(delta - 1) <= n + 1.
BoundReport classical_singleton(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r, std::int64_t delta);

/// Necessary condition r + delta >= w_{delta-1}(C^perp) + 1; false proves C is
/// not an (r,delta)-LRC. Requires 2 <= delta <= dim C^perp + 1.
bool ghw_locality_filter(const LinearCode &c, size_t r, size_t delta, std::uint64_t budget = kDefaultBudget);

/// Unions of the given supports (masks) with at most max_size members,
/// including the supports themselves. Each support must be a union of
/// minimal ones, which holds for the supports of a linear code. Returns
/// nullopt if more than `limit` sets would be produced.
std::optional<std::vector<std::uint64_t>> bounded_union_closure(const std::vector<std::uint64_t> &supports,
                                                                size_t max_size, size_t limit);

std::int64_t ceil_div(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace qlrc

#endif
