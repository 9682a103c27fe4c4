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

#include "qlrc/locality.h"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "qlrc/error.h"
#include "qlrc/parallel.h"

namespace qlrc {

namespace {

constexpr size_t kChunk = 256;
// Dual codes up to this many words are enumerated to prune candidates.
constexpr std::uint64_t kDualEnumerationCap = std::uint64_t{1} << 22;
constexpr size_t kClosureLimit = size_t{1} << 20;

// Lexicographic order of the sorted member lists of two equal-size masks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (d == 0) {
        return false;
    }
    return (a & (d & (~d + 1))) != 0;
}

void check_lrc_params(size_t r, size_t delta) {
    if (r < 1) {
        fail(ErrorCode::BadParameters, "locality r must be at least 1");
    }
    if (delta < 2) {
        fail(ErrorCode::BadParameters, "delta must be at least 2 (delta = 1 is vacuous)");
    }
}

}  // namespace

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::Refuted: return "Refuted";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q--;
    }
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

LocalityResult run_locality_search(size_t n, size_t r, size_t delta, const SetPredicate &valid,
                                   const std::function<LevelPlan(size_t)> &plan, const SearchOptions &options) {
    if (n > 64) {
        fail(ErrorCode::UnsupportedSize, "locality search supports n <= 64");
    }
    LocalityResult res;
    res.certificate = {n, r, delta, {}};
    std::uint64_t unresolved = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bool out_of_budget = false;
    std::vector<std::uint64_t> chunk;

    auto process = [&]() {
        std::vector<std::uint64_t> live;
        for (auto m : chunk) {
            if (m & unresolved) {
                live.push_back(m);
            }
        }
        chunk.clear();
        std::uint64_t room = options.budget - res.evaluations;
        if (live.size() > room) {
            live.resize(room);
            out_of_budget = true;
        }
        std::vector<char> ok(live.size(), 0);
        parallel_for(live.size(), options.threads,
                     [&](size_t i) { ok[i] = valid(IndexSet::from_mask(n, live[i])) ? 1 : 0; });
        res.evaluations += live.size();
        for (size_t i = 0; i < live.size(); i++) {
            if (!ok[i]) {
                continue;
            }
            std::uint64_t fresh = live[i] & unresolved;
            for (size_t b = 0; b < n; b++) {
                if (fresh >> b & 1) {
                    res.certificate.sets.emplace(b + 1, IndexSet::from_mask(n, live[i]));
                }
            }
            unresolved &= ~live[i];
        }
        return unresolved != 0 && !out_of_budget;
    };

    size_t max_size = std::min(n, r + delta - 1);
    for (size_t s = delta; s <= max_size && unresolved != 0 && !out_of_budget; s++) {
        LevelPlan p = plan(s);
        if (!p.note.empty()) {
            res.notes.push_back(p.note);
        }
        if (p.skip) {
            continue;
        }
        bool go = true;
        if (p.candidates) {
            std::vector<std::uint64_t> level;
            for (auto m : *p.candidates) {
                if (static_cast<size_t>(std::popcount(m)) == s) {
                    level.push_back(m);
                }
            }
            std::sort(level.begin(), level.end(), mask_lex_less);
            for (auto m : level) {
                chunk.push_back(m);
                if (chunk.size() == kChunk && !(go = process())) {
                    break;
                }
            }
        } else {
            for_each_subset(n, s, [&](const std::vector<size_t> &idx) {
                std::uint64_t m = 0;
                for (auto i : idx) {
                    m |= std::uint64_t{1} << (i - 1);
                }
                chunk.push_back(m);
                if (chunk.size() == kChunk) {
                    go = process();
                }
                return go;
            });
        }
        if (go && !chunk.empty()) {
            process();
        }
        chunk.clear();
    }

    for (size_t b = 0; b < n; b++) {
        if (unresolved >> b & 1) {
            res.unresolved.push_back(b + 1);
        }
    }
    if (res.unresolved.empty()) {
        res.verdict = Verdict::Certified;
    } else if (out_of_budget) {
        res.verdict = Verdict::Inconclusive;
        res.notes.push_back("search budget of " + std::to_string(options.budget) + " candidate sets exhausted");
    } else {
        res.verdict = Verdict::Refuted;
        res.notes.push_back("exhaustive search found no recovery set for " + std::to_string(res.unresolved.size()) +
                            " coordinate(s)");
    }
    return res;
}

LocalityResult check_locality_certificate(size_t n, size_t r, size_t delta, const LocalityCertificate &cert,
                                          const SetPredicate &valid) {
    LocalityResult res;
    res.certificate = {n, r, delta, {}};
    size_t max_size = r + delta - 1;
    for (size_t i = 1; i <= n; i++) {
        auto it = cert.sets.find(i);
        bool ok = it != cert.sets.end();
        if (ok) {
            const IndexSet &j = it->second;
            ok = j.n() == n && j.contains(i) && j.size() <= max_size;
            if (ok) {
                res.evaluations++;
                ok = valid(j);
            }
        }
        if (ok) {
            res.certificate.sets.emplace(i, it->second);
        } else {
            res.unresolved.push_back(i);
        }
    }
    if (res.unresolved.empty()) {
        res.verdict = Verdict::Certified;
    } else {
        res.verdict = Verdict::Refuted;
        res.notes.push_back("certificate rejected at " + std::to_string(res.unresolved.size()) + " coordinate(s)");
    }
    return res;
}

bool is_recovery_set(const LinearCode &c, size_t i, const IndexSet &r) {
    if (r.contains(i)) {
        fail(ErrorCode::IndexInR, "coordinate " + std::to_string(i) + " lies in " + r.to_string());
    }
    IndexSet kept = r.with(i);
    return distance_at_least(puncture(c, kept), 2);
}

bool is_rdelta_recovery_set(const LinearCode &c, size_t i, const IndexSet &j, size_t delta) {
    if (!j.contains(i)) {
        fail(ErrorCode::IndexNotInJ, "coordinate " + std::to_string(i) + " is not in " + j.to_string());
    }
    return distance_at_least(puncture(c, j), delta);
}

std::optional<std::vector<std::uint64_t>> bounded_union_closure(const std::vector<std::uint64_t> &supports,
                                                                size_t max_size, size_t limit) {
    std::vector<std::uint64_t> sorted;
    for (auto s : supports) {
        if (s != 0 && static_cast<size_t>(std::popcount(s)) <= max_size) {
            sorted.push_back(s);
        }
    }
    std::sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // Every support is a union of minimal ones, so unions of minimal
    // supports generate the same closure.
    std::vector<std::uint64_t> minimal;
    for (auto s : sorted) {
        bool has_sub = false;
        for (auto m : minimal) {
            if ((m & s) == m) {
                has_sub = true;
                break;
            }
        }
        if (!has_sub) {
            minimal.push_back(s);
        }
    }
    std::unordered_set<std::uint64_t> all(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> frontier(sorted.begin(), sorted.end());
    if (all.size() > limit) {
        return std::nullopt;
    }
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto x : frontier) {
            for (auto m : minimal) {
                std::uint64_t u = x | m;
                if (u == x || static_cast<size_t>(std::popcount(u)) > max_size) {
                    continue;
                }
                if (all.insert(u).second) {
                    next.push_back(u);
                    if (all.size() > limit) {
                        return std::nullopt;
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<std::uint64_t>(all.begin(), all.end());
}

LocalityResult verify_rdelta_lrc(const LinearCode &c, size_t r, size_t delta,
                                 const std::optional<LocalityCertificate> &certificate,
                                 const SearchOptions &options) {
    check_lrc_params(r, delta);
    size_t n = c.n();
    SetPredicate valid = [&](const IndexSet &j) { return distance_at_least(puncture(c, j), delta); };
    if (certificate) {
        return check_locality_certificate(n, r, delta, *certificate, valid);
    }
    size_t max_size = std::min(n, r + delta - 1);
    std::optional<std::vector<std::uint64_t>> family;
    std::string note;
    LinearCode dual = dual_euclidean(c);
    if (n <= 64 && capped_power(c.f().q(), dual.k(), kDualEnumerationCap) <= kDualEnumerationCap) {
        std::unordered_set<std::uint64_t> supports;
        for_each_codeword(dual, kDualEnumerationCap, [&](const Vec &w) {
            std::uint64_t m = 0;
            size_t wt = 0;
            for (size_t j = 0; j < n; j++) {
                if (w[j] != 0) {
                    m |= std::uint64_t{1} << j;
                    wt++;
                }
            }
            if (wt > 0 && wt <= max_size) {
                supports.insert(m);
            }
            return true;
        });
        family = bounded_union_closure(std::vector<std::uint64_t>(supports.begin(), supports.end()), max_size,
                                       kClosureLimit);
        if (family) {
            note = "candidates restricted to " + std::to_string(family->size()) +
                   " unions of dual-codeword supports";
        }
    }
    bool first = true;
    auto plan = [&](size_t) {
        LevelPlan p;
        p.candidates = family;
        if (first) {
            p.note = note;
            first = false;
        }
        return p;
    };
    return run_locality_search(n, r, delta, valid, plan, options);
}

BoundReport classical_singleton(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r, std::int64_t delta) {
    if (r < 1) {
        fail(ErrorCode::BadParameters, "locality r must be at least 1");
    }
    BoundReport b;
    b.name = "classical-singleton";
    b.lhs = k + d + (ceil_div(k, r) - 1) * (delta - 1);
    b.rhs = n + 1;
    b.rhs_exact = std::to_string(b.rhs);
    b.attained = b.lhs == b.rhs;
    b.inputs = {{"n", n}, {"k", k}, {"d", d}, {"r", r}, {"delta", delta}};
    return b;
}

bool ghw_locality_filter(const LinearCode &c, size_t r, size_t delta, std::uint64_t budget) {
    LinearCode dual = dual_euclidean(c);
    if (delta < 2 || delta > dual.k() + 1) {
        fail(ErrorCode::BadParameters, "filter needs 2 <= delta <= dim C^perp + 1");
    }
    auto w = generalized_hamming_weights(dual, delta - 1, budget);
    return r + delta >= w.back() + 1;
}

}  // namespace qlrc
