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

#ifndef QLRC_ORACLE_H
#define QLRC_ORACLE_H

// Brute-force ground truth for the fast criteria. Nothing here calls the
// matrix module's elimination; the oracle keeps its own naive routines so a
// bug in one path cannot hide in the other.

#include <cstdint>
#include <span>
#include <vector>

#include "qlrc/code.h"
#include "qlrc/symp.h"

namespace qlrc::oracle {

/// Hard cap on the elementary work of a single oracle call.
inline constexpr std::uint64_t kOracleBudget = std::uint64_t{1} << 24;

enum class DecodeStatus { Recovered, UniqueModC, Ambiguous, Inconsistent };

const char *decode_status_name(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Inconsistent;
    /// The recovered word (classical) or one error in the recovered coset
    /// (symplectic); empty unless the status is Recovered / UniqueModC.
    Vec word;
};

/// Fills the positions I of `received` (their values are ignored) so that
/// the result is a codeword, by solving H_I x = -H_{not I} y. Recovered iff
/// the solution is unique.
DecodeResult erasure_decode(const LinearCode &c, std::span<const Elem> received, const IndexSet &erased);

/// Solves g_i .s e = s_i for e supported (pairwise) on I, one equation per
/// generator row of C. UniqueModC iff all solutions differ by elements of C.
/// Throws SyndromeLengthMismatch, NotSelfOrthogonal, BadNesting (I empty).
DecodeResult symplectic_erasure_decode(const SymplecticCode &c, std::span<const Elem> syndrome, const IndexSet &i);

/// Syndrome (g_i .s e)_i of an error e of length 2n.
Vec symplectic_syndrome(const SymplecticCode &c, std::span<const Elem> error);

/// Builds the local stabilizer sigma_J(C) by enumerating every codeword of C,
/// then plants every error supported on I and decodes it with that local
/// stabilizer alone. True iff every planted error is recovered modulo the
/// local stabilizer. Throws BudgetExceeded beyond kOracleBudget.
bool exhaustive_ij_check(const SymplecticCode &c, const IndexSet &i, const IndexSet &j);

/// Minimum nonzero Hamming weight by enumerating all q^k codewords.
size_t brute_force_distance(const LinearCode &c);
/// Minimum nonzero symplectic weight by enumeration.
size_t brute_force_symplectic_weight(const SymplecticCode &c);
/// Generalized Hamming weights d_1..d_k: for each J, dim sigma_J(C) is read
/// off from the number of codewords supported inside J.
std::vector<size_t> brute_force_ghw(const LinearCode &c);
/// Generalized symplectic weights gsw_1..gsw_dim, same method with paired supports.
std::vector<size_t> brute_force_gsw(const SymplecticCode &c);

/// Rank by naive Gaussian elimination (independent of the matrix module).
size_t naive_rank(const Field &f, std::vector<Vec> rows);

}  // namespace qlrc::oracle

#endif
