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

#ifndef QLRC_ERROR_H
#define QLRC_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlrc {

enum class ErrorCode {
    // gf
    NonPrimeP,
    ReduciblePolynomial,
    UnsupportedSize,
    DivisionByZero,
    FieldMismatch,
    NotAnExtension,
    NotAQuadraticExtension,
    // matrix / code
    DimensionMismatch,
    EmptyIndexSet,
    IndexOutOfRange,
    ZeroCode,
    BudgetExceeded,
    // symp
    FormMismatch,
    TOutOfRange,
    // locality
    IndexInR,
    IndexNotInJ,
    BadParameters,
    // qlocality
    NotSelfOrthogonal,
    BadNesting,
    NotNested,
    HypothesisNotMet,
    ParityViolation,
    SyndromeLengthMismatch,
    // constructions
    BadGrid,
    EmptyDelta,
    DependentMonomials,
    ConstraintViolated,
    RepeatedPoints,
    ZeroMultiplier,
    NotFound,
    // io / cli
    ParseError,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can tell error kinds apart without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace qlrc

#endif
