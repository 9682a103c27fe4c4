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

#include "qlrc/error.h"

namespace qlrc {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrimeP: return "NonPrimeP";
        case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotAnExtension: return "NotAnExtension";
        case ErrorCode::NotAQuadraticExtension: return "NotAQuadraticExtension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::FormMismatch: return "FormMismatch";
        case ErrorCode::TOutOfRange: return "TOutOfRange";
        case ErrorCode::IndexInR: return "IndexInR";
        case ErrorCode::IndexNotInJ: return "IndexNotInJ";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case ErrorCode::BadNesting: return "BadNesting";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::SyndromeLengthMismatch: return "SyndromeLengthMismatch";
        case ErrorCode::BadGrid: return "BadGrid";
        case ErrorCode::EmptyDelta: return "EmptyDelta";
        case ErrorCode::DependentMonomials: return "DependentMonomials";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::RepeatedPoints: return "RepeatedPoints";
        case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace qlrc
