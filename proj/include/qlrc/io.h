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

#ifndef QLRC_IO_H
#define QLRC_IO_H

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlrc/code.h"
#include "qlrc/locality.h"
#include "qlrc/symp.h"

namespace qlrc {

/// Text code file:
///
///     q=4 p=2 m=2 poly=7
///     layout=symplectic n=7      (symplectic files only)
///     n=14 k=6
///     <k rows of n integer-encoded field elements>
///
/// `#` starts a comment; blank lines are ignored. The generator is stored in
/// canonical form, so write -> read -> write is byte-identical.
struct CodeFile {
    LinearCode code;
    bool symplectic = false;

    SymplecticCode as_symplectic() const { return SymplecticCode(code); }
};

CodeFile parse_code_file(const std::string &text);
CodeFile read_code_file(const std::string &path);
std::string format_code_file(const LinearCode &c);
std::string format_code_file(const SymplecticCode &c);

/// Throws IoError on failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

/// `{"r":..., "delta":..., "sets": {"1":[...], ...}}` with 1-based labels.
nlohmann::json certificate_to_json(const LocalityCertificate &cert);
/// Inverse of certificate_to_json for a code of length n; ParseError on
/// malformed input.
LocalityCertificate certificate_from_json(const nlohmann::json &j, size_t n);

nlohmann::json bound_to_json(const BoundReport &b);

/// `{"schema":1, "form":..., "r":..., "delta":..., "verdict":..., "certificate":...,
/// "bounds":[...], "unresolved":[...], "evaluations":..., "notes":[...]}`.
nlohmann::json verdict_to_json(const std::string &form, size_t r, size_t delta, const LocalityResult &res,
                               const std::vector<BoundReport> &bounds);

}  // namespace qlrc

#endif
