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

#ifndef QLRC_TOOLS_CLI_H
#define QLRC_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "qlrc/code.h"
#include "qlrc/constructions.h"

namespace qlrc::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
    kCertified = 0,
    kRefuted = 1,
    kInconclusive = 2,
    kUsage = 3,
};

/// What a construction descriptor produced.
struct Constructed {
    /// One of the two is set.
    std::optional<LinearCode> linear;
    std::optional<SymplecticCode> symplectic;
    /// Human-readable lines: measured and claimed parameters.
    std::vector<std::string> report;
};

/// Builds the code named by `descriptor`:
///   affine:q=<int>,n1=<int>,n2=<int>,delta=(rect:<i>,<j>|step2:<i>,<s>|step2s:<j>,<s>|custom:@file)
///   grs:q2=<int>,n=<int>,k=<int>
///   hamming:m=<int>,q=<int>
///   steane
///   css:@file1,@file2
/// Throws ParseError for malformed descriptors.
Constructed construct(const std::string &descriptor, bool hermitian_dc, std::uint64_t seed, std::uint64_t budget);

/// Runs the command line; returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qlrc::cli

#endif
