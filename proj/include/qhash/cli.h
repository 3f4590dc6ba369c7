// Copyright 2026 The qhash Authors
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

#ifndef QHASH_CLI_H
#define QHASH_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qhash {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `qhash` tool. args excludes the program name.
/// Documents go to `out` (unless --out or --quiet); diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "1,2,3" (commas and/or whitespace) into integers. Throws std::invalid_argument.
std::vector<int64_t> parse_int_list(const std::string &text);

}  // namespace qhash

#endif
