// Copyright 2026 The qbatch Authors
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

#ifndef QBATCH_TOOLS_CLI_H
#define QBATCH_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qbatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;        // bad input, validation errors
inline constexpr int kExitOracleMismatch = 2;
inline constexpr int kExitUsage = 64;         // unknown flags, bad syntax

inline constexpr double kOracleTolerance = 1e-8;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest representation that reads back to the same double. Integral
/// values keep a trailing ".0".
std::string format_double(double value);

/// Outcome probabilities are rounded to 15 significant digits first, so
/// |1/sqrt(2)|^2 prints as 0.5.
std::string format_probability(double value);

/// "1,3,5..7" -> {1, 3, 5, 6, 7}. Ranges are inclusive.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace qbatch::cli

#endif  // QBATCH_TOOLS_CLI_H
