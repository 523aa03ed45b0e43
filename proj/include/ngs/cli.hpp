// Copyright 2026 The ngs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ngs/analysis.hpp"

namespace ngs::cli {

enum ExitCode : int {
  kOk = 0,
  kPreconditionFailed = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

struct RunConfig {
  std::string command;  // curve, povm-curve, pcrit, pc-sweep, mmax, fit, surface,
                        // compare-rules, verify
  std::size_t size = 0;
  std::vector<double> p;
  double epsilon = 0.1;
  std::optional<std::size_t> outcomes;  // defaults to N + 3
  unsigned m_upper = 60;
  std::string out;  // empty: stdout
  std::uint64_t seed = 42;
  IterationRule rule = IterationRule::FloorQuarterPiSqrtN;
  int n_min = 2;
  int n_max = 21;
  std::size_t points = 50;
  std::size_t max_size = 32;
};

/// Comma-separated list of reals. Throws std::invalid_argument on junk.
std::vector<double> parse_p_list(const std::string& text);

/// Formats a real with 12 significant digits.
std::string format_real(double value);

/// Executes an already-parsed configuration. CSV goes to config.out or
/// `out`; summaries and diagnostics go to `err`, except for pcrit and
/// verify whose summary is their primary output.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Returns one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ngs::cli
