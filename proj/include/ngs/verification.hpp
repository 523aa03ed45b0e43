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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ngs/channel.hpp"
#include "ngs/grover_core.hpp"

namespace ngs {

/// Random full-rank state G G^dagger / tr(G G^dagger) with complex Gaussian G.
DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng);

/// Greedy nearest-neighbour distance between two eigenvalue multisets.
double spectrum_distance(std::vector<Complex> computed, const std::vector<Complex>& expected);

struct CheckTally {
  explicit CheckTally(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  std::string first_failure;

  void record(double error, double tol, const std::string& where);
};

struct VerificationOptions {
  std::size_t max_size = 32;  // sizes 2, 4, ..., max_size
  std::uint64_t seed = 42;
  unsigned m_upper = 50;
  std::vector<double> p_grid{0.0, 0.01, 0.1, 0.5, 1.0};
  std::vector<double> epsilons{0.0, 0.1};
  std::size_t random_states = 20;
};

struct VerificationReport {
  std::vector<CheckTally> tallies;

  bool passed() const;
  /// Name and location of the first failing check, empty if none failed.
  std::string first_failure() const;
};

/// Runs the analytic-versus-oracle equivalence suite together with the
/// structural and channel invariants. Deterministic for fixed options.
VerificationReport run_verification(const VerificationOptions& options);

}  // namespace ngs
