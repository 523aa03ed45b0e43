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

#include "ngs/grover_core.hpp"

namespace ngs {

/// Per-iteration depolarizing strength.
class NoiseSpec {
 public:
  explicit NoiseSpec(double p = 0.0);
  double p() const { return p_; }

 private:
  double p_;
};

/// Symmetric smeared measurement: outcome i fires on basis state j with
/// weight 1-eps when i == j and eps/(r-1) otherwise.
class PovmSpec {
 public:
  /// Throws std::invalid_argument unless 0 <= eps < 1 and r >= 2.
  PovmSpec(double epsilon, std::size_t outcomes);

  double epsilon() const { return epsilon_; }
  std::size_t outcomes() const { return outcomes_; }

  /// lambda_{outcome, basis}
  double weight(std::size_t outcome, std::size_t basis) const;

 private:
  double epsilon_;
  std::size_t outcomes_;
};

/// (1/N)[1 - (1-p)^m] + (1-p)^m P_0(m), with P_0 the noise-free success
/// probability.
double noisy_success_prob(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m);

/// Same construction for one unmarked entry.
double noisy_other_prob(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m);

/// (1-eps) P(m) + eps/(r-1) (1 - P(m))
double povm_success_prob(const DatabaseSpec& db, const NoiseSpec& noise,
                         const PovmSpec& povm, unsigned m);

// Continuous-m extensions of the above for peak finding.
double noisy_success_prob_at(const DatabaseSpec& db, const NoiseSpec& noise, double m);
double noisy_other_prob_at(const DatabaseSpec& db, const NoiseSpec& noise, double m);

}  // namespace ngs
