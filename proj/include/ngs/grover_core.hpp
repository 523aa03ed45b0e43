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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace ngs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest database size for which dense N x N matrices are built.
inline constexpr std::size_t kDenseCap = 4096;

/// An unstructured database of `size` records with one marked entry.
class DatabaseSpec {
 public:
  /// Throws std::invalid_argument unless size >= 2 and target < size.
  explicit DatabaseSpec(std::size_t size, std::size_t target = 0);

  std::size_t size() const { return size_; }
  std::size_t target() const { return target_; }

 private:
  std::size_t size_;
  std::size_t target_;
};

/// Rotation angle of one Grover iteration, in (0, pi/2].
struct GroverAngle {
  double theta;

  double cos() const;
  double sin() const;
};

/// cos(theta) = (N-2)/N, sin(theta) = 2 sqrt(N-1)/N. The arccos value is
/// checked against the arcsin branch; a mismatch throws std::logic_error.
GroverAngle grover_angle(const DatabaseSpec& db);

/// Sign flip on the marked entry.
Matrix build_oracle(const DatabaseSpec& db);

/// Inversion about the mean: D_ij = -delta_ij + 2/N.
Matrix build_diffusion(std::size_t size);

/// One Grover iteration S = D U.
Matrix build_grover_operator(const DatabaseSpec& db);

/// The spectrum S must have: -1 with multiplicity N-2 followed by
/// eta = (N-2 - 2i sqrt(N-1))/N and its conjugate.
std::vector<Complex> expected_grover_spectrum(const DatabaseSpec& db);

/// Noise-free probability of reading the marked entry after m iterations.
double noise_free_success_prob(const DatabaseSpec& db, unsigned m);

/// Noise-free probability of reading one particular unmarked entry.
double noise_free_other_prob(const DatabaseSpec& db, unsigned m);

// Continuous-m versions, used by the peak search.
double noise_free_success_prob_at(const DatabaseSpec& db, double m);
double noise_free_other_prob_at(const DatabaseSpec& db, double m);

/// Real maximizer of the noise-free success probability, (pi - theta) / (2 theta).
double first_peak_continuous(const DatabaseSpec& db);

/// Throws std::length_error when N exceeds kDenseCap.
void require_dense(std::size_t size);

}  // namespace ngs
