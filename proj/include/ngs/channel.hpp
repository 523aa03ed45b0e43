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
#include <vector>

#include <Eigen/Dense>

#include "ngs/grover_core.hpp"

namespace ngs {

using Matrix2 = Eigen::Matrix2cd;

/// Tolerances for the density-matrix invariants.
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

/// A square complex matrix used as a quantum state. Construction only checks
/// the shape; use diagnose() to check the physical invariants.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

  /// Throws std::domain_error unless Hermitian, unit trace and PSD.
  static DensityMatrix checked(Matrix entries);

 private:
  Matrix entries_;
};

struct DensityDiagnostics {
  double trace_error = 0.0;      // |tr(rho) - 1|
  double hermitian_error = 0.0;  // max |rho - rho^dagger|
  double min_eigenvalue = 0.0;

  bool valid() const {
    return trace_error <= kTraceTol && hermitian_error <= kHermitianTol &&
           min_eigenvalue >= kPsdFloor;
  }
};

DensityDiagnostics diagnose(const DensityMatrix& rho);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

/// Single-qubit operator-sum channel.
struct KrausSet {
  std::vector<Matrix2> operators;
  double strength = 0.0;
};

/// sum_mu M_mu^dagger M_mu
Matrix2 completeness(const KrausSet& kraus);

/// Qubit depolarizing channel with weight p/3 on each Pauli error:
/// {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) iY, sqrt(p/3) Z}.
KrausSet depolarizing_kraus(double p);

/// sum_mu M_mu rho M_mu^dagger on a qubit state.
DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausSet& kraus);

/// p I/N + (1-p) rho in any dimension.
DensityMatrix apply_global_depolarizing(const DensityMatrix& rho, double p);

/// Strength of the isotropic map p I/2 + (1-p) rho that reproduces the Kraus
/// channel of strength q. Equal to 4q/3.
double kraus_isotropic_consistency(double q);

/// Throws std::invalid_argument unless 0 <= p <= 1.
void require_probability(double p, const char* what);

}  // namespace ngs
