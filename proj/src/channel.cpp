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

#include "ngs/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ngs {

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and non-empty");
  }
}

DensityMatrix DensityMatrix::checked(Matrix entries) {
  DensityMatrix rho(std::move(entries));
  const auto d = diagnose(rho);
  if (!d.valid()) {
    throw std::domain_error(
        "not a density matrix: trace error " + std::to_string(d.trace_error) +
        ", hermitian error " + std::to_string(d.hermitian_error) +
        ", min eigenvalue " + std::to_string(d.min_eigenvalue));
  }
  return rho;
}

DensityDiagnostics diagnose(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  DensityDiagnostics d;
  d.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  d.hermitian_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  // The eigensolver only reads one triangle, so symmetrize first.
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

double purity(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  // tr(rho rho) = sum_ij rho_ij rho_ji
  return (m.cwiseProduct(m.transpose())).sum().real();
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

Matrix2 completeness(const KrausSet& kraus) {
  Matrix2 sum = Matrix2::Zero();
  for (const auto& op : kraus.operators) sum += op.adjoint() * op;
  return sum;
}

KrausSet depolarizing_kraus(double p) {
  require_probability(p, "depolarizing strength");
  const Complex i(0.0, 1.0);
  Matrix2 sigma_x;
  sigma_x << 0.0, 1.0, 1.0, 0.0;
  Matrix2 sigma_y;
  sigma_y << 0.0, -i, i, 0.0;
  Matrix2 sigma_z;
  sigma_z << 1.0, 0.0, 0.0, -1.0;

  const double pauli_weight = std::sqrt(p / 3.0);
  KrausSet k;
  k.strength = p;
  k.operators = {
      std::sqrt(1.0 - p) * Matrix2::Identity(),
      pauli_weight * sigma_x,
      pauli_weight * i * sigma_y,
      pauli_weight * sigma_z,
  };
  return k;
}

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausSet& kraus) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("Kraus set acts on qubits; got dimension " +
                                std::to_string(rho.dim()));
  }
  Matrix out = Matrix::Zero(2, 2);
  for (const auto& op : kraus.operators) {
    out += op * rho.matrix() * op.adjoint();
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_global_depolarizing(const DensityMatrix& rho, double p) {
  require_probability(p, "depolarizing strength");
  Matrix out = (1.0 - p) * rho.matrix();
  out.diagonal().array() += p / static_cast<double>(rho.dim());
  return DensityMatrix(std::move(out));
}

double kraus_isotropic_consistency(double q) { return 4.0 * q / 3.0; }

}  // namespace ngs
