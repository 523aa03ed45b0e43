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

#include "ngs/density_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ngs {

DensityMatrix uniform_initial_state(std::size_t size) {
  if (size < 2) {
    throw std::invalid_argument("initial state needs N >= 2");
  }
  require_dense(size);
  const auto n = static_cast<Eigen::Index>(size);
  return DensityMatrix(
      Matrix::Constant(n, n, Complex(1.0 / static_cast<double>(size), 0.0)));
}

SimulationRun::SimulationRun(DatabaseSpec db, NoiseSpec noise, StepOrder order)
    : db_(db),
      noise_(noise),
      order_(order),
      grover_(build_grover_operator(db)),
      state_(uniform_initial_state(db.size())) {}

void SimulationRun::step() {
  const auto conjugate = [this](const DensityMatrix& rho) {
    return DensityMatrix(grover_ * rho.matrix() * grover_.adjoint());
  };
  if (order_ == StepOrder::GroverThenChannel) {
    state_ = apply_global_depolarizing(conjugate(state_), noise_.p());
  } else {
    state_ = conjugate(apply_global_depolarizing(state_, noise_.p()));
  }
  ++iterations_;
}

DensityMatrix run_noisy_grover(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m,
                               StepOrder order) {
  SimulationRun run(db, noise, order);
  while (run.iterations() < m) run.step();
  return run.state();
}

DensityMatrix closed_form_state(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m) {
  require_dense(db.size());
  const auto n = static_cast<Eigen::Index>(db.size());
  const double size = static_cast<double>(db.size());
  const Matrix s = build_grover_operator(db);

  Vector psi = Vector::Constant(n, Complex(1.0 / std::sqrt(size), 0.0));
  for (unsigned i = 0; i < m; ++i) psi = s * psi;

  const double decay = std::pow(1.0 - noise.p(), static_cast<double>(m));
  Matrix rho = decay * (psi * psi.adjoint());
  rho.diagonal().array() += (1.0 - decay) / size;
  return DensityMatrix(std::move(rho));
}

double measure_orthogonal(const DensityMatrix& rho, std::size_t index) {
  if (index >= rho.dim()) {
    throw std::out_of_range("measurement index " + std::to_string(index) +
                            " out of range for dimension " + std::to_string(rho.dim()));
  }
  const auto i = static_cast<Eigen::Index>(index);
  return rho.matrix()(i, i).real();
}

double measure_povm(const DensityMatrix& rho, const PovmSpec& povm, std::size_t outcome) {
  if (outcome >= povm.outcomes()) {
    throw std::out_of_range("POVM outcome " + std::to_string(outcome) +
                            " out of range for r=" + std::to_string(povm.outcomes()));
  }
  if (povm.outcomes() < rho.dim()) {
    throw std::invalid_argument("POVM with r=" + std::to_string(povm.outcomes()) +
                                " outcomes is incomplete in dimension " +
                                std::to_string(rho.dim()));
  }
  double prob = 0.0;
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    prob += povm.weight(outcome, j) * measure_orthogonal(rho, j);
  }
  return prob;
}

DensityMatrix dephase(const DensityMatrix& rho) {
  return DensityMatrix(Matrix(rho.matrix().diagonal().asDiagonal()));
}

}  // namespace ngs
