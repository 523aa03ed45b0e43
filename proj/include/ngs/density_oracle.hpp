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

#include "ngs/channel.hpp"
#include "ngs/grover_core.hpp"
#include "ngs/noisy_analytic.hpp"

namespace ngs {

/// Order of the two maps inside one noisy iteration. Both give the same
/// state because I/N is invariant under unitary conjugation.
enum class StepOrder { GroverThenChannel, ChannelThenGrover };

/// rho_0 = |u><u| with u the uniform superposition; every entry is 1/N.
DensityMatrix uniform_initial_state(std::size_t size);

/// Dense simulation of the noisy search. Owns its state; advance with step().
class SimulationRun {
 public:
  SimulationRun(DatabaseSpec db, NoiseSpec noise,
                StepOrder order = StepOrder::GroverThenChannel);

  /// One Grover conjugation rho -> S rho S^dagger and one depolarizing
  /// application, in the configured order.
  void step();

  const DatabaseSpec& database() const { return db_; }
  const NoiseSpec& noise() const { return noise_; }
  unsigned iterations() const { return iterations_; }
  const DensityMatrix& state() const { return state_; }
  const Matrix& grover_operator() const { return grover_; }

 private:
  DatabaseSpec db_;
  NoiseSpec noise_;
  StepOrder order_;
  Matrix grover_;
  DensityMatrix state_;
  unsigned iterations_ = 0;
};

/// rho_m by explicit stepping. Throws std::length_error above kDenseCap.
DensityMatrix run_noisy_grover(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m,
                               StepOrder order = StepOrder::GroverThenChannel);

/// (1/N)[1 - (1-p)^m] I + (1-p)^m S^m rho_0 S^dagger^m, built from the
/// state vector S^m |u> without any stepping.
DensityMatrix closed_form_state(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m);

/// Born probability of basis state `index`.
double measure_orthogonal(const DensityMatrix& rho, std::size_t index);

/// sum_j lambda_{outcome, j} <j|rho|j>. Requires r >= N so that the POVM
/// elements sum to the identity.
double measure_povm(const DensityMatrix& rho, const PovmSpec& povm, std::size_t outcome);

/// Post-measurement state sum_i E_i rho E_i: the diagonal of rho.
DensityMatrix dephase(const DensityMatrix& rho);

}  // namespace ngs
