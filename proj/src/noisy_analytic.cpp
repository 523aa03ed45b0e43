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

#include "ngs/noisy_analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ngs/channel.hpp"

namespace ngs {

NoiseSpec::NoiseSpec(double p) : p_(p) { require_probability(p, "noise strength p"); }

PovmSpec::PovmSpec(double epsilon, std::size_t outcomes)
    : epsilon_(epsilon), outcomes_(outcomes) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("POVM epsilon must lie in [0, 1), got " +
                                std::to_string(epsilon));
  }
  if (outcomes < 2) {
    throw std::invalid_argument("POVM needs at least 2 outcomes");
  }
}

double PovmSpec::weight(std::size_t outcome, std::size_t basis) const {
  return outcome == basis ? 1.0 - epsilon_
                          : epsilon_ / static_cast<double>(outcomes_ - 1);
}

namespace {

// Mixes a noise-free probability with the uniform value 1/N.
double damp(const DatabaseSpec& db, const NoiseSpec& noise, double m, double noise_free) {
  const double decay = std::pow(1.0 - noise.p(), m);
  const double uniform = 1.0 / static_cast<double>(db.size());
  return (1.0 - decay) * uniform + decay * noise_free;
}

}  // namespace

double noisy_success_prob_at(const DatabaseSpec& db, const NoiseSpec& noise, double m) {
  return damp(db, noise, m, noise_free_success_prob_at(db, m));
}

double noisy_other_prob_at(const DatabaseSpec& db, const NoiseSpec& noise, double m) {
  return damp(db, noise, m, noise_free_other_prob_at(db, m));
}

double noisy_success_prob(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m) {
  return noisy_success_prob_at(db, noise, static_cast<double>(m));
}

double noisy_other_prob(const DatabaseSpec& db, const NoiseSpec& noise, unsigned m) {
  return noisy_other_prob_at(db, noise, static_cast<double>(m));
}

double povm_success_prob(const DatabaseSpec& db, const NoiseSpec& noise,
                         const PovmSpec& povm, unsigned m) {
  const double hit = noisy_success_prob(db, noise, m);
  const double leak = povm.epsilon() / static_cast<double>(povm.outcomes() - 1);
  return (1.0 - povm.epsilon()) * hit + leak * (1.0 - hit);
}

}  // namespace ngs
