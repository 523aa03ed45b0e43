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

#include "ngs/grover_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ngs {

DatabaseSpec::DatabaseSpec(std::size_t size, std::size_t target)
    : size_(size), target_(target) {
  if (size < 2) {
    throw std::invalid_argument("database size must be at least 2, got " +
                                std::to_string(size));
  }
  if (target >= size) {
    throw std::invalid_argument("target index " + std::to_string(target) +
                                " out of range for size " + std::to_string(size));
  }
}

double GroverAngle::cos() const { return std::cos(theta); }
double GroverAngle::sin() const { return std::sin(theta); }

GroverAngle grover_angle(const DatabaseSpec& db) {
  const double n = static_cast<double>(db.size());
  const double cos_theta = (n - 2.0) / n;
  const double sin_theta = 2.0 * std::sqrt(n - 1.0) / n;
  const double theta = std::acos(cos_theta);

  // asin is ill-conditioned near pi/2, so compare sines rather than angles.
  if (std::abs(std::sin(theta) - sin_theta) > 1e-12 ||
      std::abs(theta - std::asin(sin_theta)) > 1e-6) {
    throw std::logic_error("Grover angle branches disagree for N=" +
                           std::to_string(db.size()));
  }
  return GroverAngle{theta};
}

void require_dense(std::size_t size) {
  if (size > kDenseCap) {
    throw std::length_error("dense matrices are limited to N <= " +
                            std::to_string(kDenseCap) + ", got " +
                            std::to_string(size));
  }
}

Matrix build_oracle(const DatabaseSpec& db) {
  require_dense(db.size());
  const auto n = static_cast<Eigen::Index>(db.size());
  Matrix u = Matrix::Identity(n, n);
  const auto t = static_cast<Eigen::Index>(db.target());
  u(t, t) = -1.0;
  return u;
}

Matrix build_diffusion(std::size_t size) {
  if (size < 2) {
    throw std::invalid_argument("diffusion matrix needs N >= 2");
  }
  require_dense(size);
  const auto n = static_cast<Eigen::Index>(size);
  Matrix d = Matrix::Constant(n, n, Complex(2.0 / static_cast<double>(size), 0.0));
  d.diagonal().array() -= 1.0;
  return d;
}

Matrix build_grover_operator(const DatabaseSpec& db) {
  return build_diffusion(db.size()) * build_oracle(db);
}

std::vector<Complex> expected_grover_spectrum(const DatabaseSpec& db) {
  const double n = static_cast<double>(db.size());
  std::vector<Complex> spectrum(db.size() - 2, Complex(-1.0, 0.0));
  const Complex eta((n - 2.0) / n, -2.0 * std::sqrt(n - 1.0) / n);
  spectrum.push_back(eta);
  spectrum.push_back(std::conj(eta));
  return spectrum;
}

double noise_free_success_prob_at(const DatabaseSpec& db, double m) {
  const double n = static_cast<double>(db.size());
  const double theta = grover_angle(db).theta;
  const double amp = std::cos(m * theta) + std::sqrt(n - 1.0) * std::sin(m * theta);
  return amp * amp / n;
}

double noise_free_other_prob_at(const DatabaseSpec& db, double m) {
  const double n = static_cast<double>(db.size());
  const double theta = grover_angle(db).theta;
  const double amp = std::cos(m * theta) - std::sin(m * theta) / std::sqrt(n - 1.0);
  return amp * amp / n;
}

double noise_free_success_prob(const DatabaseSpec& db, unsigned m) {
  return noise_free_success_prob_at(db, static_cast<double>(m));
}

double noise_free_other_prob(const DatabaseSpec& db, unsigned m) {
  return noise_free_other_prob_at(db, static_cast<double>(m));
}

double first_peak_continuous(const DatabaseSpec& db) {
  const double theta = grover_angle(db).theta;
  return (std::numbers::pi - theta) / (2.0 * theta);
}

}  // namespace ngs
