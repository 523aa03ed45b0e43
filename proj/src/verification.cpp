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

#include "ngs/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ngs/density_oracle.hpp"
#include "ngs/noisy_analytic.hpp"

namespace ngs {

namespace {

constexpr double kOracleTol = 1e-10;
constexpr double kExactTol = 1e-12;
constexpr double kSpectrumTol = 1e-8;

double max_entry_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<std::size_t> sizes_up_to(std::size_t max_size) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 2; n <= max_size; n *= 2) sizes.push_back(n);
  return sizes;
}

void check_structure(std::size_t size, CheckTally& tally) {
  const DatabaseSpec db(size);
  const auto n = static_cast<Eigen::Index>(size);
  const Matrix identity = Matrix::Identity(n, n);
  const Matrix d = build_diffusion(size);
  const Matrix u = build_oracle(db);
  const Matrix s = build_grover_operator(db);
  const std::string where = fmt::format("N={}", size);

  tally.record(max_entry_diff(d * d, identity), 1e-10, where + " D^2");
  tally.record(max_entry_diff(u * u, identity), 1e-10, where + " U^2");
  tally.record(max_entry_diff(s * s.adjoint(), identity), 1e-10, where + " S S^dagger");

  Eigen::ComplexEigenSolver<Matrix> solver(s, false);
  const auto& values = solver.eigenvalues();
  std::vector<Complex> computed(values.data(), values.data() + values.size());
  tally.record(spectrum_distance(computed, expected_grover_spectrum(db)), kSpectrumTol,
               where + " spectrum");
}

}  // namespace

DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

double spectrum_distance(std::vector<Complex> computed, const std::vector<Complex>& expected) {
  if (computed.size() != expected.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& target : expected) {
    auto nearest = std::min_element(computed.begin(), computed.end(),
                                    [&](const Complex& a, const Complex& b) {
                                      return std::abs(a - target) < std::abs(b - target);
                                    });
    worst = std::max(worst, std::abs(*nearest - target));
    computed.erase(nearest);
  }
  return worst;
}

void CheckTally::record(double error, double tol, const std::string& where) {
  ++checks;
  max_error = std::max(max_error, error);
  if (!(error <= tol)) {
    if (failures == 0) first_failure = fmt::format("{} (error {:.3g} > {:.3g})", where, error, tol);
    ++failures;
  }
}

bool VerificationReport::passed() const {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const CheckTally& t) { return t.failures == 0; });
}

std::string VerificationReport::first_failure() const {
  for (const auto& t : tallies) {
    if (t.failures > 0) return t.name + ": " + t.first_failure;
  }
  return {};
}

VerificationReport run_verification(const VerificationOptions& options) {
  CheckTally orthogonal{"analytic_vs_oracle_orthogonal"};
  CheckTally povm_tally{"analytic_vs_oracle_povm"};
  CheckTally states{"state_invariants"};
  CheckTally closed_form{"stepping_vs_closed_form"};
  CheckTally order{"step_order_independence"};
  CheckTally structure{"grover_structure"};
  CheckTally completeness_tally{"kraus_completeness"};
  CheckTally kraus_iso{"kraus_vs_isotropic"};
  CheckTally channel_states{"channel_invariants"};
  CheckTally commutation{"channel_commutes_with_grover"};

  std::mt19937_64 rng(options.seed);

  for (std::size_t size : sizes_up_to(options.max_size)) {
    const DatabaseSpec db(size);
    check_structure(size, structure);

    for (double p : options.p_grid) {
      const NoiseSpec noise(p);
      SimulationRun run(db, noise);
      SimulationRun swapped(db, noise, StepOrder::ChannelThenGrover);
      for (unsigned m = 0;; ++m) {
        const std::string where = fmt::format("N={} p={} m={}", size, p, m);
        const DensityMatrix& rho = run.state();

        const auto diag = diagnose(rho);
        states.record(std::max(diag.trace_error, diag.hermitian_error), kExactTol,
                      where + " trace/hermitian");
        states.record(std::max(0.0, -diag.min_eigenvalue), -kPsdFloor, where + " psd");

        orthogonal.record(std::abs(noisy_success_prob(db, noise, m) -
                                   measure_orthogonal(rho, db.target())),
                          kOracleTol, where + " target");
        orthogonal.record(
            std::abs(noisy_other_prob(db, noise, m) - measure_orthogonal(rho, size - 1)),
            kOracleTol, where + " other");

        for (double eps : options.epsilons) {
          const PovmSpec povm(eps, size + 3);
          povm_tally.record(std::abs(povm_success_prob(db, noise, povm, m) -
                                     measure_povm(rho, povm, db.target())),
                            kOracleTol, where + fmt::format(" eps={}", eps));
        }

        closed_form.record(
            max_entry_diff(rho.matrix(), closed_form_state(db, noise, m).matrix()), kOracleTol,
            where);
        order.record(max_entry_diff(rho.matrix(), swapped.state().matrix()), kExactTol, where);

        if (m == options.m_upper) break;
        run.step();
        swapped.step();
      }
    }
  }

  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const Matrix2 sum = completeness(depolarizing_kraus(p));
    completeness_tally.record((sum - Matrix2::Identity()).cwiseAbs().maxCoeff(), kExactTol,
                              fmt::format("p={}", p));
  }

  std::uniform_real_distribution<double> strength(0.0, 0.75);
  for (std::size_t i = 0; i < options.random_states; ++i) {
    const DensityMatrix rho = random_density_matrix(2, rng);
    const double q = strength(rng);
    const auto via_kraus = apply_kraus(rho, depolarizing_kraus(q));
    const auto via_iso = apply_global_depolarizing(rho, kraus_isotropic_consistency(q));
    kraus_iso.record(max_entry_diff(via_kraus.matrix(), via_iso.matrix()), kExactTol,
                     fmt::format("state {} q={}", i, q));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t dim : {2, 4, 8}) {
    const Matrix s = build_grover_operator(DatabaseSpec(dim));
    for (std::size_t i = 0; i < options.random_states; ++i) {
      const DensityMatrix rho = random_density_matrix(dim, rng);
      const double p = unit(rng);
      const std::string where = fmt::format("dim={} state {} p={}", dim, i, p);
      const auto out = apply_global_depolarizing(rho, p);
      const auto diag = diagnose(out);
      channel_states.record(diag.valid() ? 0.0 : 1.0, 0.0, where);

      const Matrix lhs = s * out.matrix() * s.adjoint();
      const Matrix rhs =
          apply_global_depolarizing(DensityMatrix(s * rho.matrix() * s.adjoint()), p).matrix();
      commutation.record(max_entry_diff(lhs, rhs), kOracleTol, where);
    }
  }

  VerificationReport report;
  report.tallies = {orthogonal, povm_tally,         states,    closed_form,    order,
                    structure,  completeness_tally, kraus_iso, channel_states, commutation};
  return report;
}

}  // namespace ngs
