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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ngs/analysis.hpp"
#include "ngs/channel.hpp"
#include "ngs/cli.hpp"
#include "ngs/density_oracle.hpp"
#include "ngs/grover_core.hpp"
#include "ngs/noisy_analytic.hpp"
#include "ngs/verification.hpp"

using namespace ngs;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> body;
};

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Runs `pcrit --n size` through the command-line front end and parses p_c.
double pcrit_via_cli(std::size_t size) {
  const std::string n = std::to_string(size);
  const char* argv[] = {"ngs", "pcrit", "--n", n.c_str()};
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run_cli(4, argv, out, err) != cli::kOk) return std::nan("");
  const std::string text = out.str();
  const auto pos = text.find("p_c=");
  return pos == std::string::npos ? std::nan("") : std::stod(text.substr(pos + 4));
}

Outcome critical_within(std::size_t size, double expected, double tol) {
  const double pc = pcrit_via_cli(size);
  return {std::abs(pc - expected) <= tol,
          fmt::format("p_c={:.9g}, expected {} +/- {:g}", pc, expected, tol)};
}

Outcome linear_fit() {
  const DatabaseSpec db(1024);
  const auto fit = fit_mmax_vs_p(db, default_p_grid(1024));
  const double di = std::abs(fit.intercept - 24.6254) / 24.6254;
  const double ds = std::abs(fit.slope + 127.7426) / 127.7426;
  return {di <= 0.01 && ds <= 0.01,
          fmt::format("intercept={:.6f} ({:.2e} rel), slope={:.4f} ({:.2e} rel), limit 1%",
                      fit.intercept, di, fit.slope, ds)};
}

Outcome shifted_peak() {
  const DatabaseSpec db(1024);
  const NoiseSpec noise(0.0274);
  unsigned best = 0;
  for (unsigned m = 1; m <= 100; ++m) {
    if (noisy_success_prob(db, noise, m) > noisy_success_prob(db, noise, best)) best = m;
  }
  const auto peak = mmax_noisy(db, noise);
  const bool ok = best == 21 && peak.m_integer == 21 && std::abs(peak.peak_prob - 0.50) <= 0.01;
  return {ok, fmt::format("argmax m={} (golden-section m={}), peak P={:.6f}, expected m=21, "
                          "P=0.50 +/- 0.01",
                          best, peak.m_integer, peak.peak_prob)};
}

Outcome rule_comparison() {
  const DatabaseSpec db(1024);
  const auto grid = default_p_grid(1024);
  const auto fit = fit_mmax_vs_p(db, grid);
  const double worst = max_abs_difference(compare_iteration_rules(db, fit, grid));
  return {worst < 0.10, fmt::format("max |P_fit - P_pi| = {:.6f} over {} p values, limit 0.10",
                                    worst, grid.size())};
}

Outcome scaling() {
  const auto sweep = pc_sweep(10, 21);
  const double slope = loglog_slope(sweep);
  return {std::abs(slope + 0.5) <= 0.05,
          fmt::format("log-log slope={:.5f}, expected -0.5 +/- 0.05", slope)};
}

Outcome oracle_equivalence() {
  double worst_ortho = 0.0;
  double worst_povm = 0.0;
  double worst_closed = 0.0;
  double worst_trace = 0.0;
  double lowest_eigen = 0.0;
  std::size_t points = 0;
  for (std::size_t n : {2, 4, 8, 16, 32}) {
    const DatabaseSpec db(n);
    for (double p : {0.0, 0.01, 0.1, 0.5, 1.0}) {
      const NoiseSpec noise(p);
      SimulationRun run(db, noise);
      for (unsigned m = 0; m <= 50; ++m) {
        const DensityMatrix& rho = run.state();
        const auto diag = diagnose(rho);
        worst_trace = std::max({worst_trace, diag.trace_error, diag.hermitian_error});
        lowest_eigen = std::min(lowest_eigen, diag.min_eigenvalue);

        worst_ortho = std::max(worst_ortho, std::abs(noisy_success_prob(db, noise, m) -
                                                     measure_orthogonal(rho, db.target())));
        for (double eps : {0.0, 0.1}) {
          const PovmSpec povm(eps, n + 3);
          worst_povm = std::max(worst_povm, std::abs(povm_success_prob(db, noise, povm, m) -
                                                     measure_povm(rho, povm, db.target())));
        }
        worst_closed = std::max(
            worst_closed, max_diff(rho.matrix(), closed_form_state(db, noise, m).matrix()));
        ++points;
        run.step();
      }
    }
  }
  const bool ok = worst_ortho <= 1e-10 && worst_povm <= 1e-10 && worst_closed <= 1e-10 &&
                  worst_trace <= 1e-12 && lowest_eigen >= -1e-10;
  return {ok, fmt::format("{} states: ortho {:.1e}, povm {:.1e}, closed form {:.1e}, "
                          "trace/herm {:.1e}, min eig {:.1e}",
                          points, worst_ortho, worst_povm, worst_closed, worst_trace,
                          lowest_eigen)};
}

Outcome structure() {
  double worst_involution = 0.0;
  double worst_unitary = 0.0;
  double worst_spectrum = 0.0;
  for (std::size_t n : {2, 4, 8, 16, 32}) {
    const DatabaseSpec db(n);
    const auto k = static_cast<Eigen::Index>(n);
    const Matrix id = Matrix::Identity(k, k);
    const Matrix d = build_diffusion(n);
    const Matrix u = build_oracle(db);
    const Matrix s = build_grover_operator(db);
    worst_involution = std::max({worst_involution, max_diff(d * d, id), max_diff(u * u, id)});
    worst_unitary = std::max(worst_unitary, max_diff(s * s.adjoint(), id));
    Eigen::ComplexEigenSolver<Matrix> solver(s, false);
    std::vector<Complex> computed(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
    worst_spectrum =
        std::max(worst_spectrum, spectrum_distance(computed, expected_grover_spectrum(db)));
  }

  double worst_completeness = 0.0;
  for (int i = 0; i <= 10; ++i) {
    worst_completeness = std::max(
        worst_completeness,
        (completeness(depolarizing_kraus(i / 10.0)) - Matrix2::Identity()).cwiseAbs().maxCoeff());
  }

  std::mt19937_64 rng(42);
  double worst_kraus = 0.0;
  const double q = 0.3;
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density_matrix(2, rng);
    worst_kraus = std::max(
        worst_kraus, max_diff(apply_kraus(rho, depolarizing_kraus(q)).matrix(),
                              apply_global_depolarizing(rho, kraus_isotropic_consistency(q))
                                  .matrix()));
  }

  const bool ok = worst_involution <= 1e-10 && worst_unitary <= 1e-10 && worst_spectrum <= 1e-8 &&
                  worst_completeness <= 1e-12 && worst_kraus <= 1e-12;
  return {ok, fmt::format("D^2,U^2 {:.1e}; S unitary {:.1e}; spectrum {:.1e}; completeness "
                          "{:.1e}; Kraus vs 4q/3 {:.1e}",
                          worst_involution, worst_unitary, worst_spectrum, worst_completeness,
                          worst_kraus)};
}

Outcome exact_small_case() {
  const DatabaseSpec db(4);
  const double p1 = noise_free_success_prob(db, 1);
  const auto pc = critical_p(4);
  const double pc_value = pc ? pc->p_c : std::nan("");
  const bool ok = std::abs(p1 - 1.0) <= 1e-12 && std::abs(pc_value - 2.0 / 3.0) <= 1e-8;
  return {ok, fmt::format("P(1)={:.15f}, p_c={:.12f} (expected 2/3)", p1, pc_value)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "critical noise N=128", 1.0, [] { return critical_within(128, 0.083394, 1e-4); }},
      {2, "critical noise N=1024", 1.0, [] { return critical_within(1024, 0.0274, 2e-4); }},
      {3, "critical noise N=2^21", 1.0,
       [] { return critical_within(std::size_t{1} << 21, 0.000609, 1e-5); }},
      {4, "linear fit N=1024", 5.0, linear_fit},
      {5, "shifted peak N=1024 p=0.0274", 1.0, shifted_peak},
      {6, "iteration-rule comparison N=1024", 5.0, rule_comparison},
      {7, "p_c scaling over n in [10,21]", 5.0, scaling},
      {8, "oracle equivalence suite", 60.0, oracle_equivalence},
      {9, "structural invariants", 10.0, structure},
      {10, "exact small case N=4", 1.0, exact_small_case},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.time_limit_s;
    const bool ok = outcome.ok && in_time;
    if (!ok) ++failed;
    std::printf("%s [%d] %s: %s; %.3fs (limit %.0fs)%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), outcome.detail.c_str(), elapsed, c.time_limit_s,
                in_time ? "" : " TIME LIMIT EXCEEDED");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed;
}
