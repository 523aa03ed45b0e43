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
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ngs/grover_core.hpp"
#include "ngs/noisy_analytic.hpp"
#include "ngs/numerics.hpp"

namespace ngs {

/// How the iteration count is fixed when the noise is ignored.
enum class IterationRule {
  FloorQuarterPiSqrtN,  // floor(pi sqrt(N) / 4)
  IntegerArgmax,        // integer maximizer of the noise-free success probability
};

std::size_t mmax_noise_free(std::size_t size, IterationRule rule = IterationRule::FloorQuarterPiSqrtN);

struct PeakResult {
  double m_continuous = 0.0;
  unsigned m_integer = 0;
  double peak_prob = 0.0;
};

/// Thrown when the first peak of P(m) is not inside the search bracket,
/// i.e. the noise is so strong that the best choice is m ~ 0.
class NoInteriorPeak : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Location of the first maximum of the noisy success probability. The
/// continuous peak is found by golden-section search on
/// [min(1, m0/2), 1.5 m0] with m0 = (pi - theta)/(2 theta); m_integer is the
/// better of its floor and ceiling.
PeakResult mmax_noisy(const DatabaseSpec& db, const NoiseSpec& noise);

/// LHS - RHS of m/(1-p) (1 - (N/2)(1 - cos z)) = (N z/(2m+1)) sin z with
/// z = 2 (2m+1) theta. Diagnostic only; mmax_noisy does not use it.
double transcendental_residual(const DatabaseSpec& db, const NoiseSpec& noise, double m);

struct CriticalNoise {
  double n = 0.0;  // log2(N)
  std::size_t size = 0;
  std::size_t m_max = 0;
  double p_c = 0.0;
};

/// Noise strength at which P(m_max; p) drops to 1/2, with m_max fixed by
/// `rule`. Returns nullopt when even the noise-free search stays at or
/// below 1/2. Throws std::logic_error if P(m_max; p) is not strictly
/// decreasing on a p grid, since the root would then not be unique.
std::optional<CriticalNoise> critical_p(std::size_t size,
                                        IterationRule rule = IterationRule::FloorQuarterPiSqrtN);

/// critical_p for N = 2^n, n in [n_min, n_max]. Sizes without a threshold
/// are skipped.
std::vector<CriticalNoise> pc_sweep(int n_min, int n_max,
                                    IterationRule rule = IterationRule::FloorQuarterPiSqrtN);

/// Least-squares slope of log p_c against log N.
double loglog_slope(std::span<const CriticalNoise> sweep);

/// `count` evenly spaced values on [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// 50 evenly spaced p values on [0, p_c(N)].
std::vector<double> default_p_grid(std::size_t size, std::size_t count = 50);

/// Linear fit of the continuous peak location against p.
LinearFit fit_mmax_vs_p(const DatabaseSpec& db, std::span<const double> p_grid);

struct MmaxSample {
  double p = 0.0;
  PeakResult peak;
};

std::vector<MmaxSample> mmax_sweep(const DatabaseSpec& db, std::span<const double> p_grid);

struct CurvePoint {
  unsigned m = 0;
  double prob = 0.0;
};

struct ProbabilityCurve {
  std::size_t size = 0;
  double p = 0.0;
  std::optional<PovmSpec> povm;
  std::vector<CurvePoint> points;
};

/// Success probability at every integer m in [0, m_upper]; POVM success
/// probability when `povm` is given.
ProbabilityCurve probability_curve(const DatabaseSpec& db, const NoiseSpec& noise,
                                   const std::optional<PovmSpec>& povm, unsigned m_upper);

struct SurfacePoint {
  unsigned m = 0;
  double p = 0.0;
  double prob = 0.0;
};

/// Long-format (m, p, P) table over m in [0, m_upper] and the given p grid.
std::vector<SurfacePoint> probability_surface(const DatabaseSpec& db,
                                              std::span<const double> p_grid,
                                              unsigned m_upper);

struct RuleComparison {
  double p = 0.0;
  unsigned m_fit = 0;
  unsigned m_pi = 0;
  double prob_fit = 0.0;
  double prob_pi = 0.0;
  double abs_diff = 0.0;
};

/// Success probability at floor(fit(p)) against floor(pi sqrt(N)/4).
std::vector<RuleComparison> compare_iteration_rules(const DatabaseSpec& db, const LinearFit& fit,
                                                    std::span<const double> p_grid);

double max_abs_difference(std::span<const RuleComparison> rows);

}  // namespace ngs
