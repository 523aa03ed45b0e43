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

#include "ngs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ngs {

namespace {

constexpr double kPeakTol = 1e-10;
// Much tighter than needed for p itself: at N = 2^21 a shift of 1e-8 in p
// moves P(m_max) by ~6e-6.
constexpr double kCriticalTol = 1e-14;
constexpr int kMonotoneGrid = 200;

unsigned to_iterations(double m) {
  return m <= 0.0 ? 0u : static_cast<unsigned>(std::floor(m));
}

}  // namespace

std::size_t mmax_noise_free(std::size_t size, IterationRule rule) {
  const DatabaseSpec db(size);
  if (rule == IterationRule::FloorQuarterPiSqrtN) {
    return static_cast<std::size_t>(
        std::floor(std::numbers::pi * std::sqrt(static_cast<double>(size)) / 4.0));
  }
  const double peak = first_peak_continuous(db);
  const auto lo = static_cast<unsigned>(std::floor(peak));
  const auto hi = static_cast<unsigned>(std::ceil(peak));
  // Ties go to the smaller count.
  return noise_free_success_prob(db, hi) > noise_free_success_prob(db, lo) ? hi : lo;
}

PeakResult mmax_noisy(const DatabaseSpec& db, const NoiseSpec& noise) {
  if (noise.p() >= 1.0) {
    throw std::invalid_argument("mmax_noisy needs p < 1");
  }
  const double noise_free_peak = first_peak_continuous(db);
  const double lo = std::min(1.0, 0.5 * noise_free_peak);
  const double hi = 1.5 * noise_free_peak;
  const auto prob = [&](double m) { return noisy_success_prob_at(db, noise, m); };

  PeakResult result;
  result.m_continuous = golden_section_maximize(prob, lo, hi, kPeakTol);
  if (result.m_continuous - lo < 1e-6 || hi - result.m_continuous < 1e-6) {
    throw NoInteriorPeak("no interior maximum for N=" + std::to_string(db.size()) +
                         ", p=" + std::to_string(noise.p()));
  }

  const unsigned below = to_iterations(result.m_continuous);
  const unsigned above = static_cast<unsigned>(std::ceil(result.m_continuous));
  const double p_below = noisy_success_prob(db, noise, below);
  const double p_above = noisy_success_prob(db, noise, above);
  result.m_integer = p_above > p_below ? above : below;
  result.peak_prob = std::max(p_below, p_above);
  return result;
}

double transcendental_residual(const DatabaseSpec& db, const NoiseSpec& noise, double m) {
  const double n = static_cast<double>(db.size());
  const double theta = grover_angle(db).theta;
  const double zeta = 2.0 * (2.0 * m + 1.0) * theta;
  const double lhs = m / (1.0 - noise.p()) * (1.0 - 0.5 * n * (1.0 - std::cos(zeta)));
  const double rhs = n * zeta / (2.0 * m + 1.0) * std::sin(zeta);
  return lhs - rhs;
}

std::optional<CriticalNoise> critical_p(std::size_t size, IterationRule rule) {
  const DatabaseSpec db(size);
  const auto m_max = static_cast<unsigned>(mmax_noise_free(size, rule));
  const auto excess = [&](double p) {
    return noisy_success_prob(db, NoiseSpec(p), m_max) - 0.5;
  };
  if (excess(0.0) <= 0.0) return std::nullopt;

  // Near p = 1 the damped term (1-p)^m underflows and P(m_max; p) sits on
  // 1/N in double precision; strictness is only demanded above that floor.
  const double floor_excess = 1.0 / static_cast<double>(size) - 0.5;
  double previous = excess(0.0);
  for (int i = 1; i <= kMonotoneGrid; ++i) {
    const double current = excess(static_cast<double>(i) / kMonotoneGrid);
    const bool resolvable = previous - floor_excess > 1e-12;
    if (current > previous || (resolvable && !(current < previous))) {
      throw std::logic_error("P(m_max; p) is not strictly decreasing for N=" +
                             std::to_string(size));
    }
    previous = current;
  }

  CriticalNoise result;
  result.n = std::log2(static_cast<double>(size));
  result.size = size;
  result.m_max = m_max;
  result.p_c = bisect(excess, 0.0, 1.0, kCriticalTol);
  return result;
}

std::vector<CriticalNoise> pc_sweep(int n_min, int n_max, IterationRule rule) {
  if (n_min < 1 || n_max < n_min || n_max > 62) {
    throw std::invalid_argument("pc_sweep: bad exponent range");
  }
  std::vector<CriticalNoise> sweep;
  for (int n = n_min; n <= n_max; ++n) {
    if (auto pc = critical_p(std::size_t{1} << n, rule)) sweep.push_back(*pc);
  }
  return sweep;
}

double loglog_slope(std::span<const CriticalNoise> sweep) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& row : sweep) {
    xs.push_back(std::log(static_cast<double>(row.size)));
    ys.push_back(std::log(row.p_c));
  }
  return fit_line(xs, ys).slope;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) throw std::invalid_argument("linspace needs at least two points");
  std::vector<double> grid(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

std::vector<double> default_p_grid(std::size_t size, std::size_t count) {
  const auto pc = critical_p(size);
  if (!pc) {
    throw std::invalid_argument("no critical noise for N=" + std::to_string(size));
  }
  return linspace(0.0, pc->p_c, count);
}

std::vector<MmaxSample> mmax_sweep(const DatabaseSpec& db, std::span<const double> p_grid) {
  std::vector<MmaxSample> samples;
  samples.reserve(p_grid.size());
  for (double p : p_grid) samples.push_back({p, mmax_noisy(db, NoiseSpec(p))});
  return samples;
}

LinearFit fit_mmax_vs_p(const DatabaseSpec& db, std::span<const double> p_grid) {
  if (p_grid.size() < 2) throw std::invalid_argument("fit_mmax_vs_p: need at least two p values");
  std::vector<double> peaks;
  peaks.reserve(p_grid.size());
  for (const auto& sample : mmax_sweep(db, p_grid)) peaks.push_back(sample.peak.m_continuous);
  return fit_line(p_grid, peaks);
}

ProbabilityCurve probability_curve(const DatabaseSpec& db, const NoiseSpec& noise,
                                   const std::optional<PovmSpec>& povm, unsigned m_upper) {
  ProbabilityCurve curve;
  curve.size = db.size();
  curve.p = noise.p();
  curve.povm = povm;
  curve.points.reserve(m_upper + 1);
  for (unsigned m = 0; m <= m_upper; ++m) {
    const double prob = povm ? povm_success_prob(db, noise, *povm, m)
                             : noisy_success_prob(db, noise, m);
    curve.points.push_back({m, prob});
  }
  return curve;
}

std::vector<SurfacePoint> probability_surface(const DatabaseSpec& db,
                                              std::span<const double> p_grid,
                                              unsigned m_upper) {
  std::vector<SurfacePoint> table;
  table.reserve(p_grid.size() * (m_upper + 1));
  for (unsigned m = 0; m <= m_upper; ++m) {
    for (double p : p_grid) table.push_back({m, p, noisy_success_prob(db, NoiseSpec(p), m)});
  }
  return table;
}

std::vector<RuleComparison> compare_iteration_rules(const DatabaseSpec& db, const LinearFit& fit,
                                                    std::span<const double> p_grid) {
  const auto m_pi = static_cast<unsigned>(mmax_noise_free(db.size(), IterationRule::FloorQuarterPiSqrtN));
  std::vector<RuleComparison> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    const NoiseSpec noise(p);
    RuleComparison row;
    row.p = p;
    row.m_fit = to_iterations(fit(p));
    row.m_pi = m_pi;
    row.prob_fit = noisy_success_prob(db, noise, row.m_fit);
    row.prob_pi = noisy_success_prob(db, noise, row.m_pi);
    row.abs_diff = std::abs(row.prob_fit - row.prob_pi);
    rows.push_back(row);
  }
  return rows;
}

double max_abs_difference(std::span<const RuleComparison> rows) {
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.abs_diff);
  return worst;
}

}  // namespace ngs
