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

#include <functional>
#include <span>

namespace ngs {

/// Root of f on [lo, hi] by bisection. f(lo) and f(hi) must have opposite
/// signs; stops when the bracket is narrower than tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Maximizer of a unimodal f on [lo, hi] by golden-section search.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;

  double operator()(double x) const { return intercept + slope * x; }
};

/// Ordinary least squares y = a + b x. Throws std::invalid_argument for
/// fewer than two points or a constant x.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace ngs
