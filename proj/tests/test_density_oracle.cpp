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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ngs/density_oracle.hpp"

using namespace ngs;

namespace {

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Matrix mixed(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Matrix::Identity(k, k) / static_cast<double>(n);
}

}  // namespace

TEST_CASE("uniform initial state") {
  const auto rho2 = uniform_initial_state(2);
  CHECK(max_diff(rho2.matrix(), Matrix::Constant(2, 2, 0.5)) == 0.0);
  for (std::size_t n : {2, 4, 16, 64}) {
    const auto rho = uniform_initial_state(n);
    CHECK(max_diff(rho.matrix() * rho.matrix(), rho.matrix()) < 1e-14);
    CHECK(diagnose(rho).valid());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(uniform_initial_state(4).matrix());
  CHECK(solver.eigenvalues()(3) == doctest::Approx(1.0));
  CHECK(std::abs(solver.eigenvalues()(0)) < 1e-14);
  CHECK_THROWS_AS(uniform_initial_state(1), std::invalid_argument);
}

TEST_CASE("single steps") {
  SUBCASE("p=0 is unitary conjugation") {
    SimulationRun run(DatabaseSpec(8, 3), NoiseSpec(0.0));
    const Matrix s = run.grover_operator();
    const Matrix before = run.state().matrix();
    run.step();
    CHECK(run.iterations() == 1);
    CHECK(max_diff(run.state().matrix(), s * before * s.adjoint()) < 1e-14);
  }
  SUBCASE("p=1 forgets everything") {
    SimulationRun run(DatabaseSpec(8), NoiseSpec(1.0));
    run.step();
    CHECK(max_diff(run.state().matrix(), mixed(8)) < 1e-15);
    run.step();
    CHECK(max_diff(run.state().matrix(), mixed(8)) < 1e-15);
  }
  SUBCASE("N=4, p=0.1") {
    SimulationRun run(DatabaseSpec(4), NoiseSpec(0.1));
    run.step();
    CHECK(std::abs(measure_orthogonal(run.state(), 0) - 0.925) < 1e-12);
  }
}

TEST_CASE("stepping matches the closed form and the invariants hold") {
  for (std::size_t n : {2, 4, 8, 16, 32}) {
    for (double p : {0.0, 0.1, 0.5, 1.0}) {
      const DatabaseSpec db(n, n / 3);
      const NoiseSpec noise(p);
      SimulationRun run(db, noise);
      SimulationRun swapped(db, noise, StepOrder::ChannelThenGrover);
      double last_purity = purity(run.state());
      for (unsigned m = 0; m <= 50; ++m) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(diagnose(run.state()).valid());
        CHECK(max_diff(run.state().matrix(), closed_form_state(db, noise, m).matrix()) < 1e-10);
        CHECK(max_diff(run.state().matrix(), swapped.state().matrix()) < 1e-12);
        const double pur = purity(run.state());
        if (p > 0.0) CHECK(pur <= last_purity + 1e-12);
        last_purity = pur;
        run.step();
        swapped.step();
      }
    }
  }
}

TEST_CASE("run_noisy_grover") {
  const DatabaseSpec db(8);
  CHECK(max_diff(run_noisy_grover(db, NoiseSpec(0.3), 0).matrix(),
                 uniform_initial_state(8).matrix()) == 0.0);
  CHECK(max_diff(run_noisy_grover(db, NoiseSpec(1.0), 1).matrix(), mixed(8)) < 1e-15);
  CHECK(max_diff(run_noisy_grover(db, NoiseSpec(0.2), 5).matrix(),
                 closed_form_state(db, NoiseSpec(0.2), 5).matrix()) < 1e-10);
  CHECK_THROWS_AS(run_noisy_grover(DatabaseSpec(kDenseCap + 1), NoiseSpec(0.1), 1),
                  std::length_error);
}

TEST_CASE("orthogonal measurement") {
  const auto rho = run_noisy_grover(DatabaseSpec(16), NoiseSpec(0.05), 3);
  double total = 0.0;
  for (std::size_t i = 0; i < 16; ++i) total += measure_orthogonal(rho, i);
  CHECK(std::abs(total - 1.0) < 1e-12);
  CHECK(std::abs(measure_orthogonal(rho, 0) -
                 noisy_success_prob(DatabaseSpec(16), NoiseSpec(0.05), 3)) < 1e-10);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(measure_orthogonal(DensityMatrix(mixed(8)), i) == doctest::Approx(0.125));
    CHECK(measure_orthogonal(uniform_initial_state(8), i) == doctest::Approx(0.125));
  }
  CHECK_THROWS_AS(measure_orthogonal(rho, 16), std::out_of_range);
}

TEST_CASE("target index does not change the success probability") {
  for (double p : {0.0, 0.07}) {
    const auto reference = run_noisy_grover(DatabaseSpec(16, 0), NoiseSpec(p), 4);
    for (std::size_t t = 1; t < 16; ++t) {
      const auto rho = run_noisy_grover(DatabaseSpec(16, t), NoiseSpec(p), 4);
      CHECK(std::abs(measure_orthogonal(rho, t) - measure_orthogonal(reference, 0)) < 1e-12);
    }
  }
}

TEST_CASE("POVM measurement") {
  const DatabaseSpec db(8, 2);
  const auto rho = run_noisy_grover(db, NoiseSpec(0.1), 2);

  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(measure_povm(rho, PovmSpec(0.0, 8), i) == doctest::Approx(measure_orthogonal(rho, i)));
  }
  CHECK(measure_povm(DensityMatrix(mixed(8)), PovmSpec(0.3, 8), 2) == doctest::Approx(0.125));

  for (std::size_t r : {8, 9, 11, 20}) {
    const PovmSpec povm(0.2, r);
    double total = 0.0;
    for (std::size_t i = 0; i < r; ++i) total += measure_povm(rho, povm, i);
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(measure_povm(rho, PovmSpec(0.1, 9), 9), std::out_of_range);
  CHECK_THROWS_AS(measure_povm(rho, PovmSpec(0.1, 7), 0), std::invalid_argument);

  SUBCASE("N=128 with r=131 against the closed form") {
    const DatabaseSpec big(128);
    const PovmSpec povm(0.1, 131);
    SimulationRun run(big, NoiseSpec(0.04));
    for (unsigned m = 0; m <= 20; ++m) {
      CHECK(std::abs(measure_povm(run.state(), povm, 0) -
                     povm_success_prob(big, NoiseSpec(0.04), povm, m)) < 1e-10);
      run.step();
    }
  }
}

TEST_CASE("dephasing keeps only the diagonal") {
  const auto rho = run_noisy_grover(DatabaseSpec(4), NoiseSpec(0.2), 1);
  const auto f = dephase(rho);
  CHECK(diagnose(f).valid());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(measure_orthogonal(f, i) == doctest::Approx(measure_orthogonal(rho, i)));
  }
  CHECK(std::abs(f.matrix()(0, 1)) == 0.0);
}
