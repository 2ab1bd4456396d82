// Copyright 2026 The clonekit Authors
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

#include "clonekit/estim.hpp"
#include "clonekit/uqcm.hpp"
#include "support.hpp"

using namespace clonekit;
using clonekit::testing::WithinAbs;

TEST_CASE("eta_star", "[estim]") {
  CHECK_THAT(eta_star(1), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK(eta_star_exact(1) == Rational(1, 3));
  CHECK(eta_star_exact(CopyCount::infinite()) == Rational(1));
  CHECK(eta_star(CopyCount::infinite()) == 1.0);
  double previous = 0.0;
  for (int n : {1, 2, 3, 10, 100, 1000, 10000, 100000, 1000000}) {
    CHECK(eta_star(n) > previous);
    previous = eta_star(n);
  }
  CHECK_THAT(previous, WithinAbs(1.0, 1e-5));
  CHECK(eta_star_exact(4, 3) == Rational(4, 7));
  CHECK_THROWS_AS(eta_star(0), std::invalid_argument);
}

TEST_CASE("estimation fidelity matches measure-and-prepare cloning", "[estim]") {
  CHECK_THAT(estimation_fidelity(1), WithinAbs(2.0 / 3.0, 1e-15));
  auto g = testing::rng(51);
  CHECK_THAT(trivial_measure_quadrature(testing::random_qudit(2, g)), WithinAbs(estimation_fidelity(1), 1e-12));
  for (int N = 1; N <= 6; ++N)
    for (int d = 2; d <= 4; ++d)
      CHECK_THAT(estimation_fidelity(N, d), WithinAbs(fidelity_formula(N, CopyCount::infinite(), d), 1e-15));
}

TEST_CASE("cascade bound", "[estim]") {
  const CascadeBound b12 = cascade_bound(1, 2);
  CHECK_THAT(b12.bound, WithinAbs(2.0 / 3.0, 1e-15));
  CHECK_THAT(b12.eta, WithinAbs(2.0 / 3.0, 1e-15));
  CHECK(b12.saturated);
  const CascadeBound b25 = cascade_bound(2, 5);
  CHECK_THAT(b25.bound, WithinAbs(0.7, 1e-15));
  CHECK_THAT(b25.eta, WithinAbs(shrinking_eta(2, 5, 2), 1e-15));
  for (int n = 1; n <= 5; ++n) {
    const CascadeBound same = cascade_bound(n, n);
    CHECK(same.bound == 1.0);
    CHECK(same.saturated);
  }
  CHECK(shrinking_eta_exact(2, 5) == Rational(7, 10));
  CHECK_THROWS_AS(cascade_bound(3, 2), std::invalid_argument);
}

TEST_CASE("exact cascade saturation", "[estim]") {
  for (int d : {2, 3, 5})
    for (int N = 1; N <= 20; ++N)
      for (int M = N; M <= 20; ++M) {
        CHECK(cascade_saturated_exact(N, M, d));
        CHECK(shrinking_eta_exact(N, M, d) == eta_star_exact(N, d) / eta_star_exact(M, d));
      }
  CHECK(cascade_saturated_exact(3, CopyCount::infinite()));
}

TEST_CASE("multiplicativity", "[estim]") {
  CHECK(multiplicativity_check(1, 2, 3));
  CHECK(multiplicativity_check(1, 2, CopyCount::infinite()));
  CHECK(shrinking_eta_exact(1, 2) * eta_star_exact(2) == eta_star_exact(1));
  for (int N = 1; N <= 8; ++N)
    for (int L = N; L <= 12; ++L) CHECK(multiplicativity_check(N, N, L));
  CHECK_THROWS_AS(multiplicativity_check(2, 1, 3), std::invalid_argument);
}

TEST_CASE("shrinking approaches the estimation optimum", "[estim][property]") {
  for (int N = 1; N <= 10; ++N) {
    CHECK_THAT(shrinking_eta(N, 10000, 2), WithinAbs(eta_star(N), 1e-3));
    CHECK(shrinking_eta_exact(N, CopyCount::infinite()) == eta_star_exact(N));
    const ShrinkRecord r = shrink_record(N, CopyCount::infinite());
    CHECK(r.M.is_infinite());
    CHECK_THAT(r.eta, WithinAbs(eta_star(N), 1e-15));
  }
}
