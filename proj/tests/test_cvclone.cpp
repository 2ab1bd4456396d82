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

#include <cmath>
#include <numbers>

#include "clonekit/cvclone.hpp"
#include "support.hpp"

using namespace clonekit;
using clonekit::testing::WithinAbs;

namespace {

GaussianEnsembled copies(int n, double x, double p) {
  GaussianEnsembled in = GaussianEnsembled::coherent(x, p);
  for (int k = 1; k < n; ++k) in = in.concat(GaussianEnsembled::coherent(x, p));
  return in;
}

double max_diff(const RMatrix<double>& a, const RMatrix<double>& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Gaussian cloning bound", "[cvclone]") {
  const SgcBound b12 = sgc_bound(1, 2);
  CHECK_THAT(b12.variance, WithinAbs(0.5, 1e-15));
  CHECK_THAT(b12.fidelity, WithinAbs(2.0 / 3.0, 1e-15));
  for (int n = 1; n <= 6; ++n) {
    CHECK_THAT(sgc_bound(n, CopyCount::infinite()).fidelity, WithinAbs(n / (n + 1.0), 1e-15));
    CHECK(sgc_bound(n, n).variance == 0.0);
    CHECK(sgc_bound(n, n).fidelity == 1.0);
  }
  CHECK_THROWS_AS(sgc_bound(3, 2), std::invalid_argument);
}

TEST_CASE("amplifier", "[cvclone]") {
  CHECK(max_diff(amplifier(1.0).matrix(), RMatrix<double>::Identity(4, 4)) < 1e-15);
  const GaussianEnsembled out = amplifier(2.0).apply(GaussianEnsembled::coherent(0.3, -0.2).concat(GaussianEnsembled::vacuum(1)));
  CHECK_THAT(out.variance_x(0), WithinAbs(1.5, 1e-14));
  CHECK_THAT(out.variance_p(0), WithinAbs(1.5, 1e-14));
  CHECK_THAT(out.mean()(0), WithinAbs(0.3 * std::sqrt(2.0), 1e-14));
  for (double g : {1.5, 2.0, 7.0}) CHECK(amplifier(g).symplectic_residual() < 1e-10);
  CHECK_THROWS_AS(amplifier(0.5), std::invalid_argument);
}

TEST_CASE("beam splitter and Fourier transform", "[cvclone]") {
  CMatrixd u(2, 2);
  u << 1.0, 1.0, 1.0, -1.0;
  u /= std::numbers::sqrt2;
  CHECK(max_diff(beam_splitter(0.5).matrix(), QuadratureTransformd::from_mode_unitary(u).matrix()) < 1e-15);
  CHECK(max_diff(dft(1).matrix(), RMatrix<double>::Identity(2, 2)) < 1e-15);
  const QuadratureTransformd f3 = dft(3);
  CHECK(max_diff(f3.after(f3).matrix(), RMatrix<double>::Identity(6, 6)) > 0.5);
  CHECK(max_diff(f3.after(f3.inverse()).matrix(), RMatrix<double>::Identity(6, 6)) < 1e-14);
  // The inverse of the lift is the lift of the adjoint.
  CMatrixd w(3, 3);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) w(k, l) = std::polar(1.0 / std::sqrt(3.0), -2.0 * std::numbers::pi * k * l / 3.0);
  CHECK(max_diff(f3.inverse().matrix(), QuadratureTransformd::from_mode_unitary(w).matrix()) < 1e-14);
  CHECK_THROWS_AS(beam_splitter(1.5), std::invalid_argument);
}

TEST_CASE("1 -> 2 cloning network", "[cvclone]") {
  const CloneNetworkResult r = clone_network(1, 2, GaussianEnsembled::coherent(1.0, -0.5));
  for (int c = 0; c < 2; ++c) {
    CHECK_THAT(r.output.variance_x(c), WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.output.variance_p(c), WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.output.mean()(2 * c), WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.output.mean()(2 * c + 1), WithinAbs(-0.5, 1e-12));
  }
  CHECK_THAT(r.output.mean()(2 * r.anticlone_mode()), WithinAbs(1.0, 1e-12));
  CHECK_THAT(r.output.mean()(2 * r.anticlone_mode() + 1), WithinAbs(0.5, 1e-12));
  CHECK_THROWS_AS(clone_network(2, 2, copies(2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(clone_network(2, 3, GaussianEnsembled::coherent(0, 0).concat(GaussianEnsembled::coherent(1, 0))),
                  std::invalid_argument);
}

TEST_CASE("2 -> 3 cloning network", "[cvclone]") {
  const CloneNetworkResult r = clone_network(2, 3, copies(2, 0.4, 0.9));
  for (int c = 0; c < 3; ++c) {
    CHECK_THAT(r.output.variance_x(c), WithinAbs(2.0 / 3.0, 1e-12));
    CHECK_THAT(clone_fidelity(GaussianEnsembled::coherent(0.4, 0.9), r.output.mode(c)), WithinAbs(6.0 / 7.0, 1e-12));
  }
  CHECK_THAT(sgc_bound(2, 3).fidelity, WithinAbs(6.0 / 7.0, 1e-15));
}

TEST_CASE("Arthurs-Kelly limit", "[cvclone]") {
  const CloneNetworkResult r = clone_network(1, 2, GaussianEnsembled::coherent(0.2, 0.1));
  const ArthursKellyReport ak = arthurs_kelly(r.output, 0, 1);
  CHECK_THAT(ak.measured_xp, WithinAbs(1.0, 1e-12));
  CHECK(ak.saturated);
  CHECK(arthurs_kelly_check(r.output, 0, 1));

  RVector<double> mean = RVector<double>::Zero(4);
  const GaussianEnsembled noisy(mean, 1.3 * RMatrix<double>::Identity(4, 4));
  CHECK(arthurs_kelly_check(noisy, 0, 1));
  CHECK_FALSE(arthurs_kelly(noisy, 0, 1).saturated);
  const GaussianEnsembled too_good(mean, 0.9 * RMatrix<double>::Identity(4, 4));
  CHECK_FALSE(arthurs_kelly_check(too_good, 0, 1));
  CHECK_THROWS_AS(arthurs_kelly(noisy, 1, 1), std::invalid_argument);
}

TEST_CASE("finite-distribution fidelity", "[cvclone]") {
  CHECK_THAT(finite_dist_fidelity(1e4).fidelity, WithinAbs(2.0 / 3.0, 1e-3));
  CHECK_THAT(finite_dist_fidelity(0.0).fidelity, WithinAbs(1.0, 1e-15));
  const double boundary = 0.5 + 1.0 / std::numbers::sqrt2;
  const auto [upper, lower] = finite_dist_branches(boundary);
  CHECK_THAT(upper, WithinAbs(lower, 1e-9));
  CHECK_THAT(upper, WithinAbs(0.8284, 1e-4));
  double previous = 1.0;
  for (double s2 = 0.0; s2 <= 20.0; s2 += 0.25) {
    const FiniteDistFidelity f = finite_dist_fidelity(s2);
    CHECK(f.fidelity <= previous + 1e-15);
    previous = f.fidelity;
    CHECK(f.upper_branch == (s2 >= boundary));
    CHECK_THAT(finite_dist_network_fidelity(s2, f.gain), WithinAbs(f.fidelity, 1e-12));
  }
  CHECK_THROWS_AS(finite_dist_fidelity(-1.0), std::invalid_argument);
}

TEST_CASE("squeezed inputs", "[cvclone]") {
  CHECK(max_diff(squeezed_variant(0.0).matrix(), RMatrix<double>::Identity(2, 2)) < 1e-15);
  const GaussianEnsembled target = GaussianEnsembled::squeezed(0.5, 0.3, -0.7);
  const CloneNetworkResult matched = squeezed_clone_network(1, 2, 0.5, 0.3, -0.7, true);
  const CloneNetworkResult plain = squeezed_clone_network(1, 2, 0.5, 0.3, -0.7, false);
  for (int c = 0; c < 2; ++c) {
    CHECK_THAT(gaussian_fidelity(target, matched.output.mode(c)), WithinAbs(2.0 / 3.0, 1e-12));
    CHECK(gaussian_fidelity(target, plain.output.mode(c)) < 2.0 / 3.0 - 1e-3);
  }
  CHECK(matched.transform.symplectic_residual() < 1e-10);
}

TEST_CASE("network transforms are symplectic", "[cvclone][property]") {
  for (int n = 1; n <= 4; ++n)
    for (int m = n + 1; m <= 8; ++m) CHECK(clone_network_transform(n, m).symplectic_residual() < 1e-10);
  for (double r : {-1.0, 0.2, 1.5}) CHECK(squeezed_variant(r, 3).symplectic_residual() < 1e-10);
  for (double t : {0.0, 0.3, 1.0}) CHECK(beam_splitter(t).symplectic_residual() < 1e-10);
  CHECK(phase_rotation(0.7, 3).symplectic_residual() < 1e-10);
  RMatrix<double> bad = RMatrix<double>::Identity(2, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(QuadratureTransformd(bad), std::invalid_argument);
}

TEST_CASE("clone means follow the input", "[cvclone][property]") {
  auto g = testing::rng(61);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double x = normal(g);
    const double p = normal(g);
    const int n = 1 + i % 3;
    const int m = n + 1 + i % 2;
    const CloneNetworkResult r = clone_network(n, m, copies(n, x, p));
    for (int c = 0; c < m; ++c) {
      CHECK_THAT(r.output.mean()(2 * c), WithinAbs(x, 1e-10));
      CHECK_THAT(r.output.mean()(2 * c + 1), WithinAbs(p, 1e-10));
    }
  }
}

TEST_CASE("rotation covariance", "[cvclone][property]") {
  for (double theta : {0.3, 1.1, 2.5}) {
    const CloneNetworkResult base = clone_network(2, 3, copies(2, 0.8, -0.4));
    GaussianEnsembled rotated = phase_rotation(theta, 2).apply(copies(2, 0.8, -0.4));
    const CloneNetworkResult turned = clone_network(2, 3, rotated);
    const GaussianEnsembled back = phase_rotation(-theta, 4).apply(turned.output);
    for (int c = 0; c < 3; ++c) {
      CHECK(max_diff(back.mode(c).cov(), base.output.mode(c).cov()) < 1e-10);
      CHECK(max_diff(back.mode(c).mean(), base.output.mode(c).mean()) < 1e-10);
    }
  }
}

TEST_CASE("network fidelity equals the bound", "[cvclone][property]") {
  for (const auto& [n, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 5}}) {
    const CloneNetworkResult r = clone_network(n, m, copies(n, -0.6, 1.2));
    const SgcBound b = sgc_bound(n, m);
    for (int c = 0; c < m; ++c) {
      const double added = r.output.variance_x(c) - kVacuumVariance;
      CHECK_THAT(added, WithinAbs(1.0 / n - 1.0 / m, 1e-10));
      CHECK_THAT(1.0 / (1.0 + added), WithinAbs(b.fidelity, 1e-10));
      CHECK_THAT(gaussian_fidelity(GaussianEnsembled::coherent(-0.6, 1.2), r.output.mode(c)), WithinAbs(b.fidelity, 1e-10));
    }
  }
}
