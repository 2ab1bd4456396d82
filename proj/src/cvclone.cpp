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

#include "clonekit/cvclone.hpp"

#include <numbers>
#include <numeric>

namespace clonekit {
namespace {

constexpr double kAkTol = 1e-10;
constexpr double kInputTol = 1e-12;

void check_network_counts(int N, int M) {
  if (N < 1) throw std::invalid_argument("clone_network: N must be >= 1");
  if (M <= N) throw std::invalid_argument("clone_network: M must exceed N");
}

std::vector<int> range(int begin, int end) {
  std::vector<int> v(static_cast<std::size_t>(end - begin));
  std::iota(v.begin(), v.end(), begin);
  return v;
}

RMatrix<double> mode_block(const GaussianEnsembled& e, int k) { return e.cov().block(2 * k, 2 * k, 2, 2); }

}  // namespace

SgcBound sgc_bound(int N, CopyCount M) {
  if (N < 1) throw std::invalid_argument("sgc_bound: N must be >= 1");
  double var = 1.0 / N;
  if (!M.is_infinite()) {
    if (M.value() < N) throw std::invalid_argument("sgc_bound: M must be >= N");
    var -= 1.0 / M.value();
  }
  return SgcBound{var, 1.0 / (1.0 + var)};
}

QuadratureTransformd amplifier(double G) {
  if (!(G >= 1.0)) throw std::invalid_argument("amplifier: gain must be >= 1");
  const double g = std::sqrt(G);
  const double h = std::sqrt(G - 1.0);
  RMatrix<double> m(4, 4);
  // rows: x, p, x_z, p_z
  m << g, 0, h, 0,
       0, g, 0, -h,
       h, 0, g, 0,
       0, -h, 0, g;
  return QuadratureTransformd(std::move(m));
}

QuadratureTransformd beam_splitter(double T) {
  if (!(T >= 0.0 && T <= 1.0)) throw std::invalid_argument("beam_splitter: T must lie in [0, 1]");
  CMatrixd u(2, 2);
  u << std::sqrt(T), std::sqrt(1.0 - T), std::sqrt(1.0 - T), -std::sqrt(T);
  return QuadratureTransformd::from_mode_unitary(u);
}

QuadratureTransformd dft(int n) {
  if (n < 1) throw std::invalid_argument("dft: n must be >= 1");
  CMatrixd u(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) u(k, l) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), 2.0 * std::numbers::pi * k * l / n);
  return QuadratureTransformd::from_mode_unitary(u);
}

QuadratureTransformd phase_rotation(double theta, int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("phase_rotation: need at least one mode");
  const CMatrixd u = std::polar(1.0, theta) * CMatrixd::Identity(n_modes, n_modes);
  return QuadratureTransformd::from_mode_unitary(u);
}

QuadratureTransformd squeezed_variant(double r, int n_modes) {
  if (!std::isfinite(r)) throw std::invalid_argument("squeezed_variant: r must be finite");
  if (n_modes < 1) throw std::invalid_argument("squeezed_variant: need at least one mode");
  const double kappa = std::exp(r);
  RMatrix<double> m = RMatrix<double>::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    m(2 * k, 2 * k) = 1.0 / kappa;
    m(2 * k + 1, 2 * k + 1) = kappa;
  }
  return QuadratureTransformd(std::move(m));
}

QuadratureTransformd clone_network_transform(int N, int M) {
  check_network_counts(N, M);
  const int total = M + 1;
  const std::vector<int> inputs = range(0, N);
  const std::vector<int> clones = range(0, M);
  const std::vector<int> amp{0, M};
  const QuadratureTransformd step1 = dft(N).embed(inputs, total);
  const QuadratureTransformd step2 = amplifier(static_cast<double>(M) / N).embed(amp, total);
  const QuadratureTransformd step3 = dft(M).embed(clones, total);
  return step3.after(step2.after(step1));
}

CloneNetworkResult clone_network(int N, int M, const GaussianEnsembled& input) {
  check_network_counts(N, M);
  if (input.n_modes() != N) throw std::invalid_argument("clone_network: input must hold N modes");
  for (int k = 0; k < N; ++k) {
    if ((mode_block(input, k) - kVacuumVariance * RMatrix<double>::Identity(2, 2)).cwiseAbs().maxCoeff() > kInputTol)
      throw std::invalid_argument("clone_network: inputs must be coherent states");
    if ((input.mean().segment(2 * k, 2) - input.mean().head(2)).cwiseAbs().maxCoeff() > kInputTol)
      throw std::invalid_argument("clone_network: inputs must be identical");
  }
  if ((input.cov() - kVacuumVariance * RMatrix<double>::Identity(2 * N, 2 * N)).cwiseAbs().maxCoeff() > kInputTol)
    throw std::invalid_argument("clone_network: inputs must be uncorrelated");
  const QuadratureTransformd t = clone_network_transform(N, M);
  const GaussianEnsembled full = input.concat(GaussianEnsembled::vacuum(M + 1 - N));
  return CloneNetworkResult{t.apply(full), t, M};
}

CloneNetworkResult squeezed_clone_network(int N, int M, double r, double x, double p, bool matched) {
  check_network_counts(N, M);
  GaussianEnsembled state = GaussianEnsembled::squeezed(r, x, p);
  for (int k = 1; k < N; ++k) state = state.concat(GaussianEnsembled::squeezed(r, x, p));
  for (int k = N; k <= M; ++k) state = state.concat(matched ? GaussianEnsembled::squeezed(r, 0, 0) : GaussianEnsembled::vacuum(1));
  QuadratureTransformd t = clone_network_transform(N, M);
  if (matched) {
    const QuadratureTransformd s = squeezed_variant(r, M + 1);
    t = s.inverse().after(t.after(s));
  }
  return CloneNetworkResult{t.apply(state), t, M};
}

double gaussian_fidelity(const GaussianEnsembled& target, const GaussianEnsembled& state) {
  if (target.n_modes() != 1 || state.n_modes() != 1)
    throw std::invalid_argument("gaussian_fidelity: single-mode states required");
  const RMatrix<double> s = target.cov() + state.cov();
  const RVector<double> d = state.mean() - target.mean();
  return std::exp(-0.5 * d.dot(s.inverse() * d)) / std::sqrt(s.determinant());
}

double clone_fidelity(const GaussianEnsembled& target, const GaussianEnsembled& clone) {
  if (target.n_modes() != 1 || clone.n_modes() != 1)
    throw std::invalid_argument("clone_fidelity: single-mode states required");
  const RMatrix<double> added = clone.cov() - target.cov();
  const bool coherent_target =
      (target.cov() - kVacuumVariance * RMatrix<double>::Identity(2, 2)).cwiseAbs().maxCoeff() <= kInputTol;
  const bool symmetric = std::abs(added(0, 0) - added(1, 1)) <= kInputTol && std::abs(added(0, 1)) <= kInputTol;
  const bool centered = (clone.mean() - target.mean()).cwiseAbs().maxCoeff() <= kInputTol;
  if (coherent_target && symmetric && centered) return 1.0 / (1.0 + added(0, 0));
  return gaussian_fidelity(target, clone);
}

ArthursKellyReport arthurs_kelly(const GaussianEnsembled& clones, int clone1, int clone2) {
  if (clone1 == clone2) throw std::invalid_argument("arthurs_kelly: two distinct clones required");
  ArthursKellyReport r{};
  r.measured_xp = clones.variance_x(clone1) * clones.variance_p(clone2);
  r.measured_px = clones.variance_p(clone1) * clones.variance_x(clone2);
  r.noise_xp = (clones.variance_x(clone1) - kVacuumVariance) * (clones.variance_p(clone2) - kVacuumVariance);
  r.noise_px = (clones.variance_p(clone1) - kVacuumVariance) * (clones.variance_x(clone2) - kVacuumVariance);
  r.satisfied = r.measured_xp >= 1.0 - kAkTol && r.measured_px >= 1.0 - kAkTol && r.noise_xp >= 0.25 - kAkTol &&
                r.noise_px >= 0.25 - kAkTol;
  r.saturated = std::abs(r.measured_xp - 1.0) <= kAkTol && std::abs(r.measured_px - 1.0) <= kAkTol;
  return r;
}

bool arthurs_kelly_check(const GaussianEnsembled& clones, int clone1, int clone2) {
  return arthurs_kelly(clones, clone1, clone2).satisfied;
}

std::pair<double, double> finite_dist_branches(double sigma2) {
  if (!(sigma2 >= 0.0)) throw std::invalid_argument("finite_dist_fidelity: Sigma^2 must be >= 0");
  const double upper = (4.0 * sigma2 + 2.0) / (6.0 * sigma2 + 1.0);
  const double lower = 1.0 / ((3.0 - 2.0 * std::numbers::sqrt2) * sigma2 + 1.0);
  return {upper, lower};
}

FiniteDistFidelity finite_dist_fidelity(double sigma2) {
  const auto [upper, lower] = finite_dist_branches(sigma2);
  const bool high = sigma2 >= 0.5 + 1.0 / std::numbers::sqrt2;
  const double gain = 8.0 * sigma2 * sigma2 / ((2.0 * sigma2 + 1.0) * (2.0 * sigma2 + 1.0));
  return FiniteDistFidelity{high ? upper : lower, gain, high};
}

double finite_dist_network_fidelity(double sigma2, double gain) {
  if (!(sigma2 >= 0.0)) throw std::invalid_argument("finite_dist_network_fidelity: Sigma^2 must be >= 0");
  // Modes: signal, amplifier ancilla, blank.
  const std::vector<int> amp{0, 1};
  const std::vector<int> split{0, 2};
  const QuadratureTransformd t =
      beam_splitter(0.5).embed(split, 3).after(amplifier(std::max(1.0, gain)).embed(amp, 3));
  const GaussianEnsembled out = t.apply(GaussianEnsembled::vacuum(3));
  const RMatrix<double> a = mode_block(out, 0) + kVacuumVariance * RMatrix<double>::Identity(2, 2);
  // Clone mean = K_in * input mean; the displacement error is (K_in - I) z.
  const RMatrix<double> k = t.matrix().block(0, 0, 2, 2) - RMatrix<double>::Identity(2, 2);
  // x = sqrt(2) Re(alpha), so each quadrature of the prior has variance 2 Sigma^2.
  const RMatrix<double> c = 2.0 * sigma2 * RMatrix<double>::Identity(2, 2);
  const RMatrix<double> b = k.transpose() * a.inverse() * k;
  const double spread = (RMatrix<double>::Identity(2, 2) + c * b).determinant();
  return 1.0 / std::sqrt(a.determinant() * spread);
}

}  // namespace clonekit
