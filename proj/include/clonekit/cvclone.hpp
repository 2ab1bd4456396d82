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

#ifndef CLONEKIT_CVCLONE_HPP
#define CLONEKIT_CVCLONE_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "clonekit/count.hpp"
#include "clonekit/qmath.hpp"

namespace clonekit {

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// Variance of each vacuum quadrature.
inline constexpr double kVacuumVariance = 0.5;

/// Block-diagonal [[0, 1], [-1, 0]] over n modes, quadratures interleaved
/// as (x_0, p_0, x_1, p_1, ...).
template <typename Real>
RMatrix<Real> symplectic_form(int n_modes) {
  RMatrix<Real> omega = RMatrix<Real>::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1;
    omega(2 * k + 1, 2 * k) = -1;
  }
  return omega;
}

/// First and second moments of a Gaussian state. A coherent state |alpha>
/// has mean (x, p) with alpha = (x + i p)/sqrt(2) and covariance I/2.
template <typename Real>
class GaussianEnsemble {
 public:
  GaussianEnsemble(RVector<Real> mean, RMatrix<Real> cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
    const Eigen::Index n = mean_.size();
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("GaussianEnsemble: need 2n quadratures");
    if (cov_.rows() != n || cov_.cols() != n) throw std::invalid_argument("GaussianEnsemble: covariance shape mismatch");
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > Real(1e-12))
      throw std::invalid_argument("GaussianEnsemble: covariance is not symmetric");
    // cov + i Omega / 2 must be positive semidefinite.
    CMatrix<Real> h = cov_.template cast<Complex<Real>>();
    h += Complex<Real>(0, Real(0.5)) * symplectic_form<Real>(static_cast<int>(n / 2)).template cast<Complex<Real>>();
    Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < Real(-1e-10))
      throw std::invalid_argument("GaussianEnsemble: covariance violates the uncertainty relation");
  }

  static GaussianEnsemble vacuum(int n_modes) {
    return GaussianEnsemble(RVector<Real>::Zero(2 * n_modes),
                            Real(kVacuumVariance) * RMatrix<Real>::Identity(2 * n_modes, 2 * n_modes));
  }
  static GaussianEnsemble coherent(Real x, Real p) {
    RVector<Real> m(2);
    m << x, p;
    return GaussianEnsemble(std::move(m), Real(kVacuumVariance) * RMatrix<Real>::Identity(2, 2));
  }
  /// Squeezed coherent state with x variance kappa^2/2 and p variance 1/(2 kappa^2), kappa = e^r.
  static GaussianEnsemble squeezed(Real r, Real x, Real p) {
    RVector<Real> m(2);
    m << x, p;
    RMatrix<Real> c = RMatrix<Real>::Zero(2, 2);
    c(0, 0) = std::exp(2 * r) / 2;
    c(1, 1) = std::exp(-2 * r) / 2;
    return GaussianEnsemble(std::move(m), std::move(c));
  }

  int n_modes() const { return static_cast<int>(mean_.size() / 2); }
  const RVector<Real>& mean() const { return mean_; }
  const RMatrix<Real>& cov() const { return cov_; }
  Real variance_x(int mode) const { return cov_(2 * mode, 2 * mode); }
  Real variance_p(int mode) const { return cov_(2 * mode + 1, 2 * mode + 1); }

  GaussianEnsemble mode(int k) const { return modes(std::vector<int>{k}); }

  GaussianEnsemble modes(std::span<const int> ks) const {
    const Eigen::Index n = static_cast<Eigen::Index>(2 * ks.size());
    RVector<Real> m(n);
    RMatrix<Real> c(n, n);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i] < 0 || ks[i] >= n_modes()) throw std::out_of_range("GaussianEnsemble: mode index");
      m.segment(2 * i, 2) = mean_.segment(2 * ks[i], 2);
      for (std::size_t j = 0; j < ks.size(); ++j) c.block(2 * i, 2 * j, 2, 2) = cov_.block(2 * ks[i], 2 * ks[j], 2, 2);
    }
    return GaussianEnsemble(std::move(m), std::move(c));
  }

  GaussianEnsemble concat(const GaussianEnsemble& other) const {
    const Eigen::Index a = mean_.size();
    const Eigen::Index b = other.mean_.size();
    RVector<Real> m(a + b);
    m << mean_, other.mean_;
    RMatrix<Real> c = RMatrix<Real>::Zero(a + b, a + b);
    c.topLeftCorner(a, a) = cov_;
    c.bottomRightCorner(b, b) = other.cov_;
    return GaussianEnsemble(std::move(m), std::move(c));
  }

 private:
  RVector<Real> mean_;
  RMatrix<Real> cov_;
};

/// Real linear map on quadratures that preserves the commutators.
template <typename Real>
class QuadratureTransform {
 public:
  explicit QuadratureTransform(RMatrix<Real> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() % 2 != 0 || m_.rows() == 0)
      throw std::invalid_argument("QuadratureTransform: need a square 2n x 2n matrix");
    if (symplectic_residual() > Real(1e-10))
      throw std::invalid_argument("QuadratureTransform: matrix is not symplectic");
  }

  static QuadratureTransform identity(int n_modes) {
    return QuadratureTransform(RMatrix<Real>::Identity(2 * n_modes, 2 * n_modes));
  }

  /// Lifts a mode unitary a'_k = sum_l u_kl a_l to x' = Re(u) x - Im(u) p,
  /// p' = Im(u) x + Re(u) p.
  static QuadratureTransform from_mode_unitary(const CMatrix<Real>& u) {
    const Eigen::Index n = u.rows();
    if (u.cols() != n) throw std::invalid_argument("QuadratureTransform: mode unitary must be square");
    RMatrix<Real> m(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index l = 0; l < n; ++l) {
        const Real re = u(k, l).real();
        const Real im = u(k, l).imag();
        m(2 * k, 2 * l) = re;
        m(2 * k, 2 * l + 1) = -im;
        m(2 * k + 1, 2 * l) = im;
        m(2 * k + 1, 2 * l + 1) = re;
      }
    return QuadratureTransform(std::move(m));
  }

  int n_modes() const { return static_cast<int>(m_.rows() / 2); }
  const RMatrix<Real>& matrix() const { return m_; }

  Real symplectic_residual() const {
    const RMatrix<Real> omega = symplectic_form<Real>(n_modes());
    return (m_ * omega * m_.transpose() - omega).cwiseAbs().maxCoeff();
  }

  /// Acts on the listed modes of an n-mode system and as the identity elsewhere.
  QuadratureTransform embed(std::span<const int> modes, int total_modes) const {
    if (static_cast<int>(modes.size()) != n_modes()) throw std::invalid_argument("embed: mode count mismatch");
    RMatrix<Real> big = RMatrix<Real>::Identity(2 * total_modes, 2 * total_modes);
    for (std::size_t i = 0; i < modes.size(); ++i) {
      if (modes[i] < 0 || modes[i] >= total_modes) throw std::out_of_range("embed: mode index");
      for (std::size_t j = 0; j < modes.size(); ++j)
        big.block(2 * modes[i], 2 * modes[j], 2, 2) = m_.block(2 * i, 2 * j, 2, 2);
    }
    return QuadratureTransform(std::move(big));
  }

  GaussianEnsemble<Real> apply(const GaussianEnsemble<Real>& in) const {
    if (in.n_modes() != n_modes()) throw std::invalid_argument("apply: mode count mismatch");
    RMatrix<Real> c = m_ * in.cov() * m_.transpose();
    c = (c + c.transpose()).eval() / Real(2);
    return GaussianEnsemble<Real>(m_ * in.mean(), std::move(c));
  }

  /// `*this` after `first`.
  QuadratureTransform after(const QuadratureTransform& first) const {
    return QuadratureTransform(m_ * first.m_);
  }

  QuadratureTransform inverse() const { return QuadratureTransform(m_.inverse()); }

 private:
  RMatrix<Real> m_;
};

using GaussianEnsembled = GaussianEnsemble<double>;
using QuadratureTransformd = QuadratureTransform<double>;

struct SgcBound {
  double variance;
  double fidelity;
};

/// Minimal added noise 1/N - 1/M and fidelity 1/(1 + noise) of N -> M
/// Gaussian cloning of coherent states.
SgcBound sgc_bound(int N, CopyCount M);

/// Phase-insensitive amplifier of gain G on (signal, ancilla z).
QuadratureTransformd amplifier(double G);
/// Mode unitary [[sqrt(T), sqrt(1-T)], [sqrt(1-T), -sqrt(T)]].
QuadratureTransformd beam_splitter(double T);
/// Discrete Fourier transform u_kl = e^{2 pi i k l / n} / sqrt(n) on n modes.
QuadratureTransformd dft(int n);
/// Phase rotation a -> e^{i theta} a on every one of n modes.
QuadratureTransformd phase_rotation(double theta, int n_modes);
/// x -> x / kappa, p -> kappa p on every mode, kappa = e^r. Maps a squeezed
/// state of parameter r onto a coherent state.
QuadratureTransformd squeezed_variant(double r, int n_modes = 1);

struct CloneNetworkResult {
  /// Modes 0..M-1 are the clones, mode M the anti-clone.
  GaussianEnsembled output;
  QuadratureTransformd transform;
  int n_clones;
  int anticlone_mode() const { return n_clones; }
};

/// DFT over the N inputs, amplification by M/N of mode 0 against the ancilla,
/// then DFT over the M clone modes. Blank modes and the ancilla start in the vacuum.
QuadratureTransformd clone_network_transform(int N, int M);
/// `input` must hold N identical coherent states.
CloneNetworkResult clone_network(int N, int M, const GaussianEnsembled& input);

/// Squeezed inputs of parameter r. With matched ancillae the blank modes and
/// the ancilla are squeezed too and the network is conjugated by the
/// rescaling; otherwise the plain network runs on vacuum ancillae.
CloneNetworkResult squeezed_clone_network(int N, int M, double r, double x, double p, bool matched);

/// Fidelity between a single-mode Gaussian state and a pure single-mode
/// Gaussian target: exp(-d^T (V1+V2)^{-1} d / 2) / sqrt(det(V1+V2)).
double gaussian_fidelity(const GaussianEnsembled& target, const GaussianEnsembled& state);

/// 1/(1 + sigma^2) when the clone has the target's mean and equal added noise
/// sigma^2 on both quadratures of a coherent target; the Gaussian overlap otherwise.
double clone_fidelity(const GaussianEnsembled& target, const GaussianEnsembled& clone);

struct ArthursKellyReport {
  /// Var(x on clone 1) Var(p on clone 2), and the swapped product.
  double measured_xp;
  double measured_px;
  /// Added-noise products sigma^2_{x,1} sigma^2_{p,2} and sigma^2_{p,1} sigma^2_{x,2}.
  double noise_xp;
  double noise_px;
  bool satisfied;
  /// Both measured products equal 1.
  bool saturated;
};

/// Joint x/p measurement through two clones of a coherent input.
ArthursKellyReport arthurs_kelly(const GaussianEnsembled& clones, int clone1, int clone2);
bool arthurs_kelly_check(const GaussianEnsembled& clones, int clone1, int clone2);

struct FiniteDistFidelity {
  double fidelity;
  double gain;
  /// true for Sigma^2 >= 1/2 + 1/sqrt(2).
  bool upper_branch;
};

/// Best 1 -> 2 single-clone fidelity for coherent states drawn from a Gaussian
/// prior where Re(alpha), Im(alpha) each have variance Sigma2.
FiniteDistFidelity finite_dist_fidelity(double sigma2);
/// (upper-branch formula, lower-branch formula) evaluated at the same point.
std::pair<double, double> finite_dist_branches(double sigma2);
/// Prior-averaged fidelity of an amplifier of gain max(1, G) followed by a
/// 50:50 beam splitter, from covariance propagation.
double finite_dist_network_fidelity(double sigma2, double gain);

}  // namespace clonekit

#endif  // CLONEKIT_CVCLONE_HPP
