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

#include "clonekit/uqcm.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "clonekit/symspace.hpp"

namespace clonekit {
namespace {

constexpr Eigen::Index kAutoDenseDim = 256;
constexpr double kSymmetricBudget = 2e5;
constexpr double kSignalingTol = 1e-10;

int qudit_dim(const StateVectord& psi, const char* who) {
  if (psi.dims().size() != 1) throw std::invalid_argument(std::string(who) + ": expected a single qudit");
  return psi.dims()[0];
}

void check_counts(int N, int M, const char* who) {
  if (N < 1) throw std::invalid_argument(std::string(who) + ": N must be >= 1");
  if (M <= N) throw std::invalid_argument(std::string(who) + ": M must exceed N");
}

Eigen::Index ipow(int d, int n) {
  Eigen::Index r = 1;
  for (int k = 0; k < n; ++k) {
    if (r > kMaxDenseDim) return kMaxDenseDim + 1;
    r *= d;
  }
  return r;
}

double norm_constant(int d, int N, int M) {
  return static_cast<double>(sym_dim(d, N)) / static_cast<double>(sym_dim(d, M));
}

DensityMatrixd hermitize(const HilbertDims& dims, const CMatrixd& m) {
  return DensityMatrixd(dims, (m + m.adjoint()) / 2.0);
}

CloneReport werner_dense(const StateVectord& psi, int N, int M) {
  const int d = psi.dim();
  const CMatrixd s = sym_projector(d, M);
  const StateVectord copies = embed_copies(psi, N);
  const Eigen::Index tail = ipow(d, M - N);
  const CMatrixd x =
      kron<double>(copies.amplitudes() * copies.amplitudes().adjoint(), CMatrixd::Identity(tail, tail));
  const CMatrixd rho = norm_constant(d, N, M) * (s * x * s);
  DensityMatrixd out = hermitize(HilbertDims::qudits(d, M), rho);

  std::vector<double> fids;
  for (int k = 0; k < M; ++k) fids.push_back(fidelity_pure(partial_trace(out, {k}), psi));
  DensityMatrixd one = partial_trace(out, {0});
  const double global = fidelity_pure(out, embed_copies(psi, M));
  const double eta = (d * fids[0] - 1.0) / (d - 1.0);
  return CloneReport{std::move(fids), eta, std::move(one), std::move(out), global};
}

CloneReport werner_symmetric(const StateVectord& psi, int N, int M) {
  const int d = psi.dim();
  if (static_cast<double>(sym_dim(d, M)) * static_cast<double>(sym_dim(d, M - N)) > kSymmetricBudget)
    throw std::length_error("werner_clone: symmetric-route budget exceeded");
  const SymmetricSubspace out_space(d, M);
  const SymmetricSubspace head_space(d, N);
  const SymmetricSubspace tail_space(d, M - N);
  const SymmetricSubspace less_space(d, M - 1);
  const CVectord head = sym_coordinates(psi, head_space);
  const CVectord target = sym_coordinates(psi, out_space);
  const double c = norm_constant(d, N, M);

  CMatrixd rho1 = CMatrixd::Zero(d, d);
  double global = 0;
  Occupation h(static_cast<std::size_t>(d));
  for (Eigen::Index t = 0; t < tail_space.size(); ++t) {
    const Occupation& k = tail_space.basis()[static_cast<std::size_t>(t)];
    // w = S_M (|psi>^N |t>) for one string t with occupation k, in occupation coordinates.
    // <n| psi^N t> sums head strings of occupation n - k, each weighing prod psi_j^{h_j}.
    CVectord w = CVectord::Zero(out_space.size());
    for (Eigen::Index i = 0; i < out_space.size(); ++i) {
      const Occupation& n = out_space.basis()[static_cast<std::size_t>(i)];
      bool ok = true;
      for (int j = 0; j < d; ++j) {
        h[static_cast<std::size_t>(j)] = n[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(j)];
        ok = ok && h[static_cast<std::size_t>(j)] >= 0;
      }
      if (!ok) continue;
      const Eigen::Index hi = head_space.index_of(h);
      // head(hi) = sqrt(mult(h)) prod psi^h, and mult(h) strings share it.
      w(i) = head(hi) * std::sqrt(head_space.multiplicity(hi)) / std::sqrt(out_space.multiplicity(i));
    }
    const double weight = c * tail_space.multiplicity(t);
    global += weight * std::norm(target.dot(w));

    // u_j = a_j w, with a_j |n> = sqrt(n_j) |n - e_j>.
    CMatrixd u = CMatrixd::Zero(less_space.size(), d);
    for (Eigen::Index i = 0; i < out_space.size(); ++i) {
      if (w(i) == 0.0) continue;
      Occupation n = out_space.basis()[static_cast<std::size_t>(i)];
      for (int j = 0; j < d; ++j) {
        const int nj = n[static_cast<std::size_t>(j)];
        if (nj == 0) continue;
        --n[static_cast<std::size_t>(j)];
        u(less_space.index_of(n), j) += std::sqrt(static_cast<double>(nj)) * w(i);
        ++n[static_cast<std::size_t>(j)];
      }
    }
    // rho1(i, j) = <a_j w | a_i w>
    rho1 += (weight / M) * (u.adjoint() * u).transpose();
  }
  DensityMatrixd one = hermitize(HilbertDims{d}, rho1);
  const double f = fidelity_pure(one, psi);
  const double eta = (d * f - 1.0) / (d - 1.0);
  return CloneReport{std::vector<double>(static_cast<std::size_t>(M), f), eta, std::move(one),
                     std::nullopt, global};
}

StateVectord qubit_basis(int which) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: return StateVectord::qubit(r, r);
    case 1: return StateVectord::qubit(r, -r);
    case 2: return StateVectord::qubit(1, 0);
    default: return StateVectord::qubit(0, 1);
  }
}

SignalingReport finish_report(const CMatrixd& px, const CMatrixd& mx, const CMatrixd& pz,
                              const CMatrixd& mz) {
  SignalingReport r;
  r.rho_x = (px + mx) / 2.0;
  r.rho_z = (pz + mz) / 2.0;
  r.max_deviation = max_abs_diff<double>(r.rho_x, r.rho_z);
  r.passes = r.max_deviation <= kSignalingTol;
  return r;
}

}  // namespace

CloneReport werner_clone(const StateVectord& psi, int N, int M, WernerRoute route) {
  const int d = qudit_dim(psi, "werner_clone");
  check_counts(N, M, "werner_clone");
  if (route == WernerRoute::automatic)
    route = ipow(d, M) <= kAutoDenseDim ? WernerRoute::dense : WernerRoute::symmetric;
  return route == WernerRoute::dense ? werner_dense(psi, N, M) : werner_symmetric(psi, N, M);
}

QuantumChanneld werner_channel(int d, int N, int M) {
  check_counts(N, M, "werner_channel");
  const Eigen::Index din = ipow(d, N);
  const Eigen::Index dout = ipow(d, M);
  const Eigen::Index tail = ipow(d, M - N);
  if (dout > kMaxDenseDim) throw std::length_error("werner_channel: dimension budget exceeded");
  const CMatrixd s = sym_projector(d, M);
  const double root_c = std::sqrt(norm_constant(d, N, M));
  std::vector<CMatrixd> kraus;
  for (Eigen::Index t = 0; t < tail; ++t) {
    CMatrixd append = CMatrixd::Zero(dout, din);  // |x> -> |x>|t>
    for (Eigen::Index x = 0; x < din; ++x) append(x * tail + t, x) = 1.0;
    kraus.push_back(root_c * s * append);
  }
  if (N > 1) {
    // Non-symmetric inputs are outside the machine's domain; pad them with |0...0>.
    const CMatrixd sn = sym_projector(d, N);
    CMatrixd pad = CMatrixd::Zero(dout, din);
    for (Eigen::Index x = 0; x < din; ++x) pad(x * tail, x) = 1.0;
    kraus.push_back(pad * (CMatrixd::Identity(din, din) - sn));
  }
  return QuantumChanneld(HilbertDims::qudits(d, N), HilbertDims::qudits(d, M), std::move(kraus));
}

double fidelity_formula(int N, CopyCount M, int d) {
  if (N < 1 || d < 2) throw std::invalid_argument("fidelity_formula: need N >= 1 and d >= 2");
  if (M.is_infinite()) return (N + 1.0) / (N + d);
  const int m = M.value();
  if (m < N) throw std::invalid_argument("fidelity_formula: M must be >= N");
  return static_cast<double>(N) / m + static_cast<double>(m - N) * (N + 1) / (static_cast<double>(m) * (N + d));
}

double shrinking_eta(int N, CopyCount M, int d) {
  if (N < 1 || d < 2) throw std::invalid_argument("shrinking_eta: need N >= 1 and d >= 2");
  if (M.is_infinite()) return static_cast<double>(N) / (N + d);
  const int m = M.value();
  if (m < N) throw std::invalid_argument("shrinking_eta: M must be >= N");
  return (static_cast<double>(N) / m) * (m + d) / (N + d);
}

double fidelity_from_eta(double eta, int d) { return (1.0 + (d - 1) * eta) / d; }

QuantumChanneld buzek_hillery_channel() {
  const double r23 = std::sqrt(2.0 / 3.0);
  const double r16 = 1.0 / std::sqrt(6.0);
  CMatrixd v = CMatrixd::Zero(8, 2);
  // |0> -> sqrt(2/3)|00>|1> - sqrt(1/3)|Psi+>|0>
  v(0b001, 0) = r23;
  v(0b010, 0) = -r16;
  v(0b100, 0) = -r16;
  // |1> -> -sqrt(2/3)|11>|0> + sqrt(1/3)|Psi+>|1>
  v(0b110, 1) = -r23;
  v(0b011, 1) = r16;
  v(0b101, 1) = r16;
  return QuantumChanneld::isometry(HilbertDims{2}, HilbertDims{2, 2, 2}, std::move(v));
}

BuzekHilleryOutput buzek_hillery(const StateVectord& psi) {
  if (qudit_dim(psi, "buzek_hillery") != 2) throw std::invalid_argument("buzek_hillery: input must be a qubit");
  const QuantumChanneld ch = buzek_hillery_channel();
  StateVectord out(HilbertDims{2, 2, 2}, ch.kraus()[0] * psi.amplitudes());
  const DensityMatrixd rho = out.projector();
  return BuzekHilleryOutput{partial_trace(rho, {0}), partial_trace(rho, {1}), partial_trace(rho, {2}),
                            std::move(out)};
}

MonteCarloEstimate trivial_measure_clone(const StateVectord& psi, std::size_t samples,
                                         std::uint64_t seed) {
  if (qudit_dim(psi, "trivial_measure_clone") != 2)
    throw std::invalid_argument("trivial_measure_clone: input must be a qubit");
  if (samples < 2) throw std::invalid_argument("trivial_measure_clone: need at least 2 samples");
  const Eigen::Vector3d m = bloch_vector(psi.projector());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  double sum = 0;
  double sum_sq = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Eigen::Vector3d b(g(rng), g(rng), g(rng));
    b.normalize();
    // P(+-) = F(+-) = (1 +- m.b)/2
    const double c = m.dot(b);
    const double v = (1.0 + c * c) / 2.0;
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return MonteCarloEstimate{mean, std::sqrt(var / n), samples};
}

double trivial_measure_quadrature(const StateVectord& psi) {
  if (qudit_dim(psi, "trivial_measure_quadrature") != 2)
    throw std::invalid_argument("trivial_measure_quadrature: input must be a qubit");
  const Eigen::Vector3d m = bloch_vector(psi.projector());
  constexpr int azimuths = 16;
  auto ring = [&](double z) {
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double s = 0;
    for (int j = 0; j < azimuths; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / azimuths;
      const Eigen::Vector3d b(rho * std::cos(phi), rho * std::sin(phi), z);
      const double c = m.dot(b);
      s += (1.0 + c * c) / 2.0;
    }
    return s / azimuths;
  };
  return boost::math::quadrature::gauss<double, 8>::integrate(ring, -1.0, 1.0) / 2.0;
}

QuantumChanneld measure_prepare_channel(int copies) {
  if (copies < 1) throw std::invalid_argument("measure_prepare_channel: copies must be >= 1");
  const double r = 1.0 / std::sqrt(2.0);
  const Complex<double> i(0, 1);
  const std::vector<StateVectord> axes{
      StateVectord::qubit(r, r), StateVectord::qubit(r, -r), StateVectord::qubit(r, r * i),
      StateVectord::qubit(r, -r * i), StateVectord::qubit(1, 0), StateVectord::qubit(0, 1)};
  std::vector<CMatrixd> kraus;
  for (const auto& s : axes) {
    const CVectord out = embed_copies(s, copies).amplitudes();
    kraus.push_back(std::sqrt(1.0 / 3.0) * out * s.amplitudes().adjoint());
  }
  return QuantumChanneld(HilbertDims{2}, HilbertDims::qudits(2, copies), std::move(kraus));
}

double trivial_amplify_fidelity(int N, int M, int d) {
  if (N < 1 || M < N || d < 2) throw std::invalid_argument("trivial_amplify_fidelity: need M >= N >= 1, d >= 2");
  return static_cast<double>(N) / M + static_cast<double>(M - N) / (static_cast<double>(d) * M);
}

QuantumChanneld trivial_amplify_channel() {
  std::vector<CMatrixd> kraus;
  for (int t = 0; t < 2; ++t) {
    CMatrixd first = CMatrixd::Zero(4, 2);   // |a> -> |a>|t>
    CMatrixd second = CMatrixd::Zero(4, 2);  // |a> -> |t>|a>
    for (int a = 0; a < 2; ++a) {
      first(2 * a + t, a) = 0.5;
      second(2 * t + a, a) = 0.5;
    }
    kraus.push_back(first);
    kraus.push_back(second);
  }
  return QuantumChanneld(HilbertDims{2}, HilbertDims{2, 2}, std::move(kraus));
}

PointwiseMap perfect_cloner() {
  return [](const StateVectord& psi) { return tensor(psi, psi).projector(); };
}

SignalingReport signaling_report(const PointwiseMap& map) {
  std::vector<CMatrixd> out;
  for (int k = 0; k < 4; ++k) out.push_back(map(qubit_basis(k)).matrix());
  return finish_report(out[0], out[1], out[2], out[3]);
}

SignalingReport signaling_report(const QuantumChanneld& ch) {
  if (ch.input_dims() != HilbertDims{2}) throw std::invalid_argument("signaling_report: input must be one qubit");
  std::vector<CMatrixd> out;
  for (int k = 0; k < 4; ++k) out.push_back(apply_channel(ch, qubit_basis(k).projector()).matrix());
  return finish_report(out[0], out[1], out[2], out[3]);
}

bool no_signaling_check(const QuantumChanneld& ch) {
  if (ch.input_dims() != HilbertDims{2} || ch.output_dims() != HilbertDims{2, 2})
    throw std::invalid_argument("no_signaling_check: expected a qubit -> two-qubit channel");
  return signaling_report(ch).passes;
}

bool no_signaling_check(const PointwiseMap& map) { return signaling_report(map).passes; }

}  // namespace clonekit
