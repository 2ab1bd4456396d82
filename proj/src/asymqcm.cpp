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

#include "clonekit/asymqcm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clonekit/uqcm.hpp"

namespace clonekit {
namespace {

constexpr double kParamTol = 1e-12;

int qudit_dim(const StateVectord& psi) {
  if (psi.dims().size() != 1) throw std::invalid_argument("asymqcm: expected a single qudit");
  return psi.dims()[0];
}

}  // namespace

AsymParams::AsymParams(int d, double a, double b, double v, double x) : d_(d), a_(a), b_(b), v_(v), x_(x) {
  if (d < 2) throw std::invalid_argument("AsymParams: d must be >= 2");
  if (a < -kParamTol || b < -kParamTol) throw std::invalid_argument("AsymParams: a and b must be non-negative");
  if (std::abs(a * a + b * b + 2.0 * a * b / d - 1.0) > kParamTol)
    throw std::invalid_argument("AsymParams: a^2 + b^2 + 2ab/d must equal 1");
  if (std::abs(v * v + (d * d - 1.0) * x * x - 1.0) > kParamTol)
    throw std::invalid_argument("AsymParams: v^2 + (d^2-1) x^2 must equal 1");
  if (std::abs(a - (v - x)) > kParamTol || std::abs(b - d * x) > kParamTol)
    throw std::invalid_argument("AsymParams: (a, b) and (v, x) disagree");
}

AsymParams AsymParams::from_circuit(int d, double a, double b) {
  if (d < 2) throw std::invalid_argument("AsymParams: d must be >= 2");
  const double x = b / d;
  return AsymParams(d, a, b, a + x, x);
}

AsymParams AsymParams::from_cerf(int d, double v, double x) {
  if (d < 2) throw std::invalid_argument("AsymParams: d must be >= 2");
  return AsymParams(d, v - x, d * x, v, x);
}

AsymParams AsymParams::symmetric(int d) {
  if (d < 2) throw std::invalid_argument("AsymParams: d must be >= 2");
  const double a = 1.0 / std::sqrt(2.0 + 2.0 / d);
  return from_circuit(d, a, a);
}

AsymParams AsymParams::from_fidelity_a(int d, double fa) {
  if (d < 2) throw std::invalid_argument("AsymParams: d must be >= 2");
  if (fa < 1.0 / d - kParamTol || fa > 1.0 + kParamTol)
    throw std::invalid_argument("AsymParams: F_A must lie in [1/d, 1]");
  const double b = std::min(1.0, std::sqrt(std::max(0.0, d * (1.0 - fa) / (d - 1.0))));
  // Positive root of a^2 + (2b/d) a + b^2 - 1 = 0.
  const double a = std::max(0.0, -b / d + std::sqrt(std::max(0.0, b * b / (d * d) - b * b + 1.0)));
  return from_circuit(d, a, b);
}

StateVectord asym_output_state(const StateVectord& psi, const AsymParams& p) {
  return asym_output_state(psi, p, max_entangled<double>(p.d()));
}

StateVectord asym_output_state(const StateVectord& psi, const AsymParams& p, const StateVectord& pair) {
  const int d = p.d();
  if (qudit_dim(psi) != d) throw std::invalid_argument("asym_output_state: input dimension mismatch");
  if (pair.dims() != HilbertDims{d, d}) throw std::invalid_argument("asym_output_state: pair must be two qudits");
  const auto& s = psi.amplitudes();
  const auto& e = pair.amplitudes();
  CVectord out = CVectord::Zero(d * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) out(i * d * d + j * d + k) = p.a() * s(i) * e(j * d + k) + p.b() * s(j) * e(i * d + k);
  return StateVectord(HilbertDims::qudits(d, 3), std::move(out));
}

QuantumChanneld asym_channel(const AsymParams& p) {
  const int d = p.d();
  const StateVectord pair = max_entangled<double>(d);
  CMatrixd v(d * d * d, d);
  for (int s = 0; s < d; ++s) v.col(s) = asym_output_state(StateVectord::basis(HilbertDims{d}, s), p, pair).amplitudes();
  return QuantumChanneld::isometry(HilbertDims{d}, HilbertDims::qudits(d, 3), std::move(v));
}

std::array<int, 3> circuit_map_qubit(int sigma, int omega, int xi) {
  for (int bit : {sigma, omega, xi})
    if (bit != 0 && bit != 1) throw std::invalid_argument("circuit_map_qubit: inputs must be bits");
  return {(sigma + omega + xi) % 2, (sigma + omega) % 2, (sigma + xi) % 2};
}

CMatrixd circuit_unitary(int d) {
  if (d < 2) throw std::invalid_argument("circuit_unitary: d must be >= 2");
  const int n = d * d * d;
  CMatrixd u = CMatrixd::Zero(n, n);
  for (int s = 0; s < d; ++s)
    for (int w = 0; w < d; ++w)
      for (int x = 0; x < d; ++x) {
        const int a = ((s - w + x) % d + d) % d;
        const int b = (s + w) % d;
        const int m = (s + x) % d;
        u(a * d * d + b * d + m, s * d * d + w * d + x) = 1.0;
      }
  return u;
}

StateVectord circuit_program(const AsymParams& p) {
  const int d = p.d();
  CVectord prog = p.a() * max_entangled<double>(d).amplitudes();
  for (int k = 0; k < d; ++k) prog(k) += p.b() / std::sqrt(static_cast<double>(d));  // |0>|k>
  return StateVectord(HilbertDims{d, d}, std::move(prog));
}

StateVectord circuit_output(const StateVectord& psi, const AsymParams& p) {
  if (qudit_dim(psi) != p.d()) throw std::invalid_argument("circuit_output: input dimension mismatch");
  const StateVectord in = tensor(psi, circuit_program(p));
  return StateVectord(HilbertDims::qudits(p.d(), 3), circuit_unitary(p.d()) * in.amplitudes());
}

CMatrixd weyl_operator(int d, int m, int n) {
  if (d < 2) throw std::invalid_argument("weyl_operator: d must be >= 2");
  CMatrixd u = CMatrixd::Zero(d, d);
  for (int k = 0; k < d; ++k)
    u(((k + m) % d + d) % d, k) = std::polar(1.0, 2.0 * std::numbers::pi * k * n / d);
  return u;
}

CMatrixd cerf_operator(int d, double v, double x) {
  if (d < 2) throw std::invalid_argument("cerf_operator: d must be >= 2");
  if (std::abs(v * v + (d * d - 1.0) * x * x - 1.0) > kParamTol)
    throw std::invalid_argument("cerf_operator: v^2 + (d^2-1) x^2 must equal 1");
  const int n = d * d * d;
  CMatrixd op = v * CMatrixd::Identity(n, n);
  const CMatrixd id = CMatrixd::Identity(d, d);
  for (int m = 0; m < d; ++m)
    for (int k = 0; k < d; ++k) {
      if (m == 0 && k == 0) continue;
      const CMatrixd u = weyl_operator(d, m, k);
      op += x * kron<double>(kron<double>(u, u.adjoint()), id);
    }
  return op;
}

StateVectord cerf_output(const StateVectord& psi, const AsymParams& p) {
  if (qudit_dim(psi) != p.d()) throw std::invalid_argument("cerf_output: input dimension mismatch");
  const StateVectord in = tensor(psi, max_entangled<double>(p.d()));
  return StateVectord(HilbertDims::qudits(p.d(), 3), cerf_operator(p.d(), p.v(), p.x()) * in.amplitudes());
}

std::pair<double, double> asym_fidelities(const AsymParams& p) {
  const double k = (p.d() - 1.0) / p.d();
  return {1.0 - k * p.b() * p.b(), 1.0 - k * p.a() * p.a()};
}

std::pair<double, double> clone_fidelities(const StateVectord& out, const StateVectord& psi) {
  const int d = qudit_dim(psi);
  if (out.dims() != HilbertDims::qudits(d, 3)) throw std::invalid_argument("clone_fidelities: expected three qudits");
  const DensityMatrixd rho = out.projector();
  return {fidelity_pure(partial_trace(rho, {0}), psi), fidelity_pure(partial_trace(rho, {1}), psi)};
}

double clonineq_gap(double fa, double fb, int d) {
  if (d < 2) throw std::invalid_argument("clonineq_gap: d must be >= 2");
  const double ea = 1.0 - fa;
  const double eb = 1.0 - fb;
  return std::sqrt(std::max(0.0, ea * eb)) - ((d - 1.0) / 2.0 - (d / 2.0) * (ea + eb));
}

CMatrixd filip_projector(double T) {
  if (!(T >= 0.5 && T <= 1.0)) throw std::invalid_argument("filip_projector: T must lie in [1/2, 1]");
  const CVectord s = Bell<double>::psi_minus().amplitudes();
  return (2.0 * T - 1.0) * CMatrixd::Identity(4, 4) + 2.0 * (1.0 - T) * s * s.adjoint();
}

FilipOutcome filip_asymmetric(const StateVectord& psi, double T) {
  const CMatrixd filter = kron<double>(CMatrixd::Identity(2, 2), filip_projector(T));
  const StateVectord symmetric = buzek_hillery(psi).state;
  const CVectord raw = filter * symmetric.amplitudes();
  const double prob = raw.squaredNorm();
  StateVectord out = StateVectord::normalized(symmetric.dims(), raw);
  const auto [fa, fb] = clone_fidelities(out, psi);
  return FilipOutcome{std::move(out), prob, fa, fb};
}

}  // namespace clonekit
