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

#include "clonekit/pcqcm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clonekit {
namespace {

constexpr double kEquivalenceTol = 1e-10;
constexpr double kSpanTol = 1e-12;

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= std::numbers::pi / 2)) throw std::invalid_argument("eta must lie in [0, pi/2]");
}

}  // namespace

StateVectord equator_state(double phi) {
  const double r = 1.0 / std::sqrt(2.0);
  return StateVectord::qubit(r, std::polar(r, phi));
}

CMatrixd ng_unitary(double eta) {
  check_eta(eta);
  const double c = std::cos(eta);
  const double s = std::sin(eta);
  CMatrixd u = CMatrixd::Zero(4, 4);
  u(0b00, 0b00) = 1;
  u(0b10, 0b10) = c;
  u(0b01, 0b10) = s;
  u(0b01, 0b01) = c;
  u(0b10, 0b01) = -s;
  u(0b11, 0b11) = 1;
  return u;
}

QuantumChanneld ng_channel(double eta) {
  const CMatrixd u = ng_unitary(eta);
  CMatrixd v(4, 2);
  v.col(0) = u.col(0b00);
  v.col(1) = u.col(0b10);
  return QuantumChanneld::isometry(HilbertDims{2}, HilbertDims{2, 2}, std::move(v));
}

ClonePair ng_clone(double phi, double eta) {
  const DensityMatrixd out = apply_channel(ng_channel(eta), equator_state(phi).projector());
  return ClonePair{partial_trace(out, {0}), partial_trace(out, {1})};
}

CMatrixd pc_ancilla_unitary(double eta) {
  const CMatrixd u = ng_unitary(eta);
  const CMatrixd xx = kron<double>(Pauli<double>::X(), Pauli<double>::X());
  CMatrixd p0 = CMatrixd::Zero(2, 2);
  CMatrixd p1 = CMatrixd::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  return kron<double>(u, p0) + kron<double>(xx * u * xx, p1);
}

StateVectord pc_ancilla_apply(const StateVectord& input, double eta) {
  if (input.dims() != HilbertDims{2, 2, 2}) throw std::invalid_argument("pc_ancilla_apply: expected three qubits");
  const auto& a = input.amplitudes();
  for (int idx : {0b001, 0b010, 0b101, 0b110})
    if (std::abs(a(idx)) > kSpanTol) throw std::invalid_argument("pc_ancilla_apply: input outside the specified span");
  return StateVectord(input.dims(), pc_ancilla_unitary(eta) * a);
}

PcAncillaOutput pc_ancilla_clone(const StateVectord& psi, double eta) {
  if (psi.dims() != HilbertDims{2}) throw std::invalid_argument("pc_ancilla_clone: input must be a qubit");
  StateVectord out = pc_ancilla_apply(tensor(psi, Bell<double>::phi_plus()), eta);
  const DensityMatrixd rho = out.projector();
  return PcAncillaOutput{partial_trace(rho, {0}), partial_trace(rho, {1}), partial_trace(rho, {1, 2}),
                         std::move(out)};
}

PcAncillaOutput pc_ancilla_clone(double phi, double eta) { return pc_ancilla_clone(equator_state(phi), eta); }

QuantumChanneld pc_ancilla_channel(double eta) {
  const CMatrixd u = pc_ancilla_unitary(eta);
  CMatrixd v(8, 2);
  for (int s = 0; s < 2; ++s)
    v.col(s) = u * tensor(StateVectord::basis(HilbertDims{2}, s), Bell<double>::phi_plus()).amplitudes();
  return QuantumChanneld::isometry(HilbertDims{2}, HilbertDims{2, 2, 2}, std::move(v));
}

CMatrixd cerfpc_operator(double F) {
  if (!(F >= 0.0 && F <= 1.0)) throw std::invalid_argument("cerfpc_operator: F must lie in [0, 1]");
  using P = Pauli<double>;
  const CMatrixd id = P::I();
  return F * CMatrixd::Identity(8, 8) + (1.0 - F) * kron<double>(kron<double>(P::Z(), P::Z()), id) +
         std::sqrt(F * (1.0 - F)) *
             kron<double>(kron<double>(P::X(), P::X()) + kron<double>(P::Y(), P::Y()), id);
}

double two_state_fidelity(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("two_state_fidelity: s must lie in [0, 1]");
  const double r = std::sqrt(1.0 - 2.0 * s + 9.0 * s * s);
  if (s < 0.25) {
    // The radicand equals 16 s^2 (1-2s) / den; this form avoids cancellation near s = 0.
    const double den = (1.0 - s) * r + 1.0 - 2.0 * s - 3.0 * s * s;
    return 0.5 + std::numbers::sqrt2 / 8.0 * (1.0 + s) * (3.0 - 3.0 * s + r) * std::sqrt((1.0 - 2.0 * s) / den);
  }
  const double g = -1.0 + 2.0 * s + 3.0 * s * s + (1.0 - s) * r;
  return 0.5 + std::numbers::sqrt2 / (32.0 * s) * (1.0 + s) * (3.0 - 3.0 * s + r) * std::sqrt(std::max(0.0, g));
}

EquatorEquivalence bb84_equator_equivalence(const QuantumChanneld& ch, int grid) {
  if (ch.input_dims() != HilbertDims{2} || ch.output_dims() != HilbertDims{2})
    throw std::invalid_argument("bb84_equator_equivalence: expected a qubit -> qubit channel");
  if (grid < 1) throw std::invalid_argument("bb84_equator_equivalence: grid must be positive");
  using P = Pauli<double>;
  const CMatrixd tx = apply_channel(ch, CMatrixd(P::X()));
  const CMatrixd ty = apply_channel(ch, CMatrixd(P::Y()));
  const CMatrixd ti = apply_channel(ch, CMatrixd(P::I()));

  EquatorEquivalence r;
  r.eta = (tx * P::X()).trace().real() / 2.0;
  r.premise = max_abs_diff<double>(tx, r.eta * P::X()) <= kEquivalenceTol &&
              max_abs_diff<double>(ty, r.eta * P::Y()) <= kEquivalenceTol;
  r.unital = max_abs_diff<double>(ti, P::I()) <= kEquivalenceTol;
  for (int k = 0; k < grid; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / grid;
    const DensityMatrixd psi = equator_state(phi).projector();
    const CMatrixd expected = r.eta * psi.matrix() + (ti - r.eta * P::I()) / 2.0;
    r.max_deviation = std::max(r.max_deviation, max_abs_diff<double>(apply_channel(ch, psi).matrix(), expected));
  }
  r.equivalent = r.premise && r.max_deviation <= kEquivalenceTol;
  return r;
}

}  // namespace clonekit
