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

#ifndef CLONEKIT_PCQCM_HPP
#define CLONEKIT_PCQCM_HPP

#include "clonekit/qmath.hpp"

namespace clonekit {

/// (|0> + e^{i phi}|1>)/sqrt(2)
StateVectord equator_state(double phi);

struct ClonePair {
  DensityMatrixd rho_a;
  DensityMatrixd rho_b;
};

/// Two-qubit unitary |00> -> |00>, |10> -> cos(eta)|10> + sin(eta)|01>,
/// completed by |01> -> cos(eta)|01> - sin(eta)|10>, |11> -> |11>.
CMatrixd ng_unitary(double eta);
/// Ancilla-free phase-covariant cloner on psi(phi) (x) |0>. eta in [0, pi/2].
ClonePair ng_clone(double phi, double eta);
/// The same machine as a qubit -> two-qubit isometry.
QuantumChanneld ng_channel(double eta);

/// Three-qubit unitary on (A, B, M): the ancilla-free unitary on AB when M = 0
/// and its X(x)X conjugate when M = 1.
CMatrixd pc_ancilla_unitary(double eta);

struct PcAncillaOutput {
  DensityMatrixd rho_a;
  DensityMatrixd rho_b;
  /// Joint state of (B, M).
  DensityMatrixd eve_state;
  StateVectord state;
};

/// Applies pc_ancilla_unitary to a three-qubit input. Throws unless the input
/// lies in span{|000>, |100>, |011>, |111>}, where the unitary is specified.
StateVectord pc_ancilla_apply(const StateVectord& input, double eta);
/// Phase-covariant cloner with ancilla on psi(phi)_A |Phi+>_BM.
PcAncillaOutput pc_ancilla_clone(double phi, double eta);
PcAncillaOutput pc_ancilla_clone(const StateVectord& psi, double eta);
/// The same machine as a qubit -> (A, B, M) isometry.
QuantumChanneld pc_ancilla_channel(double eta);

/// F I + (1-F) Z(x)Z(x)I + sqrt(F(1-F)) (X(x)X + Y(x)Y)(x)I
CMatrixd cerfpc_operator(double F);

/// Optimal symmetric fidelity for cloning two pure qubit states with overlap s.
double two_state_fidelity(double s);

struct EquatorEquivalence {
  /// T[sigma_x] = eta sigma_x and T[sigma_y] = eta sigma_y.
  bool premise = false;
  /// T[I] = I.
  bool unital = false;
  double eta = 0;
  /// Largest deviation of T[psi(phi)] from eta psi(phi) + (T[I] - eta I)/2 on the grid.
  double max_deviation = 0;
  bool equivalent = false;
};

/// Checks that a qubit channel acting on the BB84 states by pure shrinking
/// acts the same way on the whole equator. Non-unital maps are allowed: the
/// shrinking then happens towards T[I]/2 instead of I/2.
EquatorEquivalence bb84_equator_equivalence(const QuantumChanneld& ch, int grid = 64);

}  // namespace clonekit

#endif  // CLONEKIT_PCQCM_HPP
