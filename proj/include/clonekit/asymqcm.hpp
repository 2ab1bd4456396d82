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

#ifndef CLONEKIT_ASYMQCM_HPP
#define CLONEKIT_ASYMQCM_HPP

#include <array>
#include <utility>

#include "clonekit/qmath.hpp"

namespace clonekit {

/// Parameters of the asymmetric 1 -> 1+1 universal cloner in both the circuit
/// (a, b) and Cerf (v, x) conventions. a, b >= 0.
class AsymParams {
 public:
  static AsymParams from_circuit(int d, double a, double b);
  static AsymParams from_cerf(int d, double v, double x);
  static AsymParams symmetric(int d);
  /// The member of the family whose clone A has fidelity `fa` in [1/d, 1].
  static AsymParams from_fidelity_a(int d, double fa);

  int d() const { return d_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double v() const { return v_; }
  double x() const { return x_; }

 private:
  AsymParams(int d, double a, double b, double v, double x);
  int d_;
  double a_, b_, v_, x_;
};

/// a |psi>_A |pair>_BM + b |psi>_B |pair>_AM. The pair defaults to |Phi+>.
StateVectord asym_output_state(const StateVectord& psi, const AsymParams& p);
StateVectord asym_output_state(const StateVectord& psi, const AsymParams& p, const StateVectord& pair);

/// Isometric channel from one qudit to (A, B, M).
QuantumChanneld asym_channel(const AsymParams& p);

/// Basis action |s>|w>|x> -> |s+w+x>|s+w>|s+x> (mod 2).
std::array<int, 3> circuit_map_qubit(int sigma, int omega, int xi);

/// Permutation unitary |s>|w>|x> -> |s-w+x>|s+w>|s+x> (mod d) on three qudits.
/// It reduces to the qubit map at d = 2.
CMatrixd circuit_unitary(int d);
/// Program state a|Phi+>_BM + b|0>_B|+>_M.
StateVectord circuit_program(const AsymParams& p);
/// circuit_unitary applied to |psi>_A (x) program.
StateVectord circuit_output(const StateVectord& psi, const AsymParams& p);

/// Shift-and-phase operator U_{m,n} = sum_k e^{2 pi i k n / d} |k+m><k|.
CMatrixd weyl_operator(int d, int m, int n);

/// v I + x sum_{(m,n) != (0,0)} U_{m,n} (x) U_{m,n}^dagger (x) I on (A, B, M).
/// Throws unless v^2 + (d^2-1) x^2 = 1.
CMatrixd cerf_operator(int d, double v, double x);
/// cerf_operator applied to |psi>_A |Phi+>_BM.
StateVectord cerf_output(const StateVectord& psi, const AsymParams& p);

/// Closed-form (F_A, F_B).
std::pair<double, double> asym_fidelities(const AsymParams& p);
/// (F_A, F_B) from the partial traces of a three-qudit output state.
std::pair<double, double> clone_fidelities(const StateVectord& out, const StateVectord& psi);

/// sqrt(e_A e_B) - [(d-1)/2 - (d/2)(e_A + e_B)] with e = 1 - F. Non-negative
/// for admissible pairs and zero on the optimal curve. At d = 2 this is the
/// qubit no-cloning inequality.
double clonineq_gap(double fa, double fb, int d = 2);

/// (2T-1) I + 2(1-T) |Psi-><Psi-| on two qubits, T in [1/2, 1].
CMatrixd filip_projector(double T);

struct FilipOutcome {
  StateVectord state;
  double success_probability;
  double fa;
  double fb;
};

/// Projects (B, M) of the Buzek-Hillery output with filip_projector(T) and
/// renormalizes. A keeps the original clone, B the projected one.
FilipOutcome filip_asymmetric(const StateVectord& psi, double T);

}  // namespace clonekit

#endif  // CLONEKIT_ASYMQCM_HPP
