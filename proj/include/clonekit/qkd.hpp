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

#ifndef CLONEKIT_QKD_HPP
#define CLONEKIT_QKD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "clonekit/qmath.hpp"

namespace clonekit {

/// Incoherent critical error rate of the six-state protocol. Reference value
/// only; it is not derived here.
inline constexpr double kSixStateIncoherentDc = 0.157;

/// Figures of merit of one eavesdropping attack on BB84. Bob holds clone A,
/// Eve holds the rest.
struct AttackOutcome {
  double eta = 0;
  double f_ab = 0;
  /// Probability that Eve's guess matches Alice's bit.
  double f_ae = 0;
  /// Probability that Eve's guess matches Bob's bit.
  double p_be = 0;
  double i_ab = 0;
  double i_ae = 0;
  double i_be = 0;
  std::optional<double> chi_ae;
  std::optional<double> chi_be;
};

enum class AttackMode { incoherent, collective };

double binary_entropy(double p);

/// Holevo quantity S(sum p rho) - sum p S(rho) in bits.
double holevo_chi(const std::vector<std::pair<double, CMatrixd>>& ensemble);

/// Optimal probability of telling two states apart with the given priors.
double helstrom_probability(const CMatrixd& rho0, const CMatrixd& rho1, double p0 = 0.5);

/// Attack with the ancilla-free phase-covariant cloner, evaluated on the
/// explicit states. Eve measures sigma_x.
AttackOutcome bb84_no_ancilla(double eta);

/// Diagnostics of the Bell-basis relabelling of Eve's two qubits.
struct RelabelCheck {
  /// Largest amplitude difference from sqrt(F)|+-x>|chi+->|0> -+ sqrt(D)|-+x>|chi-+>|1>.
  double residual = 0;
  /// |<chi+|chi->| extracted from the relabelled states.
  double chi_overlap = 0;
};

/// Attack with the ancilla phase-covariant cloner, evaluated on the explicit
/// states. Eve measures E2 in the computational basis after relabelling, then
/// discriminates E1 optimally.
AttackOutcome bb84_with_ancilla(double eta);
RelabelCheck bb84_relabel_check(double eta);
/// Two-qubit unitary Phi+ -> 00, Psi+ -> 10, Phi- -> 11, Psi- -> 01.
CMatrixd bell_relabelling();

/// Closed forms for the same quantities.
AttackOutcome bb84_closed_form(double eta, bool ancilla);

/// Incoherent: I_AB - min(I_AE, I_BE). Collective: I_AB - min(chi_AE, chi_BE).
/// Throws when collective mode is asked for without chi values.
double key_rate(const AttackOutcome& outcome, AttackMode mode);

/// Incoherent: the error rate where Bob's and Eve's fidelities cross.
/// Collective: the root of 1 - 2H(D) on (0, 1/2). Both by bisection.
double critical_disturbance(AttackMode mode);

/// Zero of the collective key rate of bb84_with_ancilla, as an error rate,
/// found by bisection on the explicit-state rate.
double collective_threshold_from_states();

}  // namespace clonekit

#endif  // CLONEKIT_QKD_HPP
