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

#ifndef CLONEKIT_UQCM_HPP
#define CLONEKIT_UQCM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clonekit/count.hpp"
#include "clonekit/qmath.hpp"

namespace clonekit {

/// Result of an N -> M universal cloning run.
struct CloneReport {
  std::vector<double> per_clone_fidelity;
  double shrinking_factor = 0;
  /// Reduced state of the first clone; all clones share it.
  DensityMatrixd single_clone;
  /// Full M-qudit output. Only produced by the dense route.
  std::optional<DensityMatrixd> output_state;
  /// <psi|^{(x) M} rho |psi>^{(x) M}
  double global_fidelity = 0;
};

enum class WernerRoute {
  /// Dense when d^M <= 256, otherwise symmetric.
  automatic,
  /// Permutation-sum projector on the full d^M space.
  dense,
  /// Occupation-number basis of the symmetric subspace.
  symmetric,
};

/// Optimal universal symmetric N -> M cloner applied to |psi>^{(x) N}.
CloneReport werner_clone(const StateVectord& psi, int N, int M,
                         WernerRoute route = WernerRoute::automatic);

/// The same map as a channel from N to M qudits. Dense budget applies.
QuantumChanneld werner_channel(int d, int N, int M);

double fidelity_formula(int N, CopyCount M, int d);
double shrinking_eta(int N, CopyCount M, int d);
/// Fidelity of a universal machine with shrinking factor eta.
double fidelity_from_eta(double eta, int d);

/// Clones A, B and the anti-clone of the 1 -> 2 qubit Buzek-Hillery machine.
struct BuzekHilleryOutput {
  DensityMatrixd clone_a;
  DensityMatrixd clone_b;
  DensityMatrixd anticlone;
  StateVectord state;
};

BuzekHilleryOutput buzek_hillery(const StateVectord& psi);
/// Isometric channel from one qubit to (A, B, anti-clone).
QuantumChanneld buzek_hillery_channel();

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t samples = 0;
};

/// Measure along a uniformly random axis, then prepare two copies of the
/// outcome. Each sample averages over the two outcomes exactly.
MonteCarloEstimate trivial_measure_clone(const StateVectord& psi, std::size_t samples,
                                         std::uint64_t seed);
/// Same average by Gauss-Legendre x uniform-azimuth quadrature on the sphere.
double trivial_measure_quadrature(const StateVectord& psi);
/// Measure-and-prepare over the three Pauli axes, outputting two copies.
QuantumChanneld measure_prepare_channel(int copies);

double trivial_amplify_fidelity(int N, int M, int d);
/// Qubit 1 -> 2 trivial amplifier: the input goes to a random slot, the
/// other slot receives I/2.
QuantumChanneld trivial_amplify_channel();

/// State-indexed map, used for maps that are not channels.
using PointwiseMap = std::function<DensityMatrixd(const StateVectord&)>;

/// psi -> psi (x) psi. No CPTP map realizes this.
PointwiseMap perfect_cloner();

struct SignalingReport {
  CMatrixd rho_x;
  CMatrixd rho_z;
  double max_deviation = 0;
  bool passes = false;
};

/// Compares the output mixtures of the +-x and +-z ensembles.
SignalingReport signaling_report(const PointwiseMap& map);
SignalingReport signaling_report(const QuantumChanneld& ch);

/// Requires a qubit -> two-qubit channel.
bool no_signaling_check(const QuantumChanneld& ch);
bool no_signaling_check(const PointwiseMap& map);

}  // namespace clonekit

#endif  // CLONEKIT_UQCM_HPP
