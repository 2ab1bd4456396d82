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

#ifndef CLONEKIT_STIMEM_HPP
#define CLONEKIT_STIMEM_HPP

#include <vector>

#include "clonekit/combinatorics.hpp"

namespace clonekit {

/// Emission of k photons into a two-mode amplifier whose first mode holds N
/// photons. weights[l] = (N+l)! / (N! l!) is the relative probability that l
/// of them join the occupied mode.
struct EmissionModel {
  int N;
  int k;
  std::vector<BigInt> weights;
  std::vector<Rational> pmf;
  Rational mean_l;
};

/// Throws when sum(weights) differs from (N+k+1)! / ((N+1)! k!).
EmissionModel emission_pmf(int N, int k);

/// Fraction of the M output photons in the input mode, (N + <l>)/M with k = M - N.
Rational stim_fidelity_exact(int N, int M);
double stim_fidelity(int N, int M);

/// Sum over the C(k, l) emission histories with l photons into the occupied
/// mode of the squared amplitude, built by applying creation operators one
/// photon at a time to |N, 0>. Every history ends in |N+l, k-l>.
BigInt fock_oracle(int N, int k, int l);

/// (Q mo mi + mo + mi) / (Q mo mi + 2 mo)
double classical_amp_fidelity(double mu_in, double mu_out, double Q);

/// Two photons in the input bin count 1 each; the d-1 other bins count 1/2.
double timebin_fidelity(int d);

struct PdcCheck {
  /// |<mapped PDC state | Buzek-Hillery output on |0>>|
  double overlap;
  /// Signal fidelity by photon counting over the Fock components.
  double counted_fidelity;
  /// Signal fidelity from the partial trace of the mapped state.
  double clone_fidelity;
  /// Idler fidelity with |1>, the orthogonal state.
  double anticlone_fidelity;
  bool passes;
};

/// First-order parametric down-conversion output mapped onto qubits.
PdcCheck pdc_first_order_check();

}  // namespace clonekit

#endif  // CLONEKIT_STIMEM_HPP
