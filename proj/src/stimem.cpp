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

#include "clonekit/stimem.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "clonekit/qmath.hpp"
#include "clonekit/symspace.hpp"
#include "clonekit/uqcm.hpp"

namespace clonekit {
namespace {

constexpr int kOracleMaxPhotons = 20;
constexpr double kPdcTol = 1e-10;

}  // namespace

EmissionModel emission_pmf(int N, int k) {
  if (N < 0 || k < 1) throw std::invalid_argument("emission_pmf: need N >= 0 and k >= 1");
  EmissionModel m{N, k, {}, {}, Rational(0)};
  const BigInt nf = factorial(N);
  BigInt total = 0;
  for (int l = 0; l <= k; ++l) {
    m.weights.push_back(factorial(N + l) / (nf * factorial(l)));
    total += m.weights.back();
  }
  if (total != factorial(N + k + 1) / (factorial(N + 1) * factorial(k)))
    throw std::logic_error("emission_pmf: weight sum identity failed");
  for (int l = 0; l <= k; ++l) {
    m.pmf.emplace_back(m.weights[static_cast<std::size_t>(l)], total);
    m.mean_l += Rational(l) * m.pmf.back();
  }
  return m;
}

Rational stim_fidelity_exact(int N, int M) {
  if (N < 1 || M <= N) throw std::invalid_argument("stim_fidelity: need M > N >= 1");
  return (Rational(N) + emission_pmf(N, M - N).mean_l) / M;
}

double stim_fidelity(int N, int M) { return to_double(stim_fidelity_exact(N, M)); }

BigInt fock_oracle(int N, int k, int l) {
  if (N < 0 || k < 0 || l < 0 || l > k) throw std::invalid_argument("fock_oracle: need N, k >= 0 and 0 <= l <= k");
  if (N + k > kOracleMaxPhotons) throw std::length_error("fock_oracle: photon budget exceeded");
  BigInt sum = 0;
  for (unsigned long history = 0; history < (1UL << k); ++history) {
    if (std::popcount(history) != l) continue;
    int occupied = N;
    int empty = 0;
    BigInt amp2 = 1;  // squared amplitude of the history
    for (int step = 0; step < k; ++step) {
      // a^dagger |n> = sqrt(n+1) |n+1>
      if ((history >> step) & 1UL) {
        amp2 *= occupied + 1;
        ++occupied;
      } else {
        amp2 *= empty + 1;
        ++empty;
      }
    }
    if (occupied != N + l || empty != k - l) throw std::logic_error("fock_oracle: history ended in the wrong state");
    sum += amp2;
  }
  return sum;
}

double classical_amp_fidelity(double mu_in, double mu_out, double Q) {
  if (!(mu_in > 0.0) || !(mu_out >= mu_in)) throw std::invalid_argument("classical_amp_fidelity: need mu_out >= mu_in > 0");
  if (!(Q >= 0.0 && Q <= 1.0)) throw std::invalid_argument("classical_amp_fidelity: Q must lie in [0, 1]");
  return (Q * mu_out * mu_in + mu_out + mu_in) / (Q * mu_out * mu_in + 2.0 * mu_out);
}

double timebin_fidelity(int d) {
  if (d < 2) throw std::invalid_argument("timebin_fidelity: d must be >= 2");
  const double events = 2.0 + (d - 1.0);
  const double good = 2.0 * 1.0 + (d - 1.0) * 0.5;
  return good / events;
}

PdcCheck pdc_first_order_check() {
  // Fock components (signal occupation (H, V), idler occupation (H, V), amplitude).
  struct Term {
    Occupation signal;
    int idler_v;
    double amp;
  };
  const std::vector<Term> terms{{{2, 0}, 1, std::sqrt(2.0 / 3.0)}, {{1, 1}, 0, -std::sqrt(1.0 / 3.0)}};

  // Two signal photons live in the symmetric subspace of two qubits; one idler photon is one qubit.
  const SymmetricSubspace signal(2, 2);
  const CMatrixd embed = sym_isometry(signal);
  CVectord mapped = CVectord::Zero(8);
  double counted = 0;
  for (const auto& t : terms) {
    const CVectord s = embed.col(signal.index_of(t.signal));
    for (Eigen::Index i = 0; i < 4; ++i) mapped(2 * i + t.idler_v) += t.amp * s(i);
    // Each signal photon is a clone: it matches |0> when horizontal.
    counted += t.amp * t.amp * t.signal[0] / 2.0;
  }
  const StateVectord pdc(HilbertDims{2, 2, 2}, mapped);
  const StateVectord zero = StateVectord::basis(HilbertDims{2}, 0);
  const BuzekHilleryOutput bh = buzek_hillery(zero);

  PdcCheck c{};
  c.overlap = overlap_modulus<double>(pdc.amplitudes(), bh.state.amplitudes());
  c.counted_fidelity = counted;
  const DensityMatrixd rho = pdc.projector();
  c.clone_fidelity = fidelity_pure(partial_trace(rho, {0}), zero);
  c.anticlone_fidelity = fidelity_pure(partial_trace(rho, {2}), StateVectord::basis(HilbertDims{2}, 1));
  c.passes = std::abs(c.overlap - 1.0) <= kPdcTol && std::abs(c.counted_fidelity - 5.0 / 6.0) <= kPdcTol &&
             std::abs(c.clone_fidelity - 5.0 / 6.0) <= kPdcTol && std::abs(c.anticlone_fidelity - 2.0 / 3.0) <= kPdcTol;
  return c;
}

}  // namespace clonekit
