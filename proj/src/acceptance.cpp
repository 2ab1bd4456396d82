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

#include "clonekit/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "clonekit/asymqcm.hpp"
#include "clonekit/cvclone.hpp"
#include "clonekit/estim.hpp"
#include "clonekit/pcqcm.hpp"
#include "clonekit/qkd.hpp"
#include "clonekit/stimem.hpp"
#include "clonekit/symspace.hpp"
#include "clonekit/uqcm.hpp"

namespace clonekit {
namespace {

// Tolerances, one per check.
constexpr double kWernerTol = 1e-9;
constexpr Eigen::Index kWernerMaxDim = 4096;
constexpr Eigen::Index kWernerDenseDim = 256;
constexpr double kBhFidelityTol = 1e-9;
constexpr double kBhAnticloneTol = 1e-10;
constexpr double kBhMarginalTol = 1e-10;
constexpr double kClonineqTol = 1e-9;
constexpr double kOverlapTol = 1e-10;
constexpr double kPhaseCovTol = 1e-12;
constexpr double kIncoherentDcTol = 1e-4;
constexpr double kCollectiveDcTol = 1e-3;
constexpr double kInfoTol = 1e-9;
constexpr double kSymmetryTol = 1e-12;
constexpr double kCvTol = 1e-10;
constexpr double kStimTol = 1e-12;
constexpr double kClassicalTol = 0.01;
constexpr double kContinuityTol = 1e-9;
constexpr double kLimitTol = 1e-3;
constexpr double kSignalTol = 1e-12;

/// Running maximum of absolute deviations, labelled for the report.
class Worst {
 public:
  void update(const std::string& label, double deviation) {
    if (!std::isfinite(deviation)) deviation = std::numeric_limits<double>::infinity();
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == label; });
    if (it == entries_.end())
      entries_.emplace_back(label, deviation);
    else
      it->second = std::max(it->second, deviation);
  }
  double operator[](const std::string& label) const {
    for (const auto& e : entries_)
      if (e.first == label) return e.second;
    return 0;
  }
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3g", entries_[i].second);
      os << (i ? ", " : "") << entries_[i].first << "=" << buf;
    }
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

Eigen::Index power(int d, int n) {
  Eigen::Index r = 1;
  for (int k = 0; k < n; ++k) r *= d;
  return r;
}

CriterionResult make(int id, std::string name, bool passed, const Worst& w, std::string extra = "") {
  std::string detail = w.str();
  if (!extra.empty()) detail += (detail.empty() ? "" : "; ") + extra;
  return CriterionResult{id, std::move(name), passed, std::move(detail)};
}

}  // namespace

std::vector<std::pair<std::string, QuantumChanneld>> library_channels() {
  std::vector<std::pair<std::string, QuantumChanneld>> out;
  const QuantumChanneld bh = buzek_hillery_channel();
  out.emplace_back("buzek-hillery clones", marginal(bh, {0, 1}));
  out.emplace_back("buzek-hillery clone+anticlone", marginal(bh, {0, 2}));
  out.emplace_back("werner 1->2", werner_channel(2, 1, 2));
  for (double fa : {0.6, 5.0 / 6.0, 0.95}) {
    const QuantumChanneld asym = asym_channel(AsymParams::from_fidelity_a(2, fa));
    out.emplace_back("asymmetric clones F_A=" + std::to_string(fa), marginal(asym, {0, 1}));
    out.emplace_back("asymmetric B+M F_A=" + std::to_string(fa), marginal(asym, {1, 2}));
  }
  for (double eta : {0.0, 0.3, std::numbers::pi / 4, 1.2}) {
    out.emplace_back("phase-covariant eta=" + std::to_string(eta), ng_channel(eta));
    const QuantumChanneld pc = pc_ancilla_channel(eta);
    out.emplace_back("phase-covariant ancilla clones eta=" + std::to_string(eta), marginal(pc, {0, 1}));
    out.emplace_back("phase-covariant ancilla eve eta=" + std::to_string(eta), marginal(pc, {1, 2}));
  }
  out.emplace_back("measure and prepare", measure_prepare_channel(2));
  out.emplace_back("trivial amplifier", trivial_amplify_channel());
  CMatrixd append = CMatrixd::Zero(4, 2);  // rho -> rho (x) |0><0|
  append(0b00, 0) = 1;
  append(0b10, 1) = 1;
  out.emplace_back("identity with blank", QuantumChanneld::isometry(HilbertDims{2}, HilbertDims{2, 2}, append));
  return out;
}

CriterionResult check_universal_cloning(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Worst w;
  int cases = 0;
  for (int d = 2; power(d, 2) <= kWernerMaxDim; ++d) {
    for (int M = 2; power(d, M) <= kWernerMaxDim; ++M) {
      for (int N = 1; N < M; ++N) {
        const StateVectord psi = haar_state<double>(HilbertDims{d}, rng);
        const double f = fidelity_formula(N, M, d);
        const CloneReport sym = werner_clone(psi, N, M, WernerRoute::symmetric);
        w.update("symmetric-route", std::abs(sym.per_clone_fidelity[0] - f));
        w.update("trace", std::abs(sym.single_clone.matrix().trace().real() - 1.0));
        if (power(d, M) <= kWernerDenseDim) {
          const CloneReport dense = werner_clone(psi, N, M, WernerRoute::dense);
          for (double fj : dense.per_clone_fidelity) w.update("dense-route", std::abs(fj - f));
          w.update("routes-agree", max_abs_diff<double>(dense.single_clone.matrix(), sym.single_clone.matrix()));
          w.update("global", std::abs(dense.global_fidelity - sym.global_fidelity));
        }
        ++cases;
      }
    }
  }
  const StateVectord zero = StateVectord::basis(HilbertDims{2}, 0);
  const StateVectord qutrit = StateVectord::basis(HilbertDims{3}, 1);
  w.update("F(1,2,2)-5/6", std::abs(werner_clone(zero, 1, 2).per_clone_fidelity[0] - 5.0 / 6.0));
  w.update("F(2,3,2)-11/12", std::abs(werner_clone(zero, 2, 3).per_clone_fidelity[0] - 11.0 / 12.0));
  w.update("F(1,2,3)-3/4", std::abs(werner_clone(qutrit, 1, 2).per_clone_fidelity[0] - 0.75));
  const bool ok = w["symmetric-route"] <= kWernerTol && w["dense-route"] <= kWernerTol &&
                  w["routes-agree"] <= kWernerTol && w["global"] <= kWernerTol && w["trace"] <= kWernerTol &&
                  w["F(1,2,2)-5/6"] <= kWernerTol && w["F(2,3,2)-11/12"] <= kWernerTol &&
                  w["F(1,2,3)-3/4"] <= kWernerTol;
  return make(1, "universal cloning", ok, w, std::to_string(cases) + " (N,M,d) cases");
}

CriterionResult check_buzek_hillery(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  Worst w;
  for (int i = 0; i < 100; ++i) {
    const StateVectord psi = haar_state<double>(HilbertDims{2}, rng);
    const BuzekHilleryOutput bh = buzek_hillery(psi);
    w.update("F_A", std::abs(fidelity_pure(bh.clone_a, psi) - 5.0 / 6.0));
    w.update("F_B", std::abs(fidelity_pure(bh.clone_b, psi) - 5.0 / 6.0));
    w.update("anticlone", std::abs(fidelity_pure(bh.anticlone, qubit_perp(psi)) - 2.0 / 3.0));
    const CloneReport wr = werner_clone(psi, 1, 2, WernerRoute::dense);
    w.update("vs-werner", max_abs_diff<double>(bh.clone_a.matrix(), partial_trace(*wr.output_state, {0}).matrix()));
    w.update("vs-werner", max_abs_diff<double>(bh.clone_b.matrix(), partial_trace(*wr.output_state, {1}).matrix()));
  }
  const bool ok = w["F_A"] < kBhFidelityTol && w["F_B"] < kBhFidelityTol && w["anticlone"] <= kBhAnticloneTol &&
                  w["vs-werner"] <= kBhMarginalTol;
  return make(2, "buzek-hillery machine", ok, w);
}

CriterionResult check_asymmetric(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 2);
  Worst w;
  for (int d : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      // Interior points only: at F_A = 1 the square root turns rounding in e_B ~ 1e-16 into ~1e-8.
      const double fa = 1.0 / d + (1.0 - 1.0 / d) * (i + 0.5) / 20.0;
      const AsymParams p = AsymParams::from_fidelity_a(d, fa);
      const StateVectord psi = haar_state<double>(HilbertDims{d}, rng);
      const StateVectord direct = asym_output_state(psi, p);
      const auto [bfa, bfb] = clone_fidelities(direct, psi);
      w.update("clonineq", std::abs(clonineq_gap(bfa, bfb, d)));
      const auto [ffa, ffb] = asym_fidelities(p);
      w.update("formula", std::max(std::abs(bfa - ffa), std::abs(bfb - ffb)));
      const StateVectord circuit = circuit_output(psi, p);
      const StateVectord cerf = cerf_output(psi, p);
      w.update("overlap", 1.0 - overlap_modulus<double>(direct.amplitudes(), circuit.amplitudes()));
      w.update("overlap", 1.0 - overlap_modulus<double>(direct.amplitudes(), cerf.amplitudes()));
      w.update("overlap", 1.0 - overlap_modulus<double>(circuit.amplitudes(), cerf.amplitudes()));
    }
  }
  const bool ok = w["clonineq"] <= kClonineqTol && w["formula"] <= kClonineqTol && w["overlap"] <= kOverlapTol;
  return make(3, "asymmetric cloning", ok, w);
}

CriterionResult check_phase_covariant() {
  Worst w;
  const double target = (1.0 + 1.0 / std::numbers::sqrt2) / 2.0;
  const double eta = std::numbers::pi / 4;
  std::vector<double> fas;
  for (int k = 0; k < 50; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 50.0;
    const StateVectord psi = equator_state(phi);
    const ClonePair ng = ng_clone(phi, eta);
    const PcAncillaOutput pc = pc_ancilla_clone(phi, eta);
    const double fa = fidelity_pure(ng.rho_a, psi);
    fas.push_back(fa);
    w.update("symmetric", std::abs(fa - target));
    w.update("symmetric", std::abs(fidelity_pure(ng.rho_b, psi) - target));
    w.update("symmetric", std::abs(fidelity_pure(pc.rho_a, psi) - target));
    w.update("symmetric", std::abs(fidelity_pure(pc.rho_b, psi) - target));
  }
  const auto [lo, hi] = std::minmax_element(fas.begin(), fas.end());
  w.update("phi-spread", *hi - *lo);
  // Fix F_A on both machines and compare F_B.
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 50; ++k) {
    const double e = std::numbers::pi / 2 * k / 50.0;
    const double fa = (1.0 + std::cos(e)) / 2.0;
    const double fb_pc = fidelity_pure(ng_clone(0.0, e).rho_b, equator_state(0.0));
    const double fb_univ = asym_fidelities(AsymParams::from_fidelity_a(2, fa)).second;
    worst_margin = std::min(worst_margin, fb_pc - fb_univ);
  }
  const bool ok = w["symmetric"] <= kPhaseCovTol && w["phi-spread"] <= kPhaseCovTol && worst_margin >= -kPhaseCovTol;
  char buf[64];
  std::snprintf(buf, sizeof buf, "min F_B margin over universal=%.3g", worst_margin);
  return make(4, "phase-covariant cloning", ok, w, buf);
}

CriterionResult check_state_estimation() {
  int exact = 0;
  int failures = 0;
  for (int N = 1; N <= 20; ++N)
    for (int M = N + 1; M <= 20; ++M) {
      if (cascade_saturated_exact(N, M, 2)) ++exact;
      else ++failures;
    }
  int cascades = 0;
  std::vector<CopyCount> grid;
  for (int n = 1; n <= 20; ++n) grid.emplace_back(n);
  grid.push_back(CopyCount::infinite());
  for (int N = 1; N <= 20; ++N)
    for (std::size_t m = static_cast<std::size_t>(N - 1); m < grid.size(); ++m)
      for (std::size_t l = m; l < grid.size(); ++l) {
        ++cascades;
        if (!multiplicativity_check(N, grid[m], grid[l], 2)) ++failures;
      }
  return CriterionResult{5, "state estimation", failures == 0,
                         std::to_string(exact) + " exact rational equalities, " + std::to_string(cascades) +
                             " cascade triples, failures=" + std::to_string(failures)};
}

CriterionResult check_qkd() {
  Worst w;
  const double dc_inc = critical_disturbance(AttackMode::incoherent);
  const double dc_col = critical_disturbance(AttackMode::collective);
  const double dc_states = collective_threshold_from_states();
  w.update("Dc-incoherent", std::abs(dc_inc - 0.1464));
  w.update("Dc-collective", std::abs(dc_col - 0.1100));
  w.update("Dc-from-states", std::abs(dc_states - dc_col));
  w.update("1-2H(Dc)", std::abs(1.0 - 2.0 * binary_entropy(dc_col)));
  for (int k = 0; k < 50; ++k) {
    const double eta = std::numbers::pi / 2 * k / 49.0;
    const AttackOutcome na = bb84_no_ancilla(eta);
    const AttackOutcome nf = bb84_closed_form(eta, false);
    const AttackOutcome wa = bb84_with_ancilla(eta);
    const AttackOutcome wf = bb84_closed_form(eta, true);
    for (const auto& [s, f] : {std::pair{na, nf}, std::pair{wa, wf}}) {
      w.update("states-vs-formula", std::abs(s.f_ab - f.f_ab));
      w.update("states-vs-formula", std::abs(s.f_ae - f.f_ae));
      w.update("states-vs-formula", std::abs(s.p_be - f.p_be));
      w.update("states-vs-formula", std::abs(s.i_ab - f.i_ab));
      w.update("states-vs-formula", std::abs(s.i_ae - f.i_ae));
      w.update("states-vs-formula", std::abs(s.i_be - f.i_be));
    }
    w.update("chi-vs-formula", std::abs(*wa.chi_ae - *wf.chi_ae));
    w.update("chi-vs-formula", std::abs(*wa.chi_be - *wf.chi_be));
    w.update("I_AE-I_BE", std::abs(wa.i_ae - wa.i_be));
    w.update("relabel", bb84_relabel_check(eta).residual);
  }
  const bool ok = w["Dc-incoherent"] <= kIncoherentDcTol && w["Dc-collective"] <= kCollectiveDcTol &&
                  w["Dc-from-states"] <= kCollectiveDcTol && w["states-vs-formula"] <= kInfoTol &&
                  w["chi-vs-formula"] <= kInfoTol && w["I_AE-I_BE"] <= kSymmetryTol && w["relabel"] <= kInfoTol;
  char buf[96];
  std::snprintf(buf, sizeof buf, "Dc incoherent=%.6f collective=%.6f", dc_inc, dc_col);
  return make(6, "qkd eavesdropping", ok, w, buf);
}

CriterionResult check_cv_networks() {
  Worst w;
  {
    const CloneNetworkResult r = clone_network(1, 2, GaussianEnsembled::coherent(1.0, -0.5));
    for (int c = 0; c < 2; ++c) {
      w.update("1->2 variance", std::abs(r.output.variance_x(c) - 1.0));
      w.update("1->2 variance", std::abs(r.output.variance_p(c) - 1.0));
    }
    const auto& m = r.output.mean();
    w.update("anticlone mean", std::max(std::abs(m(2 * r.anticlone_mode()) - 1.0),
                                        std::abs(m(2 * r.anticlone_mode() + 1) - 0.5)));
    w.update("symplectic", r.transform.symplectic_residual());
    const ArthursKellyReport ak = arthurs_kelly(r.output, 0, 1);
    w.update("arthurs-kelly", std::max(std::abs(ak.measured_xp - 1.0), std::abs(ak.measured_px - 1.0)));
    w.update("arthurs-kelly", std::max(std::abs(ak.noise_xp - 0.25), std::abs(ak.noise_px - 0.25)));
  }
  for (const auto& [N, M] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 5}}) {
    GaussianEnsembled in = GaussianEnsembled::coherent(0.7, 1.3);
    for (int k = 1; k < N; ++k) in = in.concat(GaussianEnsembled::coherent(0.7, 1.3));
    const CloneNetworkResult r = clone_network(N, M, in);
    const SgcBound b = sgc_bound(N, M);
    for (int c = 0; c < M; ++c) {
      w.update("added noise", std::abs(r.output.variance_x(c) - kVacuumVariance - b.variance));
      w.update("added noise", std::abs(r.output.variance_p(c) - kVacuumVariance - b.variance));
      w.update("fidelity", std::abs(clone_fidelity(GaussianEnsembled::coherent(0.7, 1.3), r.output.mode(c)) - b.fidelity));
      w.update("fidelity", std::abs(gaussian_fidelity(GaussianEnsembled::coherent(0.7, 1.3), r.output.mode(c)) - b.fidelity));
    }
    w.update("symplectic", r.transform.symplectic_residual());
  }
  const bool ok = w["1->2 variance"] <= kCvTol && w["anticlone mean"] <= kCvTol && w["added noise"] <= kCvTol &&
                  w["fidelity"] <= kCvTol && w["symplectic"] <= kCvTol && w["arthurs-kelly"] <= kCvTol;
  return make(7, "gaussian cloning networks", ok, w);
}

CriterionResult check_stimulated_emission() {
  Worst w;
  int oracle_cases = 0;
  int oracle_failures = 0;
  for (int N = 0; N <= 11; ++N)
    for (int k = 1; N + k <= 12; ++k) {
      const EmissionModel m = emission_pmf(N, k);
      const BigInt base = fock_oracle(N, k, 0);
      for (int l = 0; l <= k; ++l) {
        ++oracle_cases;
        // weights[l] / weights[0] == oracle(l) / oracle(0), cross-multiplied.
        if (m.weights[static_cast<std::size_t>(l)] * base != fock_oracle(N, k, l) * m.weights[0]) ++oracle_failures;
      }
    }
  int exact_failures = 0;
  for (int N = 1; N < 30; ++N)
    for (int M = N + 1; M <= 30; ++M) {
      w.update("vs-gisin-massar", std::abs(stim_fidelity(N, M) - fidelity_formula(N, M, 2)));
      const Rational gm = Rational(M * N + M + N, M * (N + 2));
      if (stim_fidelity_exact(N, M) != gm) ++exact_failures;
    }
  w.update("classical", std::abs(classical_amp_fidelity(1.0, 1.94, 0.8) - 0.82));
  for (int d = 2; d <= 64; ++d) w.update("timebin", std::abs(timebin_fidelity(d) - fidelity_formula(1, 2, d)));
  const bool ok = oracle_failures == 0 && exact_failures == 0 && w["vs-gisin-massar"] <= kStimTol &&
                  w["classical"] <= kClassicalTol && w["timebin"] <= kStimTol;
  return make(8, "stimulated emission", ok, w,
              std::to_string(oracle_cases) + " oracle ratios, failures=" + std::to_string(oracle_failures + exact_failures));
}

CriterionResult check_finite_distribution() {
  Worst w;
  const double boundary = 0.5 + 1.0 / std::numbers::sqrt2;
  const auto [upper, lower] = finite_dist_branches(boundary);
  w.update("continuity", std::abs(upper - lower));
  w.update("limit-inf", std::abs(finite_dist_fidelity(1e4).fidelity - 2.0 / 3.0));
  w.update("limit-0", std::abs(finite_dist_fidelity(0.0).fidelity - 1.0));
  for (double s2 : {0.0, 0.3, 1.0, boundary, 3.0, 10.0, 1e4}) {
    const FiniteDistFidelity f = finite_dist_fidelity(s2);
    w.update("network", std::abs(finite_dist_network_fidelity(s2, f.gain) - f.fidelity));
  }
  const bool ok = w["continuity"] <= kContinuityTol && w["limit-inf"] <= kLimitTol && w["limit-0"] <= kContinuityTol &&
                  w["network"] <= kContinuityTol;
  return make(9, "finite-distribution gaussian cloning", ok, w);
}

CriterionResult check_no_signaling() {
  Worst w;
  int failing = 0;
  const auto channels = library_channels();
  for (const auto& [name, ch] : channels) {
    const SignalingReport r = signaling_report(ch);
    w.update("library", r.max_deviation);
    if (!no_signaling_check(ch)) ++failing;
  }
  const SignalingReport perfect = signaling_report(perfect_cloner());
  const double x01 = perfect.rho_x(0b01, 0b01).real();
  const double z01 = perfect.rho_z(0b01, 0b01).real();
  w.update("perfect <01|rho_x|01>-1/4", std::abs(x01 - 0.25));
  w.update("perfect <01|rho_z|01>", std::abs(z01));
  const bool ok = failing == 0 && !no_signaling_check(perfect_cloner()) &&
                  w["perfect <01|rho_x|01>-1/4"] <= kSignalTol && w["perfect <01|rho_z|01>"] <= kSignalTol;
  return make(10, "no-signaling", ok, w, std::to_string(channels.size()) + " channels");
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  return {check_universal_cloning(seed), check_buzek_hillery(seed), check_asymmetric(seed),
          check_phase_covariant(),       check_state_estimation(),  check_qkd(),
          check_cv_networks(),           check_stimulated_emission(), check_finite_distribution(),
          check_no_signaling()};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << " " << r.name << "  (" << r.detail
     << ")";
  return os.str();
}

}  // namespace clonekit
