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

#include <cmath>

#include "clonekit/estim.hpp"
#include "clonekit/symspace.hpp"
#include "clonekit/uqcm.hpp"
#include "support.hpp"

using namespace clonekit;
using clonekit::testing::WithinAbs;

TEST_CASE("werner_clone fidelities", "[uqcm]") {
  auto g = testing::rng(21);
  const StateVectord qubit = testing::random_qudit(2, g);
  const StateVectord qutrit = testing::random_qudit(3, g);
  for (auto route : {WernerRoute::dense, WernerRoute::symmetric}) {
    const CloneReport r12 = werner_clone(qubit, 1, 2, route);
    CHECK_THAT(r12.per_clone_fidelity[0], WithinAbs(5.0 / 6.0, 1e-12));
    CHECK_THAT(r12.shrinking_factor, WithinAbs(2.0 / 3.0, 1e-12));
    CHECK_THAT(werner_clone(qutrit, 1, 2, route).per_clone_fidelity[0], WithinAbs(0.75, 1e-12));
    CHECK_THAT(werner_clone(qubit, 2, 3, route).per_clone_fidelity[0], WithinAbs(11.0 / 12.0, 1e-12));
  }
  CHECK(werner_clone(qubit, 1, 2, WernerRoute::dense).output_state.has_value());
  CHECK_FALSE(werner_clone(qubit, 1, 2, WernerRoute::symmetric).output_state.has_value());
  CHECK_THROWS_AS(werner_clone(qubit, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(werner_clone(qubit, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(werner_clone(qubit, 1, 13, WernerRoute::dense), std::length_error);
}

TEST_CASE("werner_clone matches the brute-force trace for 2 -> 3", "[uqcm]") {
  // Tr[(sigma (x) I (x) I) rho] with rho the full dense output, for sigma the input projector.
  auto g = testing::rng(22);
  const StateVectord psi = testing::random_qudit(2, g);
  const DensityMatrixd out = *werner_clone(psi, 2, 3, WernerRoute::dense).output_state;
  const CMatrixd sigma = psi.projector().matrix();
  const CMatrixd probe = kron<double>(kron<double>(sigma, CMatrixd::Identity(2, 2)), CMatrixd::Identity(2, 2));
  CHECK_THAT((probe * out.matrix()).trace().real(), WithinAbs(11.0 / 12.0, 1e-12));
}

TEST_CASE("fidelity_formula and shrinking_eta", "[uqcm]") {
  CHECK_THAT(fidelity_formula(1, 2, 2), WithinAbs(5.0 / 6.0, 1e-15));
  for (int N = 1; N <= 5; ++N)
    for (int d = 2; d <= 6; ++d) {
      CHECK_THAT(fidelity_formula(N, CopyCount::infinite(), d), WithinAbs((N + 1.0) / (N + d), 1e-15));
      CHECK_THAT(fidelity_formula(N, N, d), WithinAbs(1.0, 1e-15));
      CHECK_THAT(shrinking_eta(N, N, d), WithinAbs(1.0, 1e-15));
    }
  CHECK_THAT(shrinking_eta(1, 2, 2), WithinAbs(2.0 / 3.0, 1e-15));
  for (int N = 1; N <= 6; ++N)
    for (int M = N; M <= 6; ++M)
      for (int d = 2; d <= 4; ++d)
        CHECK_THAT(fidelity_from_eta(shrinking_eta(N, M, d), d), WithinAbs(fidelity_formula(N, M, d), 1e-14));
  CHECK_THROWS_AS(fidelity_formula(3, 2, 2), std::invalid_argument);
}

TEST_CASE("werner universality and output support", "[uqcm][property]") {
  auto g = testing::rng(23);
  struct Case {
    int d, N, M;
  };
  for (const auto [d, N, M] : {Case{2, 1, 2}, Case{2, 1, 3}, Case{2, 2, 4}, Case{3, 1, 2}, Case{3, 2, 3}, Case{4, 1, 3}}) {
    const double f = fidelity_formula(N, M, d);
    const CMatrixd s = sym_projector(d, M);
    for (int i = 0; i < 50; ++i) {
      const StateVectord psi = testing::random_qudit(d, g);
      const CloneReport r = werner_clone(psi, N, M);
      for (double fj : r.per_clone_fidelity) CHECK_THAT(fj, WithinAbs(f, 1e-9));
      if (i < 3 && r.output_state) {
        const CMatrixd& rho = r.output_state->matrix();
        CHECK(max_abs_diff<double>(CMatrixd(s * rho * s), rho) < 1e-10);
      }
    }
  }
}

TEST_CASE("werner_channel reproduces werner_clone", "[uqcm]") {
  auto g = testing::rng(24);
  for (const auto& [N, M] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const QuantumChanneld ch = werner_channel(2, N, M);
    const StateVectord psi = testing::random_qudit(2, g);
    const DensityMatrixd out = apply_channel(ch, embed_copies(psi, N).projector());
    const CloneReport r = werner_clone(psi, N, M, WernerRoute::dense);
    CHECK(max_abs_diff<double>(out.matrix(), r.output_state->matrix()) < 1e-12);
  }
}

TEST_CASE("Buzek-Hillery machine", "[uqcm]") {
  const BuzekHilleryOutput zero = buzek_hillery(StateVectord::basis(HilbertDims{2}, 0));
  const Eigen::Vector3d m = bloch_vector(zero.clone_a);
  CHECK_THAT(m(0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(m(1), WithinAbs(0.0, 1e-15));
  CHECK_THAT(m(2), WithinAbs(2.0 / 3.0, 1e-15));

  auto g = testing::rng(25);
  for (int i = 0; i < 100; ++i) {
    const StateVectord psi = testing::random_qudit(2, g);
    const BuzekHilleryOutput r = buzek_hillery(psi);
    CHECK_THAT(fidelity_pure(r.clone_a, psi), WithinAbs(5.0 / 6.0, 1e-10));
    CHECK_THAT(fidelity_pure(r.clone_b, psi), WithinAbs(5.0 / 6.0, 1e-10));
    CHECK_THAT(fidelity_pure(r.anticlone, qubit_perp(psi)), WithinAbs(2.0 / 3.0, 1e-10));
    if (i < 10) {
      const CloneReport w = werner_clone(psi, 1, 2, WernerRoute::dense);
      CHECK(max_abs_diff<double>(r.clone_a.matrix(), w.single_clone.matrix()) < 1e-10);
      CHECK(max_abs_diff<double>(partial_trace(r.state.projector(), {0, 1}).matrix(), w.output_state->matrix()) <
            1e-10);
    }
  }
  CHECK_THROWS_AS(buzek_hillery(testing::random_qudit(3, g)), std::invalid_argument);
}

TEST_CASE("trivial measure-and-prepare cloning", "[uqcm]") {
  auto g = testing::rng(26);
  const StateVectord a = testing::random_qudit(2, g);
  const StateVectord b = testing::random_qudit(2, g);
  CHECK_THAT(trivial_measure_quadrature(a), WithinAbs(2.0 / 3.0, 1e-12));
  CHECK_THAT(trivial_measure_quadrature(b), WithinAbs(2.0 / 3.0, 1e-12));
  const MonteCarloEstimate ea = trivial_measure_clone(a, 1000000, 1);
  const MonteCarloEstimate eb = trivial_measure_clone(b, 1000000, 2);
  CHECK(std::abs(ea.mean - 2.0 / 3.0) < 3 * ea.std_error);
  CHECK(std::abs(ea.mean - eb.mean) < 3 * std::hypot(ea.std_error, eb.std_error));
  CHECK(ea.samples == 1000000);
  CHECK(trivial_measure_clone(a, 1000, 9).mean == trivial_measure_clone(a, 1000, 9).mean);

  // Shrinking of the measure-and-prepare map equals the N = 1 estimation optimum.
  CHECK_THAT(2.0 * ea.mean - 1.0, WithinAbs(eta_star(1), 6 * ea.std_error));
  const DensityMatrixd out = apply_channel(measure_prepare_channel(2), a.projector());
  const Eigen::Vector3d shrunk = bloch_vector(partial_trace(out, {0}));
  CHECK((shrunk - bloch_vector(a.projector()) / 3.0).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("trivial amplification", "[uqcm]") {
  CHECK_THAT(trivial_amplify_fidelity(1, 2, 2), WithinAbs(0.75, 1e-15));
  for (int d = 2; d <= 6; ++d) CHECK_THAT(trivial_amplify_fidelity(2, 2, d), WithinAbs(1.0, 1e-15));
  for (int N = 1; N <= 4; ++N)
    for (int M = N + 1; M <= 8; ++M) {
      double gap = 0.0;
      for (int d : {2, 4, 16, 256, 65536}) {
        gap = fidelity_formula(N, M, d) - trivial_amplify_fidelity(N, M, d);
        CHECK(gap >= -1e-15);
      }
      CHECK(gap < 1e-3);
    }
  auto g = testing::rng(27);
  const StateVectord psi = testing::random_qudit(2, g);
  const DensityMatrixd out = apply_channel(trivial_amplify_channel(), psi.projector());
  CHECK_THAT(fidelity_pure(partial_trace(out, {0}), psi), WithinAbs(0.75, 1e-14));
}

TEST_CASE("no-signaling", "[uqcm]") {
  CHECK(no_signaling_check(marginal(buzek_hillery_channel(), {0, 1})));
  CMatrixd append = CMatrixd::Zero(4, 2);
  append(0, 0) = 1;
  append(2, 1) = 1;
  CHECK(no_signaling_check(QuantumChanneld::isometry(HilbertDims{2}, HilbertDims{2, 2}, append)));

  const SignalingReport perfect = signaling_report(perfect_cloner());
  CHECK_THAT(perfect.rho_x(1, 1).real(), WithinAbs(0.25, 1e-15));
  CHECK_THAT(perfect.rho_z(1, 1).real(), WithinAbs(0.0, 1e-15));
  CHECK_FALSE(perfect.passes);
  CHECK_FALSE(no_signaling_check(perfect_cloner()));

  CHECK_THROWS_AS(no_signaling_check(QuantumChanneld::identity(HilbertDims{2})), std::invalid_argument);
}

TEST_CASE("random CPTP maps never signal", "[uqcm][property]") {
  auto g = testing::rng(28);
  for (int i = 0; i < 50; ++i) {
    const QuantumChanneld ch = random_channel<double>(HilbertDims{2}, HilbertDims{2, 2}, 1 + i % 5, g);
    CHECK(no_signaling_check(ch));
  }
}
