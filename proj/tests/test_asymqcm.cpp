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
#include <numbers>

#include "clonekit/asymqcm.hpp"
#include "clonekit/uqcm.hpp"
#include "support.hpp"

using namespace clonekit;
using clonekit::testing::WithinAbs;

namespace {

double overlap(const StateVectord& u, const StateVectord& w) {
  return overlap_modulus<double>(u.amplitudes(), w.amplitudes());
}

}  // namespace

TEST_CASE("AsymParams conventions agree", "[asymqcm]") {
  for (int d : {2, 3, 4}) {
    const AsymParams s = AsymParams::symmetric(d);
    CHECK_THAT(s.a(), WithinAbs(s.b(), 1e-15));
    const AsymParams c = AsymParams::from_cerf(d, s.v(), s.x());
    CHECK_THAT(c.a(), WithinAbs(s.a(), 1e-12));
    CHECK_THAT(c.b(), WithinAbs(s.b(), 1e-12));
  }
  CHECK_THAT(AsymParams::symmetric(2).a(), WithinAbs(1.0 / std::sqrt(3.0), 1e-15));
  CHECK_THROWS_AS(AsymParams::from_circuit(2, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams::from_circuit(2, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams::from_fidelity_a(2, 0.4), std::invalid_argument);
}

TEST_CASE("asym_output_state limits", "[asymqcm]") {
  auto g = testing::rng(31);
  for (int d : {2, 3}) {
    const StateVectord psi = testing::random_qudit(d, g);
    const StateVectord keep = asym_output_state(psi, AsymParams::from_circuit(d, 1.0, 0.0));
    CHECK_THAT(overlap(keep, tensor(psi, max_entangled<double>(d))), WithinAbs(1.0, 1e-14));
    const auto [fa, fb] = clone_fidelities(asym_output_state(psi, AsymParams::from_circuit(d, 0.0, 1.0)), psi);
    CHECK_THAT(fa, WithinAbs(1.0 / d, 1e-14));
    CHECK_THAT(fb, WithinAbs(1.0, 1e-14));
  }
  const StateVectord psi = testing::random_qudit(2, g);
  const auto [fa, fb] = clone_fidelities(asym_output_state(psi, AsymParams::symmetric(2)), psi);
  CHECK_THAT(fa, WithinAbs(5.0 / 6.0, 1e-14));
  CHECK_THAT(fb, WithinAbs(5.0 / 6.0, 1e-14));
}

TEST_CASE("circuit basis action", "[asymqcm]") {
  CHECK(circuit_map_qubit(0, 0, 0) == std::array<int, 3>{0, 0, 0});
  CHECK(circuit_map_qubit(1, 0, 1) == std::array<int, 3>{0, 1, 0});
  CHECK_THROWS_AS(circuit_map_qubit(2, 0, 0), std::invalid_argument);

  const CMatrixd u = circuit_unitary(2);
  for (int s = 0; s < 2; ++s)
    for (int w = 0; w < 2; ++w)
      for (int x = 0; x < 2; ++x) {
        const auto [o0, o1, o2] = circuit_map_qubit(s, w, x);
        CHECK(std::abs(u(4 * o0 + 2 * o1 + o2, 4 * s + 2 * w + x) - 1.0) < 1e-15);
      }
  for (int d : {2, 3, 4}) {
    const CMatrixd v = circuit_unitary(d);
    CHECK(max_abs_diff<double>(CMatrixd(v.adjoint() * v), CMatrixd::Identity(v.rows(), v.rows())) < 1e-15);
  }
  auto g = testing::rng(32);
  const StateVectord psi = testing::random_qudit(2, g);
  const StateVectord out = circuit_output(psi, AsymParams::from_circuit(2, 1.0, 0.0));
  CHECK_THAT(fidelity_pure(partial_trace(out.projector(), {0}), psi), WithinAbs(1.0, 1e-14));
}

TEST_CASE("Cerf operator special points", "[asymqcm]") {
  CHECK(max_abs_diff<double>(cerf_operator(3, 1.0, 0.0), CMatrixd::Identity(27, 27)) < 1e-15);

  CMatrixd swap_ab = CMatrixd::Zero(8, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int m = 0; m < 2; ++m) swap_ab(4 * b + 2 * a + m, 4 * a + 2 * b + m) = 1.0;
  CHECK(max_abs_diff<double>(cerf_operator(2, 0.5, 0.5), swap_ab) < 1e-15);

  auto g = testing::rng(33);
  const double x = 1.0 / (2.0 * std::sqrt(3.0));
  const StateVectord psi = testing::random_qudit(2, g);
  const auto [fa, fb] = clone_fidelities(cerf_output(psi, AsymParams::from_cerf(2, 3 * x, x)), psi);
  CHECK_THAT(fa, WithinAbs(5.0 / 6.0, 1e-14));
  CHECK_THAT(fb, WithinAbs(5.0 / 6.0, 1e-14));
  CHECK_THROWS_AS(cerf_operator(2, 0.5, 0.1), std::invalid_argument);
}

TEST_CASE("asym_fidelities closed form", "[asymqcm]") {
  const auto [sa, sb] = asym_fidelities(AsymParams::symmetric(2));
  CHECK_THAT(sa, WithinAbs(5.0 / 6.0, 1e-15));
  CHECK_THAT(sb, WithinAbs(5.0 / 6.0, 1e-15));
  const auto [ka, kb] = asym_fidelities(AsymParams::from_circuit(2, 1.0, 0.0));
  CHECK_THAT(ka, WithinAbs(1.0, 1e-15));
  CHECK_THAT(kb, WithinAbs(0.5, 1e-15));
  const auto [ta, tb] = asym_fidelities(AsymParams::symmetric(3));
  CHECK_THAT(ta, WithinAbs(0.75, 1e-15));
  CHECK_THAT(tb, WithinAbs(fidelity_formula(1, 2, 3), 1e-15));
  for (int d : {2, 3, 5})
    for (double fa : {0.55, 0.7, 0.9, 0.99}) {
      if (fa < 1.0 / d) continue;
      CHECK_THAT(asym_fidelities(AsymParams::from_fidelity_a(d, fa)).first, WithinAbs(fa, 1e-12));
    }
}

TEST_CASE("Filip projector", "[asymqcm]") {
  auto g = testing::rng(34);
  const StateVectord psi = testing::random_qudit(2, g);
  const FilipOutcome one = filip_asymmetric(psi, 1.0);
  CHECK_THAT(one.fa, WithinAbs(5.0 / 6.0, 1e-14));
  CHECK_THAT(one.fb, WithinAbs(5.0 / 6.0, 1e-14));
  CHECK_THAT(one.success_probability, WithinAbs(1.0, 1e-14));
  const FilipOutcome half = filip_asymmetric(psi, 0.5);
  CHECK_THAT(half.fa, WithinAbs(1.0, 1e-14));
  CHECK_THAT(half.fb, WithinAbs(0.5, 1e-14));
  const FilipOutcome mid = filip_asymmetric(psi, 0.75);
  CHECK_THAT(clonineq_gap(mid.fa, mid.fb), WithinAbs(0.0, 1e-10));
  CHECK_THAT(mid.fa, WithinAbs(0.948717948718, 1e-11));
  CHECK_THAT(mid.fb, WithinAbs(0.679487179487, 1e-11));
  // The projected output is a member of the family with the singlet as the pair.
  const StateVectord family =
      asym_output_state(psi, AsymParams::from_fidelity_a(2, mid.fa), Bell<double>::psi_minus());
  CHECK_THAT(overlap(mid.state, family), WithinAbs(1.0, 1e-12));
  CHECK_THROWS_AS(filip_projector(0.3), std::invalid_argument);
  CHECK_THROWS_AS(filip_projector(1.2), std::invalid_argument);
}

TEST_CASE("no-cloning inequality", "[asymqcm][property]") {
  auto g = testing::rng(35);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d : {2, 3, 4}) {
    for (int i = 0; i < 40; ++i) {
      const double fa = 1.0 / d + (1.0 - 1.0 / d) * (0.01 + 0.98 * u(g));
      const AsymParams p = AsymParams::from_fidelity_a(d, fa);
      const StateVectord psi = testing::random_qudit(d, g);
      const auto [ba, bb] = clone_fidelities(asym_output_state(psi, p), psi);
      CHECK_THAT(clonineq_gap(ba, bb, d), WithinAbs(0.0, 1e-10));
    }
  }
  // Suboptimal machines sit strictly inside the region.
  CHECK(clonineq_gap(0.75, 0.75) > 0.0);
  CHECK(clonineq_gap(2.0 / 3.0, 2.0 / 3.0) > 0.0);
  const double tri = trivial_amplify_fidelity(1, 2, 2);
  CHECK(clonineq_gap(tri, tri) > 0.0);
}

TEST_CASE("Weyl operator algebra", "[asymqcm][property]") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(max_abs_diff<double>(weyl_operator(d, 0, 0), CMatrixd::Identity(d, d)) < 1e-15);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        const CMatrixd u = weyl_operator(d, m, n);
        CHECK(max_abs_diff<double>(CMatrixd(u.adjoint() * u), CMatrixd::Identity(d, d)) < 1e-13);
        for (int m2 = 0; m2 < d; ++m2)
          for (int n2 = 0; n2 < d; ++n2) {
            const std::complex<double> t = (u.adjoint() * weyl_operator(d, m2, n2)).trace();
            const double expected = (m == m2 && n == n2) ? d : 0.0;
            CHECK(std::abs(t - expected) < 1e-12);
          }
      }
  }
}

TEST_CASE("circuit, direct and Cerf constructions coincide", "[asymqcm][property]") {
  auto g = testing::rng(36);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      const AsymParams p = AsymParams::from_fidelity_a(d, 1.0 / d + (1.0 - 1.0 / d) * u(g));
      const StateVectord psi = testing::random_qudit(d, g);
      const StateVectord direct = asym_output_state(psi, p);
      CHECK(overlap(direct, circuit_output(psi, p)) >= 1.0 - 1e-10);
      CHECK(overlap(direct, cerf_output(psi, p)) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("asym_channel agrees with the output state", "[asymqcm]") {
  auto g = testing::rng(37);
  const AsymParams p = AsymParams::from_fidelity_a(3, 0.8);
  const StateVectord psi = testing::random_qudit(3, g);
  const DensityMatrixd out = apply_channel(asym_channel(p), psi.projector());
  CHECK(max_abs_diff<double>(out.matrix(), asym_output_state(psi, p).projector().matrix()) < 1e-13);
}
