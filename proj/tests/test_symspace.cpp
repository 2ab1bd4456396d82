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

#include <algorithm>
#include <numeric>

#include "clonekit/symspace.hpp"
#include "support.hpp"

using namespace clonekit;
using clonekit::testing::WithinAbs;

TEST_CASE("sym_dim", "[symspace]") {
  CHECK(sym_dim(2, 2) == 3);
  CHECK(sym_dim(3, 2) == 6);
  CHECK(sym_dim(2, 5) == 6);
  CHECK(sym_dim(7, 0) == 1);
  CHECK(sym_dim(10, 30) == 211915132ULL);  // C(39, 30)
  CHECK_THROWS_AS(sym_dim(1000, 1000), std::overflow_error);
  CHECK_THROWS_AS(sym_dim(1, 3), std::invalid_argument);
}

TEST_CASE("sym_projector examples", "[symspace]") {
  const CVectord singlet = Bell<double>::psi_minus().amplitudes();
  const CMatrixd expected = CMatrixd::Identity(4, 4) - singlet * singlet.adjoint();
  CHECK(max_abs_diff<double>(sym_projector(2, 2), expected) < 1e-15);
  for (int d : {2, 3, 5}) CHECK(max_abs_diff<double>(sym_projector(d, 1), CMatrixd::Identity(d, d)) < 1e-15);

  Eigen::SelfAdjointEigenSolver<CMatrixd> es(sym_projector(2, 3));
  const auto ones = (es.eigenvalues().array() > 0.5).count();
  CHECK(ones == 4);
  CHECK(ones == static_cast<Eigen::Index>(sym_dim(2, 3)));
}

TEST_CASE("sym_projector budgets", "[symspace]") {
  CHECK_THROWS_AS(sym_projector(2, 13), std::length_error);  // 8192 > dense cap
  CHECK_THROWS_AS(sym_projector(2, 12), std::length_error);  // 12! * 4096 > permutation budget
}

TEST_CASE("embed_copies", "[symspace]") {
  const StateVectord zero = StateVectord::basis(HilbertDims{2}, 0);
  CHECK(max_abs_diff<double>(embed_copies(zero, 3).amplitudes(), StateVectord::basis(HilbertDims{2, 2, 2}, 0).amplitudes()) ==
        0.0);
  const StateVectord plus = StateVectord::qubit(1.0, 1.0);
  CHECK(max_abs_diff<double>(embed_copies(plus, 2).amplitudes(), CVectord::Constant(4, 0.5)) < 1e-15);

  auto g = testing::rng(11);
  for (int d : {2, 3}) {
    for (int n : {2, 3, 4}) {
      const StateVectord psi = testing::random_qudit(d, g);
      const CVectord v = embed_copies(psi, n).amplitudes();
      CHECK(max_abs_diff<double>(CVectord(sym_projector(d, n) * v), v) < 1e-13);
    }
  }
}

TEST_CASE("occupation basis and isometry", "[symspace]") {
  auto g = testing::rng(12);
  for (int d : {2, 3, 4}) {
    for (int n : {1, 2, 3}) {
      const SymmetricSubspace space(d, n);
      REQUIRE(static_cast<std::uint64_t>(space.size()) == sym_dim(d, n));
      for (Eigen::Index i = 0; i < space.size(); ++i) CHECK(space.index_of(space.basis()[static_cast<std::size_t>(i)]) == i);
      CHECK(std::is_sorted(space.basis().begin(), space.basis().end()));

      const CMatrixd b = sym_isometry(space);
      CHECK(max_abs_diff<double>(CMatrixd(b.adjoint() * b), CMatrixd::Identity(space.size(), space.size())) < 1e-13);
      CHECK(max_abs_diff<double>(CMatrixd(b * b.adjoint()), sym_projector(d, n)) < 1e-13);

      const StateVectord psi = testing::random_qudit(d, g);
      const CVectord lifted = b * sym_coordinates(psi, space);
      CHECK(max_abs_diff<double>(lifted, embed_copies(psi, n).amplitudes()) < 1e-13);
    }
  }
  CHECK_THROWS_AS(SymmetricSubspace(2, 2).index_of({1, 2}), std::out_of_range);
}

TEST_CASE("multiplicities count basis strings", "[symspace]") {
  const SymmetricSubspace space(3, 4);
  double total = 0;
  for (Eigen::Index i = 0; i < space.size(); ++i) total += space.multiplicity(i);
  CHECK_THAT(total, WithinAbs(81.0, 1e-12));
  CHECK(occupation_of(0b0110, 2, 4) == Occupation{2, 2});
}

TEST_CASE("projector algebra", "[symspace][property]") {
  auto g = testing::rng(13);
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 5; ++n) {
      Eigen::Index dim = 1;
      for (int k = 0; k < n; ++k) dim *= d;
      if (dim > 256) continue;
      const CMatrixd s = sym_projector(d, n);
      CHECK(max_abs_diff<double>(CMatrixd(s * s), s) < 1e-12);
      CHECK(max_abs_diff<double>(CMatrixd(s.adjoint()), s) < 1e-12);
      CHECK_THAT(s.trace().real(), WithinAbs(static_cast<double>(sym_dim(d, n)), 1e-9));

      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(perm.begin(), perm.end(), g);
        const CMatrixd p = permutation_operator(d, perm);
        CHECK(max_abs_diff<double>(CMatrixd(p * s * p.adjoint()), s) < 1e-12);
        CHECK(max_abs_diff<double>(CMatrixd(p * s), s) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(permutation_operator(2, {0, 0}), std::invalid_argument);
}
