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

#ifndef CLONEKIT_SYMSPACE_HPP
#define CLONEKIT_SYMSPACE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "clonekit/qmath.hpp"

namespace clonekit {

/// Occupation numbers (n_0, ..., n_{d-1}) of a bosonic basis state.
using Occupation = std::vector<int>;

/// Dense matrices above this side length are refused.
inline constexpr Eigen::Index kMaxDenseDim = 4096;
/// Ceiling on n! * d^n index evaluations in the permutation-sum projector.
inline constexpr double kPermutationBudget = 5e7;

/// Occupation-number basis of the symmetric subspace of n qudits of dimension d.
/// Basis vectors are ordered lexicographically by occupation tuple.
class SymmetricSubspace {
 public:
  SymmetricSubspace(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<Occupation>& basis() const { return basis_; }
  /// Throws std::out_of_range for tuples that are not in the basis.
  Eigen::Index index_of(const Occupation& occ) const;

  /// Number of basis strings with occupation `occ`, n! / prod n_k!.
  double multiplicity(Eigen::Index i) const { return mult_[static_cast<std::size_t>(i)]; }

 private:
  int d_;
  int n_;
  std::vector<Occupation> basis_;
  std::vector<double> mult_;
  std::map<Occupation, Eigen::Index> index_map_;
};

/// C(d+n-1, n). Throws std::overflow_error when the result exceeds 64 bits.
std::uint64_t sym_dim(int d, int n);

/// Occupation tuple of a flat computational-basis index of n qudits.
Occupation occupation_of(Eigen::Index flat, int d, int n);

/// Operator that moves the factor in slot perm[k] to slot k.
CMatrixd permutation_operator(int d, const std::vector<int>& perm);

/// Average of all n! permutation operators on (C^d)^{(x) n}.
/// Throws std::length_error when the dense size or permutation budget is exceeded.
CMatrixd sym_projector(int d, int n);

/// Isometry B from the occupation basis into (C^d)^{(x) n}; B B^dagger is the
/// symmetric projector.
CMatrixd sym_isometry(const SymmetricSubspace& space);

/// |psi>^{(x) n}
StateVectord embed_copies(const StateVectord& psi, int n);

/// Coordinates of |psi>^{(x) n} in the occupation basis.
CVectord sym_coordinates(const StateVectord& psi, const SymmetricSubspace& space);

}  // namespace clonekit

#endif  // CLONEKIT_SYMSPACE_HPP
