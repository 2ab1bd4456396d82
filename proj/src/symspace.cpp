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

#include "clonekit/symspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "clonekit/combinatorics.hpp"

namespace clonekit {
namespace {

void enumerate(int slot, int remaining, Occupation& cur, std::vector<Occupation>& out) {
  const int d = static_cast<int>(cur.size());
  if (slot == d - 1) {
    cur[static_cast<std::size_t>(slot)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    cur[static_cast<std::size_t>(slot)] = k;
    enumerate(slot + 1, remaining - k, cur, out);
  }
}

Eigen::Index checked_power(int d, int n) {
  Eigen::Index total = 1;
  for (int k = 0; k < n; ++k) {
    if (total > kMaxDenseDim / d) throw std::length_error("dimension budget exceeded");
    total *= d;
  }
  return total;
}

}  // namespace

SymmetricSubspace::SymmetricSubspace(int d, int n) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("SymmetricSubspace: d must be >= 2");
  if (n < 0) throw std::invalid_argument("SymmetricSubspace: n must be >= 0");
  const std::uint64_t expected = sym_dim(d, n);
  if (expected > static_cast<std::uint64_t>(1) << 24)
    throw std::length_error("SymmetricSubspace: basis too large");
  Occupation cur(static_cast<std::size_t>(d), 0);
  basis_.reserve(expected);
  enumerate(0, n, cur, basis_);
  mult_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_map_.emplace(basis_[i], static_cast<Eigen::Index>(i));
    mult_.push_back(to_double(multinomial(basis_[i])));
  }
}

Eigen::Index SymmetricSubspace::index_of(const Occupation& occ) const {
  auto it = index_map_.find(occ);
  if (it == index_map_.end()) throw std::out_of_range("SymmetricSubspace: unknown occupation");
  return it->second;
}

std::uint64_t sym_dim(int d, int n) {
  if (d < 2) throw std::invalid_argument("sym_dim: d must be >= 2");
  if (n < 0) throw std::invalid_argument("sym_dim: n must be >= 0");
  const BigInt r = binomial(d + n - 1, n);
  if (r > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("sym_dim: result exceeds 64 bits");
  return r.convert_to<std::uint64_t>();
}

Occupation occupation_of(Eigen::Index flat, int d, int n) {
  Occupation occ(static_cast<std::size_t>(d), 0);
  for (int k = 0; k < n; ++k) {
    ++occ[static_cast<std::size_t>(flat % d)];
    flat /= d;
  }
  return occ;
}

CMatrixd permutation_operator(int d, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int k = 0; k < n; ++k)
    if (check[static_cast<std::size_t>(k)] != k)
      throw std::invalid_argument("permutation_operator: not a permutation");
  const Eigen::Index total = checked_power(d, n);
  const HilbertDims dims = HilbertDims::qudits(d, n);
  CMatrixd p = CMatrixd::Zero(total, total);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < total; ++j) {
    const auto in = dims.digits(j);
    for (int k = 0; k < n; ++k)
      out[static_cast<std::size_t>(k)] = in[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    p(dims.flat(out), j) = 1.0;
  }
  return p;
}

CMatrixd sym_projector(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("sym_projector: need d >= 2 and n >= 1");
  const Eigen::Index total = checked_power(d, n);
  const double work = to_double(factorial(n)) * static_cast<double>(total);
  if (work > kPermutationBudget) throw std::length_error("sym_projector: permutation budget exceeded");

  const HilbertDims dims = HilbertDims::qudits(d, n);
  std::vector<std::vector<int>> digits(static_cast<std::size_t>(total));
  for (Eigen::Index j = 0; j < total; ++j) digits[static_cast<std::size_t>(j)] = dims.digits(j);

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(total, total);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> out(static_cast<std::size_t>(n));
  double nperm = 0;
  do {
    for (Eigen::Index j = 0; j < total; ++j) {
      const auto& in = digits[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = in[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      counts(dims.flat(out), j) += 1.0;
    }
    nperm += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (counts / nperm).cast<Complex<double>>();
}

CMatrixd sym_isometry(const SymmetricSubspace& space) {
  const int d = space.d();
  const int n = space.n();
  const Eigen::Index total = checked_power(d, n);
  CMatrixd b = CMatrixd::Zero(total, space.size());
  for (Eigen::Index j = 0; j < total; ++j) {
    const Eigen::Index col = space.index_of(occupation_of(j, d, n));
    b(j, col) = 1.0 / std::sqrt(space.multiplicity(col));
  }
  return b;
}

StateVectord embed_copies(const StateVectord& psi, int n) { return tensor_power(psi, n); }

CVectord sym_coordinates(const StateVectord& psi, const SymmetricSubspace& space) {
  if (psi.dim() != space.d()) throw std::invalid_argument("sym_coordinates: dimension mismatch");
  CVectord c(space.size());
  for (Eigen::Index i = 0; i < space.size(); ++i) {
    const auto& occ = space.basis()[static_cast<std::size_t>(i)];
    Complex<double> prod = std::sqrt(space.multiplicity(i));
    for (int k = 0; k < space.d(); ++k)
      for (int r = 0; r < occ[static_cast<std::size_t>(k)]; ++r) prod *= psi.amplitudes()(k);
    c(i) = prod;
  }
  return c;
}

}  // namespace clonekit
