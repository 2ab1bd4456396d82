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

#include "clonekit/estim.hpp"

#include <cmath>
#include <stdexcept>

#include "clonekit/uqcm.hpp"

namespace clonekit {
namespace {

constexpr double kCascadeTol = 1e-12;

bool le(CopyCount a, CopyCount b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value();
}

// eta(N, M) for N possibly infinite (then M is infinite too and eta = 1).
double eta_between(CopyCount N, CopyCount M, int d) {
  if (N.is_infinite()) return 1.0;
  return shrinking_eta(N.value(), M, d);
}

}  // namespace

ShrinkRecord shrink_record(int N, CopyCount M, int d) { return ShrinkRecord{N, M, shrinking_eta(N, M, d)}; }

double eta_star(CopyCount N, int d) { return to_double(eta_star_exact(N, d)); }

Rational eta_star_exact(CopyCount N, int d) {
  if (d < 2) throw std::invalid_argument("eta_star: d must be >= 2");
  if (N.is_infinite()) return Rational(1);
  if (N.value() < 1) throw std::invalid_argument("eta_star: N must be >= 1");
  return Rational(N.value(), N.value() + d);
}

Rational shrinking_eta_exact(int N, CopyCount M, int d) {
  if (N < 1 || d < 2) throw std::invalid_argument("shrinking_eta_exact: need N >= 1 and d >= 2");
  if (M.is_infinite()) return Rational(N, N + d);
  const int m = M.value();
  if (m < N) throw std::invalid_argument("shrinking_eta_exact: M must be >= N");
  return Rational(BigInt(N) * (m + d), BigInt(m) * (N + d));
}

double estimation_fidelity(int N, int d) { return fidelity_from_eta(eta_star(N, d), d); }

CascadeBound cascade_bound(int N, CopyCount M, int d) {
  if (!le(N, M)) throw std::invalid_argument("cascade_bound: M must be >= N");
  const double bound = eta_star(N, d) / eta_star(M, d);
  const double eta = shrinking_eta(N, M, d);
  return CascadeBound{bound, eta, std::abs(bound - eta) < kCascadeTol};
}

bool cascade_saturated_exact(int N, CopyCount M, int d) {
  if (!le(N, M)) throw std::invalid_argument("cascade_saturated_exact: M must be >= N");
  return shrinking_eta_exact(N, M, d) == eta_star_exact(N, d) / eta_star_exact(M, d);
}

bool multiplicativity_check(int N, CopyCount M, CopyCount L, int d) {
  if (N < 1 || !le(N, M) || !le(M, L)) throw std::invalid_argument("multiplicativity_check: need 1 <= N <= M <= L");
  return eta_between(N, M, d) * eta_between(M, L, d) <= eta_between(N, L, d) + kCascadeTol;
}

}  // namespace clonekit
