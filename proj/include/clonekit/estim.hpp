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

#ifndef CLONEKIT_ESTIM_HPP
#define CLONEKIT_ESTIM_HPP

#include "clonekit/combinatorics.hpp"
#include "clonekit/count.hpp"

namespace clonekit {

/// Shrinking factor of an N -> M universal cloner (M may be infinite).
struct ShrinkRecord {
  int N;
  CopyCount M;
  double eta;
};

ShrinkRecord shrink_record(int N, CopyCount M, int d = 2);

/// Shrinking factor of optimal state estimation on N copies, N/(N+d).
/// eta_star(infinite) = 1.
double eta_star(CopyCount N, int d = 2);
Rational eta_star_exact(CopyCount N, int d = 2);
Rational shrinking_eta_exact(int N, CopyCount M, int d = 2);

/// Single-copy fidelity of the measure-and-prepare strategy on N copies.
double estimation_fidelity(int N, int d = 2);

struct CascadeBound {
  double bound;
  double eta;
  bool saturated;
};

/// eta(N, M) <= eta_star(N) / eta_star(M), compared with the cloner's eta.
CascadeBound cascade_bound(int N, CopyCount M, int d = 2);
/// Exact equality eta(N, M) == eta_star(N) / eta_star(M).
bool cascade_saturated_exact(int N, CopyCount M, int d = 2);

/// eta(N, M) eta(M, L) <= eta(N, L) + 1e-12 for N <= M <= L.
bool multiplicativity_check(int N, CopyCount M, CopyCount L, int d = 2);

}  // namespace clonekit

#endif  // CLONEKIT_ESTIM_HPP
