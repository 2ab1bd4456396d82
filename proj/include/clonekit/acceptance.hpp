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

#ifndef CLONEKIT_ACCEPTANCE_HPP
#define CLONEKIT_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clonekit/qmath.hpp"

namespace clonekit {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  /// Worst observed deviations, for the report line.
  std::string detail;
};

/// Every qubit -> two-qubit CPTP map the library can build, by name. Maps with
/// more outputs appear once per pair of kept subsystems.
std::vector<std::pair<std::string, QuantumChanneld>> library_channels();

CriterionResult check_universal_cloning(std::uint64_t seed);
CriterionResult check_buzek_hillery(std::uint64_t seed);
CriterionResult check_asymmetric(std::uint64_t seed);
CriterionResult check_phase_covariant();
CriterionResult check_state_estimation();
CriterionResult check_qkd();
CriterionResult check_cv_networks();
CriterionResult check_stimulated_emission();
CriterionResult check_finite_distribution();
CriterionResult check_no_signaling();

/// All ten criteria in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "PASS  3 asymmetric cloning  (detail)"
std::string format_result(const CriterionResult& r);

}  // namespace clonekit

#endif  // CLONEKIT_ACCEPTANCE_HPP
