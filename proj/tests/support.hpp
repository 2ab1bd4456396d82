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

#pragma once

#include <cstdint>
#include <random>

#include <catch_amalgamated.hpp>

#include "clonekit/qmath.hpp"

namespace clonekit::testing {

using Catch::Matchers::WithinAbs;

/// Seeded per test case so that failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eedULL + salt); }

inline StateVectord random_qudit(int d, std::mt19937_64& g) { return haar_state<double>(HilbertDims{d}, g); }

}  // namespace clonekit::testing
