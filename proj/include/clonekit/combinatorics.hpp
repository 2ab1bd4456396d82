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

#ifndef CLONEKIT_COMBINATORICS_HPP
#define CLONEKIT_COMBINATORICS_HPP

#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace clonekit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// n! / prod_k counts[k]!, where n = sum of counts.
BigInt multinomial(std::span<const int> counts);

/// Nearest double; exact for values below 2^53.
double to_double(const BigInt& v);
double to_double(const Rational& v);

}  // namespace clonekit

#endif  // CLONEKIT_COMBINATORICS_HPP
