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

#ifndef CLONEKIT_COUNT_HPP
#define CLONEKIT_COUNT_HPP

#include <stdexcept>
#include <string>

namespace clonekit {

/// A number of copies that may also be infinite.
class CopyCount {
 public:
  CopyCount(int n) : n_(n) {  // NOLINT(google-explicit-constructor)
    if (n < 0) throw std::invalid_argument("CopyCount: negative count");
  }
  static CopyCount infinite() { return CopyCount(); }

  bool is_infinite() const { return n_ < 0; }
  int value() const {
    if (is_infinite()) throw std::logic_error("CopyCount: infinite count has no value");
    return n_;
  }
  std::string str() const { return is_infinite() ? "inf" : std::to_string(n_); }

  friend bool operator==(CopyCount a, CopyCount b) { return a.n_ == b.n_; }

 private:
  CopyCount() : n_(-1) {}
  int n_;
};

}  // namespace clonekit

#endif  // CLONEKIT_COUNT_HPP
