// Copyright 2026 The glsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glsim {

using Complex = std::complex<double>;
using Site = std::int64_t;
using DenseVector = std::vector<Complex>;

/// Raised when a caller violates an operation's stated precondition
/// (bad argument ranges, inconsistent oracles, unmet error budgets).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix oracle returns an entry outside its declared radius.
class LocalityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a dense verification would exceed the configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) {
    throw PreconditionError(message);
  }
}

/// Non-fatal diagnostics (for example, evaluating a polynomial outside its
/// interval). The default sink writes to stderr.
using WarningSink = std::function<void(const std::string&)>;
void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

}  // namespace glsim
