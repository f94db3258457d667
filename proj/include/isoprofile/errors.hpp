// Copyright 2026 The isoprofile Authors
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

#include <stdexcept>
#include <string>

namespace isoprofile {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range parameters, bad files, non-monotone data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis does not hold, so its conclusion cannot be used.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

// alpha(r) >= delta0 * kappa * r^2 fails for some r >= r0, or delta0 <= 1/2.
class GrowthConditionViolated : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

// Half-line extremality is only available for log-concave densities.
class LogConcavityRequired : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

// The brute-force search found no set whose mass is close enough to the target.
class InfeasibleMass : public Error {
 public:
  using Error::Error;
};

}  // namespace isoprofile
