// Copyright 2026 The Pursuit Authors
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

#ifndef PURSUIT_ERRORS_HPP_
#define PURSUIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pursuit {

// A solve would need more states or memory than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy found itself in a position its correctness argument rules out.
// Treated as falsification evidence, never swallowed.
class ClaimViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A policy returned a move that is not legal in the current position.
class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pursuit

#endif  // PURSUIT_ERRORS_HPP_
