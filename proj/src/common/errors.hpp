// Copyright 2026 The chainlint Authors.
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

#ifndef CHAINLINT_COMMON_ERRORS_HPP_
#define CHAINLINT_COMMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace chainlint {

// Bad invocation or configuration: missing root, malformed flags or config.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The analysis itself cannot proceed: empty tree, unlabeled findings,
// inconsistent label files, mismatched reports.
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chainlint

#endif  // CHAINLINT_COMMON_ERRORS_HPP_
