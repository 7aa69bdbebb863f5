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

// Subcommand drivers. Each returns the process exit code together with the
// text destined for stdout and stderr; nothing here writes to the console.
//
//   0  success, no actionable findings
//   1  actionable findings under the fail-on policy
//   2  usage or configuration error
//   3  fatal analysis error

#ifndef CHAINLINT_PIPELINE_PIPELINE_HPP_
#define CHAINLINT_PIPELINE_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "config/config.hpp"
#include "graph/callgraph.hpp"
#include "metrics/metrics.hpp"
#include "report/report.hpp"
#include "scope/scope.hpp"
#include "source/model.hpp"

namespace chainlint::pipeline {

inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFatal = 3;

struct Outcome {
  int exit_code = kExitClean;
  std::string output;
  std::string diagnostics;
  std::vector<report::Finding> findings;
};

struct Analysis {
  go::SourceModel model;
  graph::CallGraph graph;
  scope::EntryMap entries;
  scope::ScopeSet scope;
  std::vector<report::Finding> findings;
  std::vector<report::Diagnostic> diagnostics;  // parse and directive problems
};

// Throws UsageError, AnalysisError or GraphError.
Analysis analyze(const config::RunConfig& config);

Outcome run_analyze(const config::RunConfig& config);
Outcome run_scope(const config::RunConfig& config, bool dump_graph);
// Writes the fingerprints of unsuppressed findings to `path`, or to the
// configured baseline when `path` is empty.
Outcome run_baseline_write(const config::RunConfig& config, const std::filesystem::path& path);

struct EvalRequest {
  // "NAME=PATH" or "PATH" (project named by the file stem).
  std::vector<std::string> inputs;
  std::filesystem::path labels;
  metrics::GroupBy group_by = metrics::GroupBy::Rule;
  bool allow_unlabeled = false;
  bool json = false;
};
Outcome run_eval(const EvalRequest& request);

struct CompareRequest {
  std::filesystem::path first;   // JSON metrics reports written by eval
  std::filesystem::path second;
  bool fp_only_gain = false;
  bool json = false;
};
Outcome run_compare(const CompareRequest& request);

}  // namespace chainlint::pipeline

#endif  // CHAINLINT_PIPELINE_PIPELINE_HPP_
