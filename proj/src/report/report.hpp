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

#ifndef CHAINLINT_REPORT_REPORT_HPP_
#define CHAINLINT_REPORT_REPORT_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "graph/callgraph.hpp"
#include "rules/rules.hpp"
#include "source/model.hpp"

namespace chainlint::report {

struct Location {
  std::string file;  // relative to the analysis root
  uint32_t line = 0;
  uint32_t column = 0;
  uint32_t end_line = 0;
  uint32_t end_column = 0;
  uint32_t begin = 0;  // byte range
  uint32_t end = 0;
};

struct WitnessStep {
  std::string function;  // qualified display name
  Location site;         // call site in the previous step; empty for the entry
};

struct Finding {
  rules::RuleId rule = rules::RuleId::R1_BlockPanic;
  std::string message;
  Location location;
  std::string import_path;
  std::string container;  // "Recv.Name", "Name", "type:Name" or "const:Name"
  std::string function;   // enclosing FuncId display, "" at package level
  std::vector<std::string> entry_kinds;
  std::vector<WitnessStep> witness;
  std::string fingerprint;
  bool suppressed = false;
  std::string justification;
};

struct Diagnostic {
  std::string file;
  uint32_t line = 0;
  uint32_t column = 0;
  std::string message;
};

// 16 hex digits of FNV-1a over (rule, importPath, container, node-kind path
// with same-kind ordinals).
std::string fingerprint(const rules::RawFinding& raw, const go::SourceModel& model);

std::vector<Finding> materialize(const go::SourceModel& model, const graph::CallGraph& graph,
                                 const std::vector<rules::RawFinding>& raw);

// Applies `//consensus:ignore <rule-name> <justification>` directives found
// on the flagged line or the line above. Returns diagnostics for malformed
// directives, which are ignored.
std::vector<Diagnostic> apply_suppressions(std::vector<Finding>& findings,
                                           const go::SourceModel& model);

std::string emit_text(const std::vector<Finding>& findings);

struct ToolMetadata {
  std::string name = "chainlint";
  std::string version;
  std::string information_uri;
};

struct RunNotes {
  std::vector<Diagnostic> diagnostics;
  std::vector<Location> unresolved_calls;
};

std::string emit_sarif(const std::vector<Finding>& findings, const ToolMetadata& tool,
                       const RunNotes& notes);

// Throws AnalysisError when the file cannot be read.
std::set<std::string> read_baseline(const std::filesystem::path& path);
std::string format_baseline(const std::vector<Finding>& findings);

struct BaselineDiff {
  std::vector<const Finding*> added;
  std::vector<std::string> fixed;
};
BaselineDiff diff_baseline(const std::vector<Finding>& findings,
                           const std::set<std::string>& baseline);

}  // namespace chainlint::report

#endif  // CHAINLINT_REPORT_REPORT_HPP_
