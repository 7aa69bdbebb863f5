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

// The eight consensus-determinism detectors.
//
// Each detector reports only code inside the supplied scope. R1 uses the
// BeginBlock/EndBlock-reachable subset and reports each distinct panic site
// once, with the reaching entry kinds and one shortest witness path.

#ifndef CHAINLINT_RULES_RULES_HPP_
#define CHAINLINT_RULES_RULES_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graph/callgraph.hpp"
#include "scope/scope.hpp"
#include "source/model.hpp"

namespace chainlint::rules {

enum class RuleId : uint8_t {
  R1_BlockPanic,
  R2_MapIteration,
  R3_HardcodedBech32,
  R4_Goroutine,
  R5_FloatArithmetic,
  R6_SystemTime,
  R7_UnsafePackage,
  R8_PlatformDependentType,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::R1_BlockPanic,      RuleId::R2_MapIteration,  RuleId::R3_HardcodedBech32,
    RuleId::R4_Goroutine,       RuleId::R5_FloatArithmetic, RuleId::R6_SystemTime,
    RuleId::R7_UnsafePackage,   RuleId::R8_PlatformDependentType,
};

std::string_view rule_name(RuleId r);
std::string_view rule_title(RuleId r);
std::string_view rule_description(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);

struct RuleConfig {
  std::set<RuleId> enabled{std::begin(kAllRules), std::end(kAllRules)};
  std::vector<std::string> time_deny{"time.Now",  "time.Since",     "time.Until", "time.After",
                                     "time.Tick", "time.NewTicker", "time.NewTimer"};
  std::vector<std::string> unsafe_packages{"math/rand", "reflect", "unsafe", "runtime"};
  std::vector<std::string> bech32_setters{"SetBech32PrefixForAccount",
                                          "SetBech32PrefixForValidator",
                                          "SetBech32PrefixForConsensusNode", "GetFromBech32"};

  // Throws UsageError when an enabled rule has an empty list.
  void validate() const;
};

struct RawFinding {
  RuleId rule = RuleId::R1_BlockPanic;
  const go::Node* node = nullptr;
  const go::SourceFile* file = nullptr;
  size_t func = graph::kNoNode;  // enclosing FuncDecl, kNoNode at package level
  const go::Node* container = nullptr;  // FuncDecl, or the package-level spec
  std::string message;
  std::set<scope::EntryKind> entry_kinds;
  size_t witness_entry = graph::kNoNode;
  std::vector<graph::PathStep> witness;
};

std::vector<RawFinding> detect_block_panic(const go::SourceModel& model,
                                           const graph::CallGraph& graph,
                                           const scope::EntryMap& entries);
std::vector<RawFinding> detect_map_iteration(const go::SourceModel& model,
                                             const scope::ScopeSet& scope);
std::vector<RawFinding> detect_hardcoded_bech32(const go::SourceModel& model,
                                                const scope::ScopeSet& scope,
                                                const RuleConfig& config);
std::vector<RawFinding> detect_goroutine(const go::SourceModel& model,
                                         const scope::ScopeSet& scope);
std::vector<RawFinding> detect_float(const go::SourceModel& model, const scope::ScopeSet& scope);
std::vector<RawFinding> detect_system_time(const go::SourceModel& model,
                                           const scope::ScopeSet& scope,
                                           const RuleConfig& config);
std::vector<RawFinding> detect_unsafe_package(const go::SourceModel& model,
                                              const scope::ScopeSet& scope,
                                              const RuleConfig& config);
std::vector<RawFinding> detect_platform_types(const go::SourceModel& model,
                                              const scope::ScopeSet& scope);

// Enabled detectors, sorted by (file, line, column, rule).
std::vector<RawFinding> run_all(const go::SourceModel& model, const graph::CallGraph& graph,
                                const scope::ScopeSet& scope, const scope::EntryMap& entries,
                                const RuleConfig& config);

}  // namespace chainlint::rules

#endif  // CHAINLINT_RULES_RULES_HPP_
