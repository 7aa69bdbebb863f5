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

#ifndef CHAINLINT_SCOPE_SCOPE_HPP_
#define CHAINLINT_SCOPE_SCOPE_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graph/callgraph.hpp"
#include "source/model.hpp"

namespace chainlint::scope {

struct EntryKind {
  enum Tag : uint8_t { BeginBlock, EndBlock, DeliverTx, Extra } tag = BeginBlock;
  std::string name;  // Extra only

  auto operator<=>(const EntryKind&) const = default;
  bool operator==(const EntryKind&) const = default;

  bool is_block() const { return tag == BeginBlock || tag == EndBlock; }
  // "BeginBlock", "EndBlock", "DeliverTx", "Extra(Name)".
  std::string str() const;
};

// Exact name, or suffix match when `suffix` is set. arity < 0 means any.
struct MethodPattern {
  std::string name;
  bool suffix = false;
  int arity = -1;

  bool matches(std::string_view func_name, size_t params) const;
};

struct EntryPointSpec {
  std::vector<MethodPattern> method_names{{"BeginBlock"}, {"EndBlock"}};
  std::vector<std::string> server_interface_suffixes{"MsgServer"};
  std::vector<std::string> extra_entry_names;
};

// Node indices into model.funcs() / graph.nodes().
using EntryMap = std::map<EntryKind, std::set<size_t>>;

EntryMap find_entry_points(const go::SourceModel& model, const EntryPointSpec& spec);

enum class Mode : uint8_t { Whitelist, Blacklist };

struct ScopeSet {
  Mode mode = Mode::Whitelist;
  std::map<size_t, std::set<EntryKind>> members;

  bool contains(size_t func) const { return members.count(func) > 0; }
  // Members reached from BeginBlock or EndBlock.
  std::set<size_t> block_subset() const;
};

ScopeSet compute_scope(const graph::CallGraph& graph, const EntryMap& entries);

inline const std::vector<std::string>& default_blacklist() {
  static const std::vector<std::string> kDefault{"mock", "test", "simulation", "cli", "client"};
  return kDefault;
}

ScopeSet legacy_blacklist_scope(const go::SourceModel& model,
                                const std::vector<std::string>& patterns);

// Every non-test FuncDecl, for scope-gating checks.
ScopeSet all_functions_scope(const go::SourceModel& model);

// `importPath<TAB>func<TAB>entryKinds` lines, sorted.
std::string scope_listing(const go::SourceModel& model, const ScopeSet& scope);

}  // namespace chainlint::scope

#endif  // CHAINLINT_SCOPE_SCOPE_HPP_
