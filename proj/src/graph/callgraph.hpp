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

// Static call graph over the FuncDecls of a SourceModel.
//
// Node i is model.funcs()[i]. Calls made inside function literals are
// attributed to the enclosing declaration. Calls into packages or types
// outside the tree are leaves and produce no edge.

#ifndef CHAINLINT_GRAPH_CALLGRAPH_HPP_
#define CHAINLINT_GRAPH_CALLGRAPH_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "source/model.hpp"

namespace chainlint::graph {

using go::FuncId;

inline constexpr size_t kNoNode = std::numeric_limits<size_t>::max();

enum class Resolution : uint8_t { Direct, InterfaceDispatch, Unresolved };

std::string_view resolution_name(Resolution r);

struct CallSite {
  std::string file;
  uint32_t line = 0;
  uint32_t column = 0;
  const go::Node* node = nullptr;  // CallExpr; null for synthetic graphs

  auto operator<=>(const CallSite& o) const {
    return std::tie(file, line, column) <=> std::tie(o.file, o.line, o.column);
  }
  bool operator==(const CallSite& o) const {
    return file == o.file && line == o.line && column == o.column;
  }
};

struct Edge {
  size_t caller = kNoNode;
  size_t callee = kNoNode;  // kNoNode for Unresolved
  CallSite site;
  Resolution resolution = Resolution::Direct;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CallGraph {
 public:
  CallGraph() = default;
  // Builds a graph from explicit nodes and edges (tests, synthetic inputs).
  CallGraph(std::vector<FuncId> nodes, std::vector<Edge> edges);

  const std::vector<FuncId>& nodes() const { return nodes_; }
  // Sorted by (caller, callee, site, resolution).
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge indices leaving `n` that have a callee.
  const std::vector<size_t>& out_edges(size_t n) const { return out_[n]; }
  std::optional<size_t> index_of(const FuncId& id) const;
  // Rank of a node under the witness tie-break order.
  size_t tie_rank(size_t n) const { return rank_[n]; }

  size_t unresolved_count() const;
  std::vector<const Edge*> unresolved_edges() const;

 private:
  std::vector<FuncId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<size_t>> out_;
  std::vector<size_t> rank_;
};

CallGraph build_call_graph(const go::SourceModel& model);

// Transitive closure over Direct and InterfaceDispatch edges, seeds included.
// Returned sorted by node index. Throws GraphError if a seed is unknown.
std::vector<size_t> reachable_from(const CallGraph& graph, const std::vector<size_t>& seeds);
std::vector<size_t> reachable_from(const CallGraph& graph, const std::vector<FuncId>& seeds);

struct PathStep {
  size_t callee = kNoNode;
  CallSite site;  // call site inside the previous function
};

// Minimum-edge path; ties go to the lexicographically smaller sequence of
// callees under (importPath, name, file, offset). Empty when from == to.
// Throws GraphError when `to` is unreachable.
std::vector<PathStep> shortest_witness_path(const CallGraph& graph, size_t from, size_t to);

// `caller<TAB>callee<TAB>file:line<TAB>resolution` lines, sorted.
std::string dump_graph(const CallGraph& graph);

}  // namespace chainlint::graph

#endif  // CHAINLINT_GRAPH_CALLGRAPH_HPP_
