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

#include "graph/callgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace chainlint::graph {

using go::FuncDecl;
using go::Node;
using go::NodeKind;
using go::RefKind;
using go::Type;
using go::TypeKind;

std::string_view resolution_name(Resolution r) {
  switch (r) {
    case Resolution::Direct: return "Direct";
    case Resolution::InterfaceDispatch: return "InterfaceDispatch";
    case Resolution::Unresolved: return "Unresolved";
  }
  return "?";
}

CallGraph::CallGraph(std::vector<FuncId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.caller >= nodes_.size() || (e.callee != kNoNode && e.callee >= nodes_.size())) {
      throw GraphError("edge endpoint outside the node set");
    }
    if ((e.callee == kNoNode) != (e.resolution == Resolution::Unresolved)) {
      throw GraphError("unresolved edges must have no callee, resolved edges must have one");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.caller, a.callee, a.site, a.resolution) <
           std::tie(b.caller, b.callee, b.site, b.resolution);
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end(),
                           [](const Edge& a, const Edge& b) {
                             return a.caller == b.caller && a.callee == b.callee &&
                                    a.site == b.site && a.resolution == b.resolution;
                           }),
               edges_.end());
  out_.assign(nodes_.size(), {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].callee != kNoNode) out_[edges_[i].caller].push_back(i);
  }
  std::vector<size_t> order(nodes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const FuncId& x = nodes_[a];
    const FuncId& y = nodes_[b];
    return std::tie(x.import_path, x.name, x.file, x.offset, x.receiver) <
           std::tie(y.import_path, y.name, y.file, y.offset, y.receiver);
  });
  rank_.assign(nodes_.size(), 0);
  for (size_t r = 0; r < order.size(); ++r) rank_[order[r]] = r;
}

std::optional<size_t> CallGraph::index_of(const FuncId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it != nodes_.end() && *it == id) return static_cast<size_t>(it - nodes_.begin());
  // Synthetic graphs need not be sorted.
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == id) return i;
  }
  return std::nullopt;
}

size_t CallGraph::unresolved_count() const {
  return static_cast<size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) {
    return e.resolution == Resolution::Unresolved;
  }));
}

std::vector<const Edge*> CallGraph::unresolved_edges() const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges_) {
    if (e.resolution == Resolution::Unresolved) out.push_back(&e);
  }
  return out;
}

namespace {

const Node* unparen(const Node* n) {
  while (n && n->kind == NodeKind::ParenExpr) n = n->kids[0];
  return n;
}

class Builder {
 public:
  explicit Builder(const go::SourceModel& m) : m_(m) {}

  CallGraph build() {
    std::vector<FuncId> nodes;
    nodes.reserve(m_.funcs().size());
    for (const FuncDecl& f : m_.funcs()) nodes.push_back(f.id);
    for (size_t i = 0; i < m_.funcs().size(); ++i) {
      caller_ = &m_.funcs()[i];
      caller_index_ = i;
      walk(caller_->body());
    }
    return CallGraph(std::move(nodes), std::move(edges_));
  }

 private:
  struct Target {
    enum Kind { Edges, Leaf, Unresolved } kind = Leaf;
    Resolution resolution = Resolution::Direct;
    std::vector<const FuncDecl*> decls;
  };

  void walk(const Node* n) {
    if (!n) return;
    if (n->kind == NodeKind::CallExpr && !n->is_conversion) add_call(n);
    for (const Node* k : n->kids) walk(k);
  }

  size_t index_of(const FuncDecl* f) const {
    return static_cast<size_t>(f - m_.funcs().data());
  }

  void add_call(const Node* call) {
    Target t = resolve(call->kids[0], 0);
    CallSite site;
    site.file = caller_->file->path;
    go::LineCol lc = caller_->file->position(call->begin);
    site.line = lc.line;
    site.column = lc.column;
    site.node = call;
    if (t.kind == Target::Unresolved) {
      edges_.push_back({caller_index_, kNoNode, site, Resolution::Unresolved});
      return;
    }
    if (t.kind != Target::Edges) return;
    for (const FuncDecl* d : t.decls) {
      edges_.push_back({caller_index_, index_of(d), site, t.resolution});
    }
  }

  static Target unresolved() {
    Target t;
    t.kind = Target::Unresolved;
    return t;
  }
  static Target leaf() { return Target{}; }
  static Target direct(std::vector<const FuncDecl*> decls) {
    Target t;
    if (decls.empty()) return leaf();
    t.kind = Target::Edges;
    t.decls = std::move(decls);
    return t;
  }

  Target resolve(const Node* callee, int depth) {
    callee = unparen(callee);
    if (!callee || depth > 4) return unresolved();
    if (callee->kind == NodeKind::IndexExpr && !callee->is_type) {
      // Explicit instantiation of a generic function: f[T](...).
      const Node* base = unparen(callee->kids[0]);
      if (base && (base->ref == RefKind::PackageFunc || base->ref == RefKind::Method)) {
        callee = base;
      }
    }
    switch (callee->kind) {
      case NodeKind::FuncLit:
        return leaf();  // body is walked as part of the caller
      case NodeKind::Ident:
        return resolve_ident(callee, depth);
      case NodeKind::SelectorExpr:
        return resolve_selector(callee);
      default:
        return unresolved();
    }
  }

  Target resolve_ident(const Node* id, int depth) {
    switch (id->ref) {
      case RefKind::PackageFunc:
        return direct(m_.package_funcs(id->ref_pkg, id->text));
      case RefKind::Builtin:
      case RefKind::TypeName:
      case RefKind::UniverseType:
        return leaf();
      case RefKind::Local: {
        const go::LocalVar* v = id->local;
        if (v && !v->is_param && v->reassignments == 0 && v->init) {
          const Node* init = unparen(v->init);
          if (init->kind == NodeKind::FuncLit) return leaf();
          Target t = resolve(init, depth + 1);
          if (t.kind == Target::Edges) {
            t.resolution = Resolution::Direct;
            return t;
          }
        }
        return unresolved();
      }
      default:
        return unresolved();
    }
  }

  Target resolve_selector(const Node* sel_expr) {
    const Node* sel = sel_expr->kids[1];
    switch (sel->ref) {
      case RefKind::PackageFunc:
        return direct(m_.package_funcs(sel->ref_pkg, sel->text));
      case RefKind::ExternalMember:
      case RefKind::TypeName:
        return leaf();
      case RefKind::Method:
        return direct(m_.method_decls(sel->recv, sel->text));
      case RefKind::InterfaceMethod: {
        Target t;
        t.decls = implementers(sel->recv, std::string(sel->text), caller_->is_test());
        if (t.decls.empty()) return leaf();
        t.kind = Target::Edges;
        t.resolution = Resolution::InterfaceDispatch;
        return t;
      }
      default:
        return unresolved();
    }
  }

  // Every in-tree named type whose method set covers the interface and that
  // provides `method`.
  std::vector<const FuncDecl*> implementers(const Type* iface, const std::string& method,
                                            bool include_tests) {
    auto key = std::make_tuple(iface, method, include_tests);
    if (auto it = impl_cache_.find(key); it != impl_cache_.end()) return it->second;
    std::vector<std::string> required = m_.interface_methods(iface, nullptr);
    std::set<const FuncDecl*> out;
    for (const auto& nt : m_.named_types()) {
      const Type* u = nt.type->under;
      if (!u || u->kind == TypeKind::Interface) continue;
      if (!include_tests && nt.file->is_test) continue;
      std::vector<std::string> have = m_.method_set(nt.type);
      if (!std::includes(have.begin(), have.end(), required.begin(), required.end())) continue;
      for (const FuncDecl* d : m_.method_decls(nt.type, method)) {
        if (!include_tests && d->is_test()) continue;
        out.insert(d);
      }
    }
    std::vector<const FuncDecl*> result(out.begin(), out.end());
    std::sort(result.begin(), result.end(),
              [](const FuncDecl* a, const FuncDecl* b) { return a->id < b->id; });
    impl_cache_[key] = result;
    return result;
  }

  const go::SourceModel& m_;
  const FuncDecl* caller_ = nullptr;
  size_t caller_index_ = 0;
  std::vector<Edge> edges_;
  std::map<std::tuple<const Type*, std::string, bool>, std::vector<const FuncDecl*>>
      impl_cache_;
};

}  // namespace

CallGraph build_call_graph(const go::SourceModel& model) { return Builder(model).build(); }

std::vector<size_t> reachable_from(const CallGraph& graph, const std::vector<size_t>& seeds) {
  std::vector<bool> seen(graph.nodes().size(), false);
  std::vector<size_t> stack;
  for (size_t s : seeds) {
    if (s >= graph.nodes().size()) {
      throw GraphError("seed not in graph: node #" + std::to_string(s));
    }
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    size_t n = stack.back();
    stack.pop_back();
    for (size_t e : graph.out_edges(n)) {
      size_t c = graph.edges()[e].callee;
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::vector<size_t> reachable_from(const CallGraph& graph, const std::vector<FuncId>& seeds) {
  std::vector<size_t> idx;
  for (const FuncId& id : seeds) {
    auto i = graph.index_of(id);
    if (!i) throw GraphError("seed not in graph: " + id.key());
    idx.push_back(*i);
  }
  return reachable_from(graph, idx);
}

std::vector<PathStep> shortest_witness_path(const CallGraph& graph, size_t from, size_t to) {
  const size_t n = graph.nodes().size();
  if (from >= n || to >= n) throw GraphError("witness endpoint not in graph");
  if (from == to) return {};
  // Distance to `to` over reversed edges.
  std::vector<std::vector<size_t>> in(n);
  for (const Edge& e : graph.edges()) {
    if (e.callee != kNoNode) in[e.callee].push_back(e.caller);
  }
  constexpr size_t kInf = std::numeric_limits<size_t>::max();
  std::vector<size_t> dist(n, kInf);
  std::deque<size_t> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    for (size_t u : in[v]) {
      if (dist[u] == kInf) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (dist[from] == kInf) {
    throw GraphError("no path from " + graph.nodes()[from].key() + " to " +
                     graph.nodes()[to].key());
  }
  std::vector<PathStep> path;
  size_t cur = from;
  while (cur != to) {
    const Edge* best = nullptr;
    for (size_t ei : graph.out_edges(cur)) {
      const Edge& e = graph.edges()[ei];
      if (dist[e.callee] + 1 != dist[cur]) continue;
      if (!best || graph.tie_rank(e.callee) < graph.tie_rank(best->callee) ||
          (e.callee == best->callee && e.site < best->site)) {
        best = &e;
      }
    }
    path.push_back({best->callee, best->site});
    cur = best->callee;
  }
  return path;
}

std::string dump_graph(const CallGraph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    std::string line = graph.nodes()[e.caller].display();
    line += '\t';
    line += e.callee == kNoNode ? std::string("<unresolved>") : graph.nodes()[e.callee].display();
    line += '\t';
    line += e.site.file + ":" + std::to_string(e.site.line);
    line += '\t';
    line += resolution_name(e.resolution);
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace chainlint::graph
