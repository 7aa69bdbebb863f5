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

#include "rules/rules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_set>

#include "common/errors.hpp"
#include "rules/bech32.hpp"

namespace chainlint::rules {

using go::FuncDecl;
using go::Node;
using go::NodeKind;
using go::RefKind;
using go::SourceModel;
using go::TypeClass;
using go::Tok;

std::string_view rule_name(RuleId r) {
  switch (r) {
    case RuleId::R1_BlockPanic: return "cosmos/block-panic";
    case RuleId::R2_MapIteration: return "cosmos/map-iteration";
    case RuleId::R3_HardcodedBech32: return "cosmos/hardcoded-bech32";
    case RuleId::R4_Goroutine: return "cosmos/goroutine";
    case RuleId::R5_FloatArithmetic: return "cosmos/float-arith";
    case RuleId::R6_SystemTime: return "cosmos/system-time";
    case RuleId::R7_UnsafePackage: return "cosmos/unsafe-package";
    case RuleId::R8_PlatformDependentType: return "cosmos/platform-int";
  }
  return "?";
}

std::string_view rule_title(RuleId r) {
  switch (r) {
    case RuleId::R1_BlockPanic: return "Panic reachable from BeginBlock/EndBlock";
    case RuleId::R2_MapIteration: return "Map iteration";
    case RuleId::R3_HardcodedBech32: return "Hardcoded Bech32 address or prefix";
    case RuleId::R4_Goroutine: return "Goroutine or select statement";
    case RuleId::R5_FloatArithmetic: return "Floating-point arithmetic";
    case RuleId::R6_SystemTime: return "System clock access";
    case RuleId::R7_UnsafePackage: return "Use of a nondeterministic package";
    case RuleId::R8_PlatformDependentType: return "Platform-dependent integer type";
  }
  return "?";
}

std::string_view rule_description(RuleId r) {
  switch (r) {
    case RuleId::R1_BlockPanic:
      return "A panic during BeginBlock or EndBlock is not recovered and halts the chain.";
    case RuleId::R2_MapIteration:
      return "Go randomizes map iteration order; iterate over sorted keys instead.";
    case RuleId::R3_HardcodedBech32:
      return "Bech32 prefixes and addresses should come from configuration, not literals.";
    case RuleId::R4_Goroutine:
      return "Goroutines and select statements introduce scheduling nondeterminism.";
    case RuleId::R5_FloatArithmetic:
      return "Floating-point results can differ across platforms; use fixed-point decimals.";
    case RuleId::R6_SystemTime:
      return "Wall-clock time differs between nodes; use the block time from the context.";
    case RuleId::R7_UnsafePackage:
      return "rand, reflect, unsafe and runtime can produce node-local results.";
    case RuleId::R8_PlatformDependentType:
      return "int, uint and uintptr have architecture-dependent widths.";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (RuleId r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

void RuleConfig::validate() const {
  auto need = [&](RuleId r, const std::vector<std::string>& list, const char* key) {
    if (enabled.count(r) && list.empty()) {
      throw UsageError(std::string(key) + " must not be empty while " +
                       std::string(rule_name(r)) + " is enabled");
    }
  };
  need(RuleId::R3_HardcodedBech32, bech32_setters, "rules.bech32_setters");
  need(RuleId::R6_SystemTime, time_deny, "rules.time_deny");
  need(RuleId::R7_UnsafePackage, unsafe_packages, "rules.unsafe_packages");
}

namespace {

template <typename F>
void visit(const Node* n, F&& f) {
  if (!n) return;
  f(n);
  for (const Node* k : n->kids) visit(k, f);
}

const Node* unparen(const Node* n) {
  while (n && n->kind == NodeKind::ParenExpr) n = n->kids[0];
  return n;
}

TypeClass cls(const SourceModel& m, const Node* n) { return m.type_of(n).classification; }

RawFinding make(RuleId rule, const Node* node, const FuncDecl& f, size_t index,
                std::string message) {
  RawFinding r;
  r.rule = rule;
  r.node = node;
  r.file = f.file;
  r.func = index;
  r.container = f.node;
  r.message = std::move(message);
  return r;
}

// Calls `fn(index, decl)` for every scope member.
template <typename F>
void for_scope(const SourceModel& m, const scope::ScopeSet& scope, F&& fn) {
  for (const auto& [index, kinds] : scope.members) fn(index, m.funcs()[index]);
}

std::string unquote(std::string_view lit) {
  if (lit.size() < 2) return {};
  if (lit.front() == '`') return std::string(lit.substr(1, lit.size() - 2));
  std::string_view body = lit.substr(1, lit.size() - 2);
  if (body.find('\\') != std::string_view::npos) return {};
  return std::string(body);
}

bool is_string_lit(const Node* n) {
  return n && n->kind == NodeKind::BasicLit && n->op == Tok::String;
}

std::string path_summary(const SourceModel& m, const graph::CallGraph& g, size_t entry,
                         const std::vector<graph::PathStep>& path) {
  std::string s = g.nodes()[entry].qualified_name();
  for (const auto& step : path) s += " -> " + m.funcs()[step.callee].id.qualified_name();
  return s;
}

}  // namespace

std::vector<RawFinding> detect_block_panic(const SourceModel& model,
                                           const graph::CallGraph& graph,
                                           const scope::EntryMap& entries) {
  std::map<size_t, std::set<scope::EntryKind>> reached;
  std::vector<size_t> seeds;
  for (const auto& [kind, funcs] : entries) {
    if (!kind.is_block() || funcs.empty()) continue;
    seeds.insert(seeds.end(), funcs.begin(), funcs.end());
    for (size_t f : graph::reachable_from(graph, std::vector<size_t>(funcs.begin(), funcs.end()))) {
      reached[f].insert(kind);
    }
  }
  std::sort(seeds.begin(), seeds.end(),
            [&](size_t a, size_t b) { return graph.tie_rank(a) < graph.tie_rank(b); });
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  // Reverse adjacency for nearest-entry selection.
  std::vector<std::vector<size_t>> in(graph.nodes().size());
  for (const auto& e : graph.edges()) {
    if (e.callee != graph::kNoNode) in[e.callee].push_back(e.caller);
  }

  std::vector<RawFinding> out;
  for (const auto& [f, kinds] : reached) {
    const FuncDecl& decl = model.funcs()[f];
    std::vector<const Node*> sites;
    visit(decl.body(), [&](const Node* n) {
      if (model.syntax_kind(n) == go::SyntaxKind::PanicCall) sites.push_back(n);
    });
    if (sites.empty()) continue;
    std::vector<size_t> dist(graph.nodes().size(), graph::kNoNode);
    std::deque<size_t> queue{f};
    dist[f] = 0;
    while (!queue.empty()) {
      size_t v = queue.front();
      queue.pop_front();
      for (size_t u : in[v]) {
        if (dist[u] == graph::kNoNode) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    size_t entry = graph::kNoNode;
    for (size_t s : seeds) {
      if (dist[s] != graph::kNoNode && (entry == graph::kNoNode || dist[s] < dist[entry])) {
        entry = s;
      }
    }
    auto path = graph::shortest_witness_path(graph, entry, f);
    std::string kinds_text;
    for (const auto& k : kinds) kinds_text += (kinds_text.empty() ? "" : ", ") + k.str();
    for (const Node* site : sites) {
      RawFinding r = make(RuleId::R1_BlockPanic, site, decl, f,
                          "panic reachable from " + kinds_text + " halts the chain (" +
                              path_summary(model, graph, entry, path) + ")");
      r.entry_kinds = kinds;
      r.witness_entry = entry;
      r.witness = path;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<RawFinding> detect_map_iteration(const SourceModel& model,
                                             const scope::ScopeSet& scope) {
  std::vector<RawFinding> out;
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    visit(f.body(), [&](const Node* n) {
      if (n->kind != NodeKind::RangeStmt) return;
      const go::TypeRef t = model.type_of(n->kids[2]);
      if (t.classification != TypeClass::Map) return;
      out.push_back(make(RuleId::R2_MapIteration, n, f, i,
                         "iteration over map[" + t.key + "]" + t.value +
                             " has nondeterministic order"));
    });
  });
  return out;
}

std::vector<RawFinding> detect_hardcoded_bech32(const SourceModel& model,
                                                const scope::ScopeSet& scope,
                                                const RuleConfig& config) {
  std::vector<RawFinding> out;
  std::unordered_set<const Node*> seen;
  auto setter_match = [&](const Node* callee) -> std::string {
    callee = unparen(callee);
    std::string_view name;
    std::string_view qualifier;
    if (callee && callee->kind == NodeKind::Ident) {
      name = callee->text;
    } else if (callee && callee->kind == NodeKind::SelectorExpr) {
      name = callee->kids[1]->text;
      const Node* x = unparen(callee->kids[0]);
      if (x->kind == NodeKind::Ident) qualifier = x->text;
    } else {
      return {};
    }
    for (const std::string& s : config.bech32_setters) {
      const size_t dot = s.rfind('.');
      if (dot == std::string::npos) {
        if (s == name) return s;
      } else if (std::string_view(s).substr(dot + 1) == name &&
                 std::string_view(s).substr(0, dot) == qualifier) {
        return s;
      }
    }
    return {};
  };
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    visit(f.body(), [&](const Node* n) {
      if (is_string_lit(n) && is_bech32(unquote(n->text)) && seen.insert(n).second) {
        out.push_back(make(RuleId::R3_HardcodedBech32, n, f, i, "hardcoded Bech32 address literal"));
        return;
      }
      if (n->kind == NodeKind::CallExpr && !n->is_conversion) {
        const std::string setter = setter_match(n->kids[0]);
        if (setter.empty()) return;
        for (size_t a = 1; a < n->kids.size(); ++a) {
          const Node* arg = unparen(n->kids[a]);
          if (is_string_lit(arg) && seen.insert(arg).second) {
            out.push_back(make(RuleId::R3_HardcodedBech32, arg, f, i,
                               "hardcoded Bech32 prefix passed to " + setter));
          }
        }
        return;
      }
      // Package-level constants holding a full address.
      const Node* ref = n;
      if (n->kind == NodeKind::SelectorExpr) ref = n->kids[1];
      if (n->kind == NodeKind::Ident && n->parent && n->parent->kind == NodeKind::SelectorExpr &&
          n->parent->kids[1] == n) {
        return;
      }
      if ((n->kind != NodeKind::Ident && n->kind != NodeKind::SelectorExpr) ||
          ref->ref != RefKind::PackageConst || !ref->ref_decl) {
        return;
      }
      const Node* spec = ref->ref_decl->parent;
      if (!spec || spec->kind != NodeKind::ValueSpec) return;
      size_t idx = 0;
      while (idx < spec->split && spec->kids[idx] != ref->ref_decl) ++idx;
      const Node* value = unparen(spec->kid(spec->split + 1 + idx));
      if (!is_string_lit(value) || !is_bech32(unquote(value->text))) return;
      if (!seen.insert(value).second) return;
      RawFinding r;
      r.rule = RuleId::R3_HardcodedBech32;
      r.node = value;
      r.file = model.file_of(spec);
      r.container = spec;
      r.message = "hardcoded Bech32 address in constant " + std::string(ref->ref_decl->text);
      out.push_back(std::move(r));
    });
  });
  return out;
}

std::vector<RawFinding> detect_goroutine(const SourceModel& model, const scope::ScopeSet& scope) {
  std::vector<RawFinding> out;
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    visit(f.body(), [&](const Node* n) {
      if (n->kind == NodeKind::GoStmt) {
        out.push_back(make(RuleId::R4_Goroutine, n, f, i, "goroutine spawned in consensus code"));
      } else if (n->kind == NodeKind::SelectStmt) {
        out.push_back(make(RuleId::R4_Goroutine, n, f, i, "select statement in consensus code"));
      }
    });
  });
  return out;
}

std::vector<RawFinding> detect_float(const SourceModel& model, const scope::ScopeSet& scope) {
  std::vector<RawFinding> out;
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    visit(f.node, [&](const Node* n) {
      switch (n->kind) {
        case NodeKind::BinaryExpr:
          if ((n->op == Tok::Add || n->op == Tok::Sub || n->op == Tok::Mul || n->op == Tok::Quo) &&
              cls(model, n) == TypeClass::Float) {
            out.push_back(make(RuleId::R5_FloatArithmetic, n, f, i,
                               "floating-point arithmetic (" + go::type_string(n->type) + ")"));
          }
          break;
        case NodeKind::AssignStmt:
          if ((n->op == Tok::AddAssign || n->op == Tok::SubAssign || n->op == Tok::MulAssign ||
               n->op == Tok::QuoAssign) &&
              cls(model, n->kids[0]) == TypeClass::Float) {
            out.push_back(make(RuleId::R5_FloatArithmetic, n, f, i,
                               "floating-point arithmetic (" +
                                   go::type_string(n->kids[0]->type) + ")"));
          }
          break;
        case NodeKind::CallExpr:
          if (n->is_conversion && cls(model, n) == TypeClass::Float) {
            out.push_back(make(RuleId::R5_FloatArithmetic, n, f, i,
                               "conversion to " + go::type_string(n->type)));
          }
          break;
        case NodeKind::ValueSpec:
        case NodeKind::Field: {
          const Node* t = n->kid(n->split);
          if (t && cls(model, t) == TypeClass::Float) {
            out.push_back(make(RuleId::R5_FloatArithmetic, t, f, i,
                               "floating-point declaration (" + go::type_string(t->type) + ")"));
          }
          break;
        }
        default:
          break;
      }
    });
  });
  return out;
}

std::vector<RawFinding> detect_system_time(const SourceModel& model,
                                           const scope::ScopeSet& scope,
                                           const RuleConfig& config) {
  std::vector<RawFinding> out;
  std::set<std::pair<std::string, std::string>> deny;
  for (const std::string& q : config.time_deny) {
    const size_t dot = q.rfind('.');
    if (dot != std::string::npos) deny.insert({q.substr(0, dot), q.substr(dot + 1)});
  }
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    visit(f.body(), [&](const Node* n) {
      if (n->kind != NodeKind::CallExpr) return;
      const Node* callee = unparen(n->kids[0]);
      if (!callee || callee->kind != NodeKind::SelectorExpr) return;
      const Node* x = unparen(callee->kids[0]);
      if (x->kind != NodeKind::Ident || x->ref != RefKind::Import) return;
      const std::string path(x->ref_path);
      const std::string name(callee->kids[1]->text);
      if (!deny.count({path, name})) return;
      out.push_back(make(RuleId::R6_SystemTime, n, f, i, "system clock call " + path + "." + name));
    });
  });
  return out;
}

std::vector<RawFinding> detect_unsafe_package(const SourceModel& model,
                                              const scope::ScopeSet& scope,
                                              const RuleConfig& config) {
  std::vector<RawFinding> out;
  const std::set<std::string> unsafe(config.unsafe_packages.begin(), config.unsafe_packages.end());
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    visit(f.node, [&](const Node* n) {
      if (n->kind != NodeKind::SelectorExpr) return;
      const Node* x = n->kids[0];
      if (x->kind != NodeKind::Ident || x->ref != RefKind::Import) return;
      const std::string path(x->ref_path);
      if (!unsafe.count(path)) return;
      out.push_back(make(RuleId::R7_UnsafePackage, n, f, i,
                         "use of package " + path + " (" + path + "." +
                             std::string(n->kids[1]->text) + ")"));
    });
  });
  return out;
}

namespace {

bool is_platform_spelling(const Node* n) {
  return n->kind == NodeKind::Ident && n->ref == RefKind::UniverseType &&
         (n->text == "int" || n->text == "uint" || n->text == "uintptr");
}

void collect_platform(const Node* type_expr, std::vector<const Node*>& sink) {
  visit(type_expr, [&](const Node* n) {
    if (is_platform_spelling(n)) sink.push_back(n);
  });
}

}  // namespace

std::vector<RawFinding> detect_platform_types(const SourceModel& model,
                                              const scope::ScopeSet& scope) {
  std::vector<RawFinding> out;
  std::unordered_set<const Node*> seen;
  std::unordered_set<const go::Type*> used;
  std::vector<const go::Type*> used_types;
  for_scope(model, scope, [&](size_t i, const FuncDecl& f) {
    std::vector<const Node*> spellings;
    visit(f.node, [&](const Node* n) {
      switch (n->kind) {
        case NodeKind::ValueSpec:
        case NodeKind::Field:
          collect_platform(n->kid(n->split), spellings);
          break;
        case NodeKind::CallExpr:
          if (n->is_conversion) collect_platform(n->kids[0], spellings);
          break;
        default:
          break;
      }
      if (n->is_type && n->type && n->type->kind == go::TypeKind::Named && n->type->pkg &&
          n->type->decl && (n->kind == NodeKind::Ident || n->kind == NodeKind::SelectorExpr)) {
        if (used.insert(n->type).second) {
          used_types.push_back(n->type);
        }
      }
    });
    for (const Node* s : spellings) {
      if (!seen.insert(s).second) continue;
      const bool conversion = s->parent && s->parent->kind == NodeKind::CallExpr;
      out.push_back(make(RuleId::R8_PlatformDependentType, s, f, i,
                         "platform-dependent type " + std::string(s->text) +
                             (conversion ? " in conversion" : " in declaration")));
    }
  });
  for (const go::Type* t : used_types) {
    const Node* spec = t->decl;
    std::vector<const Node*> spellings;
    collect_platform(spec->kids[2], spellings);
    for (const Node* s : spellings) {
      if (!seen.insert(s).second) continue;
      RawFinding r;
      r.rule = RuleId::R8_PlatformDependentType;
      r.node = s;
      r.file = t->file;
      r.container = spec;
      r.message = "platform-dependent type " + std::string(s->text) + " in declaration of type " +
                  t->name;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<RawFinding> run_all(const SourceModel& model, const graph::CallGraph& graph,
                                const scope::ScopeSet& scope, const scope::EntryMap& entries,
                                const RuleConfig& config) {
  std::vector<RawFinding> out;
  auto add = [&](RuleId r, std::vector<RawFinding> v) {
    if (!config.enabled.count(r)) return;
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  if (config.enabled.count(RuleId::R1_BlockPanic)) {
    std::vector<RawFinding> r1 = detect_block_panic(model, graph, entries);
    r1.erase(std::remove_if(r1.begin(), r1.end(),
                            [&](const RawFinding& f) { return !scope.contains(f.func); }),
             r1.end());
    add(RuleId::R1_BlockPanic, std::move(r1));
  }
  if (config.enabled.count(RuleId::R2_MapIteration)) {
    add(RuleId::R2_MapIteration, detect_map_iteration(model, scope));
  }
  if (config.enabled.count(RuleId::R3_HardcodedBech32)) {
    add(RuleId::R3_HardcodedBech32, detect_hardcoded_bech32(model, scope, config));
  }
  if (config.enabled.count(RuleId::R4_Goroutine)) {
    add(RuleId::R4_Goroutine, detect_goroutine(model, scope));
  }
  if (config.enabled.count(RuleId::R5_FloatArithmetic)) {
    add(RuleId::R5_FloatArithmetic, detect_float(model, scope));
  }
  if (config.enabled.count(RuleId::R6_SystemTime)) {
    add(RuleId::R6_SystemTime, detect_system_time(model, scope, config));
  }
  if (config.enabled.count(RuleId::R7_UnsafePackage)) {
    add(RuleId::R7_UnsafePackage, detect_unsafe_package(model, scope, config));
  }
  if (config.enabled.count(RuleId::R8_PlatformDependentType)) {
    add(RuleId::R8_PlatformDependentType, detect_platform_types(model, scope));
  }
  auto key = [](const RawFinding& f) {
    const go::LineCol lc = f.file->position(f.node->begin);
    return std::make_tuple(std::string_view(f.file->path), lc.line, lc.column, f.rule,
                           f.node->end);
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const RawFinding& a, const RawFinding& b) { return key(a) < key(b); });
  return out;
}

}  // namespace chainlint::rules
