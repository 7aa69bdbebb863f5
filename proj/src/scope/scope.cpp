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

#include "scope/scope.hpp"

#include <algorithm>

namespace chainlint::scope {

using go::FuncDecl;

std::string EntryKind::str() const {
  switch (tag) {
    case BeginBlock: return "BeginBlock";
    case EndBlock: return "EndBlock";
    case DeliverTx: return "DeliverTx";
    case Extra: return "Extra(" + name + ")";
  }
  return "?";
}

bool MethodPattern::matches(std::string_view func_name, size_t params) const {
  if (arity >= 0 && static_cast<size_t>(arity) != params) return false;
  if (suffix) {
    return func_name.size() >= name.size() &&
           func_name.substr(func_name.size() - name.size()) == name;
  }
  return func_name == name;
}

namespace {

size_t param_count(const go::SourceModel& model, const FuncDecl& f) {
  const go::Type* sig = model.signature_of(f);
  return sig ? sig->params.size() : 0;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

EntryKind kind_for_pattern(const MethodPattern& p) {
  if (!p.suffix && p.name == "BeginBlock") return {EntryKind::BeginBlock, {}};
  if (!p.suffix && p.name == "EndBlock") return {EntryKind::EndBlock, {}};
  return {EntryKind::Extra, p.name};
}

}  // namespace

EntryMap find_entry_points(const go::SourceModel& model, const EntryPointSpec& spec) {
  EntryMap out;
  const auto& funcs = model.funcs();
  auto is_extra = [&](std::string_view name) {
    return std::find(spec.extra_entry_names.begin(), spec.extra_entry_names.end(), name) !=
           spec.extra_entry_names.end();
  };
  for (size_t i = 0; i < funcs.size(); ++i) {
    const FuncDecl& f = funcs[i];
    if (f.is_test()) continue;
    const std::string_view name = f.name();
    if (f.is_method()) {
      for (const MethodPattern& p : spec.method_names) {
        if (!p.matches(name, param_count(model, f))) continue;
        if ((name == "InitChain" || name == "Commit") && !is_extra(name)) continue;
        out[kind_for_pattern(p)].insert(i);
      }
    }
    if (is_extra(name)) out[{EntryKind::Extra, std::string(name)}].insert(i);
  }

  // Message-server surrogate for DeliverTx.
  std::vector<const go::Type*> servers;
  for (const auto& nt : model.named_types()) {
    const go::Type* u = nt.type->under;
    if (!u || u->kind != go::TypeKind::Interface || nt.file->is_test) continue;
    for (const std::string& suffix : spec.server_interface_suffixes) {
      if (ends_with(nt.type->name, suffix)) {
        servers.push_back(nt.type);
        break;
      }
    }
  }
  for (const go::Type* iface : servers) {
    const std::vector<std::string> required = model.interface_methods(iface, nullptr);
    if (required.empty()) continue;
    for (const auto& nt : model.named_types()) {
      const go::Type* u = nt.type->under;
      if (!u || u->kind == go::TypeKind::Interface || nt.file->is_test) continue;
      const std::vector<std::string> have = model.method_set(nt.type);
      if (!std::includes(have.begin(), have.end(), required.begin(), required.end())) continue;
      for (const std::string& m : required) {
        for (const FuncDecl* d : model.method_decls(nt.type, m)) {
          if (d->is_test()) continue;
          out[{EntryKind::DeliverTx, {}}].insert(static_cast<size_t>(d - funcs.data()));
        }
      }
    }
  }
  return out;
}

std::set<size_t> ScopeSet::block_subset() const {
  std::set<size_t> out;
  for (const auto& [f, kinds] : members) {
    for (const EntryKind& k : kinds) {
      if (k.is_block()) {
        out.insert(f);
        break;
      }
    }
  }
  return out;
}

ScopeSet compute_scope(const graph::CallGraph& graph, const EntryMap& entries) {
  ScopeSet s;
  s.mode = Mode::Whitelist;
  for (const auto& [kind, seeds] : entries) {
    if (seeds.empty()) continue;
    for (size_t f : graph::reachable_from(graph, std::vector<size_t>(seeds.begin(), seeds.end()))) {
      s.members[f].insert(kind);
    }
  }
  return s;
}

ScopeSet legacy_blacklist_scope(const go::SourceModel& model,
                                const std::vector<std::string>& patterns) {
  ScopeSet s;
  s.mode = Mode::Blacklist;
  const auto& funcs = model.funcs();
  for (size_t i = 0; i < funcs.size(); ++i) {
    const FuncDecl& f = funcs[i];
    if (f.is_test() || f.pkg->is_test) continue;
    const std::string& path = f.pkg->import_path;
    const bool blocked = std::any_of(patterns.begin(), patterns.end(), [&](const std::string& p) {
      return path.find(p) != std::string::npos;
    });
    if (!blocked) s.members[i];
  }
  return s;
}

ScopeSet all_functions_scope(const go::SourceModel& model) {
  return legacy_blacklist_scope(model, {});
}

std::string scope_listing(const go::SourceModel& model, const ScopeSet& scope) {
  std::vector<std::string> lines;
  for (const auto& [f, kinds] : scope.members) {
    const go::FuncId& id = model.funcs()[f].id;
    std::string line = id.import_path + "\t" + id.qualified_name() + "\t";
    bool first = true;
    for (const EntryKind& k : kinds) {
      if (!first) line += ',';
      line += k.str();
      first = false;
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

}  // namespace chainlint::scope
