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

#include "report/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "common/errors.hpp"

namespace chainlint::report {

using go::Node;
using go::NodeKind;

namespace {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv(uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0x1f;
  h *= kFnvPrime;
}

std::string container_name(const rules::RawFinding& raw, const go::SourceModel& model) {
  if (raw.func != graph::kNoNode) return model.funcs()[raw.func].id.qualified_name();
  const Node* c = raw.container;
  if (!c) return {};
  if (c->kind == NodeKind::TypeSpec) return "type:" + std::string(c->kids[0]->text);
  if (c->kind == NodeKind::ValueSpec) return "const:" + std::string(c->kids[0]->text);
  return {};
}

std::string kind_path(const Node* container, const Node* node) {
  std::vector<const Node*> chain;
  for (const Node* n = node; n && n != container; n = n->parent) chain.push_back(n);
  std::string path;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Node* n = *it;
    size_t ordinal = 0;
    if (n->parent) {
      for (const Node* sib : n->parent->kids) {
        if (sib == n) break;
        if (sib && sib->kind == n->kind) ++ordinal;
      }
    }
    path += go::node_kind_name(n->kind);
    path += '#';
    path += std::to_string(ordinal);
    path += '/';
  }
  return path;
}

std::string import_path_of(const rules::RawFinding& raw, const go::SourceModel& model) {
  if (raw.func != graph::kNoNode) return model.funcs()[raw.func].pkg->import_path;
  return raw.file && raw.file->package ? raw.file->package->import_path : std::string();
}

Location locate(const go::SourceFile& file, uint32_t begin, uint32_t end) {
  Location loc;
  loc.file = file.path;
  const go::LineCol a = file.position(begin);
  const go::LineCol b = file.position(end);
  loc.line = a.line;
  loc.column = a.column;
  loc.end_line = b.line;
  loc.end_column = b.column;
  loc.begin = begin;
  loc.end = end;
  return loc;
}

}  // namespace

std::string fingerprint(const rules::RawFinding& raw, const go::SourceModel& model) {
  uint64_t h = kFnvOffset;
  fnv(h, rules::rule_name(raw.rule));
  fnv(h, import_path_of(raw, model));
  fnv(h, container_name(raw, model));
  fnv(h, kind_path(raw.container, raw.node));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Finding> materialize(const go::SourceModel& model, const graph::CallGraph& graph,
                                 const std::vector<rules::RawFinding>& raw) {
  std::vector<Finding> out;
  out.reserve(raw.size());
  for (const rules::RawFinding& r : raw) {
    Finding f;
    f.rule = r.rule;
    f.message = r.message;
    f.location = locate(*r.file, r.node->begin, r.node->end);
    f.import_path = import_path_of(r, model);
    f.container = container_name(r, model);
    if (r.func != graph::kNoNode) f.function = model.funcs()[r.func].id.display();
    for (const auto& k : r.entry_kinds) f.entry_kinds.push_back(k.str());
    if (r.witness_entry != graph::kNoNode) {
      const go::FuncDecl& entry = model.funcs()[r.witness_entry];
      WitnessStep first;
      first.function = entry.id.display();
      first.site = locate(*entry.file, entry.node->kids[1]->begin, entry.node->kids[1]->end);
      f.witness.push_back(first);
      for (const graph::PathStep& step : r.witness) {
        WitnessStep s;
        s.function = model.funcs()[step.callee].id.display();
        const Node* call = step.site.node;
        const go::FuncDecl* caller = call ? model.enclosing_func(call) : nullptr;
        if (call && caller) {
          s.site = locate(*caller->file, call->begin, call->end);
        } else {
          s.site.file = step.site.file;
          s.site.line = s.site.end_line = step.site.line;
          s.site.column = s.site.end_column = step.site.column;
        }
        f.witness.push_back(std::move(s));
      }
    }
    f.fingerprint = fingerprint(r, model);
    out.push_back(std::move(f));
  }
  (void)graph;
  return out;
}

std::vector<Diagnostic> apply_suppressions(std::vector<Finding>& findings,
                                           const go::SourceModel& model) {
  struct Directive {
    rules::RuleId rule;
    std::string justification;
  };
  // (file, line) -> directives on that line
  std::map<std::pair<std::string, uint32_t>, std::vector<Directive>> directives;
  std::vector<Diagnostic> diags;
  constexpr std::string_view kToken = "consensus:ignore";
  for (const auto& pkg : model.tree().packages) {
    for (const auto& file : pkg->files) {
      for (const go::Comment& c : file->comments) {
        std::string_view text = c.text;
        if (text.substr(0, 2) != "//") continue;
        text.remove_prefix(2);
        while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
        if (text.substr(0, kToken.size()) != kToken) continue;
        text.remove_prefix(kToken.size());
        if (!text.empty() && text.front() != ' ' && text.front() != '\t') continue;
        const go::LineCol lc = file->position(c.begin);
        auto trim = [](std::string_view s) {
          while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
          while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
            s.remove_suffix(1);
          }
          return s;
        };
        text = trim(text);
        const size_t sp = text.find_first_of(" \t");
        const std::string_view name = text.substr(0, sp);
        const std::string_view reason =
            sp == std::string_view::npos ? std::string_view() : trim(text.substr(sp));
        if (name.empty()) {
          diags.push_back({file->path, lc.line, lc.column,
                           "malformed consensus:ignore directive: missing rule name"});
          continue;
        }
        const auto rule = rules::rule_from_name(name);
        if (!rule) {
          diags.push_back({file->path, lc.line, lc.column,
                           "consensus:ignore directive names unknown rule " + std::string(name)});
          continue;
        }
        if (reason.empty()) {
          diags.push_back({file->path, lc.line, lc.column,
                           "malformed consensus:ignore directive: missing justification"});
          continue;
        }
        directives[{file->path, lc.line}].push_back({*rule, std::string(reason)});
      }
    }
  }
  for (Finding& f : findings) {
    for (uint32_t line : {f.location.line, f.location.line - 1}) {
      auto it = directives.find({f.location.file, line});
      if (it == directives.end()) continue;
      for (const Directive& d : it->second) {
        if (d.rule == f.rule) {
          f.suppressed = true;
          f.justification = d.justification;
          break;
        }
      }
      if (f.suppressed) break;
    }
  }
  std::sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.file, a.line, a.column, a.message) <
           std::tie(b.file, b.line, b.column, b.message);
  });
  return diags;
}

std::string emit_text(const std::vector<Finding>& findings) {
  std::vector<const Finding*> sorted;
  for (const Finding& f : findings) sorted.push_back(&f);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Finding* a, const Finding* b) {
    return std::tie(a->location.file, a->location.line, a->location.column, a->rule) <
           std::tie(b->location.file, b->location.line, b->location.column, b->rule);
  });
  std::ostringstream os;
  for (const Finding* f : sorted) {
    os << f->location.file << ':' << f->location.line << ':' << f->location.column << '\t'
       << rules::rule_name(f->rule) << '\t' << f->message;
    if (f->suppressed) os << " [suppressed: " << f->justification << ']';
    os << '\t' << f->fingerprint << '\n';
  }
  return os.str();
}

std::set<std::string> read_baseline(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AnalysisError("cannot read baseline file: " + path.string());
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const size_t e = line.find_last_not_of(" \t\r");
    out.insert(line.substr(b, e - b + 1));
  }
  return out;
}

std::string format_baseline(const std::vector<Finding>& findings) {
  std::set<std::string> fps;
  for (const Finding& f : findings) fps.insert(f.fingerprint);
  std::string out = "# chainlint baseline: one finding fingerprint per line\n";
  for (const std::string& fp : fps) out += fp + "\n";
  return out;
}

BaselineDiff diff_baseline(const std::vector<Finding>& findings,
                           const std::set<std::string>& baseline) {
  BaselineDiff d;
  std::set<std::string> current;
  for (const Finding& f : findings) {
    current.insert(f.fingerprint);
    if (!baseline.count(f.fingerprint)) d.added.push_back(&f);
  }
  for (const std::string& fp : baseline) {
    if (!current.count(fp)) d.fixed.push_back(fp);
  }
  return d;
}

}  // namespace chainlint::report
