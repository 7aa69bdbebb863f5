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

#include "pipeline/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "common/errors.hpp"
#include "common/version.hpp"
#include "rules/rules.hpp"
#include "source/tree.hpp"

namespace chainlint::pipeline {

namespace {

template <typename F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    Outcome o;
    o.exit_code = kExitUsage;
    o.diagnostics = std::string("error: ") + e.what() + "\n";
    return o;
  } catch (const AnalysisError& e) {
    Outcome o;
    o.exit_code = kExitFatal;
    o.diagnostics = std::string("fatal: ") + e.what() + "\n";
    return o;
  } catch (const graph::GraphError& e) {
    Outcome o;
    o.exit_code = kExitFatal;
    o.diagnostics = std::string("fatal: ") + e.what() + "\n";
    return o;
  } catch (const metrics::MetricsError& e) {
    Outcome o;
    o.exit_code = kExitFatal;
    o.diagnostics = std::string("fatal: ") + e.what() + "\n";
    return o;
  } catch (const std::exception& e) {
    Outcome o;
    o.exit_code = kExitFatal;
    o.diagnostics = std::string("fatal: internal error: ") + e.what() + "\n";
    return o;
  }
}

std::string read_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw AnalysisError("write failed: " + path.string());
}

std::string format_diagnostics(const std::vector<report::Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += d.file;
    if (d.line) out += ":" + std::to_string(d.line) + ":" + std::to_string(d.column);
    out += ": warning: " + d.message + "\n";
  }
  return out;
}

std::vector<report::Location> unresolved_locations(const graph::CallGraph& graph) {
  std::vector<report::Location> out;
  for (const graph::Edge* e : graph.unresolved_edges()) {
    report::Location l;
    l.file = e->site.file;
    l.line = e->site.line;
    l.column = e->site.column;
    if (e->site.node) {
      l.begin = e->site.node->begin;
      l.end = e->site.node->end;
    }
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

Analysis analyze(const config::RunConfig& config) {
  go::ParseOptions options;
  options.include = config.include;
  options.exclude = config.exclude;
  options.threads = config.threads;
  go::SourceTree tree = go::parse_tree(config.root, options);
  std::vector<report::Diagnostic> diagnostics;
  for (const auto& d : tree.diagnostics) {
    diagnostics.push_back({d.file, d.line, d.column, d.message});
  }

  go::SourceModel model = go::bind_types(std::move(tree));
  graph::CallGraph graph = graph::build_call_graph(model);
  scope::EntryMap entries = scope::find_entry_points(model, config.entry_points);
  scope::ScopeSet scope_set = config.mode == scope::Mode::Whitelist
                                  ? scope::compute_scope(graph, entries)
                                  : scope::legacy_blacklist_scope(model, config.blacklist);
  auto raw = rules::run_all(model, graph, scope_set, entries, config.rules);
  auto findings = report::materialize(model, graph, raw);
  auto directive_diags = report::apply_suppressions(findings, model);
  diagnostics.insert(diagnostics.end(), directive_diags.begin(), directive_diags.end());

  return Analysis{std::move(model), std::move(graph), std::move(entries), std::move(scope_set),
                  std::move(findings), std::move(diagnostics)};
}

Outcome run_analyze(const config::RunConfig& config) {
  return guarded([&] {
    Analysis a = analyze(config);
    Outcome o;
    o.diagnostics = format_diagnostics(a.diagnostics);
    const size_t unresolved = a.graph.unresolved_count();
    if (unresolved) {
      o.diagnostics += "note: " + std::to_string(unresolved) +
                       " call sites could not be resolved statically\n";
    }

    std::set<std::string> baseline;
    if (config.baseline) baseline = report::read_baseline(*config.baseline);
    const report::BaselineDiff diff = report::diff_baseline(a.findings, baseline);
    if (config.baseline) {
      o.diagnostics += "baseline: " + std::to_string(diff.added.size()) + " new, " +
                       std::to_string(diff.fixed.size()) + " fixed\n";
    }

    if (config.output == config::OutputFormat::Sarif) {
      report::ToolMetadata tool;
      tool.version = kVersion;
      tool.information_uri = kInformationUri;
      report::RunNotes notes{a.diagnostics, unresolved_locations(a.graph)};
      o.output = report::emit_sarif(a.findings, tool, notes);
    } else {
      o.output = report::emit_text(a.findings);
    }

    size_t actionable = 0;
    switch (config.fail_on) {
      case config::FailOn::None:
        break;
      case config::FailOn::Any:
        for (const auto& f : a.findings) actionable += f.suppressed ? 0 : 1;
        break;
      case config::FailOn::NewOnly:
        actionable = diff.added.size();
        break;
    }
    o.exit_code = actionable ? kExitFindings : kExitClean;
    o.findings = std::move(a.findings);
    return o;
  });
}

Outcome run_scope(const config::RunConfig& config, bool dump_graph) {
  return guarded([&] {
    Analysis a = analyze(config);
    Outcome o;
    o.diagnostics = format_diagnostics(a.diagnostics);
    o.output = dump_graph ? graph::dump_graph(a.graph) : scope::scope_listing(a.model, a.scope);
    return o;
  });
}

Outcome run_baseline_write(const config::RunConfig& config, const std::filesystem::path& path) {
  return guarded([&] {
    std::filesystem::path target = path;
    if (target.empty()) {
      if (!config.baseline) throw UsageError("baseline write needs a path or a configured baseline");
      target = *config.baseline;
    }
    Analysis a = analyze(config);
    Outcome o;
    o.diagnostics = format_diagnostics(a.diagnostics);
    const std::string text = report::format_baseline(a.findings);
    write_output(target, text);
    size_t written = 0;
    for (const auto& f : a.findings) written += f.suppressed ? 0 : 1;
    o.diagnostics += "baseline: wrote " + std::to_string(written) + " fingerprints to " +
                     target.string() + "\n";
    o.findings = std::move(a.findings);
    return o;
  });
}

Outcome run_eval(const EvalRequest& request) {
  return guarded([&] {
    if (request.inputs.empty()) throw UsageError("eval needs at least one findings file");
    const metrics::LabelSet labels = metrics::LabelSet::parse(read_input(request.labels));
    std::vector<metrics::LabeledFinding> all;
    std::vector<std::string> projects;
    for (const std::string& input : request.inputs) {
      std::string name;
      std::filesystem::path path;
      if (const size_t eq = input.find('='); eq != std::string::npos && eq > 0) {
        name = input.substr(0, eq);
        path = input.substr(eq + 1);
      } else {
        path = input;
        name = path.stem().string();
      }
      auto found = metrics::read_findings(read_input(path), name);
      all.insert(all.end(), found.begin(), found.end());
      projects.push_back(name);
    }
    std::vector<std::string> known;
    if (request.group_by == metrics::GroupBy::Rule) {
      for (rules::RuleId r : rules::kAllRules) known.emplace_back(rules::rule_name(r));
    } else {
      known = projects;
    }
    auto report = metrics::compute_metrics(all, labels, request.group_by,
                                           request.allow_unlabeled, known);
    Outcome o;
    o.output = request.json ? metrics::format_json(report) : metrics::format_text(report);
    return o;
  });
}

Outcome run_compare(const CompareRequest& request) {
  return guarded([&] {
    auto first = metrics::parse_json(read_input(request.first));
    auto second = metrics::parse_json(read_input(request.second));
    auto report = metrics::compare(first, second, request.fp_only_gain);
    Outcome o;
    o.output = request.json ? metrics::format_json(report) : metrics::format_text(report);
    return o;
  });
}

}  // namespace chainlint::pipeline
