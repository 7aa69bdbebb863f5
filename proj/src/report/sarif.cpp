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

#include <json.hpp>

#include "report/report.hpp"

namespace chainlint::report {

namespace {

using Json = nlohmann::ordered_json;

std::string_view rule_short_name(rules::RuleId r) {
  switch (r) {
    case rules::RuleId::R1_BlockPanic: return "BlockPanic";
    case rules::RuleId::R2_MapIteration: return "MapIteration";
    case rules::RuleId::R3_HardcodedBech32: return "HardcodedBech32";
    case rules::RuleId::R4_Goroutine: return "Goroutine";
    case rules::RuleId::R5_FloatArithmetic: return "FloatArithmetic";
    case rules::RuleId::R6_SystemTime: return "SystemTime";
    case rules::RuleId::R7_UnsafePackage: return "UnsafePackage";
    case rules::RuleId::R8_PlatformDependentType: return "PlatformDependentType";
  }
  return "?";
}

const char* level_of(rules::RuleId r) {
  return r == rules::RuleId::R1_BlockPanic ? "error" : "warning";
}

Json physical(const Location& loc) {
  Json region = Json::object();
  region["startLine"] = loc.line;
  region["startColumn"] = loc.column;
  if (loc.end_line) {
    region["endLine"] = loc.end_line;
    region["endColumn"] = loc.end_column;
  }
  if (loc.end > loc.begin) {
    region["byteOffset"] = loc.begin;
    region["byteLength"] = loc.end - loc.begin;
  }
  return Json{{"physicalLocation",
               {{"artifactLocation", {{"uri", loc.file}, {"uriBaseId", "SRCROOT"}}},
                {"region", region}}}};
}

Json notification(const std::string& text, const char* level, const std::vector<Location>& locs) {
  Json n = Json::object();
  n["level"] = level;
  n["message"] = {{"text", text}};
  if (!locs.empty()) {
    Json arr = Json::array();
    for (const Location& l : locs) arr.push_back(physical(l));
    n["locations"] = arr;
  }
  return n;
}

}  // namespace

std::string emit_sarif(const std::vector<Finding>& findings, const ToolMetadata& tool,
                       const RunNotes& notes) {
  Json rules_json = Json::array();
  for (rules::RuleId r : rules::kAllRules) {
    rules_json.push_back({
        {"id", rules::rule_name(r)},
        {"name", rule_short_name(r)},
        {"shortDescription", {{"text", rules::rule_title(r)}}},
        {"fullDescription", {{"text", rules::rule_description(r)}}},
        {"defaultConfiguration", {{"level", level_of(r)}}},
    });
  }

  Json results = Json::array();
  for (const Finding& f : findings) {
    Json loc = physical(f.location);
    if (!f.function.empty()) {
      loc["logicalLocations"] = Json::array({{{"fullyQualifiedName", f.function},
                                              {"kind", "function"}}});
    } else if (!f.container.empty()) {
      const bool is_type = f.container.rfind("type:", 0) == 0;
      const std::string name = f.container.substr(f.container.find(':') + 1);
      loc["logicalLocations"] = Json::array({{{"fullyQualifiedName", f.import_path + "." + name},
                                              {"kind", is_type ? "type" : "variable"}}});
    }
    Json r = Json::object();
    r["ruleId"] = rules::rule_name(f.rule);
    r["ruleIndex"] = static_cast<int>(f.rule);
    r["level"] = level_of(f.rule);
    r["message"] = {{"text", f.message}};
    r["locations"] = Json::array({loc});
    r["partialFingerprints"] = {{"chainlint/v1", f.fingerprint}};
    if (!f.witness.empty()) {
      Json steps = Json::array();
      for (const WitnessStep& s : f.witness) {
        Json l = physical(s.site);
        l["message"] = {{"text", s.function}};
        steps.push_back({{"location", l}});
      }
      r["codeFlows"] = Json::array({{{"threadFlows", Json::array({{{"locations", steps}}})}}});
    }
    if (f.suppressed) {
      r["suppressions"] = Json::array({{{"kind", "inSource"}, {"justification", f.justification}}});
    }
    if (!f.entry_kinds.empty()) r["properties"] = {{"entryKinds", f.entry_kinds}};
    results.push_back(r);
  }

  Json notes_json = Json::array();
  for (const Diagnostic& d : notes.diagnostics) {
    Location l;
    l.file = d.file;
    l.line = d.line ? d.line : 1;
    l.column = d.column ? d.column : 1;
    notes_json.push_back(notification(d.message, "warning", {l}));
  }
  if (!notes.unresolved_calls.empty()) {
    notes_json.push_back(notification(
        std::to_string(notes.unresolved_calls.size()) +
            " call sites could not be resolved statically; their targets are not followed",
        "note", notes.unresolved_calls));
  }

  Json driver = Json::object();
  driver["name"] = tool.name;
  driver["version"] = tool.version;
  if (!tool.information_uri.empty()) driver["informationUri"] = tool.information_uri;
  driver["rules"] = rules_json;

  Json invocation = Json::object();
  invocation["executionSuccessful"] = true;
  if (!notes_json.empty()) invocation["toolExecutionNotifications"] = notes_json;

  Json run = Json::object();
  run["tool"] = {{"driver", driver}};
  run["invocations"] = Json::array({invocation});
  run["originalUriBaseIds"] = {
      {"SRCROOT", {{"description", {{"text", "Root of the analyzed source tree"}}}}}};
  run["columnKind"] = "unicodeCodePoints";
  run["results"] = results;

  Json doc = Json::object();
  doc["$schema"] = "https://json.schemastore.org/sarif-2.1.0.json";
  doc["version"] = "2.1.0";
  doc["runs"] = Json::array({run});
  return doc.dump(2) + "\n";
}

}  // namespace chainlint::report
