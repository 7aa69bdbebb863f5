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

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "common/errors.hpp"
#include "report/report.hpp"
#include "test_support.hpp"

using namespace chainlint;
using nlohmann::json;

namespace {

const char* kKeeper = "x/demo/keeper/keeper.go";

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

bool schema_valid(const std::string& sarif) {
  testing::TempDir dir;
  dir.write("out.sarif", sarif);
  const std::string cmd = "python3 " + std::string(CHAINLINT_TOOLS) + "/validate_sarif.py " +
                          std::string(CHAINLINT_TESTDATA) + "/sarif-schema-2.1.0.json " +
                          (dir.path() / "out.sarif").string();
  return std::system(cmd.c_str()) == 0;
}

std::string sarif_of(const pipeline::Analysis& a) {
  report::ToolMetadata tool;
  tool.version = "1.0.0";
  report::RunNotes notes;
  notes.diagnostics = a.diagnostics;
  for (const graph::Edge* e : a.graph.unresolved_edges()) {
    notes.unresolved_calls.push_back({e->site.file, e->site.line, e->site.column});
  }
  return report::emit_sarif(a.findings, tool, notes);
}

// Copy of eightrules with a directive per chosen finding: the first for a line
// goes on the line above, a second one trails the flagged line.
pipeline::Analysis with_directives(const std::vector<report::Finding>& chosen,
                                   const std::string& justification = "reviewed") {
  testing::TempDir dir;
  testing::copy_tree(testing::fixture("eightrules"), dir.path());
  auto lines = split_lines(testing::read_file(dir.path() / kKeeper));
  std::map<uint32_t, std::vector<std::string>> by_line;
  for (const auto& f : chosen) by_line[f.location.line].push_back(std::string(rules::rule_name(f.rule)));
  for (auto it = by_line.rbegin(); it != by_line.rend(); ++it) {
    const uint32_t line = it->first;
    const auto& names = it->second;
    if (names.size() > 1) {
      lines[line - 1] += " //consensus:ignore " + names[1] + " " + justification;
    }
    lines.insert(lines.begin() + (line - 1), "\t//consensus:ignore " + names[0] + " " + justification);
  }
  dir.write(kKeeper, join_lines(lines));
  return testing::analyze_dir(dir.path());
}

bool is_hex16(const std::string& s) {
  return s.size() == 16 &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isxdigit(c) && !std::isupper(c); });
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("fingerprints are stable and well formed") {
    const auto a = testing::analyze_dir(testing::fixture("eightrules"));
    const auto b = testing::analyze_dir(testing::fixture("eightrules"));
    REQUIRE(a.findings.size() == 8);
    for (size_t i = 0; i < a.findings.size(); ++i) {
      CHECK(is_hex16(a.findings[i].fingerprint));
      CHECK(a.findings[i].fingerprint == b.findings[i].fingerprint);
    }
  }

  TEST_CASE("fingerprints survive line shifts") {
    const auto base = testing::analyze_dir(testing::fixture("eightrules"));
    testing::TempDir dir;
    testing::copy_tree(testing::fixture("eightrules"), dir.path());
    auto lines = split_lines(testing::read_file(dir.path() / kKeeper));
    lines.insert(lines.begin() + 1, "");
    lines.insert(lines.begin() + 1, "// A comment that moves every declaration down.");
    dir.write(kKeeper, join_lines(lines));
    const auto shifted = testing::analyze_dir(dir.path());
    REQUIRE(shifted.findings.size() == base.findings.size());
    for (size_t i = 0; i < base.findings.size(); ++i) {
      CHECK(shifted.findings[i].location.line == base.findings[i].location.line + 2);
      CHECK(shifted.findings[i].fingerprint == base.findings[i].fingerprint);
    }
  }

  TEST_CASE("fingerprints distinguish sibling panics and corpus findings") {
    const auto d = testing::analyze_dir(testing::fixture("dualpanic"));
    REQUIRE(d.findings.size() == 2);
    CHECK(d.findings[0].fingerprint != d.findings[1].fingerprint);
    const auto c = testing::analyze_dir(testing::corpus());
    std::set<std::string> fps;
    for (const auto& f : c.findings) fps.insert(f.fingerprint);
    CHECK(fps.size() == c.findings.size());
  }

  TEST_CASE("materialized fields") {
    const auto a = testing::analyze_dir(testing::fixture("eightrules"));
    const auto& panic = a.findings[0];
    CHECK(panic.rule == rules::RuleId::R1_BlockPanic);
    CHECK(panic.location.file == kKeeper);
    CHECK(panic.location.line == 21);
    CHECK(panic.location.column == 3);
    CHECK(panic.location.end > panic.location.begin);
    CHECK(panic.import_path == "example.com/eightrules/x/demo/keeper");
    CHECK(panic.container == "Keeper.BeginBlock");
    CHECK(panic.function == "example.com/eightrules/x/demo/keeper.Keeper.BeginBlock");
    CHECK(panic.entry_kinds == std::vector<std::string>{"BeginBlock"});
    REQUIRE(panic.witness.size() == 1);
    CHECK(panic.witness[0].function == panic.function);
    for (const auto& f : a.findings) {
      if (f.rule != rules::RuleId::R1_BlockPanic) CHECK(f.witness.empty());
    }
  }

  TEST_CASE("a directive on the line above suppresses that rule only") {
    const auto base = testing::analyze_dir(testing::fixture("eightrules"));
    const auto& go_finding = base.findings[3];
    REQUIRE(go_finding.rule == rules::RuleId::R4_Goroutine);
    const auto a = with_directives({go_finding}, "audited: bounded worker");
    REQUIRE(a.findings.size() == 8);
    for (const auto& f : a.findings) {
      CHECK(f.suppressed == (f.rule == rules::RuleId::R4_Goroutine));
      if (f.suppressed) CHECK(f.justification == "audited: bounded worker");
    }
    CHECK(a.diagnostics.empty());
  }

  TEST_CASE("a directive naming another rule does not suppress") {
    testing::TempDir dir;
    testing::copy_tree(testing::fixture("eightrules"), dir.path());
    auto lines = split_lines(testing::read_file(dir.path() / kKeeper));
    lines.insert(lines.begin() + 31, "\t//consensus:ignore cosmos/map-iteration not this one");
    dir.write(kKeeper, join_lines(lines));
    const auto a = testing::analyze_dir(dir.path());
    for (const auto& f : a.findings) CHECK_FALSE(f.suppressed);
  }

  TEST_CASE("malformed directives are reported and ignored") {
    const std::vector<std::pair<std::string, std::string>> cases{
        {"\t//consensus:ignore cosmos/goroutine", "missing justification"},
        {"\t//consensus:ignore cosmos/goroutine   ", "missing justification"},
        {"\t//consensus:ignore", "missing rule name"},
        {"\t//consensus:ignore cosmos/nope because", "unknown rule cosmos/nope"},
    };
    for (const auto& [directive, expect] : cases) {
      INFO(directive);
      testing::TempDir dir;
      testing::copy_tree(testing::fixture("eightrules"), dir.path());
      auto lines = split_lines(testing::read_file(dir.path() / kKeeper));
      lines.insert(lines.begin() + 31, directive);
      dir.write(kKeeper, join_lines(lines));
      const auto a = testing::analyze_dir(dir.path());
      for (const auto& f : a.findings) CHECK_FALSE(f.suppressed);
      REQUIRE(a.diagnostics.size() == 1);
      CHECK(a.diagnostics[0].file == kKeeper);
      CHECK(a.diagnostics[0].line == 32);
      CHECK(a.diagnostics[0].message.find(expect) != std::string::npos);
    }
  }

  TEST_CASE("suppression conserves findings for every subset") {
    const auto base = testing::analyze_dir(testing::fixture("eightrules"));
    REQUIRE(base.findings.size() == 8);
    std::mt19937 rng(3);
    for (unsigned mask = 0; mask < 256; mask += 1 + rng() % 6) {
      std::vector<report::Finding> chosen;
      std::set<rules::RuleId> rules_chosen;
      for (size_t i = 0; i < 8; ++i) {
        if (mask & (1u << i)) {
          chosen.push_back(base.findings[i]);
          rules_chosen.insert(base.findings[i].rule);
        }
      }
      INFO("mask " << mask);
      const auto a = with_directives(chosen);
      REQUIRE(a.findings.size() == 8);
      std::set<rules::RuleId> suppressed;
      std::set<std::string> fps;
      for (const auto& f : a.findings) {
        if (f.suppressed) suppressed.insert(f.rule);
        fps.insert(f.fingerprint);
      }
      CHECK(suppressed == rules_chosen);
      std::set<std::string> base_fps;
      for (const auto& f : base.findings) base_fps.insert(f.fingerprint);
      CHECK(fps == base_fps);
    }
  }

  TEST_CASE("text format") {
    const auto a = testing::analyze_dir(testing::fixture("eightrules"));
    const auto lines = split_lines(report::emit_text(a.findings));
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == std::string("x/demo/keeper/keeper.go:21:3\tcosmos/block-panic\t") +
                          "panic reachable from BeginBlock halts the chain (Keeper.BeginBlock)\t" +
                          a.findings[0].fingerprint);
    CHECK(report::emit_text({}).empty());
    auto with = with_directives({a.findings[1]}, "keys sorted upstream");
    CHECK(report::emit_text(with.findings).find(" [suppressed: keys sorted upstream]\t") !=
          std::string::npos);
  }

  TEST_CASE("SARIF document structure") {
    const auto a = testing::analyze_dir(testing::fixture("eightrules"));
    const json doc = json::parse(sarif_of(a));
    CHECK(doc["version"] == "2.1.0");
    const auto& run = doc["runs"][0];
    CHECK(run["tool"]["driver"]["name"] == "chainlint");
    CHECK(run["tool"]["driver"]["rules"].size() == 8);
    REQUIRE(run["results"].size() == 8);
    std::set<std::string> ids;
    for (const auto& r : run["results"]) {
      ids.insert(r["ruleId"].get<std::string>());
      const auto& loc = r["locations"][0]["physicalLocation"];
      CHECK(loc["artifactLocation"]["uri"] == kKeeper);
      CHECK(loc["region"]["startLine"].get<int>() >= 1);
      CHECK(is_hex16(r["partialFingerprints"]["chainlint/v1"].get<std::string>()));
      const int idx = r["ruleIndex"].get<int>();
      CHECK(run["tool"]["driver"]["rules"][idx]["id"] == r["ruleId"]);
    }
    CHECK(ids.size() == 8);
    CHECK(run["results"][0]["level"] == "error");
    CHECK(run["results"][0].contains("codeFlows"));
    CHECK(run["results"][1]["level"] == "warning");
    CHECK(schema_valid(sarif_of(a)));
  }

  TEST_CASE("SARIF with no findings, suppressions and notes is schema valid") {
    const std::string empty = report::emit_sarif({}, report::ToolMetadata{"chainlint", "1.0.0", ""}, {});
    CHECK(json::parse(empty)["runs"][0]["results"].empty());
    CHECK(schema_valid(empty));

    auto a = with_directives({testing::analyze_dir(testing::fixture("eightrules")).findings[2]});
    a.diagnostics.push_back({kKeeper, 3, 1, "synthetic note"});
    const std::string doc = sarif_of(a);
    const json j = json::parse(doc);
    CHECK(j["runs"][0]["results"][2]["suppressions"][0]["kind"] == "inSource");
    CHECK(j["runs"][0]["invocations"][0]["toolExecutionNotifications"].size() == 2);
    CHECK(schema_valid(doc));

    const auto corpus = testing::analyze_dir(testing::corpus());
    CHECK(schema_valid(sarif_of(corpus)));
  }

  TEST_CASE("SARIF output is deterministic") {
    const auto a = testing::analyze_dir(testing::corpus());
    auto c = testing::config_for(testing::corpus());
    c.threads = 8;
    const auto b = pipeline::analyze(c);
    CHECK(sarif_of(a) == sarif_of(b));
  }

  TEST_CASE("baseline round trip and diff") {
    const auto a = testing::analyze_dir(testing::fixture("eightrules"));
    testing::TempDir dir;
    dir.write("base.txt", report::format_baseline(a.findings));
    const auto read = report::read_baseline(dir.path() / "base.txt");
    CHECK(read.size() == 8);
    CHECK(report::diff_baseline(a.findings, read).added.empty());
    CHECK(report::diff_baseline(a.findings, read).fixed.empty());

    dir.write("partial.txt", "# three known findings\n" + a.findings[0].fingerprint + "\n  " +
                                 a.findings[1].fingerprint + "  \n\n" + a.findings[2].fingerprint +
                                 " # trailing comment\nffffffffffffffff\n");
    const auto partial = report::read_baseline(dir.path() / "partial.txt");
    CHECK(partial.size() == 4);
    const auto d = report::diff_baseline(a.findings, partial);
    CHECK(d.added.size() == 5);
    CHECK(d.fixed == std::vector<std::string>{"ffffffffffffffff"});
    CHECK(report::diff_baseline({}, partial).fixed.size() == 4);
    CHECK_THROWS_AS(report::read_baseline(dir.path() / "missing.txt"), AnalysisError);
  }
}
