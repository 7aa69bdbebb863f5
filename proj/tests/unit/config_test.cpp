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

#include "common/errors.hpp"
#include "config/config.hpp"
#include "test_support.hpp"

using namespace chainlint;
using config::Overrides;
using config::RunConfig;

namespace {

RunConfig resolve_with(const testing::TempDir& dir, const std::string& file,
                       const std::vector<std::pair<std::string, std::string>>& flags = {}) {
  if (!file.empty()) dir.write(".chainlint", file);
  Overrides o;
  for (const auto& [k, v] : flags) o.set(k, v);
  return config::resolve(dir.path(), o);
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("defaults without a config file") {
    testing::TempDir dir;
    const RunConfig c = resolve_with(dir, "");
    CHECK(c.root == dir.path());
    CHECK(c.mode == scope::Mode::Whitelist);
    CHECK(c.include == std::vector<std::string>{"**/*.go"});
    CHECK(c.rules.enabled.size() == 8);
    CHECK(c.output == config::OutputFormat::Text);
    CHECK(c.fail_on == config::FailOn::Any);
    CHECK_FALSE(c.baseline.has_value());
    CHECK_FALSE(c.entry_points_overridden);
    CHECK(c.blacklist == scope::default_blacklist());
  }

  TEST_CASE("file values apply and flags take precedence") {
    testing::TempDir dir;
    const std::string file = R"({
      "include": ["x/**/*.go"],
      "output": "sarif",
      "fail_on": "none",
      "baseline": "ci/baseline.txt",
      "threads": 2,
      "entry_points": {"methods": ["*Blocker/1"], "extra": ["PrepareProposal"]},
      "rules": {"disabled": ["cosmos/goroutine"], "time_deny": ["time.Now"]}
    })";
    const RunConfig f = resolve_with(dir, file);
    CHECK(f.include == std::vector<std::string>{"x/**/*.go"});
    CHECK(f.output == config::OutputFormat::Sarif);
    CHECK(f.fail_on == config::FailOn::None);
    CHECK(f.baseline == dir.path() / "ci/baseline.txt");
    CHECK(f.threads == 2);
    REQUIRE(f.entry_points.method_names.size() == 1);
    CHECK(f.entry_points.method_names[0].name == "Blocker");
    CHECK(f.entry_points.method_names[0].suffix);
    CHECK(f.entry_points.method_names[0].arity == 1);
    CHECK(f.entry_points.extra_entry_names == std::vector<std::string>{"PrepareProposal"});
    CHECK(f.entry_points_overridden);
    CHECK(f.rules.enabled.count(rules::RuleId::R4_Goroutine) == 0);
    CHECK(f.rules.time_deny == std::vector<std::string>{"time.Now"});

    const RunConfig o = resolve_with(dir, file,
                                     {{"output", "text"},
                                      {"include", "a/*.go"},
                                      {"include", "b/*.go"},
                                      {"threads", "1"},
                                      {"fail_on", "any"}});
    CHECK(o.output == config::OutputFormat::Text);
    CHECK(o.include == std::vector<std::string>{"a/*.go", "b/*.go"});
    CHECK(o.threads == 1);
    CHECK(o.fail_on == config::FailOn::Any);
    CHECK(o.baseline == dir.path() / "ci/baseline.txt");
  }

  TEST_CASE("enable and disable") {
    testing::TempDir dir;
    const RunConfig only = resolve_with(dir, "", {{"enable", "cosmos/block-panic"}});
    CHECK(only.rules.enabled == std::set<rules::RuleId>{rules::RuleId::R1_BlockPanic});
    const RunConfig all = resolve_with(dir, "", {{"enable", "all"}, {"disable", "cosmos/system-time"}});
    CHECK(all.rules.enabled.size() == 7);
    CHECK(all.rules.enabled.count(rules::RuleId::R6_SystemTime) == 0);
  }

  TEST_CASE("explicit config file") {
    testing::TempDir dir;
    dir.write("other.json", R"({"mode": "blacklist", "blacklist": ["mocks"]})");
    const RunConfig c = resolve_with(dir, "", {{"config", (dir.path() / "other.json").string()}});
    CHECK(c.mode == scope::Mode::Blacklist);
    CHECK(c.blacklist == std::vector<std::string>{"mocks"});
    CHECK_THROWS_AS(resolve_with(dir, "", {{"config", (dir.path() / "absent.json").string()}}),
                    UsageError);
  }

  TEST_CASE("invalid configuration is a usage error") {
    const char* files[] = {
        "{not json",
        R"({"colour": "blue"})",
        R"({"rules": {"enable": ["cosmos/goroutine"]}})",
        R"({"entry_points": {"method": ["BeginBlock"]}})",
        R"({"mode": "greylist"})",
        R"({"include": "x/**"})",
        R"({"include": []})",
        R"({"threads": -1})",
        R"({"rules": {"enabled": ["cosmos/unknown"]}})",
        R"({"rules": {"time_deny": []}})",
        R"({"fail_on": "new-only"})",
        R"({"mode": "blacklist", "entry_points": {"extra": ["X"]}})",
        R"({"entry_points": {"methods": ["BeginBlock/x"]}})",
        R"([1, 2])",
    };
    for (const char* f : files) {
      INFO(std::string(f));
      testing::TempDir dir;
      CHECK_THROWS_AS(resolve_with(dir, f), UsageError);
    }
  }

  TEST_CASE("invalid flags are usage errors") {
    const std::vector<std::pair<std::string, std::string>> bad{
        {"mode", "both"},          {"output", "xml"},     {"fail_on", "sometimes"},
        {"threads", "two"},        {"threads", "-3"},     {"enable", "cosmos/nope"},
        {"entry_method", "*"},     {"entry_method", "/2"}, {"colour", "blue"},
    };
    for (const auto& [k, v] : bad) {
      INFO(k << "=" << v);
      Overrides o;
      CHECK_THROWS_AS(o.set(k, v), UsageError);
    }
  }

  TEST_CASE("cross-field invariants") {
    testing::TempDir dir;
    CHECK_THROWS_AS(resolve_with(dir, "", {{"mode", "blacklist"}, {"extra_entry", "X"}}), UsageError);
    CHECK_THROWS_AS(resolve_with(dir, "", {{"mode", "blacklist"}, {"entry_method", "Tick"}}),
                    UsageError);
    CHECK_THROWS_AS(resolve_with(dir, "", {{"fail_on", "new-only"}}), UsageError);
    CHECK_NOTHROW(resolve_with(dir, "", {{"fail_on", "new-only"}, {"baseline", "b.txt"}}));
    CHECK_NOTHROW(resolve_with(dir, "", {{"mode", "blacklist"}, {"blacklist", "mocks"}}));
    CHECK_NOTHROW(resolve_with(dir, "", {{"time_deny", "time.Now"}}));
  }
}
