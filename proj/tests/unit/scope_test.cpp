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

#include <algorithm>

#include "scope/scope.hpp"
#include "test_support.hpp"

using namespace chainlint;
using scope::EntryKind;

namespace {

std::set<std::string> names(const go::SourceModel& m, const std::set<size_t>& ids) {
  std::set<std::string> out;
  for (size_t i : ids) out.insert(m.funcs()[i].id.qualified_name());
  return out;
}

std::set<std::string> member_names(const go::SourceModel& m, const scope::ScopeSet& s) {
  std::set<std::string> out;
  for (const auto& [f, kinds] : s.members) out.insert(m.funcs()[f].id.qualified_name());
  return out;
}

std::set<size_t> entry_set(const scope::EntryMap& e, EntryKind::Tag tag) {
  const auto it = e.find(EntryKind{tag, ""});
  return it == e.end() ? std::set<size_t>{} : it->second;
}

std::set<size_t> keys(const scope::ScopeSet& s) {
  std::set<size_t> out;
  for (const auto& [f, kinds] : s.members) out.insert(f);
  return out;
}

const char* kLayered =
    "package keeper\n\nfunc Keep() {}\n";

}  // namespace

TEST_SUITE("scope") {
  TEST_CASE("entry points of a module") {
    const auto a = testing::analyze_dir(testing::fixture("minimodule"));
    CHECK(names(a.model, entry_set(a.entries, EntryKind::BeginBlock)) ==
          std::set<std::string>{"Keeper.BeginBlock"});
    CHECK(names(a.model, entry_set(a.entries, EntryKind::DeliverTx)) ==
          std::set<std::string>{"msgServer.CreateFoo", "msgServer.DeleteFoo"});
    CHECK(entry_set(a.entries, EntryKind::EndBlock).empty());
  }

  TEST_CASE("ABCI lifecycle methods are not entry points by default") {
    const auto a = testing::analyze_dir(testing::fixture("minimodule"));
    const auto in = member_names(a.model, a.scope);
    CHECK(in.count("Keeper.InitChain") == 0);
    CHECK(in.count("Keeper.Commit") == 0);
    CHECK(in.count("Keeper.seed") == 0);
    CHECK(in.count("Keeper.PrepareProposal") == 0);
    CHECK(in.count("Keeper.Unused") == 0);
    CHECK(in.count("Usage") == 0);
    CHECK(in.count("Version") == 0);
  }

  TEST_CASE("scope listing with provenance") {
    const auto a = testing::analyze_dir(testing::fixture("minimodule"));
    const std::string p = "example.com/minimodule/x/foo/keeper\t";
    CHECK(scope::scope_listing(a.model, a.scope) ==
          p + "Keeper.BeginBlock\tBeginBlock\n" + p + "Keeper.bumpCounter\tBeginBlock,DeliverTx\n" +
              p + "Keeper.processQueue\tBeginBlock\n" + p + "Keeper.setStore\tBeginBlock\n" + p +
              "msgServer.CreateFoo\tDeliverTx\n" + p + "msgServer.DeleteFoo\tDeliverTx\n");
    CHECK(names(a.model, a.scope.block_subset()) ==
          std::set<std::string>{"Keeper.BeginBlock", "Keeper.bumpCounter", "Keeper.processQueue",
                                "Keeper.setStore"});
  }

  TEST_CASE("extra entry names extend the scope") {
    auto c = testing::config_for(testing::fixture("minimodule"));
    c.entry_points.extra_entry_names = {"PrepareProposal"};
    const auto a = pipeline::analyze(c);
    bool found = false;
    for (const auto& [f, kinds] : a.scope.members) {
      if (a.model.funcs()[f].id.qualified_name() != "Keeper.PrepareProposal") continue;
      found = true;
      CHECK(kinds == std::set<EntryKind>{EntryKind{EntryKind::Extra, "PrepareProposal"}});
    }
    CHECK(found);
    CHECK(EntryKind{EntryKind::Extra, "PrepareProposal"}.str() == "Extra(PrepareProposal)");
  }

  TEST_CASE("a tree without entry points has an empty scope") {
    const auto a = testing::analyze_dir(testing::fixture("threefiles"));
    CHECK(a.scope.members.empty());
    CHECK(a.findings.empty());
  }

  TEST_CASE("method patterns") {
    CHECK(scope::MethodPattern{"BeginBlock"}.matches("BeginBlock", 1));
    CHECK_FALSE(scope::MethodPattern{"BeginBlock"}.matches("BeginBlocker", 1));
    CHECK(scope::MethodPattern{"Blocker", true}.matches("BeginBlocker", 0));
    CHECK(scope::MethodPattern{"Blocker", true}.matches("Blocker", 0));
    CHECK(scope::MethodPattern{"BeginBlock", false, 1}.matches("BeginBlock", 1));
    CHECK_FALSE(scope::MethodPattern{"BeginBlock", false, 1}.matches("BeginBlock", 2));
  }

  TEST_CASE("scope is the closure of the entry points, per kind") {
    for (const auto& root : {testing::corpus(), testing::fixture("minimodule")}) {
      const auto a = testing::analyze_dir(root);
      std::vector<size_t> all;
      for (const auto& [kind, fs] : a.entries) all.insert(all.end(), fs.begin(), fs.end());
      const auto r = graph::reachable_from(a.graph, all);
      CHECK(keys(a.scope) == std::set<size_t>(r.begin(), r.end()));
      for (const auto& [kind, fs] : a.entries) {
        const auto rk =
            graph::reachable_from(a.graph, std::vector<size_t>(fs.begin(), fs.end()));
        for (const auto& [f, kinds] : a.scope.members) {
          CHECK(kinds.count(kind) == (std::binary_search(rk.begin(), rk.end(), f) ? 1u : 0u));
        }
      }
    }
  }

  TEST_CASE("test functions and test packages never enter the scope") {
    const auto a = testing::analyze_dir(testing::corpus());
    for (const auto& [f, kinds] : a.scope.members) {
      CHECK_FALSE(a.model.funcs()[f].is_test());
      CHECK_FALSE(a.model.funcs()[f].pkg->is_test);
      CHECK_FALSE(kinds.empty());
    }
  }

  TEST_CASE("adding extra entries never removes members") {
    const auto base = testing::analyze_dir(testing::corpus());
    auto c = testing::config_for(testing::corpus());
    c.entry_points.extra_entry_names = {"InitChain", "Commit", "ExportGenesis"};
    const auto more = pipeline::analyze(c);
    const auto b = keys(base.scope);
    const auto m = keys(more.scope);
    CHECK(std::includes(m.begin(), m.end(), b.begin(), b.end()));
    CHECK(m.size() > b.size());
  }

  TEST_CASE("legacy blacklist by import path substring") {
    testing::TempDir dir;
    dir.write("go.mod", "module example.com/bl\n\ngo 1.21\n");
    dir.write("x/a/keeper/k.go", kLayered);
    dir.write("x/a/client/cli/c.go", "package cli\n\nfunc Cmd() {}\n");
    dir.write("x/a/simulation/s.go", "package simulation\n\nfunc Sim() {}\n");
    dir.write("testutil/mocks/m.go", "package mocks\n\nfunc Mock() {}\n");
    dir.write("app/app.go", "package app\n\nfunc New() {}\n");
    dir.write("app/app_test.go", "package app\n\nfunc TestNew() {}\n");
    auto c = testing::config_for(dir.path());
    const auto a = pipeline::analyze(c);

    const auto bl = scope::legacy_blacklist_scope(a.model, {"mocks", "cli", "simulation"});
    CHECK(bl.mode == scope::Mode::Blacklist);
    CHECK(member_names(a.model, bl) == std::set<std::string>{"Keep", "New"});

    const auto none = scope::legacy_blacklist_scope(a.model, {});
    CHECK(member_names(a.model, none) ==
          std::set<std::string>{"Keep", "Cmd", "Sim", "Mock", "New"});
    CHECK(member_names(a.model, scope::all_functions_scope(a.model)) ==
          member_names(a.model, none));

    CHECK(scope::legacy_blacklist_scope(a.model, {"example.com"}).members.empty());
  }

  TEST_CASE("the default blacklist retains non-consensus helpers of the corpus") {
    auto c = testing::config_for(testing::corpus());
    const auto w = pipeline::analyze(c);
    const auto b = scope::legacy_blacklist_scope(w.model, scope::default_blacklist());
    const auto wk = keys(w.scope);
    const auto bk = keys(b);
    CHECK(std::includes(bk.begin(), bk.end(), wk.begin(), wk.end()));
    CHECK(bk.size() > wk.size());
  }

  TEST_CASE("scope is deterministic") {
    const auto a = testing::analyze_dir(testing::corpus());
    auto c = testing::config_for(testing::corpus());
    c.threads = 8;
    const auto b = pipeline::analyze(c);
    CHECK(scope::scope_listing(a.model, a.scope) == scope::scope_listing(b.model, b.scope));
  }
}
