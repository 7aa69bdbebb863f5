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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>

#include "test_support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run_cli(const std::vector<std::string>& args) {
  testing::TempDir dir;
  std::string cmd = quote(CHAINLINT_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote((dir.path() / "out").string()) + " 2>" + quote((dir.path() / "err").string());
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = testing::read_file(dir.path() / "out");
  r.err = testing::read_file(dir.path() / "err");
  return r;
}

size_t line_count(const std::string& s) {
  return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string fixture(const std::string& name) { return testing::fixture(name).string(); }

// Findings and labels for one rule with `p` findings, the first `fp` false.
void write_cell(const testing::TempDir& dir, const std::string& stem, const std::string& rule,
                int p, int fp, int dup, int offset = 0) {
  std::string findings;
  std::string labels = "fingerprint,label,canonical\n";
  std::string first_tp;
  for (int i = 0; i < p; ++i) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016x", offset + i + 1);
    findings += "x/k.go:" + std::to_string(i + 1) + ":2\t" + rule + "\tmessage\t" + buf + "\n";
    if (i < fp) {
      labels += std::string(buf) + ",FP\n";
    } else if (first_tp.empty()) {
      labels += std::string(buf) + ",TP\n";
      first_tp = buf;
    } else if (i < fp + 1 + dup) {
      labels += std::string(buf) + ",DUP," + first_tp + "\n";
    } else {
      labels += std::string(buf) + ",TP\n";
    }
  }
  dir.write(stem + ".txt", findings);
  dir.write(stem + ".csv", labels);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("version") {
    const Run r = run_cli({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find("chainlint") != std::string::npos);
  }

  TEST_CASE("exit codes of analyze") {
    const Run clean = run_cli({"analyze", fixture("clean")});
    CHECK(clean.code == 0);
    CHECK(clean.out.empty());

    const Run eight = run_cli({"analyze", fixture("eightrules")});
    CHECK(eight.code == 1);
    CHECK(line_count(eight.out) == 8);

    CHECK(run_cli({"analyze", fixture("eightrules"), "--fail-on", "none"}).code == 0);
    CHECK(run_cli({"analyze", "/nonexistent/chainlint/root"}).code == 2);
    CHECK(run_cli({"analyze", fixture("clean"), "--mode", "sideways"}).code == 2);
    CHECK(run_cli({"analyze", fixture("clean"), "--no-such-flag"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"analyze", fixture("clean"), "--fail-on", "new-only"}).code == 2);
    CHECK(run_cli({"analyze", fixture("clean"), "--baseline", "/nonexistent/base.txt"}).code ==
          3);
  }

  TEST_CASE("parse failures are diagnostics, not fatal") {
    const Run r = run_cli({"analyze", fixture("malformed")});
    CHECK(r.code == 0);
    CHECK(r.err.find("bad/broken.go:3:") != std::string::npos);
    CHECK(r.err.find("warning:") != std::string::npos);
  }

  TEST_CASE("rule selection flags") {
    const Run r = run_cli({"analyze", fixture("eightrules"), "--enable", "cosmos/goroutine",
                             "--enable", "cosmos/block-panic"});
    CHECK(r.code == 1);
    CHECK(line_count(r.out) == 2);
    const Run d = run_cli({"analyze", fixture("eightrules"), "--disable", "cosmos/goroutine"});
    CHECK(line_count(d.out) == 7);
    CHECK(d.out.find("cosmos/goroutine") == std::string::npos);
  }

  TEST_CASE("SARIF output is byte-identical across runs and schema valid") {
    testing::TempDir dir;
    const auto a = (dir.path() / "a.sarif").string();
    const auto b = (dir.path() / "b.sarif").string();
    CHECK(run_cli({"analyze", testing::corpus().string(), "--output", "sarif", "-O", a}).code == 1);
    CHECK(run_cli({"analyze", testing::corpus().string(), "--output", "sarif", "--threads", "8",
                     "-O", b})
              .code == 1);
    CHECK(testing::read_file(a) == testing::read_file(b));
    const std::string cmd = "python3 " + quote(std::string(CHAINLINT_TOOLS) + "/validate_sarif.py") +
                            " " + quote(std::string(CHAINLINT_TESTDATA) + "/sarif-schema-2.1.0.json") +
                            " " + quote(a);
    CHECK(std::system(cmd.c_str()) == 0);
  }

  TEST_CASE("scope listing and graph dump") {
    const Run s = run_cli({"scope", fixture("minimodule")});
    CHECK(s.code == 0);
    CHECK(line_count(s.out) == 6);
    CHECK(s.out.find("example.com/minimodule/x/foo/keeper\tKeeper.bumpCounter\tBeginBlock,DeliverTx\n") !=
          std::string::npos);

    const Run e = run_cli({"scope", fixture("minimodule"), "--extra-entry", "PrepareProposal"});
    CHECK(e.out.find("Keeper.PrepareProposal\tExtra(PrepareProposal)\n") != std::string::npos);

    const Run full = run_cli({"scope", fixture("minimodule"), "--mode", "blacklist",
                                "--blacklist", "example.com"});
    CHECK(full.code == 0);
    CHECK(full.out.empty());

    CHECK(run_cli({"scope", fixture("minimodule"), "--mode", "blacklist", "--extra-entry", "X"})
              .code == 2);

    const Run g = run_cli({"scope", fixture("cg/chain"), "--dump-graph"});
    CHECK(g.code == 0);
    CHECK(g.out ==
          "example.com/chain.A\texample.com/chain.B\tchain.go:4\tDirect\n"
          "example.com/chain.A\texample.com/chain.C\tchain.go:5\tDirect\n"
          "example.com/chain.B\texample.com/chain.C\tchain.go:9\tDirect\n");
  }

  TEST_CASE("baseline workflow") {
    testing::TempDir dir;
    testing::copy_tree(testing::fixture("eightrules"), dir.path() / "tree");
    const std::string root = (dir.path() / "tree").string();
    const std::string base = (dir.path() / "base.txt").string();
    const Run w = run_cli({"baseline", "write", root, "-f", base});
    CHECK(w.code == 0);
    CHECK(w.err.find("wrote 8 fingerprints") != std::string::npos);
    CHECK(line_count(testing::read_file(base)) == 9);

    const Run same = run_cli({"analyze", root, "--baseline", base, "--fail-on", "new-only"});
    CHECK(same.code == 0);
    CHECK(same.err.find("baseline: 0 new, 0 fixed") != std::string::npos);

    const auto keeper = dir.path() / "tree/x/demo/keeper/keeper.go";
    std::string src = testing::read_file(keeper);
    src += "\nfunc (k Keeper) EndBlock() {\n\tpanic(\"late\")\n}\n";
    std::ofstream(keeper) << src;
    const Run added = run_cli({"analyze", root, "--baseline", base, "--fail-on", "new-only"});
    CHECK(added.code == 1);
    CHECK(added.err.find("baseline: 1 new, 0 fixed") != std::string::npos);
  }

  TEST_CASE("config file in the analysis root") {
    testing::TempDir dir;
    testing::copy_tree(testing::fixture("eightrules"), dir.path());
    dir.write(".chainlint", R"({"fail_on": "none", "rules": {"disabled": ["cosmos/float-arith"]}})");
    const Run r = run_cli({"analyze", dir.path().string()});
    CHECK(r.code == 0);
    CHECK(line_count(r.out) == 7);
    CHECK(run_cli({"analyze", dir.path().string(), "--fail-on", "any"}).code == 1);
    dir.write(".chainlint", R"({"fail_on": "none", "colour": "red"})");
    const Run bad = run_cli({"analyze", dir.path().string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("colour") != std::string::npos);
  }

  TEST_CASE("eval prints the published map-iteration row") {
    testing::TempDir dir;
    write_cell(dir, "map", "cosmos/map-iteration", 13, 8, 0);
    const Run r = run_cli({"eval", (dir.path() / "map.txt").string(), "--labels",
                             (dir.path() / "map.csv").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("cosmos/map-iteration       13     8     5     5     38.46%") !=
          std::string::npos);
  }

  TEST_CASE("eval errors") {
    testing::TempDir dir;
    write_cell(dir, "map", "cosmos/map-iteration", 3, 1, 0);
    dir.write("dangling.csv", "fingerprint,label,canonical\n0000000000000001,TP\n"
                              "0000000000000002,DUP,00000000000000ff\n0000000000000003,FP\n");
    const Run dangling = run_cli({"eval", (dir.path() / "map.txt").string(), "--labels",
                                    (dir.path() / "dangling.csv").string()});
    CHECK(dangling.code == 3);
    CHECK(dangling.err.find("00000000000000ff") != std::string::npos);

    dir.write("partial.csv", "fingerprint,label\n0000000000000001,TP\n");
    const auto findings = (dir.path() / "map.txt").string();
    const auto partial = (dir.path() / "partial.csv").string();
    const Run unlabeled = run_cli({"eval", findings, "--labels", partial});
    CHECK(unlabeled.code == 3);
    CHECK(unlabeled.err.find("0000000000000003") != std::string::npos);
    CHECK(run_cli({"eval", findings, "--labels", partial, "--allow-unlabeled"}).code == 0);
    CHECK(run_cli({"eval", findings}).code == 2);
    CHECK(run_cli({"eval", findings, "--labels", partial, "--group-by", "file"}).code == 2);
  }

  TEST_CASE("compare") {
    testing::TempDir dir;
    write_cell(dir, "orig", "cosmos/block-panic", 35, 28, 3);
    write_cell(dir, "new", "cosmos/block-panic", 8, 3, 0, 100);
    write_cell(dir, "gaia", "cosmos/block-panic", 1, 1, 0, 200);
    dir.write("empty.txt", "");
    const auto p = [&](const std::string& f) { return (dir.path() / f).string(); };
    const auto eval_json = [&](const std::vector<std::string>& inputs, const std::string& labels,
                               const std::string& out) {
      std::vector<std::string> args{"eval"};
      args.insert(args.end(), inputs.begin(), inputs.end());
      for (const std::string& a : {"--labels", labels.c_str(), "--group-by", "project", "--format",
                                   "json"}) {
        args.push_back(a);
      }
      const Run r = run_cli(args);
      REQUIRE(r.code == 0);
      dir.write(out, r.out);
    };
    dir.write("all.csv", testing::read_file(p("orig.csv")) +
                             testing::read_file(p("new.csv")).substr(28) +
                             testing::read_file(p("gaia.csv")).substr(28));
    eval_json({"Desmos=" + p("orig.txt"), "Gaia=" + p("gaia.txt")}, p("all.csv"), "first.json");
    eval_json({"Desmos=" + p("new.txt"), "Gaia=" + p("empty.txt")}, p("all.csv"), "second.json");

    const Run c = run_cli({"compare", p("first.json"), p("second.json")});
    CHECK(c.code == 0);
    CHECK(c.out.find("Desmos    -25     +1   -42.86%   +42.50%") != std::string::npos);
    CHECK(c.out.find("Gaia       -1      0       N/A       N/A") != std::string::npos);
    const Run g = run_cli({"compare", p("first.json"), p("second.json"), "--fp-only-gain"});
    CHECK(g.out.find("Gaia       -1      0       N/A  +100.00%") != std::string::npos);

    const Run same = run_cli({"compare", p("first.json"), p("first.json"), "--format", "json"});
    CHECK(same.code == 0);
    CHECK(same.out.find("\"dFP\": 0") != std::string::npos);

    eval_json({"Desmos=" + p("new.txt")}, p("all.csv"), "third.json");
    const Run mismatch = run_cli({"compare", p("first.json"), p("third.json")});
    CHECK(mismatch.code == 3);
    CHECK(mismatch.err.find("Gaia (only in first)") != std::string::npos);
    CHECK(run_cli({"compare", p("first.json"), p("missing.json")}).code == 2);
  }
}
