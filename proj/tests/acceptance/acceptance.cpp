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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "config/config.hpp"
#include "graph/callgraph.hpp"
#include "metrics/metrics.hpp"
#include "pipeline/pipeline.hpp"
#include "source/tree.hpp"

namespace fs = std::filesystem;
using namespace chainlint;

namespace {

using Key = std::tuple<std::string, uint32_t, std::string>;  // file, line, rule

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("chainlint-acceptance-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

// `// want: <rule>...` and `// decoy: <rule>...` markers, keyed by line.
std::multiset<Key> markers(const fs::path& root, const std::string& tag) {
  std::multiset<Key> out;
  const std::regex re("// " + tag + ": ([a-z0-9/ -]+)$");
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file() && e.path().extension() == ".go") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::istringstream in(read_file(p));
    std::string line;
    uint32_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      std::smatch m;
      if (!std::regex_search(line, m, re)) continue;
      std::istringstream rules(m[1].str());
      for (std::string r; rules >> r;) {
        out.insert({fs::relative(p, root).generic_string(), n, r});
      }
    }
  }
  return out;
}

config::RunConfig config_for(const fs::path& root, scope::Mode mode = scope::Mode::Whitelist) {
  config::RunConfig c;
  c.root = root;
  c.mode = mode;
  return c;
}

Key key_of(const report::Finding& f) {
  return {f.location.file, f.location.line, std::string(rules::rule_name(f.rule))};
}

std::multiset<Key> keys(const std::vector<report::Finding>& fs) {
  std::multiset<Key> out;
  for (const auto& f : fs) out.insert(key_of(f));
  return out;
}

std::map<std::string, size_t> per_rule(const std::multiset<Key>& ks) {
  std::map<std::string, size_t> out;
  for (rules::RuleId r : rules::kAllRules) out[std::string(rules::rule_name(r))] = 0;
  for (const auto& k : ks) ++out[std::get<2>(k)];
  return out;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criteria --------------------------------------------------------------

Outcome corpus_exactness(const fs::path& corpus) {
  Clock clock;
  const auto want = markers(corpus, "want");
  const auto decoys = markers(corpus, "decoy");
  const auto a = pipeline::analyze(config_for(corpus));
  const auto got = keys(a.findings);
  const double t = clock.seconds();

  size_t packages = 0;
  for (const auto& p : a.model.tree().packages) packages += p->is_test ? 0 : 1;
  std::string thin;
  for (const auto& [rule, n] : per_rule(want)) {
    if (n < 3) thin += " planted(" + rule + ")=" + std::to_string(n);
  }
  for (const auto& [rule, n] : per_rule(decoys)) {
    if (n < 3) thin += " decoys(" + rule + ")=" + std::to_string(n);
  }
  std::vector<Key> missing;
  std::vector<Key> extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));

  Outcome o;
  o.pass = packages >= 30 && thin.empty() && missing.empty() && extra.empty() && t < 30.0 &&
           a.diagnostics.empty();
  std::ostringstream d;
  d << packages << " packages, " << want.size() << " planted, " << decoys.size() << " decoys, "
    << got.size() << " reported, " << missing.size() << " missed, " << extra.size()
    << " unexpected, " << a.diagnostics.size() << " parse diagnostics" << thin;
  for (const auto& k : missing) d << " missed " << std::get<0>(k) << ":" << std::get<1>(k);
  for (const auto& k : extra) d << " unexpected " << std::get<0>(k) << ":" << std::get<1>(k);
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2fs (limit 30s)", t);
  o.detail = d.str() + buf;
  return o;
}

// Labels every finding against the planted set: TP when it matches a
// marker, FP otherwise.
void label(const std::vector<report::Finding>& findings, const std::multiset<Key>& want,
           metrics::LabelSet& labels, std::vector<metrics::LabeledFinding>& out) {
  for (const auto& f : findings) {
    if (!labels.find(f.fingerprint)) {
      labels.add(f.fingerprint, {want.count(key_of(f)) ? metrics::Label::TP : metrics::Label::FP, ""});
    }
    out.push_back({f.fingerprint, std::string(rules::rule_name(f.rule)), "minichain"});
  }
}

Outcome mode_delta(const fs::path& corpus) {
  const auto want = markers(corpus, "want");
  const auto white = pipeline::analyze(config_for(corpus));
  const auto black = pipeline::analyze(config_for(corpus, scope::Mode::Blacklist));
  metrics::LabelSet labels;
  std::vector<metrics::LabeledFinding> wf;
  std::vector<metrics::LabeledFinding> bf;
  label(black.findings, want, labels, bf);
  label(white.findings, want, labels, wf);
  std::vector<std::string> known;
  for (rules::RuleId r : rules::kAllRules) known.emplace_back(rules::rule_name(r));
  const auto bm = metrics::compute_metrics(bf, labels, metrics::GroupBy::Rule, false, known);
  const auto wm = metrics::compute_metrics(wf, labels, metrics::GroupBy::Rule, false, known);
  const auto delta = metrics::compare(bm, wm, false);

  std::multiset<Key> wk = keys(white.findings);
  const bool retained = std::includes(wk.begin(), wk.end(), want.begin(), want.end());
  bool directions = true;
  std::ostringstream d;
  d << "blacklist FP " << bm.total.fp << " (need >= 10), whitelist FP " << wm.total.fp
    << " (need 0), planted TPs retained: " << (retained ? "yes" : "no") << "; per rule dFP/dUTP:";
  for (const auto& g : delta.groups) {
    const auto id = rules::rule_from_name(g.group);
    const bool checked = id && *id != rules::RuleId::R1_BlockPanic &&
                         *id != rules::RuleId::R8_PlatformDependentType;
    d << " " << g.group.substr(g.group.find('/') + 1) << " " << g.d_fp << "/" << g.d_utp;
    if (checked && !(g.d_fp < 0 && g.d_utp >= 0)) directions = false;
  }
  Outcome o;
  o.pass = bm.total.fp >= 10 && wm.total.fp == 0 && retained && directions;
  o.detail = d.str() + " (rules 2-7 need dFP < 0, dUTP >= 0)";
  return o;
}

Outcome block_panic_dedup(const fs::path& fixtures) {
  const auto d = pipeline::analyze(config_for(fixtures / "diamond"));
  const auto p = pipeline::analyze(config_for(fixtures / "dualpanic"));
  metrics::LabelSet labels;
  std::vector<metrics::LabeledFinding> lf;
  for (const auto& f : d.findings) {
    if (!labels.find(f.fingerprint)) labels.add(f.fingerprint, {metrics::Label::TP, ""});
    lf.push_back({f.fingerprint, std::string(rules::rule_name(f.rule)), "diamond"});
  }
  const auto m = metrics::compute_metrics(lf, labels, metrics::GroupBy::Project, false);
  std::set<std::string> fps;
  for (const auto& f : p.findings) fps.insert(f.fingerprint);
  const bool all_r1 = std::all_of(d.findings.begin(), d.findings.end(),
                                  [](const auto& f) { return f.rule == rules::RuleId::R1_BlockPanic; }) &&
                      std::all_of(p.findings.begin(), p.findings.end(),
                                  [](const auto& f) { return f.rule == rules::RuleId::R1_BlockPanic; });
  Outcome o;
  o.pass = d.findings.size() == 1 && p.findings.size() == 2 && fps.size() == 2 && all_r1 &&
           m.total.nr == metrics::Rational(0);
  o.detail = "diamond " + std::to_string(d.findings.size()) + " finding(s) (need 1, NR " +
             metrics::format_percent(m.total.nr) + "), dual panic " +
             std::to_string(p.findings.size()) + " finding(s) (need 2, distinct fingerprints " +
             std::to_string(fps.size()) + ")";
  return o;
}

Outcome metrics_cells() {
  Clock clock;
  struct Cell {
    const char* name;
    int64_t p, fp, dup;
    const char* field;       // "precision" or "nr"
    metrics::Rational exact;
    double published;        // percent, or NAN for N/A
  };
  const Cell cells[] = {
      {"map iteration", 13, 8, 0, "precision", {5, 13}, 38.46},
      {"platform types", 44, 9, 0, "precision", {35, 44}, 79.54},
      {"Desmos (second run)", 8, 3, 0, "precision", {5, 8}, 62.5},
      {"Desmos (first run) NR", 35, 28, 3, "nr", {3, 7}, 42.9},
      {"Desmos (first run) precision", 35, 28, 3, "precision", {1, 5}, 20.0},
      {"Gaia", 0, 0, 0, "precision", {0}, NAN},
  };
  bool ok = true;
  std::ostringstream d;
  for (const Cell& c : cells) {
    const auto s = metrics::stats_from_counts(c.name, c.p, c.fp, c.dup);
    const auto& v = std::string(c.field) == "nr" ? s.nr : s.precision;
    const std::string shown = metrics::format_percent(v);
    bool cell_ok;
    if (std::isnan(c.published)) {
      cell_ok = !v && !s.nr && shown == "N/A";
    } else {
      cell_ok = v && *v == c.exact &&
                std::abs(std::stod(shown.substr(0, shown.size() - 1)) - c.published) <= 0.5;
    }
    ok = ok && cell_ok;
    d << (d.tellp() ? ", " : "") << c.name << " " << shown << (cell_ok ? "" : " (mismatch)");
  }
  const double t = clock.seconds();
  char buf[64];
  std::snprintf(buf, sizeof buf, "; tolerance 0.5 points; %.3fs (limit 1s)", t);
  return {ok && t < 1.0, d.str() + buf};
}

// Random Go package with known call edges: direct calls, calls in closures,
// deferred calls and calls through a local alias. Calls through a function
// parameter stay unresolved and are left out of the expected edges.
struct RandomProgram {
  std::string source;
  size_t n = 0;
  std::vector<std::pair<size_t, size_t>> edges;
};

RandomProgram random_program(std::mt19937& rng) {
  RandomProgram p;
  p.n = 1 + rng() % 50;
  std::ostringstream src;
  src << "package gen\n\ntype T struct{}\n";
  auto call = [](size_t i) { return (i % 3 == 0 ? "t.m" : "f") + std::to_string(i) + "()"; };
  for (size_t i = 0; i < p.n; ++i) {
    src << "\nfunc ";
    if (i % 3 == 0) {
      src << "(t T) m" << i << "(cb func()) {\n";
    } else {
      src << "f" << i << "(cb func()) {\n\tvar t T\n\t_ = t\n";
    }
    const size_t k = rng() % 5;
    for (size_t c = 0; c < k; ++c) {
      const size_t j = rng() % p.n;
      const std::string target = call(j);
      const std::string with_arg = target.substr(0, target.size() - 1) + "nil)";
      switch (rng() % 5) {
        case 0:
          src << "\t" << with_arg << "\n";
          break;
        case 1:
          src << "\tfunc() {\n\t\t" << with_arg << "\n\t}()\n";
          break;
        case 2:
          src << "\tif true {\n\t\tdefer " << with_arg << "\n\t}\n";
          break;
        case 3:
          if (j % 3 == 0) {
            src << "\th" << c << " := t.m" << j << "\n\th" << c << "(nil)\n";
          } else {
            src << "\th" << c << " := f" << j << "\n\th" << c << "(nil)\n";
          }
          break;
        default:
          src << "\tcb()\n";
          continue;
      }
      p.edges.emplace_back(i, j);
    }
    src << "}\n";
  }
  p.source = src.str();
  return p;
}

std::set<std::string> dfs(const RandomProgram& p, size_t seed) {
  std::vector<bool> seen(p.n, false);
  std::vector<size_t> stack{seed};
  while (!stack.empty()) {
    const size_t v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    for (const auto& [from, to] : p.edges) {
      if (from == v) stack.push_back(to);
    }
  }
  std::set<std::string> out;
  for (size_t i = 0; i < p.n; ++i) {
    if (seen[i]) out.insert((i % 3 == 0 ? "T.m" : "f") + std::to_string(i));
  }
  return out;
}

Outcome callgraph_oracle() {
  std::mt19937 rng(20261014);
  size_t mismatches = 0;
  size_t queries = 0;
  size_t max_nodes = 0;
  for (int round = 0; round < 100; ++round) {
    const RandomProgram p = random_program(rng);
    max_nodes = std::max(max_nodes, p.n);
    TempDir dir;
    write_file(dir.path() / "go.mod", "module example.com/gen\n\ngo 1.21\n");
    write_file(dir.path() / "gen/gen.go", p.source);
    go::ParseOptions opts;
    opts.threads = 1;
    const go::SourceModel model = go::bind_types(go::parse_tree(dir.path(), opts));
    const graph::CallGraph g = graph::build_call_graph(model);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < g.nodes().size(); ++i) index[g.nodes()[i].qualified_name()] = i;
    if (index.size() != p.n) {
      ++mismatches;
      continue;
    }
    for (size_t s = 0; s < p.n; ++s) {
      const std::string seed = (s % 3 == 0 ? "T.m" : "f") + std::to_string(s);
      std::set<std::string> got;
      for (size_t v : graph::reachable_from(g, std::vector<size_t>{index.at(seed)})) {
        got.insert(g.nodes()[v].qualified_name());
      }
      ++queries;
      if (got != dfs(p, s)) ++mismatches;
    }
  }
  return {mismatches == 0, "100 programs of <= 50 functions (largest " + std::to_string(max_nodes) +
                               "), " + std::to_string(queries) + " reachability queries, " +
                               std::to_string(mismatches) + " mismatches (need 0)"};
}

Outcome sarif_determinism(const fs::path& corpus) {
  TempDir dir;
  const fs::path a = dir.path() / "first.sarif";
  const fs::path b = dir.path() / "second.sarif";
  const std::string base = quote(CHAINLINT_CLI) + " analyze " + quote(corpus.string()) +
                           " --output sarif --fail-on none -O ";
  const int ca = run_command(base + quote(a.string()) + " 2>/dev/null");
  const int cb = run_command(base + quote(b.string()) + " 2>/dev/null");
  const std::string sa = read_file(a);
  const std::string sb = read_file(b);
  const int valid = run_command("python3 " + quote(std::string(CHAINLINT_TOOLS) + "/validate_sarif.py") +
                                " " + quote(std::string(CHAINLINT_TESTDATA) + "/sarif-schema-2.1.0.json") +
                                " " + quote(a.string()));
  const bool same = !sa.empty() && sa == sb;
  return {ca == 0 && cb == 0 && same && valid == 0,
          std::to_string(sa.size()) + " bytes, runs " + (same ? "identical" : "differ") +
              ", schema 2.1.0 " + (valid == 0 ? "valid" : "INVALID")};
}

Outcome suppression(const fs::path& corpus) {
  const auto base = pipeline::analyze(config_for(corpus));
  const auto want = markers(corpus, "want");
  const report::Finding* target = nullptr;
  for (const auto& f : base.findings) {
    if (f.rule == rules::RuleId::R1_BlockPanic && want.count(key_of(f))) {
      target = &f;
      break;
    }
  }
  if (!target) return {false, "no planted R1 finding"};
  TempDir dir;
  fs::copy(corpus, dir.path(), fs::copy_options::recursive);
  const fs::path file = dir.path() / target->location.file;
  std::vector<std::string> lines;
  std::istringstream in(read_file(file));
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  const std::string& flagged = lines[target->location.line - 1];
  const std::string indent = flagged.substr(0, flagged.find_first_not_of(" \t"));
  lines.insert(lines.begin() + (target->location.line - 1),
               indent + "//consensus:ignore cosmos/block-panic reason");
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  write_file(file, text);

  const auto after = pipeline::analyze(config_for(dir.path()));
  size_t suppressed = 0;
  bool target_suppressed = false;
  for (const auto& f : after.findings) {
    if (!f.suppressed) continue;
    ++suppressed;
    if (f.fingerprint == target->fingerprint) target_suppressed = true;
  }
  return {target_suppressed && suppressed == 1 && after.findings.size() == base.findings.size() &&
              after.diagnostics.empty(),
          "annotated " + target->location.file + ":" + std::to_string(target->location.line) +
              "; findings " + std::to_string(base.findings.size()) + " -> " +
              std::to_string(after.findings.size()) + ", suppressed " + std::to_string(suppressed) +
              (target_suppressed ? " (the annotated one)" : " (annotated one NOT suppressed)")};
}

}  // namespace

int main() {
  const fs::path corpus = CHAINLINT_CORPUS;
  const fs::path fixtures = CHAINLINT_FIXTURES;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture corpus exactness", [&] { return corpus_exactness(corpus); }},
      {"whitelist vs blacklist delta", [&] { return mode_delta(corpus); }},
      {"block-panic dedup and completeness", [&] { return block_panic_dedup(fixtures); }},
      {"metrics arithmetic", [] { return metrics_cells(); }},
      {"call-graph oracle equivalence", [] { return callgraph_oracle(); }},
      {"SARIF determinism and schema", [&] { return sarif_determinism(corpus); }},
      {"in-source suppression", [&] { return suppression(corpus); }},
  };
  Clock total;
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), total.seconds());
  return failed ? 1 : 0;
}
