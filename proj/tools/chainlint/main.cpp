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

// chainlint command-line driver.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainlint/chainlint.h"

namespace {

struct ConfigFlag {
  const char* flag;
  const char* key;
  const char* help;
  bool list;
};

constexpr ConfigFlag kConfigFlags[] = {
    {"--config", "config", "Config file (default <root>/.chainlint)", false},
    {"--include", "include", "Include glob, relative to the root", true},
    {"--exclude", "exclude", "Exclude glob, relative to the root", true},
    {"--mode", "mode", "Scope strategy: whitelist or blacklist", false},
    {"--entry-method", "entry_method", "Block entry method: Name, *Suffix, optional /arity", true},
    {"--server-suffix", "server_suffix", "Message-server interface name suffix", true},
    {"--extra-entry", "extra_entry", "Additional entry function or method name", true},
    {"--blacklist", "blacklist", "Blacklist-mode package path substring", true},
    {"--enable", "enable", "Enable only the named rules (or all)", true},
    {"--disable", "disable", "Disable a rule", true},
    {"--time-deny", "time_deny", "Denied wall-clock call, pkg.Func", true},
    {"--unsafe-package", "unsafe_package", "Import path flagged by the unsafe-package rule", true},
    {"--bech32-setter", "bech32_setter", "Call whose literal arguments are address prefixes", true},
    {"--output", "output", "Output format: text or sarif", false},
    {"--baseline", "baseline", "Baseline fingerprint file", false},
    {"--fail-on", "fail_on", "Exit-status policy: any, none or new-only", false},
    {"--threads", "threads", "Parser threads (0 = all cores)", false},
};

struct RunFlags {
  std::string root = ".";
  std::map<std::string, std::vector<std::string>> values;
  std::string out_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("root", root, "Module or repository root")->capture_default_str();
    for (const ConfigFlag& f : kConfigFlags) {
      auto* opt = cmd->add_option(f.flag, values[f.key], f.help);
      if (!f.list) opt->expected(1);
    }
    cmd->add_option("-O,--out-file", out_file, "Write the report to a file instead of stdout");
  }
};

int report_error(const char* what) {
  std::fprintf(stderr, "error: %s\n", what);
  return CHAINLINT_USAGE_ERROR;
}

int emit(chainlint_status status, chainlint_result* result, const std::string& out_file) {
  if (!result) return report_error(chainlint_last_error());
  std::fputs(chainlint_result_diagnostics(result), stderr);
  int code = chainlint_result_exit_code(result);
  const char* text = chainlint_result_output(result);
  if (!out_file.empty() && status < CHAINLINT_USAGE_ERROR) {
    std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", out_file.c_str());
      code = CHAINLINT_USAGE_ERROR;
    }
  } else {
    std::fputs(text, stdout);
  }
  chainlint_result_free(result);
  return code;
}

// Builds a configuration handle, or returns nullptr after printing the error.
chainlint_config* make_config(const RunFlags& flags) {
  chainlint_config* config = chainlint_config_new(flags.root.c_str());
  if (!config) {
    report_error(chainlint_last_error());
    return nullptr;
  }
  for (const auto& [key, vals] : flags.values) {
    for (const std::string& v : vals) {
      if (chainlint_config_set(config, key.c_str(), v.c_str()) != CHAINLINT_OK) {
        report_error(chainlint_last_error());
        chainlint_config_free(config);
        return nullptr;
      }
    }
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static analyzer for non-determinism in Cosmos SDK chains", "chainlint"};
  app.set_version_flag("--version", "chainlint " + std::string(chainlint_version()));
  app.require_subcommand(1);

  RunFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "Report rule violations in consensus-critical code");
  analyze_flags.attach(analyze);

  RunFlags scope_flags;
  bool dump_graph = false;
  auto* scope = app.add_subcommand("scope", "List consensus-critical functions");
  scope_flags.attach(scope);
  scope->add_flag("--dump-graph", dump_graph, "Print the call graph edge list instead");

  auto* baseline = app.add_subcommand("baseline", "Manage finding baselines");
  baseline->require_subcommand(1);
  RunFlags baseline_flags;
  std::string baseline_path;
  auto* baseline_write = baseline->add_subcommand("write", "Record current findings as accepted");
  baseline_flags.attach(baseline_write);
  baseline_write->add_option("-f,--file", baseline_path,
                             "Target file (default: the configured baseline)");

  std::vector<std::string> eval_inputs;
  std::string labels;
  std::string group_by = "rule";
  std::string eval_format = "text";
  bool allow_unlabeled = false;
  auto* eval = app.add_subcommand("eval", "Compute precision and noise ratio from labels");
  eval->add_option("findings", eval_inputs, "Findings files (SARIF or text), optionally NAME=PATH")
      ->required();
  eval->add_option("--labels", labels, "Label CSV: fingerprint,label[,canonical]")->required();
  eval->add_option("--group-by", group_by, "rule or project")->capture_default_str();
  eval->add_flag("--allow-unlabeled", allow_unlabeled, "Exclude unlabeled findings");
  eval->add_option("--format", eval_format, "text or json")->capture_default_str();

  std::string first;
  std::string second;
  std::string compare_format = "text";
  bool fp_only_gain = false;
  auto* compare = app.add_subcommand("compare", "Compare two metrics reports from eval --format json");
  compare->add_option("first", first, "Report of the first run")->required();
  compare->add_option("second", second, "Report of the second run")->required();
  compare->add_flag("--fp-only-gain", fp_only_gain,
                    "Count a group with no findings in the second run as 100% precise");
  compare->add_option("--format", compare_format, "text or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CHAINLINT_USAGE_ERROR;
  }

  chainlint_result* result = nullptr;
  if (*analyze || *scope || *baseline_write) {
    const RunFlags& flags = *analyze ? analyze_flags : *scope ? scope_flags : baseline_flags;
    chainlint_config* config = make_config(flags);
    if (!config) return CHAINLINT_USAGE_ERROR;
    chainlint_status status;
    if (*analyze) {
      status = chainlint_analyze(config, &result);
    } else if (*scope) {
      status = chainlint_scope(config, dump_graph ? 1 : 0, &result);
    } else {
      status = chainlint_baseline_write(config, baseline_path.c_str(), &result);
    }
    chainlint_config_free(config);
    return emit(status, result, flags.out_file);
  }
  if (*eval) {
    std::vector<const char*> inputs;
    for (const auto& s : eval_inputs) inputs.push_back(s.c_str());
    const chainlint_status status =
        chainlint_eval(inputs.data(), inputs.size(), labels.c_str(), group_by.c_str(),
                       allow_unlabeled ? 1 : 0, eval_format.c_str(), &result);
    return emit(status, result, "");
  }
  const chainlint_status status = chainlint_compare(first.c_str(), second.c_str(),
                                                    fp_only_gain ? 1 : 0, compare_format.c_str(),
                                                    &result);
  return emit(status, result, "");
}
