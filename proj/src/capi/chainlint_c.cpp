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

#include "chainlint/chainlint.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "common/errors.hpp"
#include "common/version.hpp"
#include "config/config.hpp"
#include "pipeline/pipeline.hpp"
#include "rules/rules.hpp"

struct chainlint_config {
  std::string root;
  chainlint::config::Overrides overrides;
};

struct chainlint_result {
  chainlint::pipeline::Outcome outcome;
  std::vector<std::string> rule_names;
};

namespace {

thread_local std::string g_last_error;

chainlint_status to_status(int code) { return static_cast<chainlint_status>(code); }

chainlint_status store(chainlint::pipeline::Outcome outcome, chainlint_result** out) {
  const int code = outcome.exit_code;
  if (code >= chainlint::pipeline::kExitUsage) g_last_error = outcome.diagnostics;
  if (!out) return to_status(code);
  auto* r = new (std::nothrow) chainlint_result;
  if (!r) {
    g_last_error = "out of memory";
    *out = nullptr;
    return CHAINLINT_ANALYSIS_ERROR;
  }
  r->outcome = std::move(outcome);
  for (const auto& f : r->outcome.findings) {
    r->rule_names.emplace_back(chainlint::rules::rule_name(f.rule));
  }
  *out = r;
  return to_status(code);
}

chainlint_status fail(int code, const std::string& message, chainlint_result** out) {
  chainlint::pipeline::Outcome o;
  o.exit_code = code;
  o.diagnostics = "error: " + message + "\n";
  return store(std::move(o), out);
}

// Resolves the configuration, mapping failures to an error outcome.
template <typename F>
chainlint_status with_config(const chainlint_config* config, chainlint_result** out, F&& run) {
  if (!config) return fail(CHAINLINT_USAGE_ERROR, "null configuration", out);
  try {
    const auto resolved = chainlint::config::resolve(config->root, config->overrides);
    return store(run(resolved), out);
  } catch (const chainlint::UsageError& e) {
    return fail(CHAINLINT_USAGE_ERROR, e.what(), out);
  } catch (const std::exception& e) {
    return fail(CHAINLINT_ANALYSIS_ERROR, e.what(), out);
  }
}

const chainlint::report::Finding* finding_at(const chainlint_result* r, size_t i) {
  if (!r || i >= r->outcome.findings.size()) return nullptr;
  return &r->outcome.findings[i];
}

}  // namespace

extern "C" {

const char* chainlint_version(void) { return chainlint::kVersion; }

const char* chainlint_last_error(void) { return g_last_error.c_str(); }

chainlint_config* chainlint_config_new(const char* root) {
  if (!root) {
    g_last_error = "null root";
    return nullptr;
  }
  auto* c = new (std::nothrow) chainlint_config;
  if (c) c->root = root;
  return c;
}

void chainlint_config_free(chainlint_config* config) { delete config; }

chainlint_status chainlint_config_set(chainlint_config* config, const char* name,
                                      const char* value) {
  if (!config || !name || !value) {
    g_last_error = "null argument";
    return CHAINLINT_USAGE_ERROR;
  }
  try {
    config->overrides.set(name, value);
    return CHAINLINT_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CHAINLINT_USAGE_ERROR;
  }
}

chainlint_status chainlint_analyze(const chainlint_config* config, chainlint_result** out) {
  return with_config(config, out, [](const auto& c) { return chainlint::pipeline::run_analyze(c); });
}

chainlint_status chainlint_scope(const chainlint_config* config, int dump_graph,
                                 chainlint_result** out) {
  return with_config(config, out, [&](const auto& c) {
    return chainlint::pipeline::run_scope(c, dump_graph != 0);
  });
}

chainlint_status chainlint_baseline_write(const chainlint_config* config, const char* path,
                                          chainlint_result** out) {
  return with_config(config, out, [&](const auto& c) {
    return chainlint::pipeline::run_baseline_write(c, path ? path : "");
  });
}

chainlint_status chainlint_eval(const char* const* inputs, size_t input_count, const char* labels,
                                const char* group_by, int allow_unlabeled, const char* format,
                                chainlint_result** out) {
  chainlint::pipeline::EvalRequest req;
  if (!labels) return fail(CHAINLINT_USAGE_ERROR, "eval needs a labels file", out);
  for (size_t i = 0; i < input_count; ++i) {
    if (inputs[i]) req.inputs.emplace_back(inputs[i]);
  }
  req.labels = labels;
  const std::string g = group_by ? group_by : "rule";
  if (g == "rule") {
    req.group_by = chainlint::metrics::GroupBy::Rule;
  } else if (g == "project") {
    req.group_by = chainlint::metrics::GroupBy::Project;
  } else {
    return fail(CHAINLINT_USAGE_ERROR, "group-by must be rule or project, got " + g, out);
  }
  const std::string f = format ? format : "text";
  if (f != "text" && f != "json") {
    return fail(CHAINLINT_USAGE_ERROR, "format must be text or json, got " + f, out);
  }
  req.json = f == "json";
  req.allow_unlabeled = allow_unlabeled != 0;
  return store(chainlint::pipeline::run_eval(req), out);
}

chainlint_status chainlint_compare(const char* first, const char* second, int fp_only_gain,
                                   const char* format, chainlint_result** out) {
  if (!first || !second) return fail(CHAINLINT_USAGE_ERROR, "compare needs two reports", out);
  chainlint::pipeline::CompareRequest req;
  req.first = first;
  req.second = second;
  req.fp_only_gain = fp_only_gain != 0;
  const std::string f = format ? format : "text";
  if (f != "text" && f != "json") {
    return fail(CHAINLINT_USAGE_ERROR, "format must be text or json, got " + f, out);
  }
  req.json = f == "json";
  return store(chainlint::pipeline::run_compare(req), out);
}

void chainlint_result_free(chainlint_result* result) { delete result; }

int chainlint_result_exit_code(const chainlint_result* result) {
  return result ? result->outcome.exit_code : CHAINLINT_USAGE_ERROR;
}

const char* chainlint_result_output(const chainlint_result* result) {
  return result ? result->outcome.output.c_str() : "";
}

const char* chainlint_result_diagnostics(const chainlint_result* result) {
  return result ? result->outcome.diagnostics.c_str() : "";
}

size_t chainlint_result_finding_count(const chainlint_result* result) {
  return result ? result->outcome.findings.size() : 0;
}

const char* chainlint_finding_rule(const chainlint_result* result, size_t index) {
  return finding_at(result, index) ? result->rule_names[index].c_str() : nullptr;
}

const char* chainlint_finding_file(const chainlint_result* result, size_t index) {
  const auto* f = finding_at(result, index);
  return f ? f->location.file.c_str() : nullptr;
}

unsigned chainlint_finding_line(const chainlint_result* result, size_t index) {
  const auto* f = finding_at(result, index);
  return f ? f->location.line : 0;
}

unsigned chainlint_finding_column(const chainlint_result* result, size_t index) {
  const auto* f = finding_at(result, index);
  return f ? f->location.column : 0;
}

const char* chainlint_finding_fingerprint(const chainlint_result* result, size_t index) {
  const auto* f = finding_at(result, index);
  return f ? f->fingerprint.c_str() : nullptr;
}

int chainlint_finding_suppressed(const chainlint_result* result, size_t index) {
  const auto* f = finding_at(result, index);
  return f && f->suppressed ? 1 : 0;
}

}  // extern "C"
