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

#include "config/config.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "common/errors.hpp"

namespace chainlint::config {

namespace {

using Json = nlohmann::json;

// "Name", "*Suffix", optionally followed by "/arity".
scope::MethodPattern parse_method_pattern(const std::string& text) {
  scope::MethodPattern p;
  std::string s = text;
  if (const size_t slash = s.find('/'); slash != std::string::npos) {
    const std::string arity = s.substr(slash + 1);
    s = s.substr(0, slash);
    try {
      size_t used = 0;
      p.arity = std::stoi(arity, &used);
      if (used != arity.size() || p.arity < 0) throw std::invalid_argument(arity);
    } catch (const std::exception&) {
      throw UsageError("bad arity in entry method pattern: " + text);
    }
  }
  if (!s.empty() && s[0] == '*') {
    p.suffix = true;
    s = s.substr(1);
  }
  if (s.empty()) throw UsageError("empty entry method pattern: " + text);
  p.name = s;
  return p;
}

scope::Mode parse_mode(const std::string& s) {
  if (s == "whitelist") return scope::Mode::Whitelist;
  if (s == "blacklist") return scope::Mode::Blacklist;
  throw UsageError("mode must be whitelist or blacklist, got " + s);
}

OutputFormat parse_output(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "sarif") return OutputFormat::Sarif;
  throw UsageError("output must be text or sarif, got " + s);
}

FailOn parse_fail_on(const std::string& s) {
  if (s == "any") return FailOn::Any;
  if (s == "none") return FailOn::None;
  if (s == "new-only") return FailOn::NewOnly;
  throw UsageError("fail_on must be any, none or new-only, got " + s);
}

std::set<rules::RuleId> parse_rules(const std::vector<std::string>& names) {
  std::set<rules::RuleId> out;
  for (const std::string& n : names) {
    if (n == "all") {
      out.insert(std::begin(rules::kAllRules), std::end(rules::kAllRules));
      continue;
    }
    auto r = rules::rule_from_name(n);
    if (!r) throw UsageError("unknown rule: " + n);
    out.insert(*r);
  }
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& key) {
  if (!j.is_array()) throw UsageError("config key " + key + " must be a list of strings");
  std::vector<std::string> out;
  for (const Json& v : j) {
    if (!v.is_string()) throw UsageError("config key " + key + " must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_value(const Json& j, const std::string& key) {
  if (!j.is_string()) throw UsageError("config key " + key + " must be a string");
  return j.get<std::string>();
}

void check_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw UsageError("config " + where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) {
      throw UsageError("unknown config key " + (where.empty() ? k : where + "." + k));
    }
  }
}

void apply_file(RunConfig& c, const std::filesystem::path& path, bool required) {
  std::ifstream in(path);
  if (!in) {
    if (required) throw UsageError("cannot read config file: " + path.string());
    return;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw UsageError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  check_keys(j, "", {"include", "exclude", "mode", "entry_points", "blacklist", "rules", "output",
                     "fail_on", "baseline", "threads"});
  if (j.contains("include")) c.include = string_list(j["include"], "include");
  if (j.contains("exclude")) c.exclude = string_list(j["exclude"], "exclude");
  if (j.contains("mode")) c.mode = parse_mode(string_value(j["mode"], "mode"));
  if (j.contains("entry_points")) {
    const Json& e = j["entry_points"];
    check_keys(e, "entry_points", {"methods", "server_interface_suffixes", "extra"});
    if (e.contains("methods")) {
      c.entry_points.method_names.clear();
      for (const auto& m : string_list(e["methods"], "entry_points.methods")) {
        c.entry_points.method_names.push_back(parse_method_pattern(m));
      }
    }
    if (e.contains("server_interface_suffixes")) {
      c.entry_points.server_interface_suffixes =
          string_list(e["server_interface_suffixes"], "entry_points.server_interface_suffixes");
    }
    if (e.contains("extra")) {
      c.entry_points.extra_entry_names = string_list(e["extra"], "entry_points.extra");
    }
    c.entry_points_overridden = true;
  }
  if (j.contains("blacklist")) c.blacklist = string_list(j["blacklist"], "blacklist");
  if (j.contains("rules")) {
    const Json& r = j["rules"];
    check_keys(r, "rules", {"enabled", "disabled", "time_deny", "unsafe_packages", "bech32_setters"});
    if (r.contains("enabled")) c.rules.enabled = parse_rules(string_list(r["enabled"], "rules.enabled"));
    if (r.contains("disabled")) {
      for (auto id : parse_rules(string_list(r["disabled"], "rules.disabled"))) c.rules.enabled.erase(id);
    }
    if (r.contains("time_deny")) c.rules.time_deny = string_list(r["time_deny"], "rules.time_deny");
    if (r.contains("unsafe_packages")) {
      c.rules.unsafe_packages = string_list(r["unsafe_packages"], "rules.unsafe_packages");
    }
    if (r.contains("bech32_setters")) {
      c.rules.bech32_setters = string_list(r["bech32_setters"], "rules.bech32_setters");
    }
  }
  if (j.contains("output")) c.output = parse_output(string_value(j["output"], "output"));
  if (j.contains("fail_on")) c.fail_on = parse_fail_on(string_value(j["fail_on"], "fail_on"));
  if (j.contains("baseline")) {
    std::filesystem::path b = string_value(j["baseline"], "baseline");
    c.baseline = b.is_absolute() ? b : c.root / b;
  }
  if (j.contains("threads")) {
    if (!j["threads"].is_number_unsigned()) throw UsageError("config key threads must be a count");
    c.threads = j["threads"].get<unsigned>();
  }
}

std::vector<std::string>& append_to(std::optional<std::vector<std::string>>& slot) {
  if (!slot) slot.emplace();
  return *slot;
}

}  // namespace

void Overrides::set(const std::string& name, const std::string& value) {
  if (name == "config") {
    config_file = value;
  } else if (name == "include") {
    append_to(include).push_back(value);
  } else if (name == "exclude") {
    append_to(exclude).push_back(value);
  } else if (name == "mode") {
    parse_mode(value);
    mode = value;
  } else if (name == "entry_method") {
    parse_method_pattern(value);
    append_to(entry_methods).push_back(value);
  } else if (name == "server_suffix") {
    append_to(server_suffixes).push_back(value);
  } else if (name == "extra_entry") {
    append_to(extra_entries).push_back(value);
  } else if (name == "blacklist") {
    append_to(blacklist).push_back(value);
  } else if (name == "enable") {
    parse_rules({value});
    append_to(enable).push_back(value);
  } else if (name == "disable") {
    parse_rules({value});
    append_to(disable).push_back(value);
  } else if (name == "time_deny") {
    append_to(time_deny).push_back(value);
  } else if (name == "unsafe_package") {
    append_to(unsafe_packages).push_back(value);
  } else if (name == "bech32_setter") {
    append_to(bech32_setters).push_back(value);
  } else if (name == "output") {
    parse_output(value);
    output = value;
  } else if (name == "baseline") {
    baseline = value;
  } else if (name == "fail_on") {
    parse_fail_on(value);
    fail_on = value;
  } else if (name == "threads") {
    try {
      size_t used = 0;
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(value);
      }
      const unsigned long n = std::stoul(value, &used);
      if (used != value.size() || n > std::numeric_limits<unsigned>::max()) {
        throw std::invalid_argument(value);
      }
      threads = static_cast<unsigned>(n);
    } catch (const std::exception&) {
      throw UsageError("threads must be a non-negative integer, got " + value);
    }
  } else {
    throw UsageError("unknown option: " + name);
  }
}

void RunConfig::validate() const {
  if (mode == scope::Mode::Blacklist && entry_points_overridden) {
    throw UsageError("entry-point options cannot be combined with --mode blacklist");
  }
  if (fail_on == FailOn::NewOnly && !baseline) {
    throw UsageError("fail_on new-only requires a baseline");
  }
  if (include.empty()) throw UsageError("include globs must not be empty");
  rules.validate();
}

RunConfig resolve(const std::filesystem::path& root, const Overrides& flags) {
  RunConfig c;
  c.root = root;
  if (flags.config_file) {
    apply_file(c, *flags.config_file, true);
  } else {
    apply_file(c, root / ".chainlint", false);
  }
  if (flags.include) c.include = *flags.include;
  if (flags.exclude) c.exclude = *flags.exclude;
  if (flags.mode) c.mode = parse_mode(*flags.mode);
  if (flags.entry_methods) {
    c.entry_points.method_names.clear();
    for (const auto& m : *flags.entry_methods) {
      c.entry_points.method_names.push_back(parse_method_pattern(m));
    }
    c.entry_points_overridden = true;
  }
  if (flags.server_suffixes) {
    c.entry_points.server_interface_suffixes = *flags.server_suffixes;
    c.entry_points_overridden = true;
  }
  if (flags.extra_entries) {
    c.entry_points.extra_entry_names = *flags.extra_entries;
    c.entry_points_overridden = true;
  }
  if (flags.blacklist) c.blacklist = *flags.blacklist;
  if (flags.enable) c.rules.enabled = parse_rules(*flags.enable);
  if (flags.disable) {
    for (auto id : parse_rules(*flags.disable)) c.rules.enabled.erase(id);
  }
  if (flags.time_deny) c.rules.time_deny = *flags.time_deny;
  if (flags.unsafe_packages) c.rules.unsafe_packages = *flags.unsafe_packages;
  if (flags.bech32_setters) c.rules.bech32_setters = *flags.bech32_setters;
  if (flags.output) c.output = parse_output(*flags.output);
  if (flags.baseline) c.baseline = *flags.baseline;
  if (flags.fail_on) c.fail_on = parse_fail_on(*flags.fail_on);
  if (flags.threads) c.threads = *flags.threads;
  c.validate();
  return c;
}

}  // namespace chainlint::config
