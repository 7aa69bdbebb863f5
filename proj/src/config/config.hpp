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

// Run configuration. Values come from command-line flags, then the JSON
// document at <root>/.chainlint, then built-in defaults, in that order of
// precedence.

#ifndef CHAINLINT_CONFIG_CONFIG_HPP_
#define CHAINLINT_CONFIG_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rules/rules.hpp"
#include "scope/scope.hpp"

namespace chainlint::config {

enum class OutputFormat : uint8_t { Text, Sarif };
enum class FailOn : uint8_t { Any, None, NewOnly };

struct RunConfig {
  std::filesystem::path root;
  std::vector<std::string> include{"**/*.go"};
  std::vector<std::string> exclude{"vendor/**", "**/testdata/**"};
  scope::Mode mode = scope::Mode::Whitelist;
  scope::EntryPointSpec entry_points;
  bool entry_points_overridden = false;
  std::vector<std::string> blacklist = scope::default_blacklist();
  rules::RuleConfig rules;
  OutputFormat output = OutputFormat::Text;
  std::optional<std::filesystem::path> baseline;
  FailOn fail_on = FailOn::Any;
  unsigned threads = 0;

  // Throws UsageError on a violated invariant.
  void validate() const;
};

// Flag values; unset members fall through to the file and the defaults.
struct Overrides {
  std::optional<std::filesystem::path> config_file;
  std::optional<std::vector<std::string>> include;
  std::optional<std::vector<std::string>> exclude;
  std::optional<std::string> mode;
  std::optional<std::vector<std::string>> entry_methods;
  std::optional<std::vector<std::string>> server_suffixes;
  std::optional<std::vector<std::string>> extra_entries;
  std::optional<std::vector<std::string>> blacklist;
  std::optional<std::vector<std::string>> enable;
  std::optional<std::vector<std::string>> disable;
  std::optional<std::vector<std::string>> time_deny;
  std::optional<std::vector<std::string>> unsafe_packages;
  std::optional<std::vector<std::string>> bech32_setters;
  std::optional<std::string> output;
  std::optional<std::filesystem::path> baseline;
  std::optional<std::string> fail_on;
  std::optional<unsigned> threads;

  // Sets a flag by name (see the CLI for the accepted names). List-valued
  // names append. Throws UsageError for an unknown name or bad value.
  void set(const std::string& name, const std::string& value);
};

RunConfig resolve(const std::filesystem::path& root, const Overrides& flags);

}  // namespace chainlint::config

#endif  // CHAINLINT_CONFIG_CONFIG_HPP_
