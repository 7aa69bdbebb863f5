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

#ifndef CHAINLINT_SOURCE_TREE_HPP_
#define CHAINLINT_SOURCE_TREE_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "source/ast.hpp"

namespace chainlint::go {

struct ParseDiagnostic {
  std::string file;
  uint32_t line = 0;
  uint32_t column = 0;
  std::string message;
};

struct Package {
  std::string import_path;
  std::string name;
  std::string dir;  // relative to the tree root, "" for the root itself
  bool is_test = false;
  std::vector<std::unique_ptr<SourceFile>> files;
};

struct SourceTree {
  std::filesystem::path root;
  std::vector<std::unique_ptr<Package>> packages;  // sorted by import_path
  std::vector<ParseDiagnostic> diagnostics;        // sorted by file, line

  const Package* find_package(std::string_view import_path) const;
  size_t file_count() const;
};

struct ParseOptions {
  std::vector<std::string> include{"**/*.go"};
  std::vector<std::string> exclude{"vendor/**", "**/testdata/**"};
  unsigned threads = 0;  // 0 = hardware concurrency
};

// '*' and '?' stay inside one path segment, "**" spans segments.
bool glob_match(std::string_view pattern, std::string_view path);

// Throws UsageError when root is missing, AnalysisError when no file parses.
SourceTree parse_tree(const std::filesystem::path& root,
                      const ParseOptions& options = {});

// Parses a single in-memory file (tests and tooling).
std::unique_ptr<SourceFile> parse_source(std::string path, std::string source);

}  // namespace chainlint::go

#endif  // CHAINLINT_SOURCE_TREE_HPP_
