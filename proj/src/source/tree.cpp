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

#include "source/tree.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

#include "common/errors.hpp"
#include "source/parser.hpp"

namespace chainlint::go {

namespace fs = std::filesystem;

bool glob_match(std::string_view p, std::string_view s) {
  while (!p.empty()) {
    if (p.substr(0, 2) == "**") {
      std::string_view rest = p.substr(2);
      if (!rest.empty() && rest[0] == '/') {
        rest = rest.substr(1);
        if (glob_match(rest, s)) return true;
        for (size_t i = 0; i < s.size(); ++i) {
          if (s[i] == '/' && glob_match(rest, s.substr(i + 1))) return true;
        }
        return false;
      }
      for (size_t i = 0; i <= s.size(); ++i) {
        if (glob_match(rest, s.substr(i))) return true;
      }
      return false;
    }
    const char c = p[0];
    if (c == '*') {
      for (size_t i = 0; i <= s.size(); ++i) {
        if (glob_match(p.substr(1), s.substr(i))) return true;
        if (i < s.size() && s[i] == '/') break;
      }
      return false;
    }
    if (s.empty()) return false;
    if (c == '?') {
      if (s[0] == '/') return false;
    } else if (c == '[') {
      auto close = p.find(']', 1);
      if (close == std::string_view::npos) {
        if (s[0] != '[') return false;
      } else {
        std::string_view set = p.substr(1, close - 1);
        bool negate = !set.empty() && (set[0] == '!' || set[0] == '^');
        if (negate) set = set.substr(1);
        bool hit = false;
        for (size_t i = 0; i < set.size(); ++i) {
          if (i + 2 < set.size() && set[i + 1] == '-') {
            hit = hit || (s[0] >= set[i] && s[0] <= set[i + 2]);
            i += 2;
          } else {
            hit = hit || s[0] == set[i];
          }
        }
        if (hit == negate || s[0] == '/') return false;
        p = p.substr(close + 1);
        s = s.substr(1);
        continue;
      }
    } else if (c != s[0]) {
      return false;
    }
    p = p.substr(1);
    s = s.substr(1);
  }
  return s.empty();
}

const Package* SourceTree::find_package(std::string_view import_path) const {
  auto it = std::lower_bound(
      packages.begin(), packages.end(), import_path,
      [](const std::unique_ptr<Package>& p, std::string_view v) {
        return p->import_path < v;
      });
  if (it != packages.end() && (*it)->import_path == import_path) return it->get();
  return nullptr;
}

size_t SourceTree::file_count() const {
  size_t n = 0;
  for (const auto& p : packages) n += p->files.size();
  return n;
}

namespace {

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> module_of(const std::string& gomod) {
  std::istringstream in(gomod);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::string_view l = std::string_view(line).substr(start);
    if (l.substr(0, 7) != "module ") continue;
    l = l.substr(7);
    l = l.substr(0, l.find("//"));
    while (!l.empty() && (l.back() == ' ' || l.back() == '\t' || l.back() == '\r')) {
      l.remove_suffix(1);
    }
    while (!l.empty() && (l.front() == ' ' || l.front() == '\t')) l.remove_prefix(1);
    if (l.size() >= 2 && l.front() == '"') l = l.substr(1, l.size() - 2);
    if (!l.empty()) return std::string(l);
  }
  return std::nullopt;
}

std::string parent_dir(const std::string& rel) {
  auto slash = rel.rfind('/');
  return slash == std::string::npos ? std::string() : rel.substr(0, slash);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

struct ParsedUnit {
  std::unique_ptr<SourceFile> file;
  std::optional<ParseDiagnostic> diagnostic;
};

ParsedUnit parse_one(const std::string& rel, std::string source) {
  ParsedUnit unit;
  auto file = std::make_unique<SourceFile>();
  file->path = rel;
  file->source = std::move(source);
  file->is_test = ends_with(rel, "_test.go");
  try {
    parse_file(*file);
    unit.file = std::move(file);
  } catch (const ParseError& e) {
    ParseDiagnostic d;
    d.file = rel;
    if (!file->line_starts.empty()) {
      LineCol lc = file->position(std::min<uint32_t>(
          e.offset(), static_cast<uint32_t>(file->source.size())));
      d.line = lc.line;
      d.column = lc.column;
    }
    d.message = e.what();
    unit.diagnostic = std::move(d);
  }
  return unit;
}

}  // namespace

std::unique_ptr<SourceFile> parse_source(std::string path, std::string source) {
  auto file = std::make_unique<SourceFile>();
  file->path = std::move(path);
  file->source = std::move(source);
  file->is_test = ends_with(file->path, "_test.go");
  parse_file(*file);
  return file;
}

SourceTree parse_tree(const fs::path& root, const ParseOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw UsageError("analysis root does not exist or is not a directory: " +
                     root.string());
  }

  std::vector<std::string> go_files;
  std::map<std::string, std::string> modules;  // dir -> module path
  for (auto it = fs::recursive_directory_iterator(
           root, fs::directory_options::skip_permission_denied, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    const fs::path& p = it->path();
    const std::string rel = fs::relative(p, root, ec).generic_string();
    const std::string name = p.filename().string();
    if (it->is_directory(ec)) {
      if (!name.empty() && (name[0] == '.' || name[0] == '_')) {
        it.disable_recursion_pending();
      }
      continue;
    }
    if (name == "go.mod") {
      if (auto text = read_file(p)) {
        if (auto mod = module_of(*text)) modules[parent_dir(rel)] = *mod;
      }
      continue;
    }
    const bool included = std::any_of(
        options.include.begin(), options.include.end(),
        [&](const std::string& g) { return glob_match(g, rel); });
    const bool excluded = std::any_of(
        options.exclude.begin(), options.exclude.end(),
        [&](const std::string& g) { return glob_match(g, rel); });
    if (included && !excluded && ends_with(rel, ".go")) go_files.push_back(rel);
  }
  std::sort(go_files.begin(), go_files.end());

  std::vector<ParsedUnit> units(go_files.size());
  std::vector<ParseDiagnostic> read_failures;
  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<size_t>(1, go_files.size()));
  std::atomic<size_t> next_index{0};
  auto worker = [&] {
    for (size_t i = next_index++; i < go_files.size(); i = next_index++) {
      auto text = read_file(root / go_files[i]);
      if (!text) {
        ParsedUnit u;
        u.diagnostic = ParseDiagnostic{go_files[i], 0, 0, "unreadable file"};
        units[i] = std::move(u);
        continue;
      }
      units[i] = parse_one(go_files[i], std::move(*text));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto module_for_dir = [&](const std::string& dir) -> std::pair<std::string, std::string> {
    std::string d = dir;
    while (true) {
      if (auto it = modules.find(d); it != modules.end()) return {d, it->second};
      if (d.empty()) break;
      d = parent_dir(d);
    }
    return {std::string(), std::string()};
  };

  SourceTree tree;
  tree.root = root;
  // Key: (import path). Files of one directory split by package clause and
  // by whether they are test files.
  std::map<std::string, std::unique_ptr<Package>> by_path;
  for (auto& u : units) {
    if (u.diagnostic) {
      tree.diagnostics.push_back(std::move(*u.diagnostic));
      continue;
    }
    SourceFile& f = *u.file;
    const std::string dir = parent_dir(f.path);
    auto [mod_dir, mod_path] = module_for_dir(dir);
    std::string import_path;
    if (!mod_path.empty()) {
      std::string sub = dir.substr(mod_dir.size());
      if (!sub.empty() && sub[0] == '/') sub = sub.substr(1);
      if (!mod_dir.empty() && dir.size() == mod_dir.size()) sub.clear();
      import_path = sub.empty() ? mod_path : mod_path + "/" + sub;
    } else {
      import_path = dir.empty() ? std::string(".") : dir;
    }
    if (f.is_test) {
      import_path += ends_with(f.package_name, "_test") ? "_test" : " [test]";
    }
    auto& pkg = by_path[import_path];
    if (!pkg) {
      pkg = std::make_unique<Package>();
      pkg->import_path = import_path;
      pkg->name = f.package_name;
      pkg->dir = dir;
      pkg->is_test = f.is_test;
    } else if (pkg->name != f.package_name) {
      tree.diagnostics.push_back(
          {f.path, 1, 1,
           "package " + f.package_name + " conflicts with package " + pkg->name +
               " in the same directory; file skipped"});
      continue;
    }
    f.package = pkg.get();
    pkg->files.push_back(std::move(u.file));
  }
  for (auto& [path, pkg] : by_path) {
    if (!pkg->files.empty()) tree.packages.push_back(std::move(pkg));
  }
  std::sort(tree.diagnostics.begin(), tree.diagnostics.end(),
            [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
              return std::tie(a.file, a.line, a.column, a.message) <
                     std::tie(b.file, b.line, b.column, b.message);
            });
  if (tree.packages.empty()) {
    throw AnalysisError("empty tree: no parseable Go files under " + root.string());
  }
  return tree;
}

}  // namespace chainlint::go
