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

// Shared helpers for the unit suites.

#ifndef CHAINLINT_TESTS_TEST_SUPPORT_HPP_
#define CHAINLINT_TESTS_TEST_SUPPORT_HPP_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "config/config.hpp"
#include "pipeline/pipeline.hpp"

namespace testing {

namespace fs = std::filesystem;

inline fs::path fixture(const std::string& name) { return fs::path(CHAINLINT_FIXTURES) / name; }
inline fs::path corpus() { return fs::path(CHAINLINT_CORPUS); }

// Directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("chainlint-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

  void write(const std::string& rel, const std::string& text) const {
    const fs::path p = path_ / rel;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
  }

 private:
  fs::path path_;
};

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void copy_tree(const fs::path& from, const fs::path& to) {
  fs::copy(from, to, fs::copy_options::recursive | fs::copy_options::overwrite_existing);
}

inline chainlint::config::RunConfig config_for(const fs::path& root) {
  chainlint::config::RunConfig c;
  c.root = root;
  c.threads = 1;
  return c;
}

inline chainlint::pipeline::Analysis analyze_dir(const fs::path& root) {
  return chainlint::pipeline::analyze(config_for(root));
}

// Writes `files` (plus a go.mod for example.com/t) and analyzes them with
// the default configuration.
inline chainlint::pipeline::Analysis analyze_sources(const std::map<std::string, std::string>& files,
                                                     chainlint::config::RunConfig config = {}) {
  TempDir dir;
  dir.write("go.mod", "module example.com/t\n\ngo 1.21\n");
  for (const auto& [rel, text] : files) dir.write(rel, text);
  config.root = dir.path();
  config.threads = 1;
  return chainlint::pipeline::analyze(config);
}

}  // namespace testing

#endif  // CHAINLINT_TESTS_TEST_SUPPORT_HPP_
