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

#include <functional>

#include "common/errors.hpp"
#include "source/model.hpp"
#include "source/tree.hpp"
#include "test_support.hpp"

using namespace chainlint;
using chainlint::go::NodeKind;
using chainlint::go::TypeClass;

namespace {

go::SourceModel bind_dir(const std::filesystem::path& root, unsigned threads = 1) {
  go::ParseOptions o;
  o.threads = threads;
  return go::bind_types(go::parse_tree(root, o));
}

go::SourceModel bind_sources(const std::map<std::string, std::string>& files) {
  testing::TempDir dir;
  dir.write("go.mod", "module example.com/t\n\ngo 1.21\n");
  for (const auto& [rel, text] : files) dir.write(rel, text);
  return bind_dir(dir.path());
}

void walk(const go::Node* n, const std::function<void(const go::Node*)>& f) {
  if (!n) return;
  f(n);
  for (const go::Node* k : n->kids) walk(k, f);
}

// Identifier uses named `name` inside the body of function `func_name`.
std::vector<const go::Node*> uses(const go::SourceModel& m, const std::string& func_name,
                                  const std::string& name) {
  std::vector<const go::Node*> out;
  for (const auto& f : m.funcs()) {
    if (f.id.name != func_name) continue;
    walk(f.body(), [&](const go::Node* n) {
      if (n->kind == NodeKind::Ident && n->text == name) out.push_back(n);
    });
  }
  return out;
}

// Structural dump of the whole model: node kinds, ranges and bound types.
std::string dump(const go::SourceModel& m) {
  std::ostringstream os;
  for (const auto& pkg : m.tree().packages) {
    os << "package " << pkg->import_path << '\n';
    for (const auto& file : pkg->files) {
      os << "file " << file->path << '\n';
      walk(file->root, [&](const go::Node* n) {
        os << go::node_kind_name(n->kind) << ' ' << n->begin << ' ' << n->end << ' '
           << go::type_class_name(m.type_of(n).classification) << ' '
           << go::type_string(n->type) << '\n';
      });
    }
  }
  for (const auto& f : m.funcs()) os << f.id.key() << '\n';
  return os.str();
}

}  // namespace

TEST_SUITE("source-model") {
  TEST_CASE("missing root is a usage error") {
    CHECK_THROWS_AS(go::parse_tree("/nonexistent/chainlint/root"), UsageError);
  }

  TEST_CASE("empty directory is an empty-tree error") {
    testing::TempDir dir;
    try {
      go::parse_tree(dir.path());
      FAIL("expected AnalysisError");
    } catch (const AnalysisError& e) {
      CHECK(std::string(e.what()).find("empty tree") != std::string::npos);
    }
  }

  TEST_CASE("three files in two packages") {
    const go::SourceTree t = go::parse_tree(testing::fixture("threefiles"));
    REQUIRE(t.packages.size() == 2);
    CHECK(t.diagnostics.empty());
    CHECK(t.file_count() == 3);
    CHECK(t.packages[0]->import_path == "example.com/threefiles/alpha");
    CHECK(t.packages[0]->files.size() == 2);
    CHECK(t.packages[1]->import_path == "example.com/threefiles/beta");
  }

  TEST_CASE("malformed file becomes a diagnostic") {
    const go::SourceTree t = go::parse_tree(testing::fixture("malformed"));
    REQUIRE(t.diagnostics.size() == 1);
    CHECK(t.diagnostics[0].file == "bad/broken.go");
    CHECK(t.diagnostics[0].line == 3);
    REQUIRE(t.packages.size() == 1);
    CHECK(t.packages[0]->import_path == "example.com/malformed/good");
    CHECK(t.packages[0]->files.size() == 2);
  }

  TEST_CASE("include and exclude globs") {
    go::ParseOptions o;
    o.exclude = {"beta/**"};
    const go::SourceTree t = go::parse_tree(testing::fixture("threefiles"), o);
    REQUIRE(t.packages.size() == 1);
    CHECK(t.packages[0]->import_path == "example.com/threefiles/alpha");
    o.exclude.clear();
    o.include = {"alpha/two.go"};
    CHECK(go::parse_tree(testing::fixture("threefiles"), o).file_count() == 1);
  }

  TEST_CASE("glob matching") {
    CHECK(go::glob_match("**/*.go", "a.go"));
    CHECK(go::glob_match("**/*.go", "x/y/a.go"));
    CHECK(go::glob_match("vendor/**", "vendor/a/b.go"));
    CHECK_FALSE(go::glob_match("vendor/**", "x/vendor.go"));
    CHECK(go::glob_match("**/testdata/**", "x/testdata/a.go"));
    CHECK_FALSE(go::glob_match("*.go", "x/a.go"));
    CHECK(go::glob_match("x/[ab].go", "x/b.go"));
    CHECK_FALSE(go::glob_match("x/[!ab].go", "x/b.go"));
    CHECK(go::glob_match("x/?.go", "x/c.go"));
  }

  TEST_CASE("test files form test packages") {
    const auto m = bind_sources({
        {"p/p.go", "package p\n\nfunc F() {}\n"},
        {"p/p_test.go", "package p\n\nfunc TestF() { F() }\n"},
    });
    REQUIRE(m.tree().packages.size() == 2);
    CHECK_FALSE(m.tree().packages[0]->is_test);
    CHECK(m.tree().packages[1]->is_test);
  }

  TEST_CASE("map made locally and ranged over classifies as MapType") {
    const auto m = bind_sources({{"p/p.go",
                                  "package p\n\nfunc F() {\n\tm := make(map[string]int64)\n"
                                  "\tfor k := range m {\n\t\t_ = k\n\t}\n}\n"}});
    const auto m_uses = uses(m, "F", "m");
    REQUIRE(m_uses.size() == 2);
    const go::Node* operand = m_uses[1];
    REQUIRE(operand->parent->kind == NodeKind::RangeStmt);
    const go::TypeRef t = m.type_of(operand);
    CHECK(t.classification == TypeClass::Map);
    CHECK(t.key == "string");
    CHECK(t.value == "int64");
  }

  TEST_CASE("uintptr parameter classifies as PlatformDependent") {
    const auto m = bind_sources({{"p/p.go", "package p\n\nfunc F(p uintptr) {\n\t_ = p\n}\n"}});
    const auto p_uses = uses(m, "F", "p");
    REQUIRE(p_uses.size() == 1);
    const go::TypeRef t = m.type_of(p_uses[0]);
    CHECK(t.classification == TypeClass::PlatformDependent);
    CHECK(t.name == "uintptr");
  }

  TEST_CASE("value from a function outside the tree is Unknown") {
    const auto m = bind_sources(
        {{"p/p.go",
          "package p\n\nimport \"example.org/ext\"\n\nfunc F() {\n\tx := ext.Load()\n\t_ = x\n}\n"}});
    const auto x_uses = uses(m, "F", "x");
    REQUIRE(x_uses.size() == 2);
    CHECK(m.type_of(x_uses[1]).classification == TypeClass::Unknown);
  }

  TEST_CASE("named types, floats and strings") {
    const auto m = bind_sources({{"p/p.go",
                                  "package p\n\ntype Prices map[string]int64\ntype Ratio float64\n\n"
                                  "func F(p Prices, r Ratio, s string, c complex128) {\n"
                                  "\t_, _, _, _ = p, r, s, c\n}\n"}});
    CHECK(m.type_of(uses(m, "F", "p")[0]).classification == TypeClass::Map);
    CHECK(m.type_of(uses(m, "F", "r")[0]).classification == TypeClass::Float);
    CHECK(m.type_of(uses(m, "F", "s")[0]).classification == TypeClass::String);
    CHECK(m.type_of(uses(m, "F", "c")[0]).classification == TypeClass::Float);
  }

  TEST_CASE("struct fields and composite literals bind") {
    const auto m = bind_sources({{"p/p.go",
                                  "package p\n\ntype K struct {\n\tm map[string]bool\n}\n\n"
                                  "func F() {\n\tk := K{}\n\tfor a := range k.m {\n\t\t_ = a\n\t}\n}\n"}});
    bool found = false;
    walk(m.funcs()[0].body(), [&](const go::Node* n) {
      if (n->kind == NodeKind::RangeStmt) {
        found = true;
        CHECK(m.type_of(n->kids[2]).classification == TypeClass::Map);
      }
    });
    CHECK(found);
  }

  TEST_CASE("build-constraint twins stay distinct") {
    const auto m = bind_sources({
        {"p/a_linux.go", "//go:build linux\n\npackage p\n\nfunc F() {}\n"},
        {"p/a_darwin.go", "//go:build darwin\n\npackage p\n\nfunc F() {}\n"},
    });
    REQUIRE(m.funcs().size() == 2);
    CHECK(m.funcs()[0].id != m.funcs()[1].id);
    CHECK(m.funcs()[0].id.qualified_name() == m.funcs()[1].id.qualified_name());
  }

  TEST_CASE("syntax kinds") {
    const auto m = bind_sources({{"p/p.go",
                                  "package p\n\nconst C = 1\n\nfunc F(x int64) {\n"
                                  "\tvar y = float64(x)\n\tgo F(1)\n\tdefer F(2)\n\tpanic(y)\n}\n"}});
    std::map<go::SyntaxKind, int> seen;
    for (const auto& pkg : m.tree().packages) {
      for (const auto& f : pkg->files) {
        walk(f->root, [&](const go::Node* n) { seen[m.syntax_kind(n)]++; });
      }
    }
    CHECK(seen[go::SyntaxKind::ConstDecl] == 1);
    CHECK(seen[go::SyntaxKind::VarDecl] == 1);
    CHECK(seen[go::SyntaxKind::SpawnStmt] == 1);
    CHECK(seen[go::SyntaxKind::DeferStmt] == 1);
    CHECK(seen[go::SyntaxKind::PanicCall] == 1);
    CHECK(seen[go::SyntaxKind::ConversionExpr] == 1);
    CHECK(seen[go::SyntaxKind::FieldDecl] == 1);
    CHECK(seen[go::SyntaxKind::CallExpr] == 2);
  }

  TEST_CASE("determinism across runs and parser thread counts") {
    const std::string a = dump(bind_dir(testing::corpus(), 1));
    const std::string b = dump(bind_dir(testing::corpus(), 8));
    const std::string c = dump(bind_dir(testing::corpus(), 1));
    CHECK(a == b);
    CHECK(a == c);
  }

  TEST_CASE("position fidelity and monotone positions") {
    const auto m = bind_dir(testing::corpus());
    size_t checked = 0;
    for (const auto& pkg : m.tree().packages) {
      for (const auto& file : pkg->files) {
        walk(file->root, [&](const go::Node* n) {
          REQUIRE(n->begin <= n->end);
          REQUIRE(n->end <= file->source.size());
          if (n->kind == NodeKind::Ident || n->kind == NodeKind::BasicLit) {
            CHECK(file->text_of(*n) == n->text);
            ++checked;
          }
          uint32_t prev = n->begin;
          for (const go::Node* k : n->kids) {
            if (!k) continue;
            INFO(go::node_kind_name(n->kind) << " > " << go::node_kind_name(k->kind));
            CHECK(k->parent == n);
            // A FuncDecl's FuncType spans from the `func` keyword.
            if (k->kind != NodeKind::FuncType) CHECK(k->begin >= prev);
            CHECK(k->end <= n->end);
            prev = k->begin;
          }
        });
      }
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("every function is positioned inside its file") {
    const auto m = bind_dir(testing::corpus());
    for (const auto& f : m.funcs()) {
      CHECK(f.position.line >= 1);
      CHECK(f.file->text_of(*f.node).substr(0, 4) == "func");
      CHECK(m.func_of(f.node) == &f);
    }
  }
}
