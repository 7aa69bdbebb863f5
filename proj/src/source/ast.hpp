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

// Syntax tree for Go source files.
//
// Every node records the half-open byte range [begin, end) it covers in its
// file. Children are stored in a fixed, kind-specific layout; optional
// children are present as nullptr so that positional access stays stable:
//
//   File            [package-name, decls...]
//   CompositeLit    [type|null, elements...]
//   KeyValueExpr    [key, value]
//   FuncLit         [FuncType, BlockStmt]
//   ParenExpr       [x]
//   SelectorExpr    [x, sel]
//   IndexExpr       [x, index...]
//   SliceExpr       [x, lo|null, hi|null, max|null]
//   TypeAssertExpr  [x, type|null]          (null for ".(type)")
//   CallExpr        [fun, args...]          split=1 when the call has "..."
//   StarExpr        [x]
//   UnaryExpr       [x]                     op = operator
//   BinaryExpr      [x, y]                  op = operator
//   ArrayType       [len|null, elem]        len null for "[...]T"
//   SliceType       [elem]
//   EllipsisType    [elem]
//   MapType         [key, value]
//   ChanType        [elem]                  split = direction (0 both, 1 send, 2 recv)
//   FuncType        [typeparams|null, params, results|null]
//   StructType      [Field...]
//   InterfaceType   [Field...]
//   FieldList       [Field...]
//   Field           [names..., type, tag|null]   split = number of names
//   AssignStmt      [lhs..., rhs...]        split = lhs count, op = operator
//   IfStmt          [init|null, cond, body, else|null]
//   SwitchStmt      [init|null, tag|null, body]
//   TypeSwitchStmt  [init|null, assign, body]
//   CaseClause      [list..., stmts...]     split = list count, op=Default for default
//   CommClause      [comm|null, stmts...]   op=Default for default
//   ForStmt         [init|null, cond|null, post|null, body]
//   RangeStmt       [key|null, value|null, x, body]   op = Define/Assign/Eof
//   LabeledStmt     [label, stmt]
//   BranchStmt      [label|null]            op = keyword
//   GenDecl         [specs...]              op = Import/Const/Var/Type
//   ImportSpec      [name|null, path]
//   ValueSpec       [names..., type|null, values...]  split = names count
//   TypeSpec        [name, typeparams|null, type]     op=Assign for aliases
//   FuncDecl        [recv|null, name, FuncType, body|null]

#ifndef CHAINLINT_SOURCE_AST_HPP_
#define CHAINLINT_SOURCE_AST_HPP_

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "source/token.hpp"

namespace chainlint::go {

enum class NodeKind : uint8_t {
  File,
  Bad,
  Ident,
  BasicLit,
  CompositeLit,
  KeyValueExpr,
  FuncLit,
  ParenExpr,
  SelectorExpr,
  IndexExpr,
  SliceExpr,
  TypeAssertExpr,
  CallExpr,
  StarExpr,
  UnaryExpr,
  BinaryExpr,
  ArrayType,
  SliceType,
  EllipsisType,
  MapType,
  ChanType,
  FuncType,
  StructType,
  InterfaceType,
  FieldList,
  Field,
  BlockStmt,
  ExprStmt,
  AssignStmt,
  IncDecStmt,
  SendStmt,
  GoStmt,
  DeferStmt,
  ReturnStmt,
  BranchStmt,
  IfStmt,
  SwitchStmt,
  TypeSwitchStmt,
  CaseClause,
  SelectStmt,
  CommClause,
  ForStmt,
  RangeStmt,
  LabeledStmt,
  DeclStmt,
  EmptyStmt,
  GenDecl,
  ImportSpec,
  ValueSpec,
  TypeSpec,
  FuncDecl,
};

std::string_view node_kind_name(NodeKind k);

// The construct vocabulary detectors are written against. Everything that is
// not one of these collapses to Other (children are kept).
enum class SyntaxKind : uint8_t {
  CallExpr,
  RangeStmt,
  SpawnStmt,
  SelectStmt,
  DeferStmt,
  PanicCall,
  BasicLiteral,
  BinaryExpr,
  SelectorExpr,
  TypeSpelling,
  VarDecl,
  ConstDecl,
  FieldDecl,
  ConversionExpr,
  ImportDecl,
  Other,
};

std::string_view syntax_kind_name(SyntaxKind k);

struct Type;
struct LocalVar;
struct Package;
struct SourceFile;

// What an identifier (or the selector part of X.Sel) refers to after binding.
enum class RefKind : uint8_t {
  None,
  Local,            // local variable or parameter
  PackageFunc,      // top-level function in ref_pkg
  PackageVar,       // top-level variable in ref_pkg
  PackageConst,     // top-level constant in ref_pkg
  TypeName,         // a type (in-tree, local or external)
  Import,           // package qualifier; ref_path = import path
  Builtin,          // builtin function such as len or panic
  UniverseType,     // predeclared type
  UniverseValue,    // true, false, nil, iota
  Method,           // method of the in-tree named type `recv`
  InterfaceMethod,  // method of the in-tree interface `recv`
  Field,            // struct field (type of the field in Node::type)
  ExternalMember,   // member of an out-of-tree package or type; ref_path set
};

struct Node {
  NodeKind kind = NodeKind::Bad;
  Tok op = Tok::Eof;
  uint32_t split = 0;
  uint32_t begin = 0;
  uint32_t end = 0;
  std::string_view text;  // identifiers and literals
  std::vector<Node*> kids;
  Node* parent = nullptr;

  // Binding results.
  const Type* type = nullptr;
  bool is_type = false;        // node denotes a type rather than a value
  bool is_conversion = false;  // CallExpr whose callee is a type
  RefKind ref = RefKind::None;
  const LocalVar* local = nullptr;
  const Package* ref_pkg = nullptr;
  const Type* recv = nullptr;
  const Node* ref_decl = nullptr;  // defining identifier of the referent
  std::string_view ref_path;

  Node* kid(size_t i) const { return i < kids.size() ? kids[i] : nullptr; }
};

struct LineCol {
  uint32_t line = 0;    // 1-based
  uint32_t column = 0;  // 1-based, in bytes
};

struct ImportRef {
  std::string name;  // local name ("_" and "." preserved)
  std::string path;
  const Node* spec = nullptr;
};

struct SourceFile {
  std::string path;  // relative to the tree root, '/' separated
  std::string source;
  std::deque<Node> arena;
  Node* root = nullptr;
  std::vector<Comment> comments;
  std::vector<uint32_t> line_starts;
  std::string package_name;
  std::vector<ImportRef> imports;
  bool is_test = false;
  const Package* package = nullptr;

  SourceFile() = default;
  SourceFile(const SourceFile&) = delete;
  SourceFile& operator=(const SourceFile&) = delete;

  LineCol position(uint32_t offset) const;
  std::string_view text_of(const Node& n) const {
    return std::string_view(source).substr(n.begin, n.end - n.begin);
  }
};

}  // namespace chainlint::go

#endif  // CHAINLINT_SOURCE_AST_HPP_
