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

// Lightweight, intra-tree type binding over a parsed SourceTree.
//
// Binding is flow-insensitive: declared types, composite literal types,
// builtin constructors (make/new) and single-assignment inference for local
// variables. Anything that depends on code outside the tree is Unknown, and
// detectors never fire on Unknown. After bind_types returns, the model is
// immutable and may be shared read-only across threads.

#ifndef CHAINLINT_SOURCE_MODEL_HPP_
#define CHAINLINT_SOURCE_MODEL_HPP_

#include <compare>
#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "source/ast.hpp"
#include "source/tree.hpp"

namespace chainlint::go {

enum class TypeKind : uint8_t {
  Unknown,
  Basic,
  Named,
  Pointer,
  Slice,
  Array,
  Map,
  Chan,
  Func,
  Struct,
  Interface,
  Tuple,
};

struct Type;

struct TypeField {
  std::string_view name;
  const Type* type = nullptr;
  bool embedded = false;
  const Node* decl = nullptr;  // defining identifier, or the embedded type expr
};

struct Type {
  TypeKind kind = TypeKind::Unknown;
  std::string name;      // Basic spelling, or the Named type's name
  std::string pkg_path;  // Named: import path ("" for predeclared)
  const Type* elem = nullptr;  // Pointer/Slice/Array/Chan element, Map value
  const Type* key = nullptr;   // Map key
  std::vector<const Type*> params;
  std::vector<const Type*> results;  // Func results; Tuple members
  const Node* decl = nullptr;        // Named: TypeSpec; Struct/Interface/Func: literal
  const SourceFile* file = nullptr;  // file holding decl
  const Package* pkg = nullptr;      // in-tree owner of a Named type
  bool untyped = false;              // untyped constant ("untyped int", ...)
  // Struct fields, or interface methods (embedded = embedded interface).
  std::vector<TypeField> fields;
  const Type* under = nullptr;  // Named in-tree: resolved underlying type
};

enum class TypeClass : uint8_t {
  Unknown,
  Map,
  Float,  // floating point and complex
  PlatformDependent,
  Named,
  String,
  Other,
};

std::string_view type_class_name(TypeClass c);

struct TypeRef {
  TypeClass classification = TypeClass::Unknown;
  std::string import_path;  // Named
  std::string name;         // Named name, or the int/uint/uintptr spelling
  std::string key;          // Map key type
  std::string value;        // Map value type
};

std::string type_string(const Type* t);

struct LocalVar {
  std::string_view name;
  const Type* type = nullptr;
  const Node* decl = nullptr;  // defining identifier
  const Node* init = nullptr;  // initializer, when declared with one value each
  int reassignments = 0;
  bool is_param = false;
};

// Stable identity of a function declaration. The byte offset keeps
// build-constraint variants of the same function distinct.
struct FuncId {
  std::string import_path;
  std::string receiver;  // receiver base type name, "" for plain functions
  std::string name;
  std::string file;
  uint32_t offset = 0;

  auto operator<=>(const FuncId&) const = default;
  bool operator==(const FuncId&) const = default;

  // "Recv.Name" or "Name".
  std::string qualified_name() const;
  // "importPath.Recv.Name".
  std::string display() const;
  // Fully unique form including file and offset.
  std::string key() const;
};

struct FuncDecl {
  FuncId id;
  const Node* node = nullptr;  // NodeKind::FuncDecl
  const SourceFile* file = nullptr;
  const Package* pkg = nullptr;
  LineCol position;

  std::string_view name() const { return node->kids[1]->text; }
  bool is_method() const { return node->kids[0] != nullptr; }
  bool is_test() const { return file->is_test; }
  const Node* body() const { return node->kids[3]; }
  const Node* signature() const { return node->kids[2]; }
};

// Result of looking a selector up on a value's type.
struct Member {
  RefKind kind = RefKind::None;  // Field, Method, InterfaceMethod, ExternalMember
  const Type* type = nullptr;    // field type or method signature
  const Type* owner = nullptr;   // named type / interface declaring the member
  const Node* decl = nullptr;    // defining identifier
};

class Binder;

class SourceModel {
 public:
  SourceModel(const SourceModel&) = delete;
  SourceModel& operator=(const SourceModel&) = delete;
  SourceModel(SourceModel&&) = default;
  SourceModel& operator=(SourceModel&&) = default;
  ~SourceModel() = default;

  const SourceTree& tree() const { return tree_; }

  // All function declarations, sorted by id.
  const std::vector<FuncDecl>& funcs() const { return funcs_; }
  const FuncDecl* func_of(const Node* func_decl_node) const;
  // Innermost enclosing FuncDecl of any node (nullptr at package level).
  const FuncDecl* enclosing_func(const Node* n) const;
  const SourceFile* file_of(const Node* n) const;

  std::vector<const FuncDecl*> package_funcs(const Package* pkg,
                                             std::string_view name) const;
  // Methods declared with receiver type `type_name` (value or pointer).
  std::vector<const FuncDecl*> methods(const Package* pkg,
                                       std::string_view type_name,
                                       std::string_view method) const;
  std::vector<const FuncDecl*> all_methods(const Package* pkg,
                                           std::string_view type_name) const;

  // In-tree named (non-alias) type declarations across the tree.
  struct NamedTypeDecl {
    const Package* pkg;
    const SourceFile* file;
    const Node* spec;  // TypeSpec
    const Type* type;  // the Named type
  };
  const std::vector<NamedTypeDecl>& named_types() const { return named_types_; }

  const Type* underlying(const Type* t) const;
  // Signature of a declared function or method.
  const Type* signature_of(const FuncDecl& f) const;
  Member lookup_member(const Type* t, std::string_view name) const;

  // Method names an interface requires that are known in-tree. `complete` is
  // false when it embeds an out-of-tree interface.
  std::vector<std::string> interface_methods(const Type* iface, bool* complete) const;
  // Method names of a named type, including promoted ones.
  std::vector<std::string> method_set(const Type* named) const;
  // Declarations providing `method` for a named type, following embedding.
  std::vector<const FuncDecl*> method_decls(const Type* named,
                                            std::string_view method) const;

  TypeRef classify(const Type* t) const;
  TypeRef type_of(const Node* n) const { return classify(n ? n->type : nullptr); }

  SyntaxKind syntax_kind(const Node* n) const;

  const Type* universe(std::string_view name) const;

 private:
  friend class Binder;
  friend SourceModel bind_types(SourceTree tree);
  SourceModel() = default;

  SourceTree tree_;
  std::deque<Type> types_;
  std::deque<LocalVar> locals_;
  std::vector<FuncDecl> funcs_;
  std::unordered_map<const Node*, size_t> func_index_;
  std::unordered_map<const Node*, const SourceFile*> file_roots_;
  // (package, receiver type name) -> method name -> decls
  std::map<std::pair<const Package*, std::string>,
           std::map<std::string, std::vector<const FuncDecl*>>>
      methods_;
  std::map<std::pair<const Package*, std::string>, std::vector<const FuncDecl*>>
      package_funcs_;
  std::vector<NamedTypeDecl> named_types_;
  std::unordered_map<const Node*, const Type*> signatures_;
  std::unordered_map<std::string, const Type*> universe_;
};

SourceModel bind_types(SourceTree tree);

}  // namespace chainlint::go

#endif  // CHAINLINT_SOURCE_MODEL_HPP_
