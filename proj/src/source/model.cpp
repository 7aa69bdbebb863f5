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

#include "source/model.hpp"

#include <set>

namespace chainlint::go {

std::string_view type_class_name(TypeClass c) {
  switch (c) {
    case TypeClass::Unknown: return "Unknown";
    case TypeClass::Map: return "MapType";
    case TypeClass::Float: return "FloatType";
    case TypeClass::PlatformDependent: return "PlatformDependent";
    case TypeClass::Named: return "NamedType";
    case TypeClass::String: return "StringType";
    case TypeClass::Other: return "other";
  }
  return "?";
}

std::string type_string(const Type* t) {
  if (!t) return "?";
  switch (t->kind) {
    case TypeKind::Unknown: return "?";
    case TypeKind::Basic: return t->name;
    case TypeKind::Named: {
      if (t->pkg_path.empty()) return t->name;
      auto slash = t->pkg_path.rfind('/');
      std::string short_pkg =
          slash == std::string::npos ? t->pkg_path : t->pkg_path.substr(slash + 1);
      return short_pkg + "." + t->name;
    }
    case TypeKind::Pointer: return "*" + type_string(t->elem);
    case TypeKind::Slice: return "[]" + type_string(t->elem);
    case TypeKind::Array: return "[...]" + type_string(t->elem);
    case TypeKind::Map: return "map[" + type_string(t->key) + "]" + type_string(t->elem);
    case TypeKind::Chan: return "chan " + type_string(t->elem);
    case TypeKind::Func: {
      std::string s = "func(";
      for (size_t i = 0; i < t->params.size(); ++i) {
        if (i) s += ", ";
        s += type_string(t->params[i]);
      }
      s += ")";
      if (t->results.size() == 1) s += " " + type_string(t->results[0]);
      if (t->results.size() > 1) {
        s += " (";
        for (size_t i = 0; i < t->results.size(); ++i) {
          if (i) s += ", ";
          s += type_string(t->results[i]);
        }
        s += ")";
      }
      return s;
    }
    case TypeKind::Struct: return "struct{...}";
    case TypeKind::Interface: return t->fields.empty() ? "interface{}" : "interface{...}";
    case TypeKind::Tuple: {
      std::string s = "(";
      for (size_t i = 0; i < t->results.size(); ++i) {
        if (i) s += ", ";
        s += type_string(t->results[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

std::string FuncId::qualified_name() const {
  return receiver.empty() ? name : receiver + "." + name;
}

std::string FuncId::display() const { return import_path + "." + qualified_name(); }

std::string FuncId::key() const {
  return display() + "@" + file + ":" + std::to_string(offset);
}

const FuncDecl* SourceModel::func_of(const Node* n) const {
  auto it = func_index_.find(n);
  return it == func_index_.end() ? nullptr : &funcs_[it->second];
}

const FuncDecl* SourceModel::enclosing_func(const Node* n) const {
  for (; n; n = n->parent) {
    if (n->kind == NodeKind::FuncDecl) return func_of(n);
  }
  return nullptr;
}

const SourceFile* SourceModel::file_of(const Node* n) const {
  while (n && n->parent) n = n->parent;
  auto it = file_roots_.find(n);
  return it == file_roots_.end() ? nullptr : it->second;
}

std::vector<const FuncDecl*> SourceModel::package_funcs(const Package* pkg,
                                                        std::string_view name) const {
  auto it = package_funcs_.find({pkg, std::string(name)});
  return it == package_funcs_.end() ? std::vector<const FuncDecl*>{} : it->second;
}

std::vector<const FuncDecl*> SourceModel::methods(const Package* pkg,
                                                  std::string_view type_name,
                                                  std::string_view method) const {
  auto it = methods_.find({pkg, std::string(type_name)});
  if (it == methods_.end()) return {};
  auto m = it->second.find(std::string(method));
  return m == it->second.end() ? std::vector<const FuncDecl*>{} : m->second;
}

std::vector<const FuncDecl*> SourceModel::all_methods(const Package* pkg,
                                                      std::string_view type_name) const {
  std::vector<const FuncDecl*> out;
  auto it = methods_.find({pkg, std::string(type_name)});
  if (it == methods_.end()) return out;
  for (const auto& [name, decls] : it->second) out.insert(out.end(), decls.begin(), decls.end());
  return out;
}

const Type* SourceModel::underlying(const Type* t) const {
  if (t && t->kind == TypeKind::Named) return t->under;
  return t;
}

const Type* SourceModel::signature_of(const FuncDecl& f) const {
  auto it = signatures_.find(f.node);
  return it == signatures_.end() ? nullptr : it->second;
}

const Type* SourceModel::universe(std::string_view name) const {
  auto it = universe_.find(std::string(name));
  return it == universe_.end() ? nullptr : it->second;
}

namespace {

constexpr int kMaxEmbedDepth = 6;

const Type* deref(const Type* t) {
  return t && t->kind == TypeKind::Pointer ? t->elem : t;
}

}  // namespace

Member SourceModel::lookup_member(const Type* t, std::string_view name) const {
  struct Walker {
    const SourceModel& m;
    std::string_view name;
    Member find(const Type* t, int depth) const {
      t = deref(t);
      if (!t || depth > kMaxEmbedDepth) return {};
      const Type* u = t;
      if (t->kind == TypeKind::Named) {
        if (t->pkg) {
          auto ms = m.methods(t->pkg, t->name, name);
          if (!ms.empty()) {
            return {RefKind::Method, m.signature_of(*ms.front()), t, ms.front()->node->kids[1]};
          }
        } else if (!t->pkg_path.empty()) {
          return {RefKind::ExternalMember, nullptr, t, nullptr};
        }
        u = t->under;
      }
      if (!u) return {};
      if (u->kind == TypeKind::Struct) {
        for (const TypeField& f : u->fields) {
          if (f.name == name) return {RefKind::Field, f.type, t, f.decl};
        }
        for (const TypeField& f : u->fields) {
          if (!f.embedded) continue;
          Member r = find(f.type, depth + 1);
          if (r.kind != RefKind::None) return r;
        }
      } else if (u->kind == TypeKind::Interface) {
        for (const TypeField& f : u->fields) {
          if (!f.embedded && f.name == name) return {RefKind::InterfaceMethod, f.type, t, f.decl};
        }
        for (const TypeField& f : u->fields) {
          if (!f.embedded) continue;
          Member r = find(f.type, depth + 1);
          if (r.kind == RefKind::InterfaceMethod) return {r.kind, r.type, t, r.decl};
          if (r.kind == RefKind::ExternalMember) return r;
        }
      }
      return {};
    }
  };
  return Walker{*this, name}.find(t, 0);
}

std::vector<std::string> SourceModel::interface_methods(const Type* iface, bool* complete) const {
  std::set<std::string> names;
  bool ok = true;
  struct Walker {
    std::set<std::string>& names;
    bool& ok;
    void walk(const Type* t, int depth) {
      if (!t || depth > kMaxEmbedDepth) {
        ok = false;
        return;
      }
      if (t->kind == TypeKind::Named) {
        if (!t->pkg && !t->pkg_path.empty()) {
          ok = false;
          return;
        }
        t = t->under;
      }
      if (!t || t->kind != TypeKind::Interface) {
        ok = false;
        return;
      }
      for (const TypeField& f : t->fields) {
        if (f.embedded) {
          walk(f.type, depth + 1);
        } else {
          names.insert(std::string(f.name));
        }
      }
    }
  };
  Walker{names, ok}.walk(iface, 0);
  if (complete) *complete = ok;
  return {names.begin(), names.end()};
}

std::vector<std::string> SourceModel::method_set(const Type* named) const {
  std::set<std::string> names;
  struct Walker {
    const SourceModel& m;
    std::set<std::string>& names;
    void walk(const Type* t, int depth) {
      t = deref(t);
      if (!t || depth > kMaxEmbedDepth) return;
      const Type* u = t;
      if (t->kind == TypeKind::Named) {
        if (t->pkg) {
          auto it = m.methods_.find({t->pkg, t->name});
          if (it != m.methods_.end()) {
            for (const auto& [name, decls] : it->second) names.insert(name);
          }
        }
        u = t->under;
      }
      if (!u) return;
      if (u->kind == TypeKind::Struct) {
        for (const TypeField& f : u->fields) {
          if (f.embedded) walk(f.type, depth + 1);
        }
      } else if (u->kind == TypeKind::Interface && depth > 0) {
        for (const std::string& n : m.interface_methods(u, nullptr)) names.insert(n);
      }
    }
  };
  Walker{*this, names}.walk(named, 0);
  return {names.begin(), names.end()};
}

std::vector<const FuncDecl*> SourceModel::method_decls(const Type* named,
                                                       std::string_view method) const {
  std::vector<const Type*> level{deref(named)};
  for (int depth = 0; depth <= kMaxEmbedDepth && !level.empty(); ++depth) {
    std::vector<const FuncDecl*> found;
    std::vector<const Type*> next;
    for (const Type* t : level) {
      if (!t) continue;
      const Type* u = t;
      if (t->kind == TypeKind::Named) {
        if (t->pkg) {
          auto ms = methods(t->pkg, t->name, method);
          found.insert(found.end(), ms.begin(), ms.end());
        }
        u = t->under;
      }
      if (u && u->kind == TypeKind::Struct) {
        for (const TypeField& f : u->fields) {
          if (f.embedded) next.push_back(deref(f.type));
        }
      }
    }
    if (!found.empty()) return found;
    level = std::move(next);
  }
  return {};
}

TypeRef SourceModel::classify(const Type* t) const {
  TypeRef r;
  if (!t) return r;
  auto basic_class = [&](const Type* b) {
    const std::string& n = b->name;
    if (n == "float32" || n == "float64" || n == "complex64" || n == "complex128" ||
        n == "untyped float" || n == "untyped complex") {
      r.classification = TypeClass::Float;
    } else if (n == "int" || n == "uint" || n == "uintptr") {
      r.classification = TypeClass::PlatformDependent;
      r.name = n;
    } else if (n == "string" || n == "untyped string") {
      r.classification = TypeClass::String;
    } else {
      r.classification = TypeClass::Other;
    }
  };
  switch (t->kind) {
    case TypeKind::Unknown:
      return r;
    case TypeKind::Basic:
      basic_class(t);
      return r;
    case TypeKind::Map:
      r.classification = TypeClass::Map;
      r.key = type_string(t->key);
      r.value = type_string(t->elem);
      return r;
    case TypeKind::Named: {
      const Type* u = t->under;
      if (t->pkg && u && u->kind == TypeKind::Map) {
        r.classification = TypeClass::Map;
        r.key = type_string(u->key);
        r.value = type_string(u->elem);
        return r;
      }
      if (t->pkg && u && u->kind == TypeKind::Basic) {
        basic_class(u);
        if (r.classification == TypeClass::Float) return r;
      }
      if (t->pkg_path.empty()) {
        r = TypeRef{};
        r.classification = TypeClass::Other;
        return r;
      }
      r = TypeRef{};
      r.classification = TypeClass::Named;
      r.import_path = t->pkg ? t->pkg->import_path : t->pkg_path;
      r.name = t->name;
      return r;
    }
    default:
      r.classification = TypeClass::Other;
      return r;
  }
}

SyntaxKind SourceModel::syntax_kind(const Node* n) const {
  if (!n) return SyntaxKind::Other;
  switch (n->kind) {
    case NodeKind::CallExpr: {
      if (n->is_conversion) return SyntaxKind::ConversionExpr;
      const Node* f = n->kids[0];
      while (f && f->kind == NodeKind::ParenExpr) f = f->kids[0];
      if (f && f->kind == NodeKind::Ident && f->text == "panic" && f->ref == RefKind::Builtin) {
        return SyntaxKind::PanicCall;
      }
      return SyntaxKind::CallExpr;
    }
    case NodeKind::RangeStmt: return SyntaxKind::RangeStmt;
    case NodeKind::GoStmt: return SyntaxKind::SpawnStmt;
    case NodeKind::SelectStmt: return SyntaxKind::SelectStmt;
    case NodeKind::DeferStmt: return SyntaxKind::DeferStmt;
    case NodeKind::BasicLit: return SyntaxKind::BasicLiteral;
    case NodeKind::BinaryExpr: return SyntaxKind::BinaryExpr;
    case NodeKind::SelectorExpr:
      return n->is_type ? SyntaxKind::TypeSpelling : SyntaxKind::SelectorExpr;
    case NodeKind::Ident:
    case NodeKind::StarExpr:
    case NodeKind::ArrayType:
    case NodeKind::SliceType:
    case NodeKind::EllipsisType:
    case NodeKind::MapType:
    case NodeKind::ChanType:
    case NodeKind::FuncType:
    case NodeKind::StructType:
    case NodeKind::InterfaceType:
    case NodeKind::IndexExpr:
      return n->is_type ? SyntaxKind::TypeSpelling : SyntaxKind::Other;
    case NodeKind::ValueSpec:
      if (n->parent && n->parent->op == Tok::Const) return SyntaxKind::ConstDecl;
      return SyntaxKind::VarDecl;
    case NodeKind::Field:
      return SyntaxKind::FieldDecl;
    case NodeKind::ImportSpec:
      return SyntaxKind::ImportDecl;
    default:
      return SyntaxKind::Other;
  }
}

}  // namespace chainlint::go
