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

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "source/model.hpp"

namespace chainlint::go {

namespace {

struct Symbol {
  RefKind kind = RefKind::None;
  const Node* ident = nullptr;
  Node* spec = nullptr;  // FuncDecl, ValueSpec or TypeSpec
  size_t index = 0;      // name index inside a ValueSpec
  const SourceFile* file = nullptr;
  const Type* type = nullptr;
  int state = 0;  // 0 pending, 1 resolving, 2 done
};

struct PackageScope {
  const Package* pkg = nullptr;
  std::unordered_map<std::string_view, Symbol> syms;
  PackageScope* fallback = nullptr;  // in-package test files see the package
};

struct ScopeEntry {
  bool is_type = false;
  LocalVar* var = nullptr;
  const Type* type = nullptr;
};

struct Scope {
  Scope* parent = nullptr;
  std::unordered_map<std::string_view, ScopeEntry> names;
};

struct Env {
  const SourceFile* file = nullptr;
  PackageScope* pkg = nullptr;
  Scope* scope = nullptr;
};

const std::set<std::string_view> kBuiltins = {
    "append", "cap",   "clear", "close",   "complex", "copy",
    "delete", "imag",  "len",   "make",    "max",     "min",
    "new",    "panic", "print", "println", "real",    "recover",
};

Node* unparen(Node* n) {
  while (n && n->kind == NodeKind::ParenExpr) n = n->kids[0];
  return n;
}

std::string_view base_type_name(const Node* t) {
  while (t) {
    switch (t->kind) {
      case NodeKind::StarExpr:
      case NodeKind::ParenExpr:
      case NodeKind::IndexExpr:
        t = t->kids[0];
        break;
      case NodeKind::Ident:
        return t->text;
      case NodeKind::SelectorExpr:
        return t->kids[1]->text;
      default:
        return {};
    }
  }
  return {};
}

}  // namespace

class Binder {
 public:
  explicit Binder(SourceModel& m) : m_(m) {}

  void run() {
    make_universe();
    collect_declarations();
    compute_signatures();
    for (auto& nt : m_.named_types_) ensure_underlying(const_cast<Type*>(nt.type));
    for (auto& [pkg, ps] : scopes_) {
      for (auto& [name, sym] : ps.syms) symbol_type(ps, sym);
    }
    walk_package_level();
    walk_functions();
  }

 private:
  // ---- type construction -------------------------------------------------

  Type* new_type(TypeKind k) {
    Type& t = m_.types_.emplace_back();
    t.kind = k;
    return &t;
  }
  const Type* unknown() const { return unknown_; }
  const Type* basic(std::string_view name) const {
    auto it = m_.universe_.find(std::string(name));
    return it == m_.universe_.end() ? unknown_ : it->second;
  }
  const Type* pointer_to(const Type* e) {
    Type* t = new_type(TypeKind::Pointer);
    t->elem = e ? e : unknown_;
    return t;
  }
  const Type* slice_of(const Type* e) {
    Type* t = new_type(TypeKind::Slice);
    t->elem = e ? e : unknown_;
    return t;
  }

  void make_universe() {
    unknown_ = new_type(TypeKind::Unknown);
    unknown_->name = "?";
    for (const char* b :
         {"bool", "int", "int8", "int16", "int32", "int64", "uint", "uint8",
          "uint16", "uint32", "uint64", "uintptr", "float32", "float64",
          "complex64", "complex128", "string"}) {
      Type* t = new_type(TypeKind::Basic);
      t->name = b;
      m_.universe_[b] = t;
    }
    m_.universe_["byte"] = m_.universe_["uint8"];
    m_.universe_["rune"] = m_.universe_["int32"];
    for (const char* u : {"untyped int", "untyped float", "untyped rune",
                          "untyped complex", "untyped string", "untyped bool"}) {
      Type* t = new_type(TypeKind::Basic);
      t->name = u;
      t->untyped = true;
      m_.universe_[u] = t;
    }
    Type* err_sig = new_type(TypeKind::Func);
    err_sig->results.push_back(m_.universe_["string"]);
    Type* err_iface = new_type(TypeKind::Interface);
    err_iface->fields.push_back({"Error", err_sig, false, nullptr});
    Type* err = new_type(TypeKind::Named);
    err->name = "error";
    err->under = err_iface;
    m_.universe_["error"] = err;
    Type* any = new_type(TypeKind::Interface);
    m_.universe_["any"] = any;
    m_.universe_["comparable"] = new_type(TypeKind::Interface);
  }

  static bool is_universe_type_name(std::string_view n) {
    static const std::set<std::string_view> names = {
        "bool",    "byte",    "rune",       "int",       "int8",   "int16",
        "int32",   "int64",   "uint",       "uint8",     "uint16", "uint32",
        "uint64",  "uintptr", "float32",    "float64",   "complex64",
        "complex128", "string", "error",    "any",       "comparable"};
    return names.count(n) > 0;
  }

  const Type* default_type(const Type* t) const {
    if (!t || !t->untyped) return t;
    if (t->name == "untyped int") return basic("int");
    if (t->name == "untyped float") return basic("float64");
    if (t->name == "untyped rune") return basic("int32");
    if (t->name == "untyped complex") return basic("complex128");
    if (t->name == "untyped string") return basic("string");
    if (t->name == "untyped bool") return basic("bool");
    return t;
  }

  const Type* under(const Type* t) {
    if (t && t->kind == TypeKind::Named) {
      ensure_underlying(const_cast<Type*>(t));
      return t->under ? t->under : unknown_;
    }
    return t ? t : unknown_;
  }

  // ---- declarations ------------------------------------------------------

  PackageScope* scope_of(const Package* p) {
    auto it = scopes_.find(p);
    return it == scopes_.end() ? nullptr : &it->second;
  }

  PackageScope* scope_of_path(std::string_view path) {
    const Package* p = m_.tree_.find_package(path);
    return p ? scope_of(p) : nullptr;
  }

  void collect_declarations() {
    for (const auto& pkg : m_.tree_.packages) {
      PackageScope& ps = scopes_[pkg.get()];
      ps.pkg = pkg.get();
      for (const auto& file : pkg->files) {
        m_.file_roots_[file->root] = file.get();
        for (Node* decl : file->root->kids) {
          collect_decl(ps, *file, decl);
        }
      }
    }
    for (auto& [pkg, ps] : scopes_) {
      const std::string& path = pkg->import_path;
      const std::string suffix = " [test]";
      if (path.size() > suffix.size() &&
          path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0) {
        ps.fallback = scope_of_path(path.substr(0, path.size() - suffix.size()));
      }
    }
    // In-tree imports take the imported package's declared name.
    for (const auto& pkg : m_.tree_.packages) {
      for (const auto& file : pkg->files) {
        auto& table = imports_[file.get()];
        for (ImportRef& imp : file->imports) {
          if (!imp.spec->kids[0]) {
            if (const Package* target = m_.tree_.find_package(imp.path)) {
              imp.name = target->name;
            }
          }
          if (imp.name != "_" && imp.name != ".") table[imp.name] = &imp;
        }
      }
    }
    std::sort(m_.funcs_.begin(), m_.funcs_.end(),
              [](const FuncDecl& a, const FuncDecl& b) { return a.id < b.id; });
    for (size_t i = 0; i < m_.funcs_.size(); ++i) {
      const FuncDecl& f = m_.funcs_[i];
      m_.func_index_[f.node] = i;
      if (f.is_method()) {
        m_.methods_[{f.pkg, f.id.receiver}][f.id.name].push_back(&f);
      } else {
        m_.package_funcs_[{f.pkg, f.id.name}].push_back(&f);
      }
    }
  }

  void collect_decl(PackageScope& ps, const SourceFile& file, Node* decl) {
    if (decl->kind == NodeKind::FuncDecl) {
      FuncDecl f;
      f.node = decl;
      f.file = &file;
      f.pkg = ps.pkg;
      f.position = file.position(decl->begin);
      f.id.import_path = ps.pkg->import_path;
      f.id.name = std::string(decl->kids[1]->text);
      f.id.file = file.path;
      f.id.offset = decl->begin;
      if (const Node* recv = decl->kids[0]; recv && !recv->kids.empty()) {
        const Node* field = recv->kids[0];
        f.id.receiver = std::string(base_type_name(field->kids[field->split]));
      } else if (f.id.name != "init" && f.id.name != "_") {
        Symbol s;
        s.kind = RefKind::PackageFunc;
        s.ident = decl->kids[1];
        s.spec = decl;
        s.file = &file;
        ps.syms.emplace(decl->kids[1]->text, s);
      }
      m_.funcs_.push_back(std::move(f));
      return;
    }
    if (decl->kind != NodeKind::GenDecl) return;
    for (Node* spec : decl->kids) {
      if (spec->kind == NodeKind::ValueSpec) {
        for (uint32_t i = 0; i < spec->split; ++i) {
          const Node* id = spec->kids[i];
          if (id->text == "_") continue;
          Symbol s;
          s.kind = decl->op == Tok::Const ? RefKind::PackageConst : RefKind::PackageVar;
          s.ident = id;
          s.spec = spec;
          s.index = i;
          s.file = &file;
          ps.syms.emplace(id->text, s);
        }
      } else if (spec->kind == NodeKind::TypeSpec) {
        const Node* id = spec->kids[0];
        Symbol s;
        s.kind = RefKind::TypeName;
        s.ident = id;
        s.spec = spec;
        s.file = &file;
        if (spec->op != Tok::Assign) {
          Type* t = new_type(TypeKind::Named);
          t->name = std::string(id->text);
          t->pkg_path = ps.pkg->import_path;
          t->decl = spec;
          t->file = &file;
          t->pkg = ps.pkg;
          s.type = t;
          s.state = 2;
          m_.named_types_.push_back({ps.pkg, &file, spec, t});
        }
        ps.syms.emplace(id->text, s);
      }
    }
  }

  Env env_for(const SourceFile* file) {
    return Env{file, scope_of(file->package), nullptr};
  }

  void compute_signatures() {
    for (const FuncDecl& f : m_.funcs_) {
      Scope tmp;
      Env env = env_for(f.file);
      env.scope = &tmp;
      declare_receiver_type_params(f.node, tmp);
      m_.signatures_[f.node] = func_type(f.node->kids[2], env, nullptr);
    }
  }

  void declare_receiver_type_params(const Node* func_decl, Scope& scope) {
    const Node* recv = func_decl->kids[0];
    if (!recv || recv->kids.empty()) return;
    const Node* field = recv->kids[0];
    const Node* t = field->kids[field->split];
    while (t && (t->kind == NodeKind::StarExpr || t->kind == NodeKind::ParenExpr)) {
      t = t->kids[0];
    }
    if (t && t->kind == NodeKind::IndexExpr) {
      for (size_t i = 1; i < t->kids.size(); ++i) {
        if (t->kids[i]->kind == NodeKind::Ident) {
          scope.names[t->kids[i]->text] = ScopeEntry{true, nullptr, unknown_};
        }
      }
    }
  }

  void declare_type_params(Node* tparams, Scope& scope, Env& env) {
    if (!tparams) return;
    for (Node* field : tparams->kids) {
      for (uint32_t i = 0; i < field->split; ++i) {
        scope.names[field->kids[i]->text] = ScopeEntry{true, nullptr, unknown_};
        field->kids[i]->is_type = true;
        field->kids[i]->type = unknown_;
      }
    }
    for (Node* field : tparams->kids) resolve_type(field->kids[field->split], env);
  }

  void ensure_underlying(Type* named) {
    if (!named || named->kind != TypeKind::Named || named->under || !named->decl) return;
    if (!resolving_.insert(named).second) {
      named->under = unknown_;
      return;
    }
    Node* spec = const_cast<Node*>(named->decl);
    Scope tmp;
    Env env = env_for(named->file);
    env.scope = &tmp;
    declare_type_params(spec->kids[1], tmp, env);
    const Type* t = resolve_type(spec->kids[2], env);
    if (t->kind == TypeKind::Named) {
      ensure_underlying(const_cast<Type*>(t));
      named->under = t->under ? t->under : unknown_;
    } else {
      named->under = t;
    }
    resolving_.erase(named);
  }

  const Type* symbol_type(PackageScope& ps, Symbol& s) {
    if (s.state == 2) return s.type ? s.type : unknown_;
    if (s.state == 1) return unknown_;
    s.state = 1;
    Env env = env_for(s.file);
    env.pkg = &ps;
    switch (s.kind) {
      case RefKind::PackageFunc:
        s.type = m_.signatures_[s.spec];
        break;
      case RefKind::TypeName: {  // alias
        Scope tmp;
        env.scope = &tmp;
        declare_type_params(s.spec->kids[1], tmp, env);
        s.type = resolve_type(s.spec->kids[2], env);
        break;
      }
      case RefKind::PackageVar:
      case RefKind::PackageConst: {
        const auto& types = walk_value_spec(s.spec, env);
        s.type = s.index < types.size() ? types[s.index] : unknown_;
        break;
      }
      default:
        s.type = unknown_;
    }
    if (!s.type) s.type = unknown_;
    s.state = 2;
    return s.type;
  }

  // Types of the names declared by a ValueSpec; walks its expressions once.
  const std::vector<const Type*>& walk_value_spec(Node* spec, Env& env) {
    if (auto it = spec_types_.find(spec); it != spec_types_.end()) return it->second;
    auto& out = spec_types_[spec];
    const uint32_t names = spec->split;
    Node* type_node = spec->kids[names];
    const size_t nvalues = spec->kids.size() - names - 1;
    const bool is_const =
        spec->parent && spec->parent->kind == NodeKind::GenDecl && spec->parent->op == Tok::Const;
    const Type* declared = type_node ? resolve_type(type_node, env) : nullptr;
    std::vector<const Type*> values;
    for (size_t i = 0; i < nvalues; ++i) {
      values.push_back(expr(spec->kids[names + 1 + i], env, declared));
    }
    out.assign(names, unknown_);
    if (declared) {
      std::fill(out.begin(), out.end(), declared);
    } else if (nvalues == names) {
      for (size_t i = 0; i < names; ++i) {
        out[i] = is_const ? values[i] : default_type(values[i]);
      }
    } else if (nvalues == 1) {
      auto multi = multi_value(spec->kids[names + 1], names);
      for (size_t i = 0; i < names; ++i) out[i] = default_type(multi[i]);
    } else if (nvalues == 0 && is_const) {
      // Implicit repetition of the previous spec in a const group.
      const Node* group = spec->parent;
      const Node* prev = nullptr;
      for (const Node* s : group->kids) {
        if (s == spec) break;
        if (s->kids.size() > s->split + 1 || s->kids[s->split]) prev = s;
      }
      if (prev) {
        if (const Node* prev_type = prev->kids[prev->split]) {
          std::fill(out.begin(), out.end(), prev_type->type ? prev_type->type : unknown_);
        } else {
          for (size_t i = 0; i < names; ++i) {
            const Node* v = prev->kid(prev->split + 1 + i);
            out[i] = v && v->type ? v->type : unknown_;
          }
        }
      }
    }
    return out;
  }

  // Types produced by a single expression assigned to `count` names.
  std::vector<const Type*> multi_value(const Node* rhs, size_t count) {
    std::vector<const Type*> out(count, unknown_);
    const Node* x = unparen(const_cast<Node*>(rhs));
    const Type* t = x->type ? x->type : unknown_;
    if (t->kind == TypeKind::Tuple) {
      for (size_t i = 0; i < count && i < t->results.size(); ++i) out[i] = t->results[i];
      return out;
    }
    // Comma-ok forms: map index, type assertion, channel receive.
    if (count == 2 &&
        (x->kind == NodeKind::IndexExpr || x->kind == NodeKind::TypeAssertExpr ||
         (x->kind == NodeKind::UnaryExpr && x->op == Tok::Arrow))) {
      out[0] = t;
      out[1] = basic("bool");
    } else if (count >= 1) {
      out[0] = t;
    }
    return out;
  }

  // ---- lookup ------------------------------------------------------------

  struct Lookup {
    enum Kind { None, LocalVarEnt, LocalTypeEnt, Package, ImportEnt, Universe } kind = None;
    ScopeEntry local;
    PackageScope* ps = nullptr;
    Symbol* sym = nullptr;
    const ImportRef* imp = nullptr;
  };

  Lookup lookup(std::string_view name, Env& env) {
    Lookup out;
    for (Scope* s = env.scope; s; s = s->parent) {
      if (auto it = s->names.find(name); it != s->names.end()) {
        out.kind = it->second.is_type ? Lookup::LocalTypeEnt : Lookup::LocalVarEnt;
        out.local = it->second;
        return out;
      }
    }
    for (PackageScope* ps = env.pkg; ps; ps = ps->fallback) {
      if (auto it = ps->syms.find(name); it != ps->syms.end()) {
        out.kind = Lookup::Package;
        out.ps = ps;
        out.sym = &it->second;
        return out;
      }
    }
    if (env.file) {
      auto& table = imports_[env.file];
      if (auto it = table.find(std::string(name)); it != table.end()) {
        out.kind = Lookup::ImportEnt;
        out.imp = it->second;
        return out;
      }
    }
    out.kind = Lookup::Universe;
    return out;
  }

  void apply_symbol(Node* n, PackageScope& ps, Symbol& sym) {
    n->ref = sym.kind;
    n->ref_pkg = ps.pkg;
    n->ref_decl = sym.ident;
    n->type = symbol_type(ps, sym);
    n->is_type = sym.kind == RefKind::TypeName;
  }

  // ---- types -------------------------------------------------------------

  const Type* resolve_type(Node* n, Env& env) {
    if (!n) return unknown_;
    const Type* t = resolve_type_inner(n, env);
    if (!t) t = unknown_;
    n->is_type = true;
    n->type = t;
    return t;
  }

  const Type* resolve_type_inner(Node* n, Env& env) {
    switch (n->kind) {
      case NodeKind::Ident: {
        Lookup l = lookup(n->text, env);
        switch (l.kind) {
          case Lookup::LocalTypeEnt:
            n->ref = RefKind::TypeName;
            return l.local.type;
          case Lookup::Package:
            if (l.sym->kind == RefKind::TypeName) {
              apply_symbol(n, *l.ps, *l.sym);
              return n->type;
            }
            return unknown_;
          case Lookup::Universe:
            if (is_universe_type_name(n->text)) {
              n->ref = RefKind::UniverseType;
              return basic(n->text);
            }
            return unknown_;
          default:
            return unknown_;
        }
      }
      case NodeKind::SelectorExpr: {
        Node* x = n->kids[0];
        Node* sel = n->kids[1];
        if (x->kind != NodeKind::Ident) return unknown_;
        Lookup l = lookup(x->text, env);
        if (l.kind != Lookup::ImportEnt) return unknown_;
        x->ref = RefKind::Import;
        x->ref_path = l.imp->path;
        if (PackageScope* ps = scope_of_path(l.imp->path)) {
          if (auto it = ps->syms.find(sel->text);
              it != ps->syms.end() && it->second.kind == RefKind::TypeName) {
            apply_symbol(sel, *ps, it->second);
            n->ref = sel->ref;
            n->ref_pkg = sel->ref_pkg;
            n->ref_decl = sel->ref_decl;
            return sel->type;
          }
          return unknown_;
        }
        sel->ref = RefKind::TypeName;
        sel->ref_path = l.imp->path;
        n->ref = RefKind::TypeName;
        n->ref_path = l.imp->path;
        return external_named(l.imp->path, sel->text);
      }
      case NodeKind::StarExpr:
        return pointer_to(resolve_type(n->kids[0], env));
      case NodeKind::ParenExpr:
        return resolve_type(n->kids[0], env);
      case NodeKind::ArrayType: {
        if (n->kids[0]) expr(n->kids[0], env);
        Type* t = new_type(TypeKind::Array);
        t->elem = resolve_type(n->kids[1], env);
        return t;
      }
      case NodeKind::SliceType:
      case NodeKind::EllipsisType:
        return slice_of(resolve_type(n->kids[0], env));
      case NodeKind::MapType: {
        Type* t = new_type(TypeKind::Map);
        t->key = resolve_type(n->kids[0], env);
        t->elem = resolve_type(n->kids[1], env);
        return t;
      }
      case NodeKind::ChanType: {
        Type* t = new_type(TypeKind::Chan);
        t->elem = resolve_type(n->kids[0], env);
        return t;
      }
      case NodeKind::FuncType:
        return func_type(n, env, nullptr);
      case NodeKind::StructType: {
        if (auto it = literal_types_.find(n); it != literal_types_.end()) return it->second;
        Type* t = new_type(TypeKind::Struct);
        t->decl = n;
        t->file = env.file;
        literal_types_[n] = t;
        for (Node* field : n->kids) {
          const Type* ft = resolve_type(field->kids[field->split], env);
          if (field->split == 0) {
            t->fields.push_back({base_type_name(field->kids[0]), ft, true, field->kids[0]});
          }
          for (uint32_t i = 0; i < field->split; ++i) {
            t->fields.push_back({field->kids[i]->text, ft, false, field->kids[i]});
          }
        }
        return t;
      }
      case NodeKind::InterfaceType: {
        if (auto it = literal_types_.find(n); it != literal_types_.end()) return it->second;
        Type* t = new_type(TypeKind::Interface);
        t->decl = n;
        t->file = env.file;
        literal_types_[n] = t;
        for (Node* field : n->kids) {
          Node* ft = field->kids[field->split];
          if (field->split == 0) {
            t->fields.push_back({{}, resolve_type(ft, env), true, ft});
          } else {
            const Type* sig = resolve_type(ft, env);
            t->fields.push_back({field->kids[0]->text, sig, false, field->kids[0]});
          }
        }
        return t;
      }
      case NodeKind::IndexExpr: {
        const Type* t = resolve_type(n->kids[0], env);
        for (size_t i = 1; i < n->kids.size(); ++i) resolve_type(n->kids[i], env);
        return t;
      }
      case NodeKind::UnaryExpr:
        resolve_type(n->kids[0], env);
        return unknown_;
      case NodeKind::BinaryExpr:
        resolve_type(n->kids[0], env);
        resolve_type(n->kids[1], env);
        return unknown_;
      default:
        return unknown_;
    }
  }

  const Type* external_named(const std::string& path, std::string_view name) {
    auto key = std::make_pair(path, std::string(name));
    if (auto it = external_.find(key); it != external_.end()) return it->second;
    Type* t = new_type(TypeKind::Named);
    t->name = std::string(name);
    t->pkg_path = path;
    external_[key] = t;
    return t;
  }

  // Resolves a FuncType. When `declare` is set, parameter and result names
  // are declared there as locals and type parameters as unknown types.
  const Type* func_type(Node* ft, Env& env, Scope* declare) {
    Type* t = new_type(TypeKind::Func);
    t->decl = ft;
    t->file = env.file;
    Scope tmp;
    tmp.parent = env.scope;
    Env inner = env;
    if (ft->kids[0]) {
      Scope* target = declare ? declare : &tmp;
      if (!declare) inner.scope = &tmp;
      declare_type_params(ft->kids[0], *target, inner);
    }
    auto fields = [&](Node* list, std::vector<const Type*>& sink) {
      if (!list) return;
      for (Node* field : list->kids) {
        const Type* pt = resolve_type(field->kids[field->split], inner);
        if (field->split == 0) sink.push_back(pt);
        for (uint32_t i = 0; i < field->split; ++i) {
          sink.push_back(pt);
          if (declare) declare_local(*declare, field->kids[i], pt, nullptr, true);
        }
      }
    };
    fields(ft->kids[1], t->params);
    fields(ft->kids[2], t->results);
    return t;
  }

  LocalVar* declare_local(Scope& scope, Node* ident, const Type* t, const Node* init,
                          bool is_param) {
    if (ident->text == "_") {
      ident->type = t ? t : unknown_;
      return nullptr;
    }
    LocalVar& v = m_.locals_.emplace_back();
    v.name = ident->text;
    v.type = t ? t : unknown_;
    v.decl = ident;
    v.init = init;
    v.is_param = is_param;
    scope.names[ident->text] = ScopeEntry{false, &v, v.type};
    ident->ref = RefKind::Local;
    ident->local = &v;
    ident->ref_decl = ident;
    ident->type = v.type;
    return &v;
  }

  // ---- expressions -------------------------------------------------------

  static int untyped_rank(const Type* t) {
    if (t->name == "untyped int") return 1;
    if (t->name == "untyped rune") return 2;
    if (t->name == "untyped float") return 3;
    if (t->name == "untyped complex") return 4;
    return 0;
  }

  const Type* expr(Node* n, Env& env, const Type* hint = nullptr) {
    if (!n) return unknown_;
    const Type* t = expr_inner(n, env, hint);
    if (!t) t = unknown_;
    n->type = t;
    return t;
  }

  const Type* expr_inner(Node* n, Env& env, const Type* hint) {
    switch (n->kind) {
      case NodeKind::Ident:
        return ident_expr(n, env);
      case NodeKind::BasicLit:
        switch (n->op) {
          case Tok::Int: return basic("untyped int");
          case Tok::Float: return basic("untyped float");
          case Tok::Imag: return basic("untyped complex");
          case Tok::Char: return basic("untyped rune");
          case Tok::String: return basic("untyped string");
          default: return unknown_;
        }
      case NodeKind::CompositeLit:
        return composite(n, env, hint);
      case NodeKind::FuncLit: {
        Scope s;
        s.parent = env.scope;
        Env inner = env;
        inner.scope = &s;
        const Type* t = func_type(n->kids[0], inner, &s);
        n->kids[0]->is_type = true;
        n->kids[0]->type = t;
        block(n->kids[1], inner);
        return t;
      }
      case NodeKind::ParenExpr: {
        const Type* t = expr(n->kids[0], env, hint);
        n->is_type = n->kids[0]->is_type;
        return t;
      }
      case NodeKind::SelectorExpr:
        return selector(n, env);
      case NodeKind::IndexExpr:
        return index(n, env);
      case NodeKind::SliceExpr: {
        const Type* t = expr(n->kids[0], env);
        for (size_t i = 1; i < 4; ++i) expr(n->kids[i], env);
        const Type* u = under(t);
        if (u->kind == TypeKind::Pointer) u = under(u->elem);
        if (u->kind == TypeKind::Array) return slice_of(u->elem);
        return t;
      }
      case NodeKind::TypeAssertExpr:
        expr(n->kids[0], env);
        return n->kids[1] ? resolve_type(n->kids[1], env) : unknown_;
      case NodeKind::CallExpr:
        return call(n, env);
      case NodeKind::StarExpr: {
        const Type* t = expr(n->kids[0], env);
        if (n->kids[0]->is_type) {
          n->is_type = true;
          return pointer_to(t);
        }
        const Type* u = under(t);
        return u->kind == TypeKind::Pointer ? u->elem : unknown_;
      }
      case NodeKind::UnaryExpr: {
        const Type* elem_hint =
            hint && n->op == Tok::And && under(hint)->kind == TypeKind::Pointer
                ? under(hint)->elem
                : nullptr;
        const Type* t = expr(n->kids[0], env, elem_hint);
        switch (n->op) {
          case Tok::And: return pointer_to(t);
          case Tok::Arrow: {
            const Type* u = under(t);
            return u->kind == TypeKind::Chan ? u->elem : unknown_;
          }
          case Tok::Not: return basic("untyped bool");
          case Tok::Tilde: return unknown_;
          default: return t;
        }
      }
      case NodeKind::BinaryExpr: {
        const Type* x = expr(n->kids[0], env, hint);
        const Type* y = expr(n->kids[1], env, hint);
        switch (n->op) {
          case Tok::Eql:
          case Tok::Neq:
          case Tok::Lss:
          case Tok::Leq:
          case Tok::Gtr:
          case Tok::Geq:
          case Tok::LAnd:
          case Tok::LOr:
            return basic("untyped bool");
          case Tok::Shl:
          case Tok::Shr:
            return x;
          default:
            break;
        }
        if (x->kind != TypeKind::Unknown && !x->untyped) return x;
        if (y->kind != TypeKind::Unknown && !y->untyped) return y;
        if (x->untyped && y->untyped) return untyped_rank(x) >= untyped_rank(y) ? x : y;
        return unknown_;
      }
      case NodeKind::KeyValueExpr:
        expr(n->kids[0], env);
        expr(n->kids[1], env);
        return unknown_;
      case NodeKind::ArrayType:
      case NodeKind::SliceType:
      case NodeKind::EllipsisType:
      case NodeKind::MapType:
      case NodeKind::ChanType:
      case NodeKind::FuncType:
      case NodeKind::StructType:
      case NodeKind::InterfaceType: {
        const Type* t = resolve_type(n, env);
        return t;
      }
      default:
        for (Node* k : n->kids) expr(k, env);
        return unknown_;
    }
  }

  const Type* ident_expr(Node* n, Env& env) {
    if (n->text == "_") return unknown_;
    Lookup l = lookup(n->text, env);
    switch (l.kind) {
      case Lookup::LocalVarEnt:
        n->ref = RefKind::Local;
        n->local = l.local.var;
        n->ref_decl = l.local.var->decl;
        return l.local.var->type;
      case Lookup::LocalTypeEnt:
        n->ref = RefKind::TypeName;
        n->is_type = true;
        return l.local.type;
      case Lookup::Package:
        apply_symbol(n, *l.ps, *l.sym);
        return n->type;
      case Lookup::ImportEnt:
        n->ref = RefKind::Import;
        n->ref_path = l.imp->path;
        return unknown_;
      case Lookup::Universe:
      case Lookup::None:
        break;
    }
    if (is_universe_type_name(n->text)) {
      n->ref = RefKind::UniverseType;
      n->is_type = true;
      return basic(n->text);
    }
    if (kBuiltins.count(n->text)) {
      n->ref = RefKind::Builtin;
      return unknown_;
    }
    if (n->text == "true" || n->text == "false") {
      n->ref = RefKind::UniverseValue;
      return basic("untyped bool");
    }
    if (n->text == "iota") {
      n->ref = RefKind::UniverseValue;
      return basic("untyped int");
    }
    if (n->text == "nil") n->ref = RefKind::UniverseValue;
    return unknown_;
  }

  const Type* composite(Node* n, Env& env, const Type* hint) {
    const Type* t = nullptr;
    if (n->kids[0]) {
      t = resolve_type(n->kids[0], env);
    } else if (hint) {
      t = hint;
      if (under(t)->kind == TypeKind::Pointer) t = under(t)->elem;
    }
    if (!t) t = unknown_;
    const Type* u = under(t);
    size_t position = 0;
    for (size_t i = 1; i < n->kids.size(); ++i, ++position) {
      Node* el = n->kids[i];
      if (el->kind == NodeKind::KeyValueExpr) {
        Node* key = el->kids[0];
        Node* value = el->kids[1];
        if (u->kind == TypeKind::Struct && key->kind == NodeKind::Ident) {
          const Type* ft = unknown_;
          for (const TypeField& f : u->fields) {
            if (f.name == key->text) {
              ft = f.type;
              key->ref_decl = f.decl;
              break;
            }
          }
          key->ref = RefKind::Field;
          key->type = ft;
          expr(value, env, ft);
        } else if (u->kind == TypeKind::Map) {
          expr(key, env, u->key);
          expr(value, env, u->elem);
        } else {
          expr(key, env);
          expr(value, env,
               (u->kind == TypeKind::Slice || u->kind == TypeKind::Array) ? u->elem : nullptr);
        }
        continue;
      }
      const Type* elem_hint = nullptr;
      if (u->kind == TypeKind::Slice || u->kind == TypeKind::Array) {
        elem_hint = u->elem;
      } else if (u->kind == TypeKind::Struct) {
        size_t fi = 0;
        for (const TypeField& f : u->fields) {
          if (fi++ == position) {
            elem_hint = f.type;
            break;
          }
        }
      }
      expr(el, env, elem_hint);
    }
    return t;
  }

  const Type* selector(Node* n, Env& env) {
    Node* x = n->kids[0];
    Node* sel = n->kids[1];
    if (x->kind == NodeKind::Ident) {
      Lookup l = lookup(x->text, env);
      if (l.kind == Lookup::ImportEnt) {
        x->ref = RefKind::Import;
        x->ref_path = l.imp->path;
        x->type = unknown_;
        if (PackageScope* ps = scope_of_path(l.imp->path)) {
          if (auto it = ps->syms.find(sel->text); it != ps->syms.end()) {
            apply_symbol(sel, *ps, it->second);
            n->ref = sel->ref;
            n->ref_pkg = sel->ref_pkg;
            n->ref_decl = sel->ref_decl;
            n->is_type = sel->is_type;
            return sel->type;
          }
          sel->type = unknown_;
          return unknown_;
        }
        sel->ref = RefKind::ExternalMember;
        sel->ref_path = l.imp->path;
        sel->type = unknown_;
        n->ref = RefKind::ExternalMember;
        n->ref_path = l.imp->path;
        return unknown_;
      }
    }
    const Type* xt = expr(x, env);
    Member m = m_.lookup_member(xt, sel->text);
    sel->ref = m.kind;
    sel->recv = m.owner;
    sel->ref_decl = m.decl;
    sel->type = m.type ? m.type : unknown_;
    if (m.kind == RefKind::ExternalMember && m.owner) sel->ref_path = m.owner->pkg_path;
    n->ref = sel->ref;
    n->recv = sel->recv;
    n->ref_decl = sel->ref_decl;
    n->ref_path = sel->ref_path;
    return sel->type;
  }

  bool is_generic_func(const Node* callee) const {
    if (!callee || !callee->type || callee->type->kind != TypeKind::Func) return false;
    const Node* decl = callee->type->decl;
    return decl && decl->kind == NodeKind::FuncType && decl->kids[0];
  }

  const Type* index(Node* n, Env& env) {
    Node* x = n->kids[0];
    const Type* t = expr(x, env);
    if (x->is_type) {
      for (size_t i = 1; i < n->kids.size(); ++i) resolve_type(n->kids[i], env);
      n->is_type = true;
      return t;
    }
    if (is_generic_func(x)) {
      for (size_t i = 1; i < n->kids.size(); ++i) resolve_type(n->kids[i], env);
      n->ref = x->ref;
      return t;
    }
    const Type* u = under(t);
    if (u->kind == TypeKind::Pointer) u = under(u->elem);
    for (size_t i = 1; i < n->kids.size(); ++i) {
      expr(n->kids[i], env, u->kind == TypeKind::Map ? u->key : nullptr);
    }
    switch (u->kind) {
      case TypeKind::Map:
      case TypeKind::Slice:
      case TypeKind::Array:
        return u->elem;
      case TypeKind::Basic:
        return (u->name == "string" || u->name == "untyped string") ? basic("uint8") : unknown_;
      default:
        return unknown_;
    }
  }

  const Type* call(Node* n, Env& env) {
    Node* fun = n->kids[0];
    const Type* ft = expr(fun, env);
    Node* callee = unparen(fun);
    if (callee->is_type) {
      n->is_conversion = true;
      for (size_t i = 1; i < n->kids.size(); ++i) expr(n->kids[i], env, ft);
      return ft;
    }
    if (callee->kind == NodeKind::Ident && callee->ref == RefKind::Builtin) {
      const std::string_view name = callee->text;
      auto arg = [&](size_t i) { return n->kid(i + 1); };
      if (name == "make" || name == "new") {
        const Type* t0 = arg(0) ? resolve_type(arg(0), env) : unknown_;
        for (size_t i = 2; i < n->kids.size(); ++i) expr(n->kids[i], env);
        return name == "make" ? t0 : pointer_to(t0);
      }
      std::vector<const Type*> args;
      for (size_t i = 1; i < n->kids.size(); ++i) {
        const Type* hint = nullptr;
        if (name == "append" && i > 1 && !args.empty()) {
          const Type* u = under(args[0]);
          if (u->kind == TypeKind::Slice) hint = u->elem;
        }
        args.push_back(expr(n->kids[i], env, hint));
      }
      if (name == "len" || name == "cap" || name == "copy") return basic("int");
      if (name == "append") return args.empty() ? unknown_ : args[0];
      if (name == "complex") return basic("complex128");
      if (name == "real" || name == "imag") return basic("float64");
      if (name == "min" || name == "max") {
        for (const Type* a : args) {
          if (a->kind != TypeKind::Unknown && !a->untyped) return a;
        }
        return args.empty() ? unknown_ : args[0];
      }
      return unknown_;
    }
    const Type* u = under(ft);
    for (size_t i = 1; i < n->kids.size(); ++i) {
      const Type* hint = nullptr;
      if (u->kind == TypeKind::Func && i - 1 < u->params.size()) hint = u->params[i - 1];
      expr(n->kids[i], env, hint);
    }
    if (u->kind != TypeKind::Func) return unknown_;
    if (u->results.size() == 1) return u->results[0];
    if (u->results.size() > 1) {
      Type* tuple = new_type(TypeKind::Tuple);
      tuple->results = u->results;
      return tuple;
    }
    return unknown_;
  }

  // ---- statements --------------------------------------------------------

  void block(Node* b, Env& env) {
    if (!b) return;
    Scope s;
    s.parent = env.scope;
    Env inner = env;
    inner.scope = &s;
    for (Node* st : b->kids) stmt(st, inner);
  }

  void bump(Node* lhs) {
    Node* x = unparen(lhs);
    if (x && x->kind == NodeKind::Ident && x->ref == RefKind::Local && x->local) {
      const_cast<LocalVar*>(x->local)->reassignments++;
    }
  }

  void stmt(Node* s, Env& env) {
    if (!s) return;
    switch (s->kind) {
      case NodeKind::BlockStmt:
        block(s, env);
        break;
      case NodeKind::ExprStmt:
        expr(s->kids[0], env);
        break;
      case NodeKind::DeclStmt:
        local_decl(s->kids[0], env);
        break;
      case NodeKind::AssignStmt:
        assign(s, env);
        break;
      case NodeKind::IncDecStmt:
        expr(s->kids[0], env);
        bump(s->kids[0]);
        break;
      case NodeKind::SendStmt: {
        const Type* ch = under(expr(s->kids[0], env));
        expr(s->kids[1], env, ch->kind == TypeKind::Chan ? ch->elem : nullptr);
        break;
      }
      case NodeKind::GoStmt:
      case NodeKind::DeferStmt:
        expr(s->kids[0], env);
        break;
      case NodeKind::ReturnStmt:
        for (Node* r : s->kids) expr(r, env);
        break;
      case NodeKind::LabeledStmt:
        stmt(s->kids[1], env);
        break;
      case NodeKind::IfStmt: {
        Scope sc;
        sc.parent = env.scope;
        Env inner = env;
        inner.scope = &sc;
        stmt(s->kids[0], inner);
        expr(s->kids[1], inner);
        block(s->kids[2], inner);
        stmt(s->kids[3], inner);
        break;
      }
      case NodeKind::SwitchStmt: {
        Scope sc;
        sc.parent = env.scope;
        Env inner = env;
        inner.scope = &sc;
        stmt(s->kids[0], inner);
        const Type* tag = s->kids[1] ? expr(s->kids[1], inner) : nullptr;
        for (Node* clause : s->kids[2]->kids) {
          Scope cs;
          cs.parent = &sc;
          Env ce = inner;
          ce.scope = &cs;
          for (uint32_t i = 0; i < clause->split; ++i) expr(clause->kids[i], ce, tag);
          for (size_t i = clause->split; i < clause->kids.size(); ++i) stmt(clause->kids[i], ce);
        }
        break;
      }
      case NodeKind::TypeSwitchStmt:
        type_switch(s, env);
        break;
      case NodeKind::SelectStmt:
        for (Node* clause : s->kids[0]->kids) {
          Scope cs;
          cs.parent = env.scope;
          Env ce = env;
          ce.scope = &cs;
          stmt(clause->kids[0], ce);
          for (size_t i = 1; i < clause->kids.size(); ++i) stmt(clause->kids[i], ce);
        }
        break;
      case NodeKind::ForStmt: {
        Scope sc;
        sc.parent = env.scope;
        Env inner = env;
        inner.scope = &sc;
        stmt(s->kids[0], inner);
        expr(s->kids[1], inner);
        stmt(s->kids[2], inner);
        block(s->kids[3], inner);
        break;
      }
      case NodeKind::RangeStmt:
        range(s, env);
        break;
      default:
        break;
    }
  }

  void local_decl(Node* gen, Env& env) {
    for (Node* spec : gen->kids) {
      if (spec->kind == NodeKind::ValueSpec) {
        const auto types = walk_value_spec(spec, env);
        const size_t nvalues = spec->kids.size() - spec->split - 1;
        for (uint32_t i = 0; i < spec->split; ++i) {
          const Node* init = nvalues == spec->split ? spec->kids[spec->split + 1 + i] : nullptr;
          declare_local(*env.scope, spec->kids[i], types[i], init, false);
        }
      } else if (spec->kind == NodeKind::TypeSpec) {
        Scope tmp;
        tmp.parent = env.scope;
        Env inner = env;
        inner.scope = &tmp;
        declare_type_params(spec->kids[1], tmp, inner);
        const Type* t = resolve_type(spec->kids[2], inner);
        env.scope->names[spec->kids[0]->text] = ScopeEntry{true, nullptr, t};
        spec->kids[0]->is_type = true;
        spec->kids[0]->type = t;
      }
    }
  }

  void assign(Node* s, Env& env) {
    const uint32_t nl = s->split;
    const size_t nr = s->kids.size() - nl;
    if (s->op == Tok::Define) {
      std::vector<const Type*> rt;
      for (size_t i = 0; i < nr; ++i) rt.push_back(expr(s->kids[nl + i], env));
      std::vector<const Type*> lt(nl, unknown_);
      if (nr == nl) {
        for (size_t i = 0; i < nl; ++i) lt[i] = default_type(rt[i]);
      } else if (nr == 1) {
        auto multi = multi_value(s->kids[nl], nl);
        for (size_t i = 0; i < nl; ++i) lt[i] = default_type(multi[i]);
      }
      for (uint32_t i = 0; i < nl; ++i) {
        Node* l = s->kids[i];
        if (l->kind != NodeKind::Ident) {
          expr(l, env);
          continue;
        }
        if (l->text == "_") continue;
        if (auto it = env.scope->names.find(l->text);
            it != env.scope->names.end() && !it->second.is_type && it->second.var) {
          l->ref = RefKind::Local;
          l->local = it->second.var;
          l->ref_decl = it->second.var->decl;
          l->type = it->second.var->type;
          it->second.var->reassignments++;
          continue;
        }
        declare_local(*env.scope, l, lt[i], nr == nl ? s->kids[nl + i] : nullptr, false);
      }
      return;
    }
    std::vector<const Type*> lt;
    for (uint32_t i = 0; i < nl; ++i) {
      lt.push_back(expr(s->kids[i], env));
      bump(s->kids[i]);
    }
    for (size_t i = 0; i < nr; ++i) {
      expr(s->kids[nl + i], env, nr == nl ? lt[i] : nullptr);
    }
  }

  void type_switch(Node* s, Env& env) {
    Scope sc;
    sc.parent = env.scope;
    Env inner = env;
    inner.scope = &sc;
    stmt(s->kids[0], inner);
    Node* guard = s->kids[1];
    Node* bound = nullptr;
    Node* assertion = nullptr;
    if (guard->kind == NodeKind::AssignStmt) {
      bound = guard->kids[0];
      assertion = guard->kids[1];
    } else {
      assertion = guard->kids[0];
    }
    const Type* xt = expr(assertion->kids[0], inner);
    assertion->type = unknown_;
    for (Node* clause : s->kids[2]->kids) {
      Scope cs;
      cs.parent = &sc;
      Env ce = inner;
      ce.scope = &cs;
      const Type* single = nullptr;
      for (uint32_t i = 0; i < clause->split; ++i) {
        Node* item = clause->kids[i];
        if (item->kind == NodeKind::Ident && item->text == "nil") {
          expr(item, ce);
          continue;
        }
        const Type* it = resolve_type(item, ce);
        if (clause->split == 1) single = it;
      }
      if (bound && bound->text != "_") {
        LocalVar& v = m_.locals_.emplace_back();
        v.name = bound->text;
        v.type = single ? single : xt;
        v.decl = bound;
        cs.names[bound->text] = ScopeEntry{false, &v, v.type};
        bound->ref = RefKind::Local;
        bound->local = &v;
        bound->ref_decl = bound;
        bound->type = xt;
      }
      for (size_t i = clause->split; i < clause->kids.size(); ++i) stmt(clause->kids[i], ce);
    }
  }

  void range(Node* s, Env& env) {
    Scope sc;
    sc.parent = env.scope;
    Env inner = env;
    inner.scope = &sc;
    const Type* xt = expr(s->kids[2], inner);
    const Type* u = under(xt);
    if (u->kind == TypeKind::Pointer) u = under(u->elem);
    const Type* kt = unknown_;
    const Type* vt = unknown_;
    switch (u->kind) {
      case TypeKind::Map:
        kt = u->key;
        vt = u->elem;
        break;
      case TypeKind::Slice:
      case TypeKind::Array:
        kt = basic("int");
        vt = u->elem;
        break;
      case TypeKind::Chan:
        kt = u->elem;
        break;
      case TypeKind::Basic:
        if (u->name == "string" || u->name == "untyped string") {
          kt = basic("int");
          vt = basic("int32");
        } else {
          kt = default_type(xt);
        }
        break;
      default:
        break;
    }
    if (s->op == Tok::Define) {
      if (s->kids[0] && s->kids[0]->kind == NodeKind::Ident) {
        declare_local(sc, s->kids[0], kt, nullptr, false);
      }
      if (s->kids[1] && s->kids[1]->kind == NodeKind::Ident) {
        declare_local(sc, s->kids[1], vt, nullptr, false);
      }
    } else {
      for (int i = 0; i < 2; ++i) {
        if (s->kids[i]) {
          expr(s->kids[i], inner);
          bump(s->kids[i]);
        }
      }
    }
    block(s->kids[3], inner);
  }

  // ---- top-level walks ---------------------------------------------------

  void walk_package_level() {
    for (const auto& pkg : m_.tree_.packages) {
      for (const auto& file : pkg->files) {
        Env env = env_for(file.get());
        for (Node* decl : file->root->kids) {
          if (decl->kind != NodeKind::GenDecl) continue;
          for (Node* spec : decl->kids) {
            if (spec->kind == NodeKind::ValueSpec) {
              walk_value_spec(spec, env);
            } else if (spec->kind == NodeKind::TypeSpec) {
              spec->kids[0]->is_type = true;
              Lookup l = lookup(spec->kids[0]->text, env);
              if (l.kind == Lookup::Package) spec->kids[0]->type = symbol_type(*l.ps, *l.sym);
            }
          }
        }
      }
    }
  }

  void walk_functions() {
    for (const FuncDecl& f : m_.funcs_) {
      Scope s;
      Env env = env_for(f.file);
      env.scope = &s;
      Node* decl = const_cast<Node*>(f.node);
      declare_receiver_type_params(decl, s);
      if (Node* recv = decl->kids[0]) {
        for (Node* field : recv->kids) {
          const Type* rt = resolve_type(field->kids[field->split], env);
          for (uint32_t i = 0; i < field->split; ++i) {
            declare_local(s, field->kids[i], rt, nullptr, true);
          }
        }
      }
      const Type* sig = func_type(decl->kids[2], env, &s);
      decl->kids[2]->is_type = true;
      decl->kids[2]->type = sig;
      decl->kids[1]->type = sig;
      block(decl->kids[3], env);
    }
  }

  SourceModel& m_;
  Type* unknown_ = nullptr;
  std::unordered_map<const Package*, PackageScope> scopes_;
  std::unordered_map<const SourceFile*, std::unordered_map<std::string, const ImportRef*>>
      imports_;
  std::unordered_map<const Node*, const Type*> literal_types_;
  std::unordered_map<const Node*, std::vector<const Type*>> spec_types_;
  std::map<std::pair<std::string, std::string>, const Type*> external_;
  std::unordered_set<const Type*> resolving_;
};

SourceModel bind_types(SourceTree tree) {
  SourceModel m;
  m.tree_ = std::move(tree);
  Binder(m).run();
  return m;
}

}  // namespace chainlint::go
