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

#include "source/parser.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace chainlint::go {

namespace {

enum class SimpleMode { Basic, LabelOk, RangeOk };

class Parser {
 public:
  explicit Parser(SourceFile& file) : f_(file) {}

  void run() {
    LexResult lexed = lex(f_.source);
    toks_ = std::move(lexed.tokens);
    f_.comments = std::move(lexed.comments);

    const uint32_t b = cur().begin;
    expect(Tok::Package);
    Node* name = parse_ident();
    expect_semi();
    std::vector<Node*> kids{name};
    while (tok() == Tok::Import) {
      kids.push_back(parse_gen_decl());
      expect_semi();
    }
    while (tok() != Tok::Eof) {
      kids.push_back(parse_top_decl());
    }
    f_.root = mk(NodeKind::File, b, static_cast<uint32_t>(f_.source.size()),
                 std::move(kids));
    f_.package_name = std::string(name->text);
  }

 private:
  // ---- token helpers -----------------------------------------------------

  const Token& cur() const { return toks_[i_]; }
  Tok tok() const { return toks_[i_].tok; }
  Tok peek(size_t n) const {
    return i_ + n < toks_.size() ? toks_[i_ + n].tok : Tok::Eof;
  }
  void next() {
    if (tok() != Tok::Eof) ++i_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = cur().implicit ? "newline"
                        : cur().text.empty()
                            ? std::string(tok_spelling(tok()))
                            : std::string(cur().text);
    throw ParseError(cur().begin, what + ", found '" + found + "'");
  }

  const Token& expect(Tok t) {
    if (tok() != t) {
      fail("expected '" + std::string(tok_spelling(t)) + "'");
    }
    const Token& got = cur();
    next();
    return got;
  }

  void expect_semi() {
    if (tok() == Tok::RParen || tok() == Tok::RBrace) return;
    if (tok() == Tok::Semicolon) {
      next();
      return;
    }
    fail("expected ';'");
  }

  Node* mk(NodeKind k, uint32_t b, uint32_t e, std::vector<Node*> kids = {}) {
    Node& n = f_.arena.emplace_back();
    n.kind = k;
    n.begin = b;
    n.end = e;
    n.kids = std::move(kids);
    return &n;
  }

  static uint32_t end_of(const std::vector<Node*>& v, uint32_t fallback) {
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      if (*it) return (*it)->end;
    }
    return fallback;
  }

  Node* parse_ident() {
    const Token& t = expect(Tok::Ident);
    Node* n = mk(NodeKind::Ident, t.begin, t.end);
    n->text = t.text;
    return n;
  }

  // ---- declarations ------------------------------------------------------

  Node* parse_top_decl() {
    switch (tok()) {
      case Tok::Const:
      case Tok::Var:
      case Tok::Type: {
        Node* d = parse_gen_decl();
        expect_semi();
        return d;
      }
      case Tok::Func: {
        Node* d = parse_func_decl();
        expect_semi();
        return d;
      }
      case Tok::Import:
        fail("imports must appear before other declarations");
      default:
        fail("expected declaration");
    }
  }

  Node* parse_gen_decl() {
    const Tok kw = tok();
    const uint32_t b = cur().begin;
    uint32_t e = cur().end;
    next();
    std::vector<Node*> specs;
    if (tok() == Tok::LParen) {
      next();
      while (tok() != Tok::RParen && tok() != Tok::Eof) {
        specs.push_back(parse_spec(kw));
        expect_semi();
      }
      e = expect(Tok::RParen).end;
    } else {
      Node* s = parse_spec(kw);
      specs.push_back(s);
      e = s->end;
    }
    Node* d = mk(NodeKind::GenDecl, b, e, std::move(specs));
    d->op = kw;
    return d;
  }

  Node* parse_spec(Tok kw) {
    switch (kw) {
      case Tok::Import:
        return parse_import_spec();
      case Tok::Type:
        return parse_type_spec();
      default:
        return parse_value_spec();
    }
  }

  Node* parse_import_spec() {
    const uint32_t b = cur().begin;
    Node* name = nullptr;
    if (tok() == Tok::Period) {
      name = mk(NodeKind::Ident, cur().begin, cur().end);
      name->text = cur().text;
      next();
    } else if (tok() == Tok::Ident) {
      name = parse_ident();
    }
    if (tok() != Tok::String) fail("expected import path");
    Node* path = mk(NodeKind::BasicLit, cur().begin, cur().end);
    path->op = Tok::String;
    path->text = cur().text;
    next();
    return mk(NodeKind::ImportSpec, b, path->end, {name, path});
  }

  Node* parse_value_spec() {
    const uint32_t b = cur().begin;
    std::vector<Node*> kids;
    kids.push_back(parse_ident());
    while (tok() == Tok::Comma) {
      next();
      kids.push_back(parse_ident());
    }
    const auto names = static_cast<uint32_t>(kids.size());
    Node* type = nullptr;
    if (tok() != Tok::Assign && tok() != Tok::Semicolon &&
        tok() != Tok::RParen) {
      type = parse_type();
    }
    kids.push_back(type);
    if (tok() == Tok::Assign) {
      next();
      for (Node* v : parse_expr_list()) kids.push_back(v);
    }
    const uint32_t e = end_of(kids, b);
    Node* s = mk(NodeKind::ValueSpec, b, e, std::move(kids));
    s->split = names;
    return s;
  }

  bool looks_like_type_params() const {
    // At '[' following a type name: "[T any]" vs. "[N]int".
    if (peek(1) != Tok::Ident) return false;
    switch (peek(2)) {
      case Tok::Ident:
      case Tok::Comma:
      case Tok::LBrack:
      case Tok::Interface:
      case Tok::Tilde:
      case Tok::Func:
      case Tok::Map:
      case Tok::Chan:
      case Tok::Struct:
      case Tok::Or:
        return true;
      case Tok::Mul:
        return peek(3) == Tok::Ident || peek(3) == Tok::LBrack;
      default:
        return false;
    }
  }

  Node* parse_type_spec() {
    const uint32_t b = cur().begin;
    Node* name = parse_ident();
    Node* tparams = nullptr;
    if (tok() == Tok::LBrack && looks_like_type_params()) {
      tparams = parse_param_list(Tok::LBrack, Tok::RBrack, true);
    }
    bool alias = false;
    if (tok() == Tok::Assign) {
      alias = true;
      next();
    }
    Node* type = parse_type();
    Node* s = mk(NodeKind::TypeSpec, b, type->end, {name, tparams, type});
    if (alias) s->op = Tok::Assign;
    return s;
  }

  Node* parse_func_decl() {
    const uint32_t b = expect(Tok::Func).begin;
    Node* recv = nullptr;
    if (tok() == Tok::LParen) {
      recv = parse_param_list(Tok::LParen, Tok::RParen, false);
    }
    Node* name = parse_ident();
    Node* tparams = nullptr;
    if (tok() == Tok::LBrack) {
      tparams = parse_param_list(Tok::LBrack, Tok::RBrack, true);
    }
    Node* params = parse_param_list(Tok::LParen, Tok::RParen, false);
    Node* results = parse_result();
    Node* ftype = mk(NodeKind::FuncType, b, results ? results->end : params->end,
                     {tparams, params, results});
    Node* body = nullptr;
    if (tok() == Tok::LBrace) {
      const int saved = expr_lev_;
      expr_lev_ = 0;
      body = parse_block();
      expr_lev_ = saved;
    }
    return mk(NodeKind::FuncDecl, b, body ? body->end : ftype->end,
              {recv, name, ftype, body});
  }

  // ---- parameter lists ---------------------------------------------------

  struct ParamEntry {
    Node* name = nullptr;   // explicit name followed by a type
    Node* bare = nullptr;   // lone identifier: name or type, decided later
    Node* type = nullptr;
  };

  Node* parse_param_type(bool type_params) {
    if (tok() == Tok::Ellipsis) {
      const uint32_t b = cur().begin;
      next();
      Node* elem = parse_type();
      return mk(NodeKind::EllipsisType, b, elem->end, {elem});
    }
    return type_params ? parse_constraint() : parse_type();
  }

  Node* parse_param_list(Tok open, Tok close, bool type_params) {
    const uint32_t b = expect(open).begin;
    std::vector<ParamEntry> entries;
    while (tok() != close && tok() != Tok::Eof) {
      ParamEntry e;
      if (tok() == Tok::Ident) {
        Node* id = parse_ident();
        switch (tok()) {
          case Tok::Period: {
            next();
            Node* sel = parse_ident();
            Node* t = mk(NodeKind::SelectorExpr, id->begin, sel->end, {id, sel});
            e.type = maybe_type_args(t);
            break;
          }
          case Tok::Comma:
            e.bare = id;
            break;
          default:
            if (tok() == close) {
              e.bare = id;
            } else if (tok() == Tok::LBrack && !type_params &&
                       peek(1) != Tok::RBrack && looks_like_type_args_after_ident()) {
              e.type = maybe_type_args(id);
            } else {
              e.name = id;
              e.type = parse_param_type(type_params);
            }
            break;
        }
      } else {
        e.type = parse_param_type(type_params);
      }
      entries.push_back(e);
      if (tok() != Tok::Comma) break;
      next();
    }
    const uint32_t e_end = expect(close).end;

    bool named = false;
    for (const auto& e : entries) named = named || e.name != nullptr;

    std::vector<Node*> fields;
    if (named) {
      std::vector<Node*> pending;
      for (const auto& e : entries) {
        if (e.bare) {
          pending.push_back(e.bare);
        } else if (e.name) {
          pending.push_back(e.name);
          fields.push_back(make_field(pending, e.type, nullptr));
          pending.clear();
        } else {
          throw ParseError(e.type->begin, "mixed named and unnamed parameters");
        }
      }
      if (!pending.empty()) {
        throw ParseError(pending.back()->begin, "missing parameter type");
      }
    } else {
      for (const auto& e : entries) {
        fields.push_back(make_field({}, e.bare ? e.bare : e.type, nullptr));
      }
    }
    return mk(NodeKind::FieldList, b, e_end, std::move(fields));
  }

  // "x [" inside a parameter list: parameter named x of array/slice type,
  // unless the bracket closes over a type list followed by ',' or ')'.
  bool looks_like_type_args_after_ident() const {
    int depth = 0;
    for (size_t k = i_; k < toks_.size(); ++k) {
      Tok t = toks_[k].tok;
      if (t == Tok::LBrack) ++depth;
      if (t == Tok::RBrack && --depth == 0) {
        Tok after = k + 1 < toks_.size() ? toks_[k + 1].tok : Tok::Eof;
        return after == Tok::Comma || after == Tok::RParen;
      }
      if (t == Tok::Eof || t == Tok::Semicolon) return false;
    }
    return false;
  }

  Node* make_field(std::vector<Node*> names, Node* type, Node* tag) {
    const uint32_t b = names.empty() ? type->begin : names.front()->begin;
    const uint32_t e = tag ? tag->end : type->end;
    const auto n = static_cast<uint32_t>(names.size());
    names.push_back(type);
    names.push_back(tag);
    Node* f = mk(NodeKind::Field, b, e, std::move(names));
    f->split = n;
    return f;
  }

  Node* parse_result() {
    if (tok() == Tok::LParen) {
      return parse_param_list(Tok::LParen, Tok::RParen, false);
    }
    if (can_start_type(tok())) {
      Node* t = parse_type();
      return mk(NodeKind::FieldList, t->begin, t->end,
                {make_field({}, t, nullptr)});
    }
    return nullptr;
  }

  static bool can_start_type(Tok t) {
    switch (t) {
      case Tok::Ident:
      case Tok::LBrack:
      case Tok::Struct:
      case Tok::Mul:
      case Tok::Func:
      case Tok::Interface:
      case Tok::Map:
      case Tok::Chan:
      case Tok::LParen:
      case Tok::Arrow:
        return true;
      default:
        return false;
    }
  }

  // ---- types -------------------------------------------------------------

  Node* parse_type_name() {
    Node* id = parse_ident();
    if (tok() == Tok::Period) {
      next();
      Node* sel = parse_ident();
      return mk(NodeKind::SelectorExpr, id->begin, sel->end, {id, sel});
    }
    return id;
  }

  Node* maybe_type_args(Node* t) {
    if (tok() != Tok::LBrack) return t;
    next();
    ++expr_lev_;
    std::vector<Node*> kids{t};
    while (tok() != Tok::RBrack && tok() != Tok::Eof) {
      kids.push_back(parse_type());
      if (tok() != Tok::Comma) break;
      next();
    }
    --expr_lev_;
    const uint32_t e = expect(Tok::RBrack).end;
    return mk(NodeKind::IndexExpr, t->begin, e, std::move(kids));
  }

  Node* parse_type() {
    const uint32_t b = cur().begin;
    switch (tok()) {
      case Tok::Ident:
        return maybe_type_args(parse_type_name());
      case Tok::LBrack: {
        next();
        if (tok() == Tok::RBrack) {
          next();
          Node* elem = parse_type();
          return mk(NodeKind::SliceType, b, elem->end, {elem});
        }
        Node* len = nullptr;
        if (tok() == Tok::Ellipsis) {
          next();
        } else {
          ++expr_lev_;
          len = parse_expr();
          --expr_lev_;
        }
        expect(Tok::RBrack);
        Node* elem = parse_type();
        return mk(NodeKind::ArrayType, b, elem->end, {len, elem});
      }
      case Tok::Struct:
        return parse_struct_type();
      case Tok::Mul: {
        next();
        Node* x = parse_type();
        return mk(NodeKind::StarExpr, b, x->end, {x});
      }
      case Tok::Func:
        return parse_func_type();
      case Tok::Interface:
        return parse_interface_type();
      case Tok::Map: {
        next();
        expect(Tok::LBrack);
        Node* key = parse_type();
        expect(Tok::RBrack);
        Node* value = parse_type();
        return mk(NodeKind::MapType, b, value->end, {key, value});
      }
      case Tok::Chan: {
        next();
        uint32_t dir = 0;
        if (tok() == Tok::Arrow) {
          next();
          dir = 1;
        }
        Node* elem = parse_type();
        Node* c = mk(NodeKind::ChanType, b, elem->end, {elem});
        c->split = dir;
        return c;
      }
      case Tok::Arrow: {
        next();
        expect(Tok::Chan);
        Node* elem = parse_type();
        Node* c = mk(NodeKind::ChanType, b, elem->end, {elem});
        c->split = 2;
        return c;
      }
      case Tok::LParen: {
        next();
        Node* x = parse_type();
        const uint32_t e = expect(Tok::RParen).end;
        return mk(NodeKind::ParenExpr, b, e, {x});
      }
      default:
        fail("expected type");
    }
  }

  Node* parse_func_type() {
    const uint32_t b = expect(Tok::Func).begin;
    Node* params = parse_param_list(Tok::LParen, Tok::RParen, false);
    Node* results = parse_result();
    return mk(NodeKind::FuncType, b, results ? results->end : params->end,
              {nullptr, params, results});
  }

  Node* parse_struct_type() {
    const uint32_t b = expect(Tok::Struct).begin;
    expect(Tok::LBrace);
    std::vector<Node*> fields;
    while (tok() != Tok::RBrace && tok() != Tok::Eof) {
      fields.push_back(parse_struct_field());
      expect_semi();
    }
    const uint32_t e = expect(Tok::RBrace).end;
    return mk(NodeKind::StructType, b, e, std::move(fields));
  }

  Node* parse_tag() {
    if (tok() != Tok::String) return nullptr;
    Node* t = mk(NodeKind::BasicLit, cur().begin, cur().end);
    t->op = Tok::String;
    t->text = cur().text;
    next();
    return t;
  }

  Node* parse_struct_field() {
    if (tok() == Tok::Ident) {
      Node* id = parse_ident();
      if (tok() == Tok::Period) {
        next();
        Node* sel = parse_ident();
        Node* t = maybe_type_args(
            mk(NodeKind::SelectorExpr, id->begin, sel->end, {id, sel}));
        return make_field({}, t, parse_tag());
      }
      if (tok() == Tok::Semicolon || tok() == Tok::RBrace || tok() == Tok::String) {
        return make_field({}, id, parse_tag());
      }
      std::vector<Node*> names{id};
      while (tok() == Tok::Comma) {
        next();
        names.push_back(parse_ident());
      }
      Node* t = parse_type();
      return make_field(std::move(names), t, parse_tag());
    }
    if (tok() == Tok::Mul) {
      const uint32_t b = cur().begin;
      next();
      Node* x = maybe_type_args(parse_type_name());
      Node* t = mk(NodeKind::StarExpr, b, x->end, {x});
      return make_field({}, t, parse_tag());
    }
    Node* t = parse_type();
    return make_field({}, t, parse_tag());
  }

  Node* parse_constraint_term() {
    if (tok() == Tok::Tilde) {
      const uint32_t b = cur().begin;
      next();
      Node* t = parse_type();
      Node* u = mk(NodeKind::UnaryExpr, b, t->end, {t});
      u->op = Tok::Tilde;
      return u;
    }
    return parse_type();
  }

  Node* union_rest(Node* x) {
    while (tok() == Tok::Or) {
      next();
      Node* y = parse_constraint_term();
      Node* u = mk(NodeKind::BinaryExpr, x->begin, y->end, {x, y});
      u->op = Tok::Or;
      x = u;
    }
    return x;
  }

  Node* parse_constraint() { return union_rest(parse_constraint_term()); }

  Node* parse_interface_type() {
    const uint32_t b = expect(Tok::Interface).begin;
    expect(Tok::LBrace);
    std::vector<Node*> elems;
    while (tok() != Tok::RBrace && tok() != Tok::Eof) {
      if (tok() == Tok::Ident) {
        Node* id = parse_ident();
        if (tok() == Tok::LParen) {
          Node* params = parse_param_list(Tok::LParen, Tok::RParen, false);
          Node* results = parse_result();
          Node* ft = mk(NodeKind::FuncType, params->begin,
                        results ? results->end : params->end,
                        {nullptr, params, results});
          elems.push_back(make_field({id}, ft, nullptr));
        } else {
          Node* t = id;
          if (tok() == Tok::Period) {
            next();
            Node* sel = parse_ident();
            t = mk(NodeKind::SelectorExpr, id->begin, sel->end, {id, sel});
          }
          t = union_rest(maybe_type_args(t));
          elems.push_back(make_field({}, t, nullptr));
        }
      } else {
        elems.push_back(make_field({}, parse_constraint(), nullptr));
      }
      expect_semi();
    }
    const uint32_t e = expect(Tok::RBrace).end;
    return mk(NodeKind::InterfaceType, b, e, std::move(elems));
  }

  // ---- expressions -------------------------------------------------------

  std::vector<Node*> parse_expr_list() {
    std::vector<Node*> list{parse_expr()};
    while (tok() == Tok::Comma) {
      next();
      list.push_back(parse_expr());
    }
    return list;
  }

  Node* parse_expr() { return parse_binary(1); }

  Node* parse_binary(int min_prec) {
    Node* x = parse_unary();
    while (true) {
      const int prec = binary_precedence(tok());
      if (prec < min_prec) return x;
      const Tok op = tok();
      next();
      Node* y = parse_binary(prec + 1);
      Node* bin = mk(NodeKind::BinaryExpr, x->begin, y->end, {x, y});
      bin->op = op;
      x = bin;
    }
  }

  Node* parse_unary() {
    const uint32_t b = cur().begin;
    switch (tok()) {
      case Tok::Add:
      case Tok::Sub:
      case Tok::Not:
      case Tok::Xor:
      case Tok::And:
      case Tok::Tilde: {
        const Tok op = tok();
        next();
        Node* x = parse_unary();
        Node* u = mk(NodeKind::UnaryExpr, b, x->end, {x});
        u->op = op;
        return u;
      }
      case Tok::Arrow: {
        if (peek(1) == Tok::Chan) {
          return parse_suffixes(parse_type());
        }
        next();
        Node* x = parse_unary();
        Node* u = mk(NodeKind::UnaryExpr, b, x->end, {x});
        u->op = Tok::Arrow;
        return u;
      }
      case Tok::Mul: {
        next();
        Node* x = parse_unary();
        return mk(NodeKind::StarExpr, b, x->end, {x});
      }
      default:
        return parse_suffixes(parse_operand());
    }
  }

  Node* parse_operand() {
    const uint32_t b = cur().begin;
    switch (tok()) {
      case Tok::Ident:
        return parse_ident();
      case Tok::Int:
      case Tok::Float:
      case Tok::Imag:
      case Tok::Char:
      case Tok::String: {
        Node* lit = mk(NodeKind::BasicLit, cur().begin, cur().end);
        lit->op = tok();
        lit->text = cur().text;
        next();
        return lit;
      }
      case Tok::LParen: {
        next();
        ++expr_lev_;
        Node* x = parse_expr();
        --expr_lev_;
        const uint32_t e = expect(Tok::RParen).end;
        return mk(NodeKind::ParenExpr, b, e, {x});
      }
      case Tok::Func: {
        Node* ft = parse_func_type();
        if (tok() == Tok::LBrace) {
          ++expr_lev_;
          Node* body = parse_block();
          --expr_lev_;
          return mk(NodeKind::FuncLit, b, body->end, {ft, body});
        }
        return ft;
      }
      case Tok::LBrack:
      case Tok::Struct:
      case Tok::Map:
      case Tok::Chan:
      case Tok::Interface:
        return parse_type();
      default:
        fail("expected operand");
    }
  }

  static bool is_type_name(const Node* x) {
    return x->kind == NodeKind::Ident ||
           (x->kind == NodeKind::SelectorExpr &&
            x->kids[0]->kind == NodeKind::Ident);
  }

  static bool is_literal_type(const Node* x) {
    switch (x->kind) {
      case NodeKind::Ident:
      case NodeKind::ArrayType:
      case NodeKind::SliceType:
      case NodeKind::StructType:
      case NodeKind::MapType:
        return true;
      case NodeKind::SelectorExpr:
        return x->kids[0]->kind == NodeKind::Ident;
      case NodeKind::IndexExpr:
        return is_type_name(x->kids[0]);
      default:
        return false;
    }
  }

  Node* parse_suffixes(Node* x) {
    while (true) {
      switch (tok()) {
        case Tok::Period: {
          next();
          if (tok() == Tok::Ident) {
            Node* sel = parse_ident();
            x = mk(NodeKind::SelectorExpr, x->begin, sel->end, {x, sel});
          } else if (tok() == Tok::LParen) {
            next();
            Node* t = nullptr;
            if (tok() == Tok::Type) {
              next();
            } else {
              t = parse_type();
            }
            const uint32_t e = expect(Tok::RParen).end;
            x = mk(NodeKind::TypeAssertExpr, x->begin, e, {x, t});
          } else {
            fail("expected selector or type assertion");
          }
          break;
        }
        case Tok::LBrack:
          x = parse_index_or_slice(x);
          break;
        case Tok::LParen:
          x = parse_call(x);
          break;
        case Tok::LBrace:
          if (is_literal_type(x) && (expr_lev_ >= 0 || !is_type_name(x)) &&
              !(expr_lev_ < 0 && x->kind == NodeKind::IndexExpr)) {
            x = parse_literal_value(x);
            break;
          }
          return x;
        default:
          return x;
      }
    }
  }

  Node* parse_index_or_slice(Node* x) {
    next();  // '['
    ++expr_lev_;
    Node* idx[3] = {nullptr, nullptr, nullptr};
    int colons = 0;
    if (tok() != Tok::Colon) {
      idx[0] = parse_expr();
      if (tok() == Tok::Comma) {
        std::vector<Node*> kids{x, idx[0]};
        while (tok() == Tok::Comma) {
          next();
          if (tok() == Tok::RBrack) break;
          kids.push_back(parse_expr());
        }
        --expr_lev_;
        const uint32_t e = expect(Tok::RBrack).end;
        return mk(NodeKind::IndexExpr, x->begin, e, std::move(kids));
      }
    }
    while (tok() == Tok::Colon && colons < 2) {
      ++colons;
      next();
      if (tok() != Tok::Colon && tok() != Tok::RBrack) {
        idx[colons] = parse_expr();
      }
    }
    --expr_lev_;
    const uint32_t e = expect(Tok::RBrack).end;
    if (colons > 0) {
      return mk(NodeKind::SliceExpr, x->begin, e, {x, idx[0], idx[1], idx[2]});
    }
    if (!idx[0]) throw ParseError(e, "expected operand");
    return mk(NodeKind::IndexExpr, x->begin, e, {x, idx[0]});
  }

  Node* parse_call(Node* fun) {
    next();  // '('
    ++expr_lev_;
    std::vector<Node*> kids{fun};
    uint32_t dots = 0;
    while (tok() != Tok::RParen && tok() != Tok::Eof) {
      kids.push_back(parse_expr());
      if (tok() == Tok::Ellipsis) {
        dots = 1;
        next();
      }
      if (tok() != Tok::Comma) break;
      next();
    }
    --expr_lev_;
    const uint32_t e = expect(Tok::RParen).end;
    Node* call = mk(NodeKind::CallExpr, fun->begin, e, std::move(kids));
    call->split = dots;
    return call;
  }

  Node* parse_element_value() {
    if (tok() == Tok::LBrace) return parse_literal_value(nullptr);
    return parse_expr();
  }

  Node* parse_literal_value(Node* type) {
    const uint32_t lb = expect(Tok::LBrace).begin;
    ++expr_lev_;
    std::vector<Node*> kids{type};
    while (tok() != Tok::RBrace && tok() != Tok::Eof) {
      Node* x = parse_element_value();
      if (tok() == Tok::Colon) {
        next();
        Node* v = parse_element_value();
        x = mk(NodeKind::KeyValueExpr, x->begin, v->end, {x, v});
      }
      kids.push_back(x);
      if (tok() != Tok::Comma) break;
      next();
    }
    --expr_lev_;
    const uint32_t e = expect(Tok::RBrace).end;
    return mk(NodeKind::CompositeLit, type ? type->begin : lb, e, std::move(kids));
  }

  // ---- statements --------------------------------------------------------

  Node* parse_block() {
    const uint32_t b = expect(Tok::LBrace).begin;
    std::vector<Node*> stmts = parse_stmt_list();
    const uint32_t e = expect(Tok::RBrace).end;
    return mk(NodeKind::BlockStmt, b, e, std::move(stmts));
  }

  std::vector<Node*> parse_stmt_list() {
    std::vector<Node*> stmts;
    while (tok() != Tok::Case && tok() != Tok::Default && tok() != Tok::RBrace &&
           tok() != Tok::Eof) {
      if (Node* s = parse_stmt()) stmts.push_back(s);
    }
    return stmts;
  }

  Node* parse_stmt() {
    const uint32_t b = cur().begin;
    switch (tok()) {
      case Tok::Const:
      case Tok::Type:
      case Tok::Var: {
        Node* d = parse_gen_decl();
        expect_semi();
        return mk(NodeKind::DeclStmt, d->begin, d->end, {d});
      }
      case Tok::Ident:
      case Tok::Int:
      case Tok::Float:
      case Tok::Imag:
      case Tok::Char:
      case Tok::String:
      case Tok::Func:
      case Tok::LParen:
      case Tok::LBrack:
      case Tok::Struct:
      case Tok::Map:
      case Tok::Chan:
      case Tok::Interface:
      case Tok::Add:
      case Tok::Sub:
      case Tok::Mul:
      case Tok::And:
      case Tok::Xor:
      case Tok::Arrow:
      case Tok::Not: {
        Node* s = parse_simple_stmt(SimpleMode::LabelOk);
        if (s->kind != NodeKind::LabeledStmt) expect_semi();
        return s;
      }
      case Tok::Go:
      case Tok::Defer: {
        const NodeKind k = tok() == Tok::Go ? NodeKind::GoStmt : NodeKind::DeferStmt;
        next();
        Node* call = parse_expr();
        expect_semi();
        return mk(k, b, call->end, {call});
      }
      case Tok::Return: {
        uint32_t e = cur().end;
        next();
        std::vector<Node*> results;
        if (tok() != Tok::Semicolon && tok() != Tok::RBrace) {
          results = parse_expr_list();
          e = results.back()->end;
        }
        expect_semi();
        return mk(NodeKind::ReturnStmt, b, e, std::move(results));
      }
      case Tok::Break:
      case Tok::Continue:
      case Tok::Goto:
      case Tok::Fallthrough: {
        const Tok kw = tok();
        uint32_t e = cur().end;
        next();
        Node* label = nullptr;
        if (kw != Tok::Fallthrough && tok() == Tok::Ident) {
          label = parse_ident();
          e = label->end;
        }
        expect_semi();
        Node* s = mk(NodeKind::BranchStmt, b, e, {label});
        s->op = kw;
        return s;
      }
      case Tok::LBrace: {
        Node* s = parse_block();
        expect_semi();
        return s;
      }
      case Tok::If: {
        Node* s = parse_if();
        expect_semi();
        return s;
      }
      case Tok::Switch: {
        Node* s = parse_switch();
        expect_semi();
        return s;
      }
      case Tok::Select: {
        Node* s = parse_select();
        expect_semi();
        return s;
      }
      case Tok::For: {
        Node* s = parse_for();
        expect_semi();
        return s;
      }
      case Tok::Semicolon: {
        Node* s = mk(NodeKind::EmptyStmt, b, cur().end);
        next();
        return s;
      }
      case Tok::RBrace:
        return nullptr;
      default:
        fail("expected statement");
    }
  }

  Node* parse_simple_stmt(SimpleMode mode) {
    const uint32_t b = cur().begin;
    if (mode == SimpleMode::RangeOk && tok() == Tok::Range) {
      next();
      Node* x = parse_expr();
      return mk(NodeKind::RangeStmt, b, x->end, {nullptr, nullptr, x, nullptr});
    }
    std::vector<Node*> lhs = parse_expr_list();
    const Tok t = tok();
    if (t == Tok::Define || is_assign_op(t)) {
      next();
      if (mode == SimpleMode::RangeOk && tok() == Tok::Range &&
          (t == Tok::Define || t == Tok::Assign)) {
        next();
        Node* x = parse_expr();
        Node* r = mk(NodeKind::RangeStmt, b, x->end,
                     {lhs[0], lhs.size() > 1 ? lhs[1] : nullptr, x, nullptr});
        r->op = t;
        return r;
      }
      std::vector<Node*> rhs = parse_expr_list();
      const auto n = static_cast<uint32_t>(lhs.size());
      const uint32_t e = rhs.back()->end;
      for (Node* r : rhs) lhs.push_back(r);
      Node* a = mk(NodeKind::AssignStmt, b, e, std::move(lhs));
      a->op = t;
      a->split = n;
      return a;
    }
    if (t == Tok::Colon && mode == SimpleMode::LabelOk && lhs.size() == 1 &&
        lhs[0]->kind == NodeKind::Ident) {
      next();
      Node* stmt = nullptr;
      if (tok() == Tok::RBrace) {
        stmt = mk(NodeKind::EmptyStmt, cur().begin, cur().begin);
      } else {
        stmt = parse_stmt();
        if (!stmt) stmt = mk(NodeKind::EmptyStmt, cur().begin, cur().begin);
      }
      return mk(NodeKind::LabeledStmt, b, stmt->end, {lhs[0], stmt});
    }
    if (t == Tok::Arrow) {
      next();
      Node* v = parse_expr();
      return mk(NodeKind::SendStmt, b, v->end, {lhs[0], v});
    }
    if (t == Tok::Inc || t == Tok::Dec) {
      const uint32_t e = cur().end;
      next();
      Node* s = mk(NodeKind::IncDecStmt, b, e, {lhs[0]});
      s->op = t;
      return s;
    }
    if (lhs.size() > 1) fail("expected assignment");
    return mk(NodeKind::ExprStmt, b, lhs[0]->end, {lhs[0]});
  }

  Node* unwrap_expr_stmt(Node* s) {
    if (!s) return nullptr;
    if (s->kind != NodeKind::ExprStmt) {
      throw ParseError(s->begin, "expected expression");
    }
    return s->kids[0];
  }

  Node* parse_if() {
    const uint32_t b = expect(Tok::If).begin;
    const int saved = expr_lev_;
    expr_lev_ = -1;
    Node* init = nullptr;
    Node* cond = nullptr;
    if (tok() != Tok::LBrace) {
      if (tok() != Tok::Semicolon) init = parse_simple_stmt(SimpleMode::Basic);
      if (tok() == Tok::Semicolon) {
        next();
        if (tok() != Tok::LBrace) {
          cond = unwrap_expr_stmt(parse_simple_stmt(SimpleMode::Basic));
        }
      } else {
        cond = unwrap_expr_stmt(init);
        init = nullptr;
      }
    }
    expr_lev_ = saved;
    if (!cond) fail("missing condition in if statement");
    Node* body = parse_block();
    Node* else_branch = nullptr;
    if (tok() == Tok::Else) {
      next();
      if (tok() == Tok::If) {
        else_branch = parse_if();
      } else if (tok() == Tok::LBrace) {
        else_branch = parse_block();
      } else {
        fail("expected if statement or block");
      }
    }
    return mk(NodeKind::IfStmt, b, else_branch ? else_branch->end : body->end,
              {init, cond, body, else_branch});
  }

  static bool is_type_switch_guard(const Node* s) {
    if (!s) return false;
    const Node* x = nullptr;
    if (s->kind == NodeKind::ExprStmt) {
      x = s->kids[0];
    } else if (s->kind == NodeKind::AssignStmt && s->op == Tok::Define &&
               s->split == 1 && s->kids.size() == 2) {
      x = s->kids[1];
    }
    return x && x->kind == NodeKind::TypeAssertExpr && x->kids[1] == nullptr;
  }

  Node* parse_case_clause() {
    const uint32_t b = cur().begin;
    std::vector<Node*> kids;
    uint32_t n = 0;
    bool is_default = false;
    if (tok() == Tok::Case) {
      next();
      kids = parse_expr_list();
      n = static_cast<uint32_t>(kids.size());
    } else {
      expect(Tok::Default);
      is_default = true;
    }
    const uint32_t colon = expect(Tok::Colon).end;
    for (Node* s : parse_stmt_list()) kids.push_back(s);
    const uint32_t e = end_of(kids, colon);
    Node* c = mk(NodeKind::CaseClause, b, e, std::move(kids));
    c->split = n;
    if (is_default) c->op = Tok::Default;
    return c;
  }

  Node* parse_switch() {
    const uint32_t b = expect(Tok::Switch).begin;
    const int saved = expr_lev_;
    expr_lev_ = -1;
    Node* s1 = nullptr;
    Node* s2 = nullptr;
    if (tok() != Tok::LBrace) {
      if (tok() != Tok::Semicolon) s2 = parse_simple_stmt(SimpleMode::Basic);
      if (tok() == Tok::Semicolon) {
        next();
        s1 = s2;
        s2 = nullptr;
        if (tok() != Tok::LBrace) s2 = parse_simple_stmt(SimpleMode::Basic);
      }
    }
    expr_lev_ = saved;
    const bool type_switch = is_type_switch_guard(s2);
    const uint32_t lb = expect(Tok::LBrace).begin;
    std::vector<Node*> clauses;
    while (tok() == Tok::Case || tok() == Tok::Default) {
      clauses.push_back(parse_case_clause());
    }
    const uint32_t e = expect(Tok::RBrace).end;
    Node* body = mk(NodeKind::BlockStmt, lb, e, std::move(clauses));
    if (type_switch) return mk(NodeKind::TypeSwitchStmt, b, e, {s1, s2, body});
    return mk(NodeKind::SwitchStmt, b, e, {s1, unwrap_expr_stmt(s2), body});
  }

  Node* parse_select() {
    const uint32_t b = expect(Tok::Select).begin;
    const uint32_t lb = expect(Tok::LBrace).begin;
    std::vector<Node*> clauses;
    while (tok() == Tok::Case || tok() == Tok::Default) {
      const uint32_t cb = cur().begin;
      Node* comm = nullptr;
      bool is_default = false;
      if (tok() == Tok::Case) {
        next();
        comm = parse_simple_stmt(SimpleMode::Basic);
      } else {
        next();
        is_default = true;
      }
      const uint32_t colon = expect(Tok::Colon).end;
      std::vector<Node*> kids{comm};
      for (Node* s : parse_stmt_list()) kids.push_back(s);
      const uint32_t e = end_of(kids, colon);
      Node* c = mk(NodeKind::CommClause, cb, e, std::move(kids));
      if (is_default) c->op = Tok::Default;
      clauses.push_back(c);
    }
    const uint32_t e = expect(Tok::RBrace).end;
    Node* body = mk(NodeKind::BlockStmt, lb, e, std::move(clauses));
    return mk(NodeKind::SelectStmt, b, e, {body});
  }

  Node* parse_for() {
    const uint32_t b = expect(Tok::For).begin;
    const int saved = expr_lev_;
    expr_lev_ = -1;
    Node* s1 = nullptr;
    Node* s2 = nullptr;
    Node* s3 = nullptr;
    Node* range = nullptr;
    if (tok() != Tok::LBrace) {
      if (tok() != Tok::Semicolon) s2 = parse_simple_stmt(SimpleMode::RangeOk);
      if (s2 && s2->kind == NodeKind::RangeStmt) {
        range = s2;
      } else if (tok() == Tok::Semicolon) {
        next();
        s1 = s2;
        s2 = nullptr;
        if (tok() != Tok::Semicolon) s2 = parse_simple_stmt(SimpleMode::Basic);
        expect(Tok::Semicolon);
        if (tok() != Tok::LBrace) s3 = parse_simple_stmt(SimpleMode::Basic);
      }
    }
    expr_lev_ = saved;
    Node* body = parse_block();
    if (range) {
      range->kids[3] = body;
      range->begin = b;
      range->end = body->end;
      return range;
    }
    return mk(NodeKind::ForStmt, b, body->end, {s1, unwrap_expr_stmt(s2), s3, body});
  }

  SourceFile& f_;
  std::vector<Token> toks_;
  size_t i_ = 0;
  int expr_lev_ = 0;
};

void link_parents(Node* n) {
  for (Node* k : n->kids) {
    if (k) {
      k->parent = n;
      link_parents(k);
    }
  }
}

std::string unquote_import(std::string_view lit) {
  if (lit.size() >= 2) return std::string(lit.substr(1, lit.size() - 2));
  return std::string(lit);
}

std::string default_import_name(const std::string& path) {
  std::string_view p = path;
  auto last = [](std::string_view s) {
    auto slash = s.rfind('/');
    return slash == std::string_view::npos ? s : s.substr(slash + 1);
  };
  std::string_view name = last(p);
  // Major-version suffix: ".../foo/v2" is imported as foo.
  if (name.size() >= 2 && name[0] == 'v' &&
      name.find_first_not_of("0123456789", 1) == std::string_view::npos &&
      p.size() > name.size()) {
    name = last(p.substr(0, p.size() - name.size() - 1));
  }
  // gopkg.in/yaml.v2 style.
  if (auto dot = name.find(".v"); dot != std::string_view::npos) {
    name = name.substr(0, dot);
  }
  std::string out(name);
  if (out.rfind("go-", 0) == 0) out = out.substr(3);
  for (char& c : out) {
    if (c == '-' || c == '.') c = '_';
  }
  return out;
}

}  // namespace

void parse_file(SourceFile& file) {
  file.line_starts.clear();
  file.line_starts.push_back(0);
  for (size_t i = 0; i < file.source.size(); ++i) {
    if (file.source[i] == '\n') {
      file.line_starts.push_back(static_cast<uint32_t>(i + 1));
    }
  }
  Parser(file).run();
  link_parents(file.root);
  file.imports.clear();
  for (const Node* d : file.root->kids) {
    if (d->kind != NodeKind::GenDecl || d->op != Tok::Import) continue;
    for (const Node* spec : d->kids) {
      ImportRef ref;
      ref.path = unquote_import(spec->kids[1]->text);
      ref.name = spec->kids[0] ? std::string(spec->kids[0]->text)
                               : default_import_name(ref.path);
      ref.spec = spec;
      file.imports.push_back(std::move(ref));
    }
  }
}

LineCol SourceFile::position(uint32_t offset) const {
  auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
  const auto line = static_cast<uint32_t>(it - line_starts.begin());
  return {line, offset - line_starts[line - 1] + 1};
}

}  // namespace chainlint::go
