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

#ifndef CHAINLINT_SOURCE_TOKEN_HPP_
#define CHAINLINT_SOURCE_TOKEN_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chainlint::go {

enum class Tok : uint8_t {
  Eof,
  Ident,
  Int,
  Float,
  Imag,
  Char,
  String,

  Add,     // +
  Sub,     // -
  Mul,     // *
  Quo,     // /
  Rem,     // %
  And,     // &
  Or,      // |
  Xor,     // ^
  Shl,     // <<
  Shr,     // >>
  AndNot,  // &^

  AddAssign,
  SubAssign,
  MulAssign,
  QuoAssign,
  RemAssign,
  AndAssign,
  OrAssign,
  XorAssign,
  ShlAssign,
  ShrAssign,
  AndNotAssign,

  LAnd,   // &&
  LOr,    // ||
  Arrow,  // <-
  Inc,    // ++
  Dec,    // --

  Eql,     // ==
  Lss,     // <
  Gtr,     // >
  Assign,  // =
  Not,     // !
  Neq,     // !=
  Leq,     // <=
  Geq,     // >=
  Define,  // :=
  Ellipsis,

  LParen,
  LBrack,
  LBrace,
  Comma,
  Period,
  RParen,
  RBrack,
  RBrace,
  Semicolon,
  Colon,
  Tilde,

  Break,
  Case,
  Chan,
  Const,
  Continue,
  Default,
  Defer,
  Else,
  Fallthrough,
  For,
  Func,
  Go,
  Goto,
  If,
  Import,
  Interface,
  Map,
  Package,
  Range,
  Return,
  Select,
  Struct,
  Switch,
  Type,
  Var,
};

std::string_view tok_spelling(Tok t);

// Binary operator precedence (1..5), 0 for non-binary tokens.
int binary_precedence(Tok t);

bool is_assign_op(Tok t);

struct Token {
  Tok tok = Tok::Eof;
  uint32_t begin = 0;
  uint32_t end = 0;
  std::string_view text;
  // Semicolon synthesized at a newline or end of file.
  bool implicit = false;
};

struct Comment {
  uint32_t begin = 0;
  uint32_t end = 0;
  std::string_view text;  // includes the leading "//" or "/*"
};

class ParseError : public std::runtime_error {
 public:
  ParseError(uint32_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  uint32_t offset() const { return offset_; }

 private:
  uint32_t offset_;
};

struct LexResult {
  std::vector<Token> tokens;  // terminated by Eof
  std::vector<Comment> comments;
};

// Tokenizes Go source with automatic semicolon insertion. Throws ParseError.
LexResult lex(std::string_view src);

}  // namespace chainlint::go

#endif  // CHAINLINT_SOURCE_TOKEN_HPP_
