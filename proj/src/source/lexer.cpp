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

#include <array>
#include <utility>

#include "source/token.hpp"

namespace chainlint::go {

namespace {

constexpr std::array<std::pair<std::string_view, Tok>, 25> kKeywords = {{
    {"break", Tok::Break},
    {"case", Tok::Case},
    {"chan", Tok::Chan},
    {"const", Tok::Const},
    {"continue", Tok::Continue},
    {"default", Tok::Default},
    {"defer", Tok::Defer},
    {"else", Tok::Else},
    {"fallthrough", Tok::Fallthrough},
    {"for", Tok::For},
    {"func", Tok::Func},
    {"go", Tok::Go},
    {"goto", Tok::Goto},
    {"if", Tok::If},
    {"import", Tok::Import},
    {"interface", Tok::Interface},
    {"map", Tok::Map},
    {"package", Tok::Package},
    {"range", Tok::Range},
    {"return", Tok::Return},
    {"select", Tok::Select},
    {"struct", Tok::Struct},
    {"switch", Tok::Switch},
    {"type", Tok::Type},
    {"var", Tok::Var},
}};

bool is_letter(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c >= 0x80;
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_hex(unsigned char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Tokens after which a newline terminates the statement.
bool triggers_semicolon(Tok t) {
  switch (t) {
    case Tok::Ident:
    case Tok::Int:
    case Tok::Float:
    case Tok::Imag:
    case Tok::Char:
    case Tok::String:
    case Tok::Break:
    case Tok::Continue:
    case Tok::Fallthrough:
    case Tok::Return:
    case Tok::Inc:
    case Tok::Dec:
    case Tok::RParen:
    case Tok::RBrack:
    case Tok::RBrace:
      return true;
    default:
      return false;
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult out;
    bool want_semi = false;
    while (true) {
      // Skip horizontal whitespace; a newline may end the statement.
      while (pos_ < src_.size()) {
        char c = src_[pos_];
        if (c == ' ' || c == '\t' || c == '\r') {
          ++pos_;
        } else if (c == '\n') {
          if (want_semi) {
            push_semi(out, pos_);
            want_semi = false;
          }
          ++pos_;
        } else if (c == '/' && peek(1) == '/') {
          uint32_t start = pos_;
          while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
          out.comments.push_back({start, pos_, src_.substr(start, pos_ - start)});
        } else if (c == '/' && peek(1) == '*') {
          uint32_t start = pos_;
          auto close = src_.find("*/", pos_ + 2);
          if (close == std::string_view::npos) {
            throw ParseError(start, "comment not terminated");
          }
          bool has_newline =
              src_.substr(pos_, close - pos_).find('\n') != std::string_view::npos;
          pos_ = static_cast<uint32_t>(close + 2);
          out.comments.push_back({start, pos_, src_.substr(start, pos_ - start)});
          if (has_newline && want_semi) {
            push_semi(out, start);
            want_semi = false;
          }
        } else {
          break;
        }
      }
      if (pos_ >= src_.size()) {
        if (want_semi) push_semi(out, pos_);
        out.tokens.push_back({Tok::Eof, pos_, pos_, {}, false});
        return out;
      }
      Token t = scan();
      out.tokens.push_back(t);
      want_semi = triggers_semicolon(t.tok);
    }
  }

 private:
  char peek(size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void push_semi(LexResult& out, uint32_t at) {
    out.tokens.push_back({Tok::Semicolon, at, at, {}, true});
  }

  Token make(Tok tok, uint32_t start) {
    return {tok, start, pos_, src_.substr(start, pos_ - start), false};
  }

  Token scan() {
    uint32_t start = pos_;
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (is_letter(c)) {
      while (pos_ < src_.size() &&
             (is_letter(static_cast<unsigned char>(src_[pos_])) ||
              is_digit(static_cast<unsigned char>(src_[pos_])))) {
        ++pos_;
      }
      std::string_view word = src_.substr(start, pos_ - start);
      for (const auto& [kw, tok] : kKeywords) {
        if (kw == word) return make(tok, start);
      }
      return make(Tok::Ident, start);
    }
    if (is_digit(c) || (c == '.' && is_digit(static_cast<unsigned char>(peek(1))))) {
      return scan_number(start);
    }
    switch (c) {
      case '"':
        return scan_string(start);
      case '`': {
        auto close = src_.find('`', pos_ + 1);
        if (close == std::string_view::npos) {
          throw ParseError(start, "raw string literal not terminated");
        }
        pos_ = static_cast<uint32_t>(close + 1);
        return make(Tok::String, start);
      }
      case '\'':
        return scan_rune(start);
      default:
        break;
    }
    return scan_operator(start);
  }

  Token scan_number(uint32_t start) {
    bool is_float = false;
    if (src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      while (pos_ < src_.size() && (is_hex(src_[pos_]) || src_[pos_] == '_')) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '.') {
        is_float = true;
        ++pos_;
        while (pos_ < src_.size() && (is_hex(src_[pos_]) || src_[pos_] == '_')) ++pos_;
      }
      if (pos_ < src_.size() && (src_[pos_] == 'p' || src_[pos_] == 'P')) {
        is_float = true;
        ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
    } else if (src_[pos_] == '0' && (peek(1) == 'b' || peek(1) == 'B' ||
                                     peek(1) == 'o' || peek(1) == 'O')) {
      pos_ += 2;
      while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
    } else {
      while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '.') {
        is_float = true;
        ++pos_;
        while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        is_float = true;
        ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
        if (pos_ >= src_.size() || !is_digit(src_[pos_])) {
          throw ParseError(start, "exponent has no digits");
        }
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
    }
    if (pos_ < src_.size() && src_[pos_] == 'i') {
      ++pos_;
      return make(Tok::Imag, start);
    }
    if (pos_ < src_.size() && is_letter(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError(pos_, "invalid character in numeric literal");
    }
    return make(is_float ? Tok::Float : Tok::Int, start);
  }

  Token scan_string(uint32_t start) {
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw ParseError(start, "string literal not terminated");
      }
      char c = src_[pos_++];
      if (c == '\\') {
        if (pos_ >= src_.size()) throw ParseError(start, "string literal not terminated");
        ++pos_;
      } else if (c == '"') {
        return make(Tok::String, start);
      }
    }
  }

  Token scan_rune(uint32_t start) {
    ++pos_;
    size_t n = 0;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw ParseError(start, "rune literal not terminated");
      }
      char c = src_[pos_++];
      if (c == '\\') {
        if (pos_ >= src_.size()) throw ParseError(start, "rune literal not terminated");
        ++pos_;
      } else if (c == '\'') {
        if (n == 0) throw ParseError(start, "empty rune literal");
        return make(Tok::Char, start);
      }
      ++n;
    }
  }

  Token scan_operator(uint32_t start) {
    char c = src_[pos_++];
    auto if_next = [&](char want, Tok yes, Tok no) {
      if (pos_ < src_.size() && src_[pos_] == want) {
        ++pos_;
        return yes;
      }
      return no;
    };
    Tok t;
    switch (c) {
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '[': t = Tok::LBrack; break;
      case ']': t = Tok::RBrack; break;
      case '{': t = Tok::LBrace; break;
      case '}': t = Tok::RBrace; break;
      case ',': t = Tok::Comma; break;
      case ';': t = Tok::Semicolon; break;
      case '~': t = Tok::Tilde; break;
      case '.':
        if (peek(0) == '.' && peek(1) == '.') {
          pos_ += 2;
          t = Tok::Ellipsis;
        } else {
          t = Tok::Period;
        }
        break;
      case ':': t = if_next('=', Tok::Define, Tok::Colon); break;
      case '+':
        if (peek(0) == '+') {
          ++pos_;
          t = Tok::Inc;
        } else {
          t = if_next('=', Tok::AddAssign, Tok::Add);
        }
        break;
      case '-':
        if (peek(0) == '-') {
          ++pos_;
          t = Tok::Dec;
        } else {
          t = if_next('=', Tok::SubAssign, Tok::Sub);
        }
        break;
      case '*': t = if_next('=', Tok::MulAssign, Tok::Mul); break;
      case '/': t = if_next('=', Tok::QuoAssign, Tok::Quo); break;
      case '%': t = if_next('=', Tok::RemAssign, Tok::Rem); break;
      case '^': t = if_next('=', Tok::XorAssign, Tok::Xor); break;
      case '=': t = if_next('=', Tok::Eql, Tok::Assign); break;
      case '!': t = if_next('=', Tok::Neq, Tok::Not); break;
      case '<':
        if (peek(0) == '-') {
          ++pos_;
          t = Tok::Arrow;
        } else if (peek(0) == '<') {
          ++pos_;
          t = if_next('=', Tok::ShlAssign, Tok::Shl);
        } else {
          t = if_next('=', Tok::Leq, Tok::Lss);
        }
        break;
      case '>':
        if (peek(0) == '>') {
          ++pos_;
          t = if_next('=', Tok::ShrAssign, Tok::Shr);
        } else {
          t = if_next('=', Tok::Geq, Tok::Gtr);
        }
        break;
      case '&':
        if (peek(0) == '^') {
          ++pos_;
          t = if_next('=', Tok::AndNotAssign, Tok::AndNot);
        } else if (peek(0) == '&') {
          ++pos_;
          t = Tok::LAnd;
        } else {
          t = if_next('=', Tok::AndAssign, Tok::And);
        }
        break;
      case '|':
        if (peek(0) == '|') {
          ++pos_;
          t = Tok::LOr;
        } else {
          t = if_next('=', Tok::OrAssign, Tok::Or);
        }
        break;
      default:
        throw ParseError(start, std::string("illegal character '") + c + "'");
    }
    return make(t, start);
  }

  std::string_view src_;
  uint32_t pos_ = 0;
};

}  // namespace

LexResult lex(std::string_view src) { return Lexer(src).run(); }

std::string_view tok_spelling(Tok t) {
  switch (t) {
    case Tok::Add: return "+";
    case Tok::Sub: return "-";
    case Tok::Mul: return "*";
    case Tok::Quo: return "/";
    case Tok::Rem: return "%";
    case Tok::And: return "&";
    case Tok::Or: return "|";
    case Tok::Xor: return "^";
    case Tok::Shl: return "<<";
    case Tok::Shr: return ">>";
    case Tok::AndNot: return "&^";
    case Tok::AddAssign: return "+=";
    case Tok::SubAssign: return "-=";
    case Tok::MulAssign: return "*=";
    case Tok::QuoAssign: return "/=";
    case Tok::RemAssign: return "%=";
    case Tok::AndAssign: return "&=";
    case Tok::OrAssign: return "|=";
    case Tok::XorAssign: return "^=";
    case Tok::ShlAssign: return "<<=";
    case Tok::ShrAssign: return ">>=";
    case Tok::AndNotAssign: return "&^=";
    case Tok::LAnd: return "&&";
    case Tok::LOr: return "||";
    case Tok::Arrow: return "<-";
    case Tok::Inc: return "++";
    case Tok::Dec: return "--";
    case Tok::Eql: return "==";
    case Tok::Lss: return "<";
    case Tok::Gtr: return ">";
    case Tok::Assign: return "=";
    case Tok::Not: return "!";
    case Tok::Neq: return "!=";
    case Tok::Leq: return "<=";
    case Tok::Geq: return ">=";
    case Tok::Define: return ":=";
    case Tok::Ellipsis: return "...";
    case Tok::LParen: return "(";
    case Tok::LBrack: return "[";
    case Tok::LBrace: return "{";
    case Tok::Comma: return ",";
    case Tok::Period: return ".";
    case Tok::RParen: return ")";
    case Tok::RBrack: return "]";
    case Tok::RBrace: return "}";
    case Tok::Semicolon: return ";";
    case Tok::Colon: return ":";
    case Tok::Tilde: return "~";
    case Tok::Eof: return "EOF";
    case Tok::Ident: return "identifier";
    case Tok::Int:
    case Tok::Float:
    case Tok::Imag:
    case Tok::Char:
    case Tok::String: return "literal";
    default:
      break;
  }
  for (const auto& [kw, tok] : kKeywords) {
    if (tok == t) return kw;
  }
  return "?";
}

int binary_precedence(Tok t) {
  switch (t) {
    case Tok::LOr: return 1;
    case Tok::LAnd: return 2;
    case Tok::Eql:
    case Tok::Neq:
    case Tok::Lss:
    case Tok::Leq:
    case Tok::Gtr:
    case Tok::Geq: return 3;
    case Tok::Add:
    case Tok::Sub:
    case Tok::Or:
    case Tok::Xor: return 4;
    case Tok::Mul:
    case Tok::Quo:
    case Tok::Rem:
    case Tok::Shl:
    case Tok::Shr:
    case Tok::And:
    case Tok::AndNot: return 5;
    default: return 0;
  }
}

bool is_assign_op(Tok t) {
  switch (t) {
    case Tok::Assign:
    case Tok::AddAssign:
    case Tok::SubAssign:
    case Tok::MulAssign:
    case Tok::QuoAssign:
    case Tok::RemAssign:
    case Tok::AndAssign:
    case Tok::OrAssign:
    case Tok::XorAssign:
    case Tok::ShlAssign:
    case Tok::ShrAssign:
    case Tok::AndNotAssign:
      return true;
    default:
      return false;
  }
}

}  // namespace chainlint::go
