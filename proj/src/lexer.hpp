/*
   Copyright 2026 The fsplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FSPLIT_DETAIL_LEXER_HPP
#define FSPLIT_DETAIL_LEXER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "fsplit/errors.hpp"

namespace fsplit::detail {

struct Token {
  enum class Kind { Identifier, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  /// No earlier token on the same line.
  bool line_start = false;
};

/// Tokenizer shared by the polynomial and session parsers. `#` starts a
/// comment running to the end of the line; all other whitespace is ignored.
class Lexer {
 public:
  explicit Lexer(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column_(column) {
    advance();
  }

  const Token& peek() const noexcept { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(std::string_view symbol) {
    if (current_.kind == Token::Kind::Symbol && current_.text == symbol) {
      advance();
      return true;
    }
    return false;
  }

  Token expect(std::string_view symbol) {
    if (current_.kind != Token::Kind::Symbol || current_.text != symbol) {
      fail("expected '" + std::string(symbol) + "'");
    }
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = current_.kind == Token::Kind::End ? "end of input" : "'" + current_.text + "'";
    throw ParseError(message + ", found " + found, current_.line, current_.column);
  }

 private:
  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance() {
    const std::size_t previous_line = line_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    current_.line_start = line_ != previous_line || pos_ == 0;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    auto is_ident = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Token::Kind::Identifier;
      while (pos_ < text_.size() && is_ident(text_[pos_])) {
        current_.text.push_back(text_[pos_]);
        bump();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text.push_back(text_[pos_]);
        bump();
      }
    } else {
      current_.kind = Token::Kind::Symbol;
      current_.text.push_back(c);
      bump();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
  Token current_;
};

}  // namespace fsplit::detail

#endif  // FSPLIT_DETAIL_LEXER_HPP
