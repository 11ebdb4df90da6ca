// Copyright 2026 The plansets Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plansets/sexpr.hpp"

#include <cctype>

namespace plansets {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool SExpr::HasHead(std::string_view head) const {
  return is_list && !items.empty() && items.front().IsSymbol(head);
}

void SExpr::Fail(const std::string& message) const { throw ParseError(message, line, column); }

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr ReadTop() {
    SkipSpace();
    if (AtEnd()) throw ParseError("empty input", line_, column_);
    SExpr out = Read();
    SkipSpace();
    if (!AtEnd()) throw ParseError("unexpected trailing input", line_, column_);
    return out;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }

  char Advance() {
    const char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }

  void SkipSpace() {
    while (!AtEnd()) {
      const char ch = text_[pos_];
      if (ch == ';') {
        while (!AtEnd() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        Advance();
      } else {
        return;
      }
    }
  }

  SExpr Read() {
    SExpr node;
    node.line = line_;
    node.column = column_;
    const char ch = text_[pos_];
    if (ch == ')') throw ParseError("unbalanced ')'", line_, column_);
    if (ch == '(') {
      Advance();
      node.is_list = true;
      for (;;) {
        SkipSpace();
        if (AtEnd()) throw ParseError("unterminated list", node.line, node.column);
        if (text_[pos_] == ')') {
          Advance();
          return node;
        }
        node.items.push_back(Read());
      }
    }
    while (!AtEnd()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      node.symbol.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(Advance()))));
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

SExpr ParseSExpr(std::string_view text) { return Reader(text).ReadTop(); }

}  // namespace plansets
