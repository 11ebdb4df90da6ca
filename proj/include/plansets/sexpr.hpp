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

#ifndef PLANSETS_SEXPR_HPP_
#define PLANSETS_SEXPR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plansets {

// Thrown for malformed input; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A parsed s-expression node. Symbols are lower-cased (PDDL is case
// insensitive); lists keep their children in source order.
struct SExpr {
  bool is_list = false;
  std::string symbol;
  std::vector<SExpr> items;
  int line = 0;
  int column = 0;

  bool IsSymbol(std::string_view s) const { return !is_list && symbol == s; }
  // True if this is a list whose first element is the symbol `head`.
  bool HasHead(std::string_view head) const;
  [[noreturn]] void Fail(const std::string& message) const;
};

// Parses exactly one top-level expression (trailing comments allowed).
SExpr ParseSExpr(std::string_view text);

}  // namespace plansets

#endif  // PLANSETS_SEXPR_HPP_
