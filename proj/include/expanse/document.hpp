// Copyright 2026 The Authors.
//
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


// Input documents for the command-line tool.
//
// A document is a JSON object:
//   {"n": 4, "kind": "set", "monomials": ["x1^2*x2", [1,1,0,1]],
//    "alpha": [1,1,1,2], "order": [1,2,3,4], "binomials": ["y1*y5 - y2^2"]}
// Monomials are strings in the grammar below or exponent rows. "order" ranks
// the variables x1..xn, largest first (default: x1 > x2 > ... > xn).
//
//   monomial := factor ('*' factor)* | '1'
//   factor   := var ('^' uint)?
//   var      := 'x' uint
//
// Binomials use the same grammar with 'y' variables, indexing the monomials
// of the document (1-based, after any expansion).

#ifndef EXPANSE_DOCUMENT_HPP
#define EXPANSE_DOCUMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expanse/core.hpp"

namespace expanse {

enum class DocumentKind { Ideal, Set, Bases };

std::string toString(DocumentKind kind);

struct ConfigDocument {
  std::size_t n = 0;
  DocumentKind kind = DocumentKind::Set;
  std::vector<ExponentVector> monomials;
  std::optional<std::vector<int>> alpha;
  std::optional<std::vector<std::size_t>> order;  // 0-based ranking
  std::vector<std::string> binomials;             // unparsed; need the member count
};

/// Parses `text` as a monomial in x1..xn. Errors name the byte offset.
ExponentVector parseMonomial(std::string_view text, std::size_t n, char variable = 'x');

/// Parses "lhs - rhs" over y1..ym into exponent vectors of length m.
std::pair<ExponentVector, ExponentVector> parseBinomial(std::string_view text, std::size_t m);

ConfigDocument parseDocument(std::string_view json);

/// Comma-separated positive integers, e.g. "1,1,1,2".
std::vector<int> parseIntList(std::string_view text);

}  // namespace expanse

#endif  // EXPANSE_DOCUMENT_HPP
