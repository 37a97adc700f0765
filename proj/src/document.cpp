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


#include "expanse/document.hpp"

#include <charconv>
#include <limits>

#include "json.hpp"

namespace expanse {

using nlohmann::json;

std::string toString(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Ideal: return "ideal";
    case DocumentKind::Set: return "set";
    case DocumentKind::Bases: return "bases";
  }
  return "set";
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t offset() const { return base_ + pos_; }
  void skipSpaces() {
    while (!done() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidInput, what + " at byte " + std::to_string(offset()));
  }

  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) error("number too large");
    if (ec != std::errc() || ptr == first) error("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

ExponentVector parseProduct(Cursor& c, std::size_t n, char variable) {
  std::vector<Exponent> exps(n, 0);
  c.skipSpaces();
  if (c.peek() == '1') {
    c.number();
    c.skipSpaces();
    return ExponentVector(std::move(exps));
  }
  while (true) {
    c.skipSpaces();
    const std::size_t at = c.offset();
    c.expect(variable);
    const std::uint64_t index = c.number();
    if (index < 1 || index > n) {
      fail(ErrorKind::InvalidInput, std::string("variable ") + variable + std::to_string(index) +
                                        " out of range 1.." + std::to_string(n) + " at byte " +
                                        std::to_string(at));
    }
    std::uint64_t power = 1;
    if (c.peek() == '^') {
      c.expect('^');
      power = c.number();
    }
    const std::uint64_t total = static_cast<std::uint64_t>(exps[index - 1]) + power;
    if (total > static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max())) {
      c.error("exponent too large");
    }
    exps[index - 1] = static_cast<Exponent>(total);
    c.skipSpaces();
    if (c.peek() != '*') break;
    c.expect('*');
  }
  return ExponentVector(std::move(exps));
}

[[noreturn]] void invalid(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

std::size_t positive(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    invalid("field '" + field + "' must be a positive integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

ExponentVector parseMonomial(std::string_view text, std::size_t n, char variable) {
  Cursor c(text, 0);
  ExponentVector u = parseProduct(c, n, variable);
  if (!c.done()) c.error("unexpected character");
  return u;
}

std::pair<ExponentVector, ExponentVector> parseBinomial(std::string_view text, std::size_t m) {
  const std::size_t minus = text.find('-');
  if (minus == std::string_view::npos) {
    fail(ErrorKind::InvalidInput, "binomial needs the form 'lhs - rhs'");
  }
  Cursor left(text.substr(0, minus), 0);
  ExponentVector a = parseProduct(left, m, 'y');
  if (!left.done()) left.error("unexpected character");
  Cursor right(text.substr(minus + 1), minus + 1);
  ExponentVector b = parseProduct(right, m, 'y');
  if (!right.done()) right.error("unexpected character");
  return {std::move(a), std::move(b)};
}

std::vector<int> parseIntList(std::string_view text) {
  std::vector<int> out;
  Cursor c(text, 0);
  while (true) {
    const std::uint64_t v = c.number();
    if (v < 1 || v > 1000) c.error("entries must lie in 1..1000");
    out.push_back(static_cast<int>(v));
    if (c.done()) break;
    c.expect(',');
  }
  return out;
}

ConfigDocument parseDocument(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) invalid("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "kind" && key != "monomials" && key != "alpha" && key != "order" &&
        key != "binomials") {
      invalid("unknown field '" + key + "'");
    }
  }
  ConfigDocument doc;
  if (!j.contains("n")) invalid("missing field 'n'");
  doc.n = positive(j["n"], "n");

  if (j.contains("kind")) {
    if (!j["kind"].is_string()) invalid("field 'kind' must be a string");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "ideal") {
      doc.kind = DocumentKind::Ideal;
    } else if (kind == "set") {
      doc.kind = DocumentKind::Set;
    } else if (kind == "bases") {
      doc.kind = DocumentKind::Bases;
    } else {
      invalid("field 'kind' must be one of ideal, set, bases");
    }
  }

  if (!j.contains("monomials") || !j["monomials"].is_array() || j["monomials"].empty()) {
    invalid("field 'monomials' must be a nonempty array");
  }
  for (std::size_t k = 0; k < j["monomials"].size(); ++k) {
    const json& row = j["monomials"][k];
    const std::string where = "monomials[" + std::to_string(k) + "]";
    if (row.is_string()) {
      try {
        doc.monomials.push_back(parseMonomial(row.get<std::string>(), doc.n));
      } catch (const Error& e) {
        invalid(where + ": " + e.what());
      }
    } else if (row.is_array()) {
      if (row.size() != doc.n) {
        fail(ErrorKind::DimensionMismatch,
             where + " has " + std::to_string(row.size()) + " entries, expected " +
                 std::to_string(doc.n));
      }
      std::vector<Exponent> exps;
      for (const auto& e : row) {
        if (!e.is_number_integer() || e.get<std::int64_t>() < 0 ||
            e.get<std::int64_t>() > std::numeric_limits<Exponent>::max()) {
          invalid(where + " entries must be nonnegative integers");
        }
        exps.push_back(e.get<Exponent>());
      }
      doc.monomials.emplace_back(std::move(exps));
    } else {
      invalid(where + " must be a string or an array");
    }
  }

  if (j.contains("alpha")) {
    if (!j["alpha"].is_array()) invalid("field 'alpha' must be an array");
    std::vector<int> alpha;
    for (const auto& e : j["alpha"]) alpha.push_back(static_cast<int>(positive(e, "alpha")));
    if (alpha.size() != doc.n) {
      fail(ErrorKind::DimensionMismatch, "field 'alpha' must have n entries");
    }
    doc.alpha = std::move(alpha);
  }

  if (j.contains("order")) {
    if (!j["order"].is_array() || j["order"].size() != doc.n) {
      invalid("field 'order' must list each variable index 1..n once");
    }
    std::vector<std::size_t> ranking;
    std::vector<bool> seen(doc.n, false);
    for (const auto& e : j["order"]) {
      const std::size_t v = positive(e, "order");
      if (v > doc.n || seen[v - 1]) invalid("field 'order' must list each variable index 1..n once");
      seen[v - 1] = true;
      ranking.push_back(v - 1);
    }
    doc.order = std::move(ranking);
  }

  if (j.contains("binomials")) {
    if (!j["binomials"].is_array()) invalid("field 'binomials' must be an array");
    for (const auto& b : j["binomials"]) {
      if (!b.is_string()) invalid("binomials must be strings");
      doc.binomials.push_back(b.get<std::string>());
    }
  }

  if (doc.kind == DocumentKind::Bases) {
    for (const auto& u : doc.monomials) {
      if (u.modulus() != doc.monomials.front().modulus()) {
        invalid("bases must all have the same modulus");
      }
    }
  }
  return doc;
}

}  // namespace expanse
