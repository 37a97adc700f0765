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


#include <functional>

#include "doctest.h"
#include "expanse/document.hpp"
#include "expanse/format.hpp"

using namespace expanse;

namespace {

std::string messageOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("monomial grammar") {
  CHECK(parseMonomial("x1^2*x2", 4) == ExponentVector{2, 1, 0, 0});
  CHECK(parseMonomial("x2*x2*x4^3", 4) == ExponentVector{0, 2, 0, 3});
  CHECK(parseMonomial(" x1 * x3 ", 3) == ExponentVector{1, 0, 1});
  CHECK(parseMonomial("1", 2) == ExponentVector{0, 0});
  CHECK(messageOf([] { parseMonomial("x1^", 2); }).find("at byte 3") != std::string::npos);
  CHECK(messageOf([] { parseMonomial("x1*y2", 2); }).find("at byte 3") != std::string::npos);
  CHECK(messageOf([] { parseMonomial("x5", 2); }).find("at byte") != std::string::npos);
  CHECK_THROWS_AS(parseMonomial("x0", 2), Error);
  CHECK_THROWS_AS(parseMonomial("", 2), Error);
}

TEST_CASE("binomials over y-variables") {
  const auto [p, q] = parseBinomial("y1*y5 - y2^2", 5);
  CHECK(p == ExponentVector{1, 0, 0, 0, 1});
  CHECK(q == ExponentVector{0, 2, 0, 0, 0});
  CHECK_THROWS_AS(parseBinomial("y1*y5", 5), Error);
  CHECK_THROWS_AS(parseBinomial("y1 - y6", 5), Error);
}

TEST_CASE("documents") {
  const auto d = parseDocument(
      R"({"n": 4, "kind": "set", "monomials": ["x1^2*x2", [1,1,0,1]], "alpha": [1,1,1,2],
          "order": [2,1,3,4]})");
  CHECK(d.n == 4);
  CHECK((d.kind == DocumentKind::Set));
  CHECK(d.monomials == std::vector<ExponentVector>{{2, 1, 0, 0}, {1, 1, 0, 1}});
  CHECK(d.alpha == std::vector<int>{1, 1, 1, 2});
  CHECK(d.order == std::vector<std::size_t>{1, 0, 2, 3});

  CHECK((kindOf([] { parseDocument(R"({"n": 2, "monomials": [[1,0,0]]})"); }) ==
         ErrorKind::DimensionMismatch));
  CHECK((kindOf([] { parseDocument(R"({"n": 2, "monomials": [[1,0]], "alpha": [0, 1]})"); }) ==
         ErrorKind::InvalidInput));
  CHECK((kindOf([] { parseDocument(R"({"n": 2, "monomials": [[1,0]], "extra": 1})"); }) ==
         ErrorKind::InvalidInput));
  CHECK((kindOf([] { parseDocument("{not json"); }) == ErrorKind::InvalidInput));
  CHECK((kindOf([] {
           parseDocument(R"({"n": 2, "kind": "bases", "monomials": [[1,0],[1,1]]})");
         }) == ErrorKind::InvalidInput));
}

TEST_CASE("integer lists") {
  CHECK(parseIntList("1,1,2") == std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(parseIntList("1,,2"), Error);
  CHECK_THROWS_AS(parseIntList("0"), Error);
  CHECK_THROWS_AS(parseIntList("a"), Error);
}

TEST_CASE("rendering") {
  const ExpansionShape shape({1, 1, 1, 2});
  CHECK(monomialText({1, 1, 0, 2, 0}, shape) == "x1*x2*x4_1^2");
  CHECK(monomialText({0, 0}) == "1");
  CHECK(monomialText({2, 1}) == "x1^2*x2");
  const MonomialSet a(2, {{2, 0}, {1, 1}, {0, 2}});
  const YBinomial b{{1, 0, 1}, {0, 2, 0}};
  CHECK(binomialIndexText(b) == "y1*y3 - y2^2");
  CHECK(binomialText(b, a, ExpansionShape::identity(2)) == "y[x1^2]*y[x2^2] - y[x1*x2]^2");
}
