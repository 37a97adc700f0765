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


#include "doctest.h"
#include "expanse/core.hpp"

using namespace expanse;

TEST_CASE("minimalize keeps the divisibility-minimal members") {
  CHECK(minimalize(2, std::vector<ExponentVector>{{1, 1}, {1, 2}, {2, 1}}).members() ==
        std::vector<ExponentVector>{{1, 1}});
  CHECK(minimalize(2, std::vector<ExponentVector>{{2, 0}, {0, 2}}).size() == 2);
  const std::vector<ExponentVector> cm{{3, 0}, {2, 1}, {0, 3}};
  CHECK(minimalize(2, cm).members() == cm);
  CHECK(MonomialSet(2, cm).divisMinimal());
  CHECK_FALSE(MonomialSet(2, {{1, 1}, {1, 2}}).divisMinimal());
}

TEST_CASE("lex orders") {
  const auto lex = TermOrder::lex(2);
  CHECK(lex.compare(ExponentVector{2, 0}, ExponentVector{1, 5}) > 0);
  CHECK(lex.compare(ExponentVector{1, 1}, ExponentVector{1, 1}) == 0);
  const auto swapped = TermOrder::lex(std::vector<std::size_t>{1, 0});
  CHECK(swapped.compare(ExponentVector{2, 0}, ExponentVector{1, 5}) < 0);
  CHECK_THROWS_AS(TermOrder::lex(std::vector<std::size_t>{0, 0}), Error);
  CHECK_THROWS_AS(lex.compare(ExponentVector{1}, ExponentVector{1, 0}), Error);
}

TEST_CASE("induced order ranks members by the base order") {
  const MonomialSet a(2, {{0, 2}, {2, 0}, {1, 1}});
  const auto order = TermOrder::inducedSharp(TermOrder::lex(2), a);
  // y_{(2,0)} > y_{(1,1)} > y_{(0,2)}
  CHECK(order.ranking()[0] == 1);
  CHECK(order.ranking()[1] == 2);
  CHECK(order.ranking()[2] == 0);
}

TEST_CASE("quotient by gcd") {
  CHECK(quotientByGcd({1, 1, 0}, {0, 1, 1}) == ExponentVector{1, 0, 0});
  CHECK(quotientByGcd({2, 1}, {2, 1}).isZero());
  CHECK(quotientByGcd({2, 1}, {1, 3}) == ExponentVector{1, 0});
}

TEST_CASE("ideal membership") {
  const MonomialIdeal i(2, std::vector<ExponentVector>{{1, 1}});
  CHECK(idealContains(i, {2, 3}));
  CHECK_FALSE(idealContains(i, {2, 0}));
  const MonomialIdeal j(3, std::vector<ExponentVector>{{1, 1, 0}, {0, 1, 1}});
  CHECK_FALSE(idealContains(j, {1, 0, 1}));
}

TEST_CASE("vector arithmetic rejects leaving the orthant") {
  CHECK_THROWS_AS(ExponentVector({1, 0}) - ExponentVector({0, 1}), Error);
  CHECK_THROWS_AS(ExponentVector({0}).shifted(0, -1), Error);
  CHECK_THROWS_AS(MonomialSet(2, {{1, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(ExponentVector({-1, 0}), Error);
}
