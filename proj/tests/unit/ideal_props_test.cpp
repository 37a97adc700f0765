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


#include <random>

#include "doctest.h"
#include "expanse/expansion.hpp"
#include "expanse/ideal_props.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<ExponentVector> gens) {
  return MonomialIdeal(n, gens);
}

}  // namespace

TEST_CASE("polymatroidal") {
  CHECK(isPolymatroidal(ideal(3, {{1, 1, 0}, {1, 0, 1}})));
  CHECK_FALSE(isPolymatroidal(ideal(2, {{2, 0}, {0, 2}})));
  CHECK(isPolymatroidal(ideal(3, {{2, 1, 4}})));
  CHECK_FALSE(isPolymatroidal(ideal(2, {{1, 0}, {0, 2}})));
}

TEST_CASE("weakly polymatroidal") {
  const auto i = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(isWeaklyPolymatroidalWrt(i, {0, 1, 2}));
  CHECK(findWeaklyPolymatroidalOrder(i).has_value());
  const auto squares = ideal(2, {{2, 0}, {0, 2}});
  CHECK_FALSE(isWeaklyPolymatroidalWrt(squares, {0, 1}));
  CHECK_FALSE(findWeaklyPolymatroidalOrder(squares).has_value());
  CHECK(findWeaklyPolymatroidalOrder(ideal(3, {{0, 2, 1}})).has_value());
}

TEST_CASE("linear quotients") {
  const auto path = ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  // Generators are stored lex-descending: x1x2, x2x3, x3x4.
  CHECK(hasLinearQuotientsWrt(path, {0, 1, 2}));
  CHECK(findLinearQuotientsOrder(path).has_value());
  const auto disjoint = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK_FALSE(hasLinearQuotientsWrt(disjoint, {0, 1}));
  CHECK_FALSE(hasLinearQuotientsWrt(disjoint, {1, 0}));
  CHECK_FALSE(findLinearQuotientsOrder(disjoint).has_value());
  CHECK(findLinearQuotientsOrder(ideal(2, {{3, 3}})).has_value());
}

TEST_CASE("k-decomposable") {
  const auto principal = ideal(3, {{1, 2, 0}});
  for (int k = 0; k <= 2; ++k) CHECK(isKDecomposable(principal, k).has_value());
  const auto path = ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  auto cert = isKDecomposable(path, 0);
  REQUIRE(cert.has_value());
  CHECK(checkSheddingCertificate(*cert, 0));
  const auto disjoint = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  for (int k = 0; k <= 3; ++k) CHECK_FALSE(isKDecomposable(disjoint, k).has_value());
}

TEST_CASE("search limits raise SearchTooLarge") {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < 12; ++i) gens.push_back(ExponentVector::unit(12, i));
  SearchLimits tight;
  tight.maxVariables = 4;
  try {
    findWeaklyPolymatroidalOrder(ideal(12, gens), tight);
    FAIL("expected SearchTooLarge");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::SearchTooLarge));
  }
}

TEST_CASE("property: verdicts match the oracles and the implication ladder") {
  std::mt19937_64 rng(11);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int lqCount = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(draw(2, 3));
    std::vector<ExponentVector> gens;
    const int d = draw(1, 3);
    const bool equal = draw(0, 1) == 1;
    for (int k = draw(1, 5); k > 0; --k) {
      std::vector<Exponent> e(n, 0);
      if (equal) {
        for (int t = 0; t < d; ++t) ++e[static_cast<std::size_t>(draw(0, static_cast<int>(n) - 1))];
      } else {
        for (auto& x : e) x = draw(0, 2);
        if (ExponentVector(e).isZero()) e[0] = 1;
      }
      gens.emplace_back(std::move(e));
    }
    const MonomialIdeal i(n, gens);
    const auto& g = i.gens().members();
    const bool poly = isPolymatroidal(i);
    const bool lq = findLinearQuotientsOrder(i).has_value();
    const bool wp = findWeaklyPolymatroidalOrder(i).has_value();
    CHECK(poly == oracle::polymatroidal(g));
    CHECK(lq == oracle::hasLinearQuotients(g));
    CHECK(lq == isKDecomposable(i, static_cast<int>(n) - 1).has_value());
    if (poly) CHECK(wp);
    if (wp) CHECK(lq);
    lqCount += lq;

    std::vector<int> alpha(n);
    for (auto& k : alpha) k = draw(1, 2);
    const MonomialIdeal big = expandIdeal(i, ExpansionShape(alpha));
    if (big.size() <= 8) {
      CHECK(isPolymatroidal(big) == poly);
      CHECK(findLinearQuotientsOrder(big).has_value() == lq);
    }
  }
  CHECK(lqCount > 0);
}
