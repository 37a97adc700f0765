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
#include "expanse/expansion.hpp"
#include "expanse/sortable.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

using P = std::pair<ExponentVector, ExponentVector>;

MonomialSet veronese(std::size_t n) {
  std::vector<ExponentVector> v;
  for (const auto& u : oracle::box(n, 2)) {
    if (u.modulus() == 2) v.push_back(u);
  }
  return MonomialSet(n, v);
}

}  // namespace

TEST_CASE("sorting pairs") {
  CHECK(sortPair({1, 2, 0}, {0, 1, 2}) == P{{1, 1, 1}, {0, 2, 1}});
  CHECK(sortPair({2, 0}, {0, 2}) == P{{1, 1}, {1, 1}});
  CHECK(sortPair({1, 1, 0}, {1, 1, 0}) == P{{1, 1, 0}, {1, 1, 0}});
  CHECK_THROWS_AS(sortPair({1, 0}, {1, 1}), Error);
  for (const auto& u : oracle::box(3, 2)) {
    for (const auto& v : oracle::box(3, 2)) {
      if (u.modulus() != v.modulus()) continue;
      CHECK(sortPair(u, v) == oracle::sortPair(u, v));
      CHECK(sortPair(u, u) == P{u, u});
    }
  }
}

TEST_CASE("sortability") {
  CHECK(isSortable(veronese(2)).sortable);
  const auto r = isSortable(MonomialSet(2, {{2, 0}, {0, 2}}));
  CHECK_FALSE(r.sortable);
  REQUIRE(r.image.has_value());
  CHECK(r.image->first == ExponentVector{1, 1});
  CHECK(isSortable(MonomialSet(3, {{1, 2, 0}})).sortable);
}

TEST_CASE("sorting relations") {
  const auto v2 = veronese(2);
  const auto rel = sortingRelations(v2);
  REQUIRE(rel.size() == 1);
  CHECK(rel == toricGB(v2, inducedLex(v2)).elements());
  CHECK(sortingRelations(MonomialSet(2, {{1, 1}})).empty());
  CHECK(sortingRelations(veronese(3)).size() == 6);
  CHECK_THROWS_AS(sortingRelations(MonomialSet(2, {{2, 0}, {0, 2}})), Error);
}

TEST_CASE("sortability under expansion") {
  auto both = verifyTheoremSort(veronese(2), ExpansionShape({2, 1}));
  CHECK(both.base);
  CHECK(both.expanded);
  auto neither = verifyTheoremSort(MonomialSet(2, {{2, 0}, {0, 2}}), ExpansionShape({2, 2}));
  CHECK_FALSE(neither.base);
  CHECK_FALSE(neither.expanded);
  CHECK(verifyTheoremSort(veronese(3), ExpansionShape::identity(3)).holds());
}

TEST_CASE("sorting relations generate") {
  CHECK(verifySortingGeneration(veronese(2), inducedLex(veronese(2))));
  CHECK(verifySortingGeneration(veronese(3), inducedLex(veronese(3))));
  const auto big = expandSet(veronese(2), ExpansionShape({2, 2})).vectors;
  CHECK(isSortable(big).sortable);
  CHECK(verifySortingGeneration(big, inducedLex(big)));
}
