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
#include <set>

#include "doctest.h"
#include "expanse/expansion.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

std::set<ExponentVector> asSet(const std::vector<ExponentVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("expandVector enumerates block compositions") {
  const ExpansionShape a222({2, 2, 2});
  const auto w = expandVector({1, 2, 0}, a222);
  CHECK(w.size() == 6);
  CHECK(asSet(w) == std::set<ExponentVector>{{1, 0, 2, 0, 0, 0},
                                             {1, 0, 1, 1, 0, 0},
                                             {1, 0, 0, 2, 0, 0},
                                             {0, 1, 2, 0, 0, 0},
                                             {0, 1, 1, 1, 0, 0},
                                             {0, 1, 0, 2, 0, 0}});
  CHECK(std::is_sorted(w.rbegin(), w.rend()));
  CHECK(asSet(expandVector({1, 1}, ExpansionShape({2, 2}))) ==
        std::set<ExponentVector>{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  CHECK(expandVector({3, 1}, ExpansionShape::identity(2)) == std::vector<ExponentVector>{{3, 1}});
  CHECK_THROWS_AS(expandVector({1}, a222), Error);
}

TEST_CASE("expandVector agrees with the box oracle") {
  for (int k1 = 1; k1 <= 3; ++k1) {
    for (int k2 = 1; k2 <= 2; ++k2) {
      const ExpansionShape shape({k1, k2});
      for (const auto& u : oracle::box(2, 3)) {
        CHECK(asSet(expandVector(u, shape)) == oracle::expansion(u, shape));
      }
    }
  }
}

TEST_CASE("expandSet on the worked configuration") {
  const MonomialSet a(4, {{2, 1, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 2, 0}, {0, 1, 0, 2}});
  const auto e = expandSet(a, ExpansionShape({1, 1, 1, 2}));
  CHECK(e.vectors.size() == 8);
  CHECK(e.provenance == std::vector<std::size_t>{0, 1, 1, 2, 3, 4, 4, 4});
  CHECK(e.vectors.contains({1, 1, 0, 1, 0}));
  CHECK(e.vectors.contains({0, 1, 0, 1, 1}));
  CHECK(e.vectors.contains({0, 1, 2, 0, 0}));

  const auto zero = expandSet(MonomialSet(2, {{0, 0}}), ExpansionShape({2, 3}));
  CHECK(zero.vectors.members() == std::vector<ExponentVector>{ExponentVector(5)});
  CHECK_THROWS_AS(expandSet(MonomialSet(2, {{1, 0}, {1, 1}}), ExpansionShape({2, 1})), Error);
}

TEST_CASE("expandIdeal") {
  auto gens = [](const MonomialIdeal& i) { return asSet(i.gens().members()); };
  const MonomialIdeal x1x2(2, std::vector<ExponentVector>{{1, 1}});
  CHECK(gens(expandIdeal(x1x2, ExpansionShape({2, 1}))) ==
        std::set<ExponentVector>{{1, 0, 1}, {0, 1, 1}});
  const MonomialIdeal squares(2, std::vector<ExponentVector>{{2, 0}, {0, 2}});
  CHECK(expandIdeal(squares, ExpansionShape::identity(2)) == squares);
  const MonomialIdeal mixed(2, std::vector<ExponentVector>{{1, 0}, {0, 2}});
  CHECK(gens(expandIdeal(mixed, ExpansionShape({1, 2}))) ==
        std::set<ExponentVector>{{1, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
}

TEST_CASE("contraction and unit lift") {
  const ExpansionShape a222({2, 2, 2});
  CHECK(contractVector({1, 0, 1, 1, 0, 0}, a222) == ExponentVector{1, 2, 0});
  CHECK(contractVector({0, 0, 0, 0}, ExpansionShape({2, 2})) == ExponentVector{0, 0});
  CHECK(unitLift({1, 2}, ExpansionShape({2, 2})) == ExponentVector{1, 0, 2, 0});
  for (const auto& u : oracle::box(3, 2)) {
    for (const auto& w : expandVector(u, a222)) CHECK(contractVector(w, a222) == u);
    CHECK(contractVector(unitLift(u, a222), a222) == u);
  }
}

TEST_CASE("relabeling of iterated expansions") {
  const auto r = relabelIterated(ExpansionShape({1, 1}), 1);
  CHECK(r.beta == ExpansionShape({1, 2}));
  // gamma variables x111, x211, x212 go to x11, x21, x22.
  CHECK(r.image == std::vector<std::size_t>{0, 1, 2});

  const auto first = relabelIterated(ExpansionShape({1}), 0);
  const MonomialSet a1(1, {{2}});
  std::set<ExponentVector> img;
  for (const auto& w : expandSet(expandSet(a1, first.alpha).vectors, first.gamma).vectors) {
    img.insert(first.apply(w));
  }
  CHECK(img == asSet(expandSet(a1, ExpansionShape({2})).vectors.members()));

  const MonomialSet a(2, {{1, 1}});
  const auto s = relabelIterated(ExpansionShape({1, 1}), 0);
  std::set<ExponentVector> image;
  for (const auto& w : expandSet(expandSet(a, s.alpha).vectors, s.gamma).vectors) {
    image.insert(s.apply(w));
  }
  CHECK(image == asSet(expandSet(a, ExpansionShape({2, 1})).vectors.members()));
}

TEST_CASE("property: counting identity and labelling law on random inputs") {
  std::mt19937_64 rng(7);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(draw(1, 3));
    std::vector<int> alpha(n);
    std::vector<Exponent> u(n);
    for (auto& k : alpha) k = draw(1, 3);
    for (auto& x : u) x = draw(0, 3);
    const ExpansionShape shape(alpha);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) {
      // C(u + k - 1, k - 1)
      std::size_t c = 1;
      for (int t = 1; t < alpha[i]; ++t) c = c * static_cast<std::size_t>(u[i] + t) / static_cast<std::size_t>(t);
      expected *= c;
    }
    CHECK(expandVector(ExponentVector(u), shape).size() == expected);

    const auto i = static_cast<std::size_t>(draw(0, static_cast<int>(n) - 1));
    const auto r = relabelIterated(shape, i);
    const MonomialSet single(n, {ExponentVector(u)});
    std::set<ExponentVector> image;
    for (const auto& w : expandSet(expandSet(single, shape).vectors, r.gamma).vectors) {
      image.insert(r.apply(w));
    }
    CHECK(image == asSet(expandSet(single, r.beta).vectors.members()));
  }
}
