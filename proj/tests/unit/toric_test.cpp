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
#include "expanse/toric.hpp"
#include "oracles.hpp"

using namespace expanse;

namespace {

const MonomialSet& paperA() {
  static const MonomialSet a(4, {{2, 1, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 2, 0}, {0, 1, 0, 2}});
  return a;
}

const MonomialSet& fourBases() {
  static const MonomialSet b(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  return b;
}

// y-exponent vector naming members of `set` by their exponent rows.
ExponentVector y(const MonomialSet& set, std::initializer_list<ExponentVector> factors) {
  std::vector<Exponent> e(set.size(), 0);
  for (const auto& f : factors) ++e[*set.indexOf(f)];
  return ExponentVector(std::move(e));
}

YBinomial oriented(const MonomialSet& set, const ExponentVector& p, const ExponentVector& q) {
  return *makeBinomial(p, q, inducedLex(set));
}

std::vector<YBinomial> sorted(std::vector<YBinomial> v, const TermOrder& order) {
  sortBinomials(v, order);
  return v;
}

MonomialSet expandedPaperA() { return expandSet(paperA(), ExpansionShape({1, 1, 1, 2})).vectors; }

// Columns x1, x2, x3, x4_1, x4_2.
const ExponentVector x112{2, 1, 0, 0, 0}, x12a{1, 1, 0, 1, 0}, x12b{1, 1, 0, 0, 1},
    x2aa{0, 1, 0, 2, 0}, x2ab{0, 1, 0, 1, 1}, x2bb{0, 1, 0, 0, 2};

}  // namespace

TEST_CASE("toric basis of the worked configuration") {
  const auto& a = paperA();
  const GroebnerBasis g = toricGB(a, inducedLex(a));
  REQUIRE(g.size() == 1);
  CHECK(g.elements()[0] ==
        oriented(a, y(a, {{2, 1, 0, 0}, {0, 1, 0, 2}}), y(a, {{1, 1, 0, 1}, {1, 1, 0, 1}})));
  CHECK(kernelTest(g.elements()[0], a));
  CHECK(oracle::fibersCollapse(g, 3));
}

TEST_CASE("toric basis edge cases") {
  const MonomialSet independent(2, {{1, 0}, {0, 1}});
  CHECK(toricGB(independent, inducedLex(independent)).empty());
  const auto& b = fourBases();
  const GroebnerBasis g = toricGB(b, inducedLex(b));
  REQUIRE(g.size() == 1);
  CHECK(g.elements()[0] ==
        oriented(b, y(b, {b[0], b[3]}), y(b, {b[1], b[2]})));
  CHECK_THROWS_AS(toricGB(MonomialSet(2, {}), TermOrder::lex(0)), Error);
}

TEST_CASE("kernel test and normal form") {
  const auto& b = fourBases();
  const GroebnerBasis g = toricGB(b, inducedLex(b));
  const YBinomial quad{y(b, {b[0], b[3]}), y(b, {b[1], b[2]})};
  CHECK(kernelTest(quad, b));
  CHECK_FALSE(kernelTest(YBinomial{y(b, {b[0]}), y(b, {b[1]})}, b));
  CHECK_FALSE(normalForm(g.elements()[0], g).has_value());
  // y1^2 y4^2 - y2^2 y3^2 lies in the ideal.
  CHECK_FALSE(normalForm(YBinomial{y(b, {b[0], b[0], b[3], b[3]}), y(b, {b[1], b[1], b[2], b[2]})}, g)
                  .has_value());
  const MonomialSet independent(2, {{1, 0}, {0, 1}});
  const GroebnerBasis empty = toricGB(independent, inducedLex(independent));
  const YBinomial free{{1, 0}, {0, 1}};
  CHECK(normalForm(free, empty) == free);
}

TEST_CASE("generation test") {
  const auto& b = fourBases();
  const TermOrder order = inducedLex(b);
  const GroebnerBasis g = toricGB(b, order);
  CHECK(generates(g.elements(), b, order));
  CHECK_FALSE(generates({}, b, order));
  const auto& a = paperA();
  CHECK(generates(toricGB(a, inducedLex(a)).elements(), a, inducedLex(a)));
  CHECK_THROWS_AS(generates({YBinomial{y(b, {b[0]}), y(b, {b[1]})}}, b, order), Error);
}

TEST_CASE("contraction to a pure subring") {
  const auto big = expandedPaperA();
  const GroebnerBasis g = toricGB(big, inducedLex(big));
  const GroebnerBasis sub = contractGB(g, {0, 1, 2, 3});
  REQUIRE(sub.size() == 1);
  const MonomialSet& s = sub.configuration();
  CHECK(sub.elements()[0] ==
        *makeBinomial(y(s, {x112, x2aa}), y(s, {x12a, x12a}), sub.order()));
  const GroebnerBasis all = contractGB(g, {0, 1, 2, 3, 4});
  CHECK(all.elements() == g.elements());
  try {
    contractGB(g, {2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "empty subconfiguration");
  }
  const auto& a = paperA();
  CHECK(contractToBase(g, ExpansionShape({1, 1, 1, 2}), a, inducedLex(a)) ==
        toricGB(a, inducedLex(a)).elements());
}

TEST_CASE("single split of the worked configuration") {
  const auto& a = paperA();
  const GroebnerBasis g = toricGB(a, inducedLex(a));
  const auto step = expandGBSingleSplit(a, g, 3);
  const MonomialSet& b = step.expanded.vectors;
  const TermOrder order = inducedLex(b);
  auto bin = [&](std::initializer_list<ExponentVector> p, std::initializer_list<ExponentVector> q) {
    return *makeBinomial(y(b, p), y(b, q), order);
  };
  CHECK(sorted(step.swaps, order) == sorted({bin({x12a, x2ab}, {x12b, x2aa}),
                                             bin({x2aa, x2bb}, {x2ab, x2ab}),
                                             bin({x12a, x2bb}, {x12b, x2ab})},
                                            order));
  CHECK(sorted(step.lifts, order) == sorted({bin({x112, x2aa}, {x12a, x12a}),
                                             bin({x112, x2bb}, {x12b, x12b}),
                                             bin({x112, x2ab}, {x12a, x12b})},
                                            order));
  CHECK(verifyGB(step.combined, b, order));
  CHECK(step.combined == toricGB(b, order).elements());
}

TEST_CASE("single splits with trivial toric ideals") {
  const MonomialSet x1(1, {{1}});
  const auto s1 = expandGBSingleSplit(x1, toricGB(x1, inducedLex(x1)), 0);
  CHECK(s1.expanded.vectors.size() == 2);
  CHECK(s1.swaps.empty());
  CHECK(s1.lifts.empty());
  const MonomialSet x1x2(2, {{1, 1}});
  const auto s2 = expandGBSingleSplit(x1x2, toricGB(x1x2, inducedLex(x1x2)), 0);
  CHECK(s2.swaps.empty());
  CHECK(s2.lifts.empty());
}

TEST_CASE("iterated expansion of bases") {
  const MonomialSet x1x2(2, {{1, 1}});
  const GroebnerBasis g = expandGB(x1x2, toricGB(x1x2, inducedLex(x1x2)), ExpansionShape({2, 2}));
  REQUIRE(g.size() == 1);
  CHECK(g.elements() == toricGB(g.configuration(), inducedLex(g.configuration())).elements());
  const auto& a = paperA();
  const GroebnerBasis base = toricGB(a, inducedLex(a));
  const GroebnerBasis single = expandGB(a, base, ExpansionShape({1, 1, 1, 2}));
  CHECK(single.elements() == expandGBSingleSplit(a, base, 3).combined);
  CHECK(single.size() == 6);
}

TEST_CASE("Groebner basis verification") {
  const auto& b = fourBases();
  const TermOrder order = inducedLex(b);
  CHECK(verifyGB(toricGB(b, order).elements(), b, order));
  // I_A for A = {x1^2, x1x2, x2^2, x1x3, x2x3} has a 3-element basis in degree 2; dropping
  // one element breaks generation.
  const MonomialSet v(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}});
  const TermOrder vo = inducedLex(v);
  auto elems = toricGB(v, vo).elements();
  REQUIRE(elems.size() >= 2);
  CHECK(verifyGB(elems, v, vo));
  elems.pop_back();
  const GBCheck check = checkGB(elems, v, vo);
  CHECK(check.inIdeal);
  CHECK_FALSE(check.ok());
}

TEST_CASE("property: reduced bases are Groebner bases of the right ideal") {
  std::mt19937_64 rng(5);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(draw(2, 3));
    std::vector<ExponentVector> vs;
    for (int k = draw(2, 5); k > 0; --k) {
      std::vector<Exponent> e(n, 0);
      for (int t = draw(1, 3); t > 0; --t) ++e[static_cast<std::size_t>(draw(0, static_cast<int>(n) - 1))];
      vs.emplace_back(std::move(e));
    }
    const MonomialSet a = minimalize(n, vs);
    const TermOrder order = inducedLex(a);
    const GroebnerBasis g = toricGB(a, order);
    for (const auto& e : g.elements()) {
      CHECK(kernelTest(e, a));
      CHECK(order.compare(e.plus, e.minus) > 0);
    }
    CHECK(oracle::fibersCollapse(g, 3));
    // Reducedness: no term of an element is divisible by another leading term.
    for (const auto& e : g.elements()) {
      for (const auto& f : g.elements()) {
        if (&e == &f) continue;
        CHECK_FALSE(f.plus.divides(e.plus));
        CHECK_FALSE(f.plus.divides(e.minus));
      }
    }
    std::vector<int> alpha(n);
    for (auto& k : alpha) k = draw(1, 2);
    const ExpansionShape shape(alpha);
    const auto big = expandSet(a, shape).vectors;
    if (big.size() > 14) continue;
    const GroebnerBasis direct = toricGB(big, inducedLex(big));
    CHECK(expandGB(a, g, shape).elements() == direct.elements());
    CHECK(contractToBase(direct, shape, a, order) == g.elements());
  }
}
