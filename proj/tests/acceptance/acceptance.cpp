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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "expanse/expansion.hpp"
#include "expanse/polymatroid.hpp"
#include "expanse/semigroup.hpp"
#include "expanse/sweep.hpp"
#include "expanse/toric.hpp"

using namespace expanse;

namespace {

// Wall-clock limits in seconds.
constexpr double kGoldenGB = 5;
constexpr double kPolymatroidExample = 1;
constexpr double kDimensionExample = 1;
constexpr double kIdealTransfer = 120;
constexpr double kContraction = 300;
constexpr double kWhite = 600;
constexpr double kSortable = 120;
constexpr double kNormality = 300;
constexpr double kStructure = 120;

// Minimum verified instances for the randomized suites.
constexpr std::size_t kIdealInstances = 100;
constexpr std::size_t kContractionInstances = 100;
constexpr std::size_t kNormalityInstances = 20;
constexpr std::size_t kStructureInstances = 20;
constexpr std::size_t kNormalityBound = 12;
constexpr std::uint64_t kSeed = 20261018;

using Pair = std::pair<ExponentVector, ExponentVector>;

ExponentVector y(const MonomialSet& set, std::initializer_list<ExponentVector> factors) {
  std::vector<Exponent> e(set.size(), 0);
  for (const auto& f : factors) {
    auto idx = set.indexOf(f);
    if (!idx) throw std::runtime_error("monomial " + f.toString() + " not in configuration");
    ++e[*idx];
  }
  return ExponentVector(std::move(e));
}

// Exact set equality, each expected binomial taken up to sign.
bool sameSet(const std::vector<YBinomial>& got, const std::vector<Pair>& want) {
  if (got.size() != want.size()) return false;
  std::vector<Pair> a, b;
  for (const auto& g : got) a.push_back(std::minmax(g.plus, g.minus));
  for (const auto& [p, q] : want) b.push_back(std::minmax(p, q));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string suiteSummary(const SuiteReport& r) {
  std::string s = r.name + ": " + std::to_string(r.verified) + " verified, " +
                  std::to_string(r.skipped) + " skipped, " + std::to_string(r.violations) +
                  " violations";
  if (!r.failures.empty()) s += " [" + r.failures.front() + "]";
  return s;
}

struct Verdict {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = v.ok && seconds < limit;
  if (!pass) ++failures;
  std::printf("%s criterion %d (%s): %.2fs / %.0fs limit; %s\n", pass ? "PASS" : "FAIL", id, name,
              seconds, limit, v.detail.c_str());
  std::fflush(stdout);
}

SweepConfig config(std::size_t count) {
  SweepConfig c;
  c.seed = kSeed;
  c.count = count;
  return c;
}

}  // namespace

int main() {
  criterion(1, "golden Groebner basis", kGoldenGB, [] {
    const MonomialSet a(4, {{2, 1, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 2, 0}, {0, 1, 0, 2}});
    const GroebnerBasis g = toricGB(a, inducedLex(a));
    const bool base = sameSet(g.elements(), {{y(a, {{2, 1, 0, 0}, {0, 1, 0, 2}}),
                                              y(a, {{1, 1, 0, 1}, {1, 1, 0, 1}})}});
    const GroebnerBasis lifted = expandGB(a, g, ExpansionShape({1, 1, 1, 2}));
    const MonomialSet& b = lifted.configuration();
    const ExponentVector x12a{1, 1, 0, 1, 0}, x12b{1, 1, 0, 0, 1}, x2ab{0, 1, 0, 1, 1},
        x2aa{0, 1, 0, 2, 0}, x2bb{0, 1, 0, 0, 2}, x112{2, 1, 0, 0, 0};
    const bool expanded = sameSet(lifted.elements(), {
                                                         {y(b, {x12a, x2ab}), y(b, {x12b, x2aa})},
                                                         {y(b, {x2aa, x2bb}), y(b, {x2ab, x2ab})},
                                                         {y(b, {x12a, x2bb}), y(b, {x12b, x2ab})},
                                                         {y(b, {x112, x2aa}), y(b, {x12a, x12a})},
                                                         {y(b, {x112, x2bb}), y(b, {x12b, x12b})},
                                                         {y(b, {x112, x2ab}), y(b, {x12a, x12b})},
                                                     });
    return Verdict{base && expanded, "base basis " + std::string(base ? "matches" : "differs") +
                                         ", expanded basis of " + std::to_string(lifted.size()) +
                                         (expanded ? " matches" : " differs")};
  });

  criterion(2, "polymatroid example", kPolymatroidExample, [] {
    const BaseSet bases = expandBases(BaseSet(MonomialSet(2, {{1, 1}})), ExpansionShape({2, 2}));
    const ExponentVector u1{1, 0, 1, 0}, u2{1, 0, 0, 1}, u3{0, 1, 1, 0}, u4{0, 1, 0, 1};
    const MonomialSet& got = bases.bases();
    const bool four = got.size() == 4 && got.contains(u1) && got.contains(u2) &&
                      got.contains(u3) && got.contains(u4);
    if (!four) return Verdict{false, "expanded bases differ"};
    const GroebnerBasis g = toricGB(got, inducedLex(got));
    const bool quadric = sameSet(g.elements(), {{y(got, {u1, u4}), y(got, {u2, u3})}});
    const bool white = checkWhite(bases);
    return Verdict{quadric && white, std::string("single quadric ") +
                                         (quadric ? "matches" : "differs") +
                                         ", double-swap generation " + (white ? "true" : "false")};
  });

  criterion(3, "dimension example", kDimensionExample, [] {
    const MonomialSet a(2, {{3, 0}, {2, 1}, {0, 3}});
    const std::size_t lo = krullDimension(a);
    const std::size_t hi = krullDimension(expandSet(a, ExpansionShape({2, 2})).vectors);
    return Verdict{lo == 2 && hi == 4,
                   "dimensions " + std::to_string(lo) + " and " + std::to_string(hi)};
  });

  criterion(4, "ideal property transfer", kIdealTransfer, [] {
    const SuiteReport r = sweepIdealTransfer(config(kIdealInstances));
    return Verdict{r.passed() && r.verified >= kIdealInstances, suiteSummary(r)};
  });

  criterion(5, "Groebner contraction", kContraction, [] {
    const SuiteReport r = sweepGrobnerContraction(config(kContractionInstances));
    return Verdict{r.passed() && r.verified >= kContractionInstances, suiteSummary(r)};
  });

  criterion(6, "double-swap cross-validation", kWhite, [] {
    const SuiteReport r = sweepWhite(config(0));
    return Verdict{r.passed() && r.verified > 0 && r.skipped == 0, suiteSummary(r)};
  });

  criterion(7, "sortability", kSortable, [] {
    const SuiteReport r = sweepSortable(config(0));
    return Verdict{r.passed() && r.verified > 0 && r.skipped == 0, suiteSummary(r)};
  });

  criterion(8, "normality", kNormality, [] {
    const MonomialSet a(2, {{3, 0}, {2, 1}, {0, 3}});
    const NormalityVerdict v = isNormalUpTo(a, 9);
    const bool witness = v.witness && *v.witness == ExponentVector{1, 2};
    SweepConfig c = config(kNormalityInstances);
    c.normalityBound = kNormalityBound;
    const SuiteReport r = sweepNormal(c);
    return Verdict{witness && r.passed() && r.verified >= kNormalityInstances,
                   std::string("witness ") + (v.witness ? v.witness->toString() : "none") + "; " +
                       suiteSummary(r)};
  });

  criterion(9, "structural properties", kStructure, [] {
    const SuiteReport r = sweepStructure(config(kStructureInstances));
    return Verdict{r.passed() && r.skipped == 0, suiteSummary(r)};
  });

  return failures == 0 ? 0 : 1;
}
