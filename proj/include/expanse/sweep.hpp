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


// Randomized and exhaustive property suites over desk-scale instances.
//
// Every suite is deterministic for a fixed configuration: instance k draws
// from its own generator seeded by (seed, k), and results are collected in
// instance order whatever the thread count.

#ifndef EXPANSE_SWEEP_HPP
#define EXPANSE_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "expanse/ideal_props.hpp"
#include "expanse/toric.hpp"

namespace expanse {

struct SweepConfig {
  std::uint64_t seed = 1;
  /// Verified instances wanted from randomized suites.
  std::size_t count = 100;
  /// Randomized suites give up after count * drawFactor draws.
  std::size_t drawFactor = 20;
  unsigned threads = 1;
  BuchbergerOptions buchberger;
  SearchLimits limits{12, 64, 2'000'000};
  /// Instances whose expansion exceeds this many generators are skipped.
  std::size_t maxExpandedSize = 40;
  /// Degree bound for normality suites.
  std::size_t normalityBound = 12;
};

struct SuiteReport {
  std::string name;
  std::size_t draws = 0;
  std::size_t verified = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  /// Named tallies, e.g. how many instances had a true premise.
  std::map<std::string, std::size_t> tallies;
  /// Descriptions of the first few violations.
  std::vector<std::string> failures;

  bool passed() const { return violations == 0; }
};

/// Polymatroidal, weakly polymatroidal and linear-quotient verdicts agree on
/// I and I^alpha; linear quotients agree with decomposability.
SuiteReport sweepIdealTransfer(const SweepConfig& config);
/// contractGB(toricGB(A^alpha), original variables) equals toricGB(A).
SuiteReport sweepGrobnerContraction(const SweepConfig& config);
/// Exhaustive over base sets with n <= 4, modulus <= 3, at most 6 bases:
/// checkWhite against the fiber oracle, and the expansion implication for
/// every alpha in {1,2}^n.
SuiteReport sweepWhite(const SweepConfig& config);
/// Exhaustive over subsets of degree-2 monomials in at most 3 variables.
SuiteReport sweepSortable(const SweepConfig& config);
/// Bounded normality verdicts agree on A and A^alpha.
SuiteReport sweepNormal(const SweepConfig& config);
/// Counting identity, contraction of expansions, the relabeling law and
/// input-order invariance of reduced bases.
SuiteReport sweepStructure(const SweepConfig& config);
/// expandGB against direct computation, flattening along pi_0, quadratic
/// bases and dimension under expansion.
SuiteReport sweepToricTransfer(const SweepConfig& config);

std::vector<std::string> suiteNames();
SuiteReport runSuite(const std::string& name, const SweepConfig& config);

}  // namespace expanse

#endif  // EXPANSE_SWEEP_HPP
