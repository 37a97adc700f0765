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


// Discrete polymatroids, represented by their sets of bases.

#ifndef EXPANSE_POLYMATROID_HPP
#define EXPANSE_POLYMATROID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "expanse/core.hpp"
#include "expanse/expansion.hpp"
#include "expanse/toric.hpp"

namespace expanse {

/// u(i) > v(i), yet no j with u(j) < v(j) has u - e_i + e_j among the bases.
struct ExchangeWitness {
  ExponentVector u;
  ExponentVector v;
  std::size_t i = 0;
};

struct BaseSetValidation {
  bool valid = false;
  std::string reason;  // empty when valid
  std::optional<ExchangeWitness> witness;
};

BaseSetValidation validateBaseSet(const MonomialSet& candidate);

class BaseSet {
 public:
  /// Throws InvalidInput when `bases` fails validateBaseSet.
  explicit BaseSet(MonomialSet bases);

  std::size_t groundSize() const { return bases_.ambientDim(); }
  std::size_t size() const { return bases_.size(); }
  std::int64_t rank() const { return bases_[0].modulus(); }
  const MonomialSet& bases() const { return bases_; }

 private:
  MonomialSet bases_;
};

/// The bases of P^alpha, in expandSet order. Validity is asserted.
BaseSet expandBases(const BaseSet& bases, const ExpansionShape& shape);

/// (u1, u2) -> (u1 - e_i + e_j, u2 + e_i - e_j), as indices into the bases.
struct SwapMove {
  std::size_t u1, u2, v1, v2;
  std::size_t i, j;
};

std::vector<SwapMove> swapMoves(const BaseSet& bases);

/// Nonzero quadrics y_{u1} y_{u2} - y_{v1} y_{v2} over all double swaps,
/// oriented by `order` and deduplicated.
std::vector<YBinomial> swapQuadrics(const BaseSet& bases, const TermOrder& order);
std::vector<YBinomial> swapQuadrics(const BaseSet& bases);

/// Whether the double-swap quadrics generate I_P.
bool checkWhite(const BaseSet& bases, const TermOrder& order,
                const BuchbergerOptions& options = {});
bool checkWhite(const BaseSet& bases, const BuchbergerOptions& options = {});

struct FiberWitness {
  ExponentVector multidegree;
  std::size_t degree = 0;
  /// Two multisets of bases (as y-exponents) in different components.
  ExponentVector first;
  ExponentVector second;
};

struct FiberReport {
  bool connected = true;
  std::size_t degreeBound = 0;
  std::size_t fibersChecked = 0;
  std::optional<FiberWitness> witness;
};

/// Connectivity of every fiber of degree <= degreeBound under double-swap
/// moves. degreeBound 0 means the maximum degree of toricGB(bases).
FiberReport fiberConnectedOracle(const BaseSet& bases, std::size_t degreeBound = 0,
                                 std::size_t maxMultisets = 2'000'000,
                                 const BuchbergerOptions& options = {});

struct ImplicationCheck {
  bool premise = false;
  bool conclusion = false;  // only computed when the premise holds
  bool holds() const { return !premise || conclusion; }
};

/// checkWhite(B) implies checkWhite(B^alpha).
ImplicationCheck verifyTheoremMain(const BaseSet& bases, const ExpansionShape& shape,
                                   const BuchbergerOptions& options = {});

}  // namespace expanse

#endif  // EXPANSE_POLYMATROID_HPP
