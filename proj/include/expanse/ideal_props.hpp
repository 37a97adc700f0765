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

// Decision procedures for exchange-type properties of monomial ideals.
//
// All searches are exact. When an instance exceeds the configured limits the
// search throws ErrorKind::SearchTooLarge instead of answering.

#ifndef EXPANSE_IDEAL_PROPS_HPP
#define EXPANSE_IDEAL_PROPS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "expanse/core.hpp"

namespace expanse {

struct SearchLimits {
  /// Variable-order searches run over subsets of variables.
  std::size_t maxVariables = 8;
  /// Generator-order and shedding searches.
  std::size_t maxGenerators = 10;
  /// Upper bound on states visited by a single search.
  std::size_t maxStates = 2'000'000;
};

/// A permutation of generator indices of MonomialIdeal::gens().
using GeneratorOrdering = std::vector<std::size_t>;
/// A ranking of variables, largest first.
using VariableOrder = std::vector<std::size_t>;

bool isPolymatroidal(const MonomialIdeal& ideal);

bool isWeaklyPolymatroidalWrt(const MonomialIdeal& ideal, const VariableOrder& order);
std::optional<VariableOrder> findWeaklyPolymatroidalOrder(const MonomialIdeal& ideal,
                                                          const SearchLimits& limits = {});

bool hasLinearQuotientsWrt(const MonomialIdeal& ideal, const GeneratorOrdering& ordering);
std::optional<GeneratorOrdering> findLinearQuotientsOrder(const MonomialIdeal& ideal,
                                                          const SearchLimits& limits = {});

/// A recursive shedding decomposition. A leaf has a single generator and no
/// shedding monomial; an inner node splits its generators by `shedding` into
/// `upper` (I^u) and `lower` (I_u).
struct SheddingCertificate {
  std::vector<ExponentVector> generators;
  std::optional<ExponentVector> shedding;
  std::shared_ptr<const SheddingCertificate> upper;
  std::shared_ptr<const SheddingCertificate> lower;
};

/// [u, M] = 1: M(i) < u(i) for every i in supp(u).
bool sheddingCoprime(const ExponentVector& u, const ExponentVector& m);

std::optional<SheddingCertificate> isKDecomposable(const MonomialIdeal& ideal, int k,
                                                   const SearchLimits& limits = {});

/// Rechecks every node of a certificate against the definition.
bool checkSheddingCertificate(const SheddingCertificate& certificate, int k);

}  // namespace expanse

#endif  // EXPANSE_IDEAL_PROPS_HPP
