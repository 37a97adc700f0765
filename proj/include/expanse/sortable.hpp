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


// Sortable sets of monomials of a fixed degree.

#ifndef EXPANSE_SORTABLE_HPP
#define EXPANSE_SORTABLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "expanse/core.hpp"
#include "expanse/expansion.hpp"
#include "expanse/toric.hpp"

namespace expanse {

/// Writes uv = x_{i1} x_{i2} ... x_{i2d} with i1 <= ... <= i2d and deals the
/// factors alternately: odd positions to the first output, even to the second.
std::pair<ExponentVector, ExponentVector> sortPair(const ExponentVector& u,
                                                   const ExponentVector& v);

struct SortabilityReport {
  bool sortable = true;
  /// Least violating (u, v) in plain lexicographic order, with its image.
  std::optional<std::pair<ExponentVector, ExponentVector>> witness;
  std::optional<std::pair<ExponentVector, ExponentVector>> image;
};

SortabilityReport isSortable(const MonomialSet& set);

/// y_u y_v - y_{u'} y_{v'} over unordered pairs that sorting moves.
std::vector<YBinomial> sortingRelations(const MonomialSet& set, const TermOrder& order);
std::vector<YBinomial> sortingRelations(const MonomialSet& set);

struct EquivalenceCheck {
  bool base = false;
  bool expanded = false;
  bool holds() const { return base == expanded; }
};

/// isSortable(A) == isSortable(A^alpha).
EquivalenceCheck verifyTheoremSort(const MonomialSet& set, const ExpansionShape& shape);

/// The sorting relations of a sortable set generate I_A.
bool verifySortingGeneration(const MonomialSet& set, const TermOrder& order,
                             const BuchbergerOptions& options = {});

}  // namespace expanse

#endif  // EXPANSE_SORTABLE_HPP
