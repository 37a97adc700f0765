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


// Affine semigroups N A, their groups Z A and cones R_+ A.

#ifndef EXPANSE_SEMIGROUP_HPP
#define EXPANSE_SEMIGROUP_HPP

#include <cstddef>
#include <optional>

#include "expanse/core.hpp"
#include "expanse/expansion.hpp"

namespace expanse {

/// u is an integer combination of the members.
bool latticeContains(const ExponentVector& u, const MonomialSet& set);
/// u is a nonnegative rational combination of the members.
bool coneContains(const ExponentVector& u, const MonomialSet& set);
/// u is a sum of members. Requires an equigenerated set (Unsupported otherwise).
bool semigroupContains(const ExponentVector& u, const MonomialSet& set);

/// NormalUpTo(bound) when witness is empty, NotNormal(witness) otherwise.
struct NormalityVerdict {
  std::size_t bound = 0;
  std::optional<ExponentVector> witness;
  bool normalUpToBound() const { return !witness; }
};

/// Checks every u in Z^n_+ with |u| <= bound. The witness is the failure of
/// least degree, ties broken lexicographically (smallest first), so it does
/// not change as the bound grows.
NormalityVerdict isNormalUpTo(const MonomialSet& set, std::size_t bound);

struct NormalityTransfer {
  NormalityVerdict base;
  NormalityVerdict expanded;
  /// Each side's witness, carried across and rechecked on the other side.
  bool liftedWitnessFails = true;
  bool contractedWitnessFails = true;
  bool holds() const {
    return base.normalUpToBound() == expanded.normalUpToBound() && liftedWitnessFails &&
           contractedWitnessFails;
  }
};

NormalityTransfer verifyTheoremNormal(const MonomialSet& set, const ExpansionShape& shape,
                                      std::size_t bound);

/// Rank of the exponent matrix.
std::size_t krullDimension(const MonomialSet& set);

}  // namespace expanse

#endif  // EXPANSE_SEMIGROUP_HPP
