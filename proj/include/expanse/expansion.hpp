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

// The expansion functor on exponent vectors, monomial sets and ideals.
//
// For alpha = (k_1, ..., k_n), variable x_i is split into x_{i1}, ..., x_{ik_i};
// the expanded ring has |alpha| = k_1 + ... + k_n variables laid out block by
// block. A vector u expands to every w whose i-th block sums to u(i).

#ifndef EXPANSE_EXPANSION_HPP
#define EXPANSE_EXPANSION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "expanse/core.hpp"

namespace expanse {

class ExpansionShape {
 public:
  ExpansionShape() = default;
  /// Every entry must be >= 1.
  explicit ExpansionShape(std::vector<int> blockSizes);
  /// alpha = (1, ..., 1).
  static ExpansionShape identity(std::size_t n);

  std::size_t baseDim() const { return sizes_.size(); }
  std::size_t totalDim() const { return total_; }
  int blockSize(std::size_t i) const { return sizes_[i]; }
  const std::vector<int>& blockSizes() const { return sizes_; }
  bool isIdentity() const { return total_ == sizes_.size(); }

  /// Flat index of x_{ij}, both 0-based.
  std::size_t flatIndex(std::size_t i, std::size_t j) const;
  /// Inverse of flatIndex.
  std::pair<std::size_t, std::size_t> blockOf(std::size_t flat) const;

  /// alpha + e_i.
  ExpansionShape incremented(std::size_t i) const;

  /// Presentation name: "x3" for an unsplit variable, "x4_2" for x_{42}.
  std::string variableName(std::size_t flat) const;
  std::string toString() const;

  friend bool operator==(const ExpansionShape&, const ExpansionShape&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// An expanded set together with the index of the source member each
/// expanded vector came from.
struct ExpandedVectorSet {
  ExpansionShape shape;
  MonomialSet vectors;
  std::vector<std::size_t> provenance;
};

/// All w in Z^{|alpha|}_+ whose i-th block sums to u(i), in lexicographically
/// decreasing order.
std::vector<ExponentVector> expandVector(const ExponentVector& u,
                                         const ExpansionShape& shape);

/// Union of the expansions of the members of a divisibility-minimal set.
ExpandedVectorSet expandSet(const MonomialSet& set, const ExpansionShape& shape);

MonomialIdeal expandIdeal(const MonomialIdeal& ideal, const ExpansionShape& shape);

/// Block sums; realizes both pi on monomials and pi_0 on lattice points.
ExponentVector contractVector(const ExponentVector& w, const ExpansionShape& shape);

/// u' = sum_i u(i) e_{i1}: the lift of u that only uses the first variable of
/// each block.
ExponentVector unitLift(const ExponentVector& u, const ExpansionShape& shape);

/// The variable bijection identifying the double expansion
/// (A^alpha)^gamma, gamma = 1 + e_{(i, k_i)}, with A^beta, beta = alpha + e_i.
struct VariableRelabeling {
  ExpansionShape alpha;
  ExpansionShape gamma;
  ExpansionShape beta;
  /// image[f] is the beta-flat index of the gamma-flat variable f.
  std::vector<std::size_t> image;

  ExponentVector apply(const ExponentVector& w) const;
};

/// `splitVar` is 0-based.
VariableRelabeling relabelIterated(const ExpansionShape& alpha, std::size_t splitVar);

}  // namespace expanse

#endif  // EXPANSE_EXPANSION_HPP
