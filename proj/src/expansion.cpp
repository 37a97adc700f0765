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

#include "expanse/expansion.hpp"

namespace expanse {

ExpansionShape::ExpansionShape(std::vector<int> blockSizes)
    : sizes_(std::move(blockSizes)) {
  offsets_.reserve(sizes_.size());
  for (int k : sizes_) {
    if (k < 1) fail(ErrorKind::InvalidInput, "expansion block sizes must be >= 1");
    offsets_.push_back(total_);
    total_ += static_cast<std::size_t>(k);
  }
}

ExpansionShape ExpansionShape::identity(std::size_t n) {
  return ExpansionShape(std::vector<int>(n, 1));
}

std::size_t ExpansionShape::flatIndex(std::size_t i, std::size_t j) const {
  if (i >= sizes_.size() || j >= static_cast<std::size_t>(sizes_[i])) {
    fail(ErrorKind::DimensionMismatch, "block index out of range");
  }
  return offsets_[i] + j;
}

std::pair<std::size_t, std::size_t> ExpansionShape::blockOf(std::size_t flat) const {
  if (flat >= total_) fail(ErrorKind::DimensionMismatch, "flat index out of range");
  std::size_t i = 0;
  while (i + 1 < sizes_.size() && offsets_[i + 1] <= flat) ++i;
  return {i, flat - offsets_[i]};
}

ExpansionShape ExpansionShape::incremented(std::size_t i) const {
  if (i >= sizes_.size()) fail(ErrorKind::PreconditionViolation, "split variable out of range");
  auto sizes = sizes_;
  ++sizes[i];
  return ExpansionShape(std::move(sizes));
}

std::string ExpansionShape::variableName(std::size_t flat) const {
  auto [i, j] = blockOf(flat);
  std::string name = "x" + std::to_string(i + 1);
  if (sizes_[i] > 1) name += "_" + std::to_string(j + 1);
  return name;
}

std::string ExpansionShape::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sizes_[i]);
  }
  return s + ")";
}

namespace {

// Appends every composition of `total` into `parts` nonnegative parts, in
// lexicographically decreasing order, as a prefix extension of `prefix`.
void compositions(int total, int parts, std::vector<Exponent>& current,
                  std::vector<std::vector<Exponent>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> expandVector(const ExponentVector& u,
                                         const ExpansionShape& shape) {
  if (u.dim() != shape.baseDim()) {
    fail(ErrorKind::DimensionMismatch, "vector does not match expansion shape");
  }
  // Cartesian product of per-block compositions; iterating the leftmost
  // block slowest keeps the overall order lexicographically decreasing.
  std::vector<std::vector<std::vector<Exponent>>> blocks(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    std::vector<Exponent> scratch;
    compositions(u[i], shape.blockSize(i), scratch, blocks[i]);
  }
  std::vector<ExponentVector> out;
  std::vector<std::size_t> pick(u.dim(), 0);
  while (true) {
    std::vector<Exponent> w;
    w.reserve(shape.totalDim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      const auto& part = blocks[i][pick[i]];
      w.insert(w.end(), part.begin(), part.end());
    }
    out.emplace_back(std::move(w));
    std::size_t i = u.dim();
    while (i > 0) {
      --i;
      if (++pick[i] < blocks[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (u.dim() == 0) return out;
  }
}

ExpandedVectorSet expandSet(const MonomialSet& set, const ExpansionShape& shape) {
  if (set.ambientDim() != shape.baseDim()) {
    fail(ErrorKind::DimensionMismatch, "set does not match expansion shape");
  }
  if (!set.divisMinimal()) {
    fail(ErrorKind::PreconditionViolation, "expandSet requires a divisibility-minimal set");
  }
  std::vector<ExponentVector> vectors;
  std::vector<std::size_t> provenance;
  for (std::size_t s = 0; s < set.size(); ++s) {
    for (auto& w : expandVector(set[s], shape)) {
      vectors.push_back(std::move(w));
      provenance.push_back(s);
    }
  }
  // Distinct sources have distinct block sums, so no duplicates can arise.
  ExpandedVectorSet out{shape, MonomialSet(shape.totalDim(), std::move(vectors)),
                        std::move(provenance)};
  if (!out.vectors.divisMinimal()) {
    fail(ErrorKind::InvariantViolation, "expansion of a minimal set is not minimal");
  }
  return out;
}

MonomialIdeal expandIdeal(const MonomialIdeal& ideal, const ExpansionShape& shape) {
  auto expanded = expandSet(ideal.gens(), shape);
  MonomialIdeal out(shape.totalDim(), expanded.vectors.members());
  if (out.size() != expanded.vectors.size()) {
    fail(ErrorKind::InvariantViolation, "expanded generators are not minimal");
  }
  return out;
}

ExponentVector contractVector(const ExponentVector& w, const ExpansionShape& shape) {
  if (w.dim() != shape.totalDim()) {
    fail(ErrorKind::DimensionMismatch, "vector does not match expanded dimension");
  }
  std::vector<Exponent> out(shape.baseDim(), 0);
  for (std::size_t f = 0; f < w.dim(); ++f) {
    auto [i, j] = shape.blockOf(f);
    (void)j;
    if (__builtin_add_overflow(out[i], w[f], &out[i])) {
      fail(ErrorKind::Overflow, "exponent overflow in contraction");
    }
  }
  return ExponentVector(std::move(out));
}

ExponentVector unitLift(const ExponentVector& u, const ExpansionShape& shape) {
  if (u.dim() != shape.baseDim()) {
    fail(ErrorKind::DimensionMismatch, "vector does not match expansion shape");
  }
  std::vector<Exponent> out(shape.totalDim(), 0);
  for (std::size_t i = 0; i < u.dim(); ++i) out[shape.flatIndex(i, 0)] = u[i];
  return ExponentVector(std::move(out));
}

ExponentVector VariableRelabeling::apply(const ExponentVector& w) const {
  if (w.dim() != image.size()) {
    fail(ErrorKind::DimensionMismatch, "relabeling dimension mismatch");
  }
  std::vector<Exponent> out(beta.totalDim(), 0);
  for (std::size_t f = 0; f < w.dim(); ++f) out[image[f]] += w[f];
  return ExponentVector(std::move(out));
}

VariableRelabeling relabelIterated(const ExpansionShape& alpha, std::size_t splitVar) {
  if (splitVar >= alpha.baseDim()) {
    fail(ErrorKind::PreconditionViolation, "split variable out of range");
  }
  const std::size_t last =
      alpha.flatIndex(splitVar, static_cast<std::size_t>(alpha.blockSize(splitVar)) - 1);
  std::vector<int> gammaSizes(alpha.totalDim(), 1);
  gammaSizes[last] = 2;
  VariableRelabeling r{alpha, ExpansionShape(std::move(gammaSizes)),
                       alpha.incremented(splitVar), {}};
  // A gamma variable is x_{rst}: (r, s) names the alpha variable, t in {1, 2}.
  r.image.resize(r.gamma.totalDim());
  for (std::size_t f = 0; f < r.gamma.totalDim(); ++f) {
    auto [alphaFlat, t] = r.gamma.blockOf(f);
    auto [row, s] = alpha.blockOf(alphaFlat);
    r.image[f] = t == 0 ? r.beta.flatIndex(row, s)
                        : r.beta.flatIndex(splitVar,
                                           static_cast<std::size_t>(alpha.blockSize(splitVar)));
  }
  return r;
}

}  // namespace expanse
