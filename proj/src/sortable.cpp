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


#include "expanse/sortable.hpp"

#include <algorithm>
#include <set>

namespace expanse {

std::pair<ExponentVector, ExponentVector> sortPair(const ExponentVector& u,
                                                   const ExponentVector& v) {
  requireSameDim(u, v);
  if (u.modulus() != v.modulus()) {
    fail(ErrorKind::PreconditionViolation, "sortPair needs monomials of equal degree");
  }
  std::vector<Exponent> a(u.dim(), 0), b(u.dim(), 0);
  std::int64_t position = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(u[i]) + v[i]; ++c, ++position) {
      ++(position % 2 == 0 ? a : b)[i];
    }
  }
  return {ExponentVector(std::move(a)), ExponentVector(std::move(b))};
}

namespace {

void requireEquigenerated(const MonomialSet& set) {
  if (!set.equigenerated()) {
    fail(ErrorKind::PreconditionViolation, "sortability needs monomials of equal degree");
  }
}

}  // namespace

SortabilityReport isSortable(const MonomialSet& set) {
  requireEquigenerated(set);
  std::vector<ExponentVector> members = set.members();
  std::sort(members.begin(), members.end());
  SortabilityReport report;
  for (const auto& u : members) {
    for (const auto& v : members) {
      auto image = sortPair(u, v);
      if (!set.contains(image.first) || !set.contains(image.second)) {
        report.sortable = false;
        report.witness = std::make_pair(u, v);
        report.image = std::move(image);
        return report;
      }
    }
  }
  return report;
}

std::vector<YBinomial> sortingRelations(const MonomialSet& set, const TermOrder& order) {
  if (!isSortable(set).sortable) {
    fail(ErrorKind::PreconditionViolation, "sorting relations need a sortable set");
  }
  const std::size_t m = set.size();
  std::set<YBinomial> seen;
  std::vector<YBinomial> out;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p; q < m; ++q) {
      auto [a, b] = sortPair(set[p], set[q]);
      auto rel = makeQuadric(m, p, q, *set.indexOf(a), *set.indexOf(b), order);
      if (rel && seen.insert(*rel).second) out.push_back(std::move(*rel));
    }
  }
  sortBinomials(out, order);
  return out;
}

std::vector<YBinomial> sortingRelations(const MonomialSet& set) {
  return sortingRelations(set, inducedLex(set));
}

EquivalenceCheck verifyTheoremSort(const MonomialSet& set, const ExpansionShape& shape) {
  EquivalenceCheck check;
  check.base = isSortable(set).sortable;
  check.expanded = isSortable(expandSet(set, shape).vectors).sortable;
  return check;
}

bool verifySortingGeneration(const MonomialSet& set, const TermOrder& order,
                             const BuchbergerOptions& options) {
  return generates(sortingRelations(set, order), set, order, options);
}

}  // namespace expanse
