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


#include "expanse/polymatroid.hpp"

#include <map>
#include <numeric>
#include <set>

namespace expanse {

BaseSetValidation validateBaseSet(const MonomialSet& candidate) {
  BaseSetValidation out;
  if (candidate.empty()) {
    out.reason = "empty base set";
    return out;
  }
  if (!candidate.equigenerated()) {
    out.reason = "bases have different moduli";
    return out;
  }
  const std::size_t n = candidate.ambientDim();
  for (const auto& u : candidate) {
    for (const auto& v : candidate) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool repaired = false;
        for (std::size_t j = 0; j < n && !repaired; ++j) {
          if (u[j] < v[j] && candidate.contains(u.shifted(i, -1).shifted(j, 1))) repaired = true;
        }
        if (!repaired) {
          out.reason = "exchange axiom fails";
          out.witness = ExchangeWitness{u, v, i};
          return out;
        }
      }
    }
  }
  out.valid = true;
  return out;
}

BaseSet::BaseSet(MonomialSet bases) : bases_(std::move(bases)) {
  const auto check = validateBaseSet(bases_);
  if (!check.valid) fail(ErrorKind::InvalidInput, "not a polymatroid base set: " + check.reason);
}

BaseSet expandBases(const BaseSet& bases, const ExpansionShape& shape) {
  auto expanded = expandSet(bases.bases(), shape);
  if (!validateBaseSet(expanded.vectors).valid) {
    fail(ErrorKind::InvariantViolation, "expanded bases violate the exchange axiom");
  }
  return BaseSet(std::move(expanded.vectors));
}

std::vector<SwapMove> swapMoves(const BaseSet& bases) {
  const MonomialSet& b = bases.bases();
  const std::size_t n = b.ambientDim();
  std::vector<SwapMove> out;
  for (std::size_t p = 0; p < b.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (p == q) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (b[p][i] <= b[q][i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b[q][j] <= b[p][j]) continue;
          auto v1 = b.indexOf(b[p].shifted(i, -1).shifted(j, 1));
          auto v2 = b.indexOf(b[q].shifted(i, 1).shifted(j, -1));
          if (v1 && v2) out.push_back(SwapMove{p, q, *v1, *v2, i, j});
        }
      }
    }
  }
  return out;
}

std::vector<YBinomial> swapQuadrics(const BaseSet& bases, const TermOrder& order) {
  std::set<YBinomial> seen;
  std::vector<YBinomial> out;
  for (const auto& s : swapMoves(bases)) {
    auto q = makeQuadric(bases.size(), s.u1, s.u2, s.v1, s.v2, order);
    if (q && seen.insert(*q).second) out.push_back(std::move(*q));
  }
  sortBinomials(out, order);
  return out;
}

std::vector<YBinomial> swapQuadrics(const BaseSet& bases) {
  return swapQuadrics(bases, inducedLex(bases.bases()));
}

bool checkWhite(const BaseSet& bases, const TermOrder& order, const BuchbergerOptions& options) {
  return generates(swapQuadrics(bases, order), bases.bases(), order, options);
}

bool checkWhite(const BaseSet& bases, const BuchbergerOptions& options) {
  return checkWhite(bases, inducedLex(bases.bases()), options);
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Appends every multiset of `size` elements from [0, m) as a count vector.
void multisets(std::size_t m, std::size_t size, std::size_t from, std::vector<Exponent>& counts,
               std::vector<std::vector<Exponent>>& out, std::size_t limit) {
  if (size == 0) {
    if (out.size() >= limit) fail(ErrorKind::BudgetExhausted, "fiber enumeration budget exhausted");
    out.push_back(counts);
    return;
  }
  for (std::size_t k = from; k < m; ++k) {
    ++counts[k];
    multisets(m, size - 1, k, counts, out, limit);
    --counts[k];
  }
}

}  // namespace

FiberReport fiberConnectedOracle(const BaseSet& bases, std::size_t degreeBound,
                                 std::size_t maxMultisets, const BuchbergerOptions& options) {
  const MonomialSet& b = bases.bases();
  const std::size_t m = b.size();
  FiberReport report;
  if (degreeBound == 0) {
    degreeBound = static_cast<std::size_t>(toricGB(b, inducedLex(b), options).maxDegree());
  }
  report.degreeBound = degreeBound;
  const auto moves = swapMoves(bases);

  std::size_t budgetLeft = maxMultisets;
  for (std::size_t degree = 2; degree <= degreeBound; ++degree) {
    std::vector<std::vector<Exponent>> all;
    std::vector<Exponent> counts(m, 0);
    multisets(m, degree, 0, counts, all, budgetLeft);
    budgetLeft -= all.size();

    std::map<ExponentVector, std::vector<std::size_t>> fibers;
    for (std::size_t k = 0; k < all.size(); ++k) {
      ExponentVector sum(b.ambientDim());
      for (std::size_t i = 0; i < m; ++i) {
        for (Exponent c = 0; c < all[k][i]; ++c) sum = sum + b[i];
      }
      fibers[sum].push_back(k);
    }
    for (const auto& [multidegree, members] : fibers) {
      ++report.fibersChecked;
      if (members.size() < 2) continue;
      std::map<std::vector<Exponent>, std::size_t> local;
      for (std::size_t k = 0; k < members.size(); ++k) local.emplace(all[members[k]], k);
      DisjointSets components(members.size());
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (const auto& s : moves) {
          std::vector<Exponent> next = all[members[k]];
          if (--next[s.u1] < 0 || --next[s.u2] < 0) continue;
          ++next[s.v1];
          ++next[s.v2];
          auto it = local.find(next);
          if (it == local.end()) {
            fail(ErrorKind::InvariantViolation, "double swap left its fiber");
          }
          components.unite(k, it->second);
        }
      }
      for (std::size_t k = 1; k < members.size(); ++k) {
        if (components.find(k) != components.find(0)) {
          report.connected = false;
          report.witness = FiberWitness{multidegree, degree, ExponentVector(all[members[0]]),
                                        ExponentVector(all[members[k]])};
          return report;
        }
      }
    }
  }
  return report;
}

ImplicationCheck verifyTheoremMain(const BaseSet& bases, const ExpansionShape& shape,
                                   const BuchbergerOptions& options) {
  ImplicationCheck check;
  check.premise = checkWhite(bases, options);
  if (check.premise) check.conclusion = checkWhite(expandBases(bases, shape), options);
  return check;
}

}  // namespace expanse
