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


#include "expanse/semigroup.hpp"

#include <gmpxx.h>

#include <unordered_set>
#include <vector>

namespace expanse {

namespace {

using IntRow = std::vector<mpz_class>;

// Row echelon form over Z of the members, by repeated Euclidean row steps.
// Zero rows are dropped, so the row count is the rank.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(const MonomialSet& set) : cols_(set.ambientDim()) {
    std::vector<IntRow> rows;
    for (const auto& u : set) {
      IntRow r(cols_);
      for (std::size_t c = 0; c < cols_; ++c) r[c] = u[c];
      rows.push_back(std::move(r));
    }
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols_ && top < rows.size(); ++c) {
      while (true) {
        std::size_t pivot = rows.size();
        for (std::size_t r = top; r < rows.size(); ++r) {
          if (rows[r][c] == 0) continue;
          if (pivot == rows.size() || abs(rows[r][c]) < abs(rows[pivot][c])) pivot = r;
        }
        if (pivot == rows.size()) break;
        std::swap(rows[top], rows[pivot]);
        bool cleared = true;
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
          if (rows[r][c] == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
          for (std::size_t k = c; k < cols_; ++k) rows[r][k] -= q * rows[top][k];
          if (rows[r][c] != 0) cleared = false;
        }
        if (cleared) {
          pivots_.push_back(c);
          basis_.push_back(std::move(rows[top]));
          ++top;
          break;
        }
      }
    }
  }

  std::size_t rank() const { return basis_.size(); }

  bool contains(const ExponentVector& u) const {
    IntRow v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = u[c];
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (next < pivots_.size() && pivots_[next] == c) {
        const IntRow& row = basis_[next++];
        if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) return false;
        const mpz_class q = v[c] / row[c];
        for (std::size_t k = c; k < cols_; ++k) v[k] -= q * row[k];
      } else if (v[c] != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<IntRow> basis_;
};

void requireDims(const ExponentVector& u, const MonomialSet& set) {
  if (u.dim() != set.ambientDim()) {
    fail(ErrorKind::DimensionMismatch, "vector does not match the configuration");
  }
}

std::int64_t commonDegree(const MonomialSet& set) {
  if (set.empty()) fail(ErrorKind::InvalidInput, "configuration must be nonempty");
  if (!set.equigenerated()) {
    fail(ErrorKind::Unsupported, "semigroup membership needs an equigenerated configuration");
  }
  return set[0].modulus();
}

// Whether `rest` is a sum of members with index >= from; failures memoized.
bool sumOf(const ExponentVector& rest, std::size_t from, const MonomialSet& set,
           std::vector<std::unordered_set<ExponentVector, ExponentVectorHash>>& deadFrom) {
  if (rest.isZero()) return true;
  if (deadFrom[from].contains(rest)) return false;
  for (std::size_t g = from; g < set.size(); ++g) {
    if (set[g].divides(rest) && sumOf(rest - set[g], g, set, deadFrom)) return true;
  }
  deadFrom[from].insert(rest);
  return false;
}

// Appends every u in Z^n_+ of modulus `degree`, lexicographically ascending.
void compositionsAscending(std::size_t n, std::int64_t degree, std::vector<Exponent>& prefix,
                           std::vector<ExponentVector>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(static_cast<Exponent>(degree));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t first = 0; first <= degree; ++first) {
    prefix.push_back(static_cast<Exponent>(first));
    compositionsAscending(n, degree - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool latticeContains(const ExponentVector& u, const MonomialSet& set) {
  requireDims(u, set);
  return IntegerEchelon(set).contains(u);
}

bool coneContains(const ExponentVector& u, const MonomialSet& set) {
  requireDims(u, set);
  if (u.isZero()) return true;
  const std::size_t n = set.ambientDim();
  const std::size_t m = set.size();
  // Phase one of the simplex method on  sum_k lambda_k a_k + s = u,
  // lambda, s >= 0, minimizing sum s. Bland's rule keeps it finite.
  const std::size_t cols = m + n;
  std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(cols + 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (u[r] < 0) return false;
    for (std::size_t k = 0; k < m; ++k) t[r][k] = set[k][r];
    t[r][m + r] = 1;
    t[r][cols] = u[r];
  }
  std::vector<std::size_t> basis(n);
  for (std::size_t r = 0; r < n; ++r) basis[r] = m + r;
  std::vector<mpq_class> cost(cols + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < m; ++k) cost[k] -= t[r][k];
    cost[cols] -= t[r][cols];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t k = 0; k < cols; ++k) {
      if (cost[k] < 0) {
        enter = k;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = n;
    mpq_class best;
    for (std::size_t r = 0; r < n; ++r) {
      if (t[r][enter] <= 0) continue;
      mpq_class ratio = t[r][cols] / t[r][enter];
      if (leave == n || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == n) break;  // unbounded; cannot happen for a bounded phase one
    const mpq_class pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const mpq_class f = t[r][enter];
      for (std::size_t k = 0; k <= cols; ++k) t[r][k] -= f * t[leave][k];
    }
    if (cost[enter] != 0) {
      const mpq_class f = cost[enter];
      for (std::size_t k = 0; k <= cols; ++k) cost[k] -= f * t[leave][k];
    }
    basis[leave] = enter;
  }
  return cost[cols] == 0;
}

bool semigroupContains(const ExponentVector& u, const MonomialSet& set) {
  requireDims(u, set);
  const std::int64_t d = commonDegree(set);
  if (u.isZero()) return true;
  if (d == 0 || u.modulus() % d != 0) return false;
  std::vector<std::unordered_set<ExponentVector, ExponentVectorHash>> deadFrom(set.size() + 1);
  return sumOf(u, 0, set, deadFrom);
}

NormalityVerdict isNormalUpTo(const MonomialSet& set, std::size_t bound) {
  const std::int64_t d = commonDegree(set);
  NormalityVerdict verdict;
  verdict.bound = bound;
  if (d == 0) return verdict;  // only the zero vector
  const std::size_t n = set.ambientDim();
  const IntegerEchelon lattice(set);

  // N A up to the bound, one degree slice at a time.
  std::unordered_set<ExponentVector, ExponentVectorHash> slice{ExponentVector(n)};
  for (std::int64_t degree = d; degree <= static_cast<std::int64_t>(bound); degree += d) {
    std::unordered_set<ExponentVector, ExponentVectorHash> next;
    for (const auto& s : slice) {
      for (const auto& g : set) next.insert(s + g);
    }
    slice = std::move(next);
    std::vector<ExponentVector> candidates;
    std::vector<Exponent> prefix;
    compositionsAscending(n, degree, prefix, candidates);
    for (const auto& u : candidates) {
      if (slice.contains(u) || !lattice.contains(u)) continue;
      if (coneContains(u, set)) {
        verdict.witness = u;
        return verdict;
      }
    }
  }
  return verdict;
}

NormalityTransfer verifyTheoremNormal(const MonomialSet& set, const ExpansionShape& shape,
                                      std::size_t bound) {
  const auto expanded = expandSet(set, shape);
  NormalityTransfer check;
  check.base = isNormalUpTo(set, bound);
  check.expanded = isNormalUpTo(expanded.vectors, bound);
  auto isFailure = [](const ExponentVector& u, const MonomialSet& s) {
    return latticeContains(u, s) && coneContains(u, s) && !semigroupContains(u, s);
  };
  if (check.base.witness) {
    check.liftedWitnessFails = isFailure(unitLift(*check.base.witness, shape), expanded.vectors);
  }
  if (check.expanded.witness) {
    check.contractedWitnessFails =
        isFailure(contractVector(*check.expanded.witness, shape), set);
  }
  return check;
}

std::size_t krullDimension(const MonomialSet& set) { return IntegerEchelon(set).rank(); }

}  // namespace expanse
