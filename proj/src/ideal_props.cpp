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

#include "expanse/ideal_props.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace expanse {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask supportMask(const ExponentVector& u) {
  Mask m = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] > 0) m |= bit(i);
  }
  return m;
}

void requireMaskable(std::size_t dim) {
  if (dim > 64) fail(ErrorKind::SearchTooLarge, "more than 64 variables");
}

bool isPermutation(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

bool isPolymatroidal(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  if (!g.equigenerated()) return false;
  const std::size_t n = ideal.ambientDim();
  for (const auto& u : g) {
    for (const auto& v : g) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool repaired = false;
        for (std::size_t j = 0; j < n && !repaired; ++j) {
          if (u[j] < v[j] && g.contains(u.shifted(i, -1).shifted(j, 1))) repaired = true;
        }
        if (!repaired) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Weakly polymatroidal.

bool isWeaklyPolymatroidalWrt(const MonomialIdeal& ideal, const VariableOrder& order) {
  const std::size_t n = ideal.ambientDim();
  if (!isPermutation(order, n)) {
    fail(ErrorKind::PreconditionViolation, "variable order is not a permutation");
  }
  const auto& g = ideal.gens();
  for (const auto& u : g) {
    for (const auto& v : g) {
      std::size_t pos = 0;
      while (pos < n && u[order[pos]] == v[order[pos]]) ++pos;
      if (pos == n) continue;
      const std::size_t t = order[pos];
      if (u[t] < v[t]) continue;
      bool repaired = false;
      for (std::size_t later = pos + 1; later < n && !repaired; ++later) {
        const std::size_t j = order[later];
        if (v[j] > 0 && idealContains(ideal, v.shifted(j, -1).shifted(t, 1))) repaired = true;
      }
      if (!repaired) return false;
    }
  }
  return true;
}

namespace {

// Placing t directly after the prefix set S is valid iff every pair whose
// first disagreement (in the order) is at t, with u(t) > v(t), has a repair
// variable outside S + {t}. This depends on S only as a set, so the search
// runs over subsets.
class WeakOrderSearch {
 public:
  WeakOrderSearch(const MonomialIdeal& ideal, const SearchLimits& limits)
      : n_(ideal.ambientDim()), limits_(limits), triggers_(n_) {
    const auto& g = ideal.gens();
    for (const auto& u : g) {
      for (const auto& v : g) {
        Mask diff = 0;
        for (std::size_t i = 0; i < n_; ++i) {
          if (u[i] != v[i]) diff |= bit(i);
        }
        for (std::size_t t = 0; t < n_; ++t) {
          if (u[t] <= v[t]) continue;
          Mask repair = 0;
          for (std::size_t j = 0; j < n_; ++j) {
            if (j != t && v[j] > 0 && idealContains(ideal, v.shifted(j, -1).shifted(t, 1))) {
              repair |= bit(j);
            }
          }
          triggers_[t].push_back({diff, repair});
        }
      }
    }
  }

  std::optional<VariableOrder> run() {
    VariableOrder prefix;
    if (extend(0, prefix)) return prefix;
    return std::nullopt;
  }

 private:
  struct Trigger {
    Mask diff;
    Mask repair;
  };

  bool valid(Mask placed, std::size_t t) const {
    const Mask later = ~(placed | bit(t));
    for (const auto& tr : triggers_[t]) {
      if ((tr.diff & placed) == 0 && (tr.repair & later) == 0) return false;
    }
    return true;
  }

  bool extend(Mask placed, VariableOrder& prefix) {
    if (prefix.size() == n_) return true;
    if (++states_ > limits_.maxStates) {
      fail(ErrorKind::SearchTooLarge, "weakly polymatroidal search exceeded state budget");
    }
    for (std::size_t t = 0; t < n_; ++t) {
      if (placed & bit(t)) continue;
      const Mask next = placed | bit(t);
      if (dead_.contains(next) || !valid(placed, t)) continue;
      prefix.push_back(t);
      if (extend(next, prefix)) return true;
      prefix.pop_back();
    }
    dead_.insert(placed);
    return false;
  }

  std::size_t n_;
  SearchLimits limits_;
  std::vector<std::vector<Trigger>> triggers_;
  std::unordered_set<Mask> dead_;
  std::size_t states_ = 0;
};

}  // namespace

std::optional<VariableOrder> findWeaklyPolymatroidalOrder(const MonomialIdeal& ideal,
                                                          const SearchLimits& limits) {
  if (ideal.ambientDim() > limits.maxVariables) {
    fail(ErrorKind::SearchTooLarge,
         "weakly polymatroidal search over " + std::to_string(ideal.ambientDim()) +
             " variables exceeds the limit of " + std::to_string(limits.maxVariables));
  }
  requireMaskable(ideal.ambientDim());
  return WeakOrderSearch(ideal, limits).run();
}

// ---------------------------------------------------------------------------
// Linear quotients.

namespace {

// For generators w, u: the support of w : u, and the variable index when
// w : u is a single variable.
struct ColonTable {
  explicit ColonTable(const MonomialSet& g) : r(g.size()), supp(r * r), linear(r * r, -1) {
    for (std::size_t w = 0; w < r; ++w) {
      for (std::size_t u = 0; u < r; ++u) {
        if (w == u) continue;
        const auto q = quotientByGcd(g[w], g[u]);
        supp[w * r + u] = supportMask(q);
        if (q.modulus() == 1) linear[w * r + u] = static_cast<int>(q.support().front());
      }
    }
  }

  // Whether appending u after the generator set `prefix` keeps the colon
  // ideal generated by variables.
  template <typename Range>
  bool appendable(const Range& prefix, std::size_t u) const {
    Mask linearVars = 0;
    for (std::size_t k : prefix) {
      if (linear[k * r + u] >= 0) linearVars |= bit(static_cast<std::size_t>(linear[k * r + u]));
    }
    for (std::size_t w : prefix) {
      if ((supp[w * r + u] & linearVars) == 0) return false;
    }
    return true;
  }

  std::size_t r;
  std::vector<Mask> supp;
  std::vector<int> linear;
};

struct BitsetHash {
  std::size_t operator()(const std::vector<Mask>& words) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Mask w : words) h ^= std::hash<Mask>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

class QuotientOrderSearch {
 public:
  QuotientOrderSearch(const MonomialIdeal& ideal, const SearchLimits& limits)
      : table_(ideal.gens()), limits_(limits), candidates_(ideal.size()) {
    std::iota(candidates_.begin(), candidates_.end(), std::size_t{0});
    // Low degree first; ties keep the lexicographically descending storage order.
    std::stable_sort(candidates_.begin(), candidates_.end(), [&](std::size_t a, std::size_t b) {
      return ideal.gens()[a].modulus() < ideal.gens()[b].modulus();
    });
  }

  std::optional<GeneratorOrdering> run() {
    std::vector<Mask> placed((table_.r + 63) / 64, 0);
    GeneratorOrdering prefix;
    if (extend(placed, prefix)) return prefix;
    return std::nullopt;
  }

 private:
  bool extend(std::vector<Mask>& placed, GeneratorOrdering& prefix) {
    if (prefix.size() == table_.r) return true;
    if (++states_ > limits_.maxStates) {
      fail(ErrorKind::SearchTooLarge, "linear quotients search exceeded state budget");
    }
    for (std::size_t u : candidates_) {
      if (placed[u / 64] & bit(u % 64)) continue;
      if (!table_.appendable(prefix, u)) continue;
      placed[u / 64] |= bit(u % 64);
      if (!dead_.contains(placed)) {
        prefix.push_back(u);
        if (extend(placed, prefix)) return true;
        prefix.pop_back();
      }
      placed[u / 64] &= ~bit(u % 64);
    }
    dead_.insert(placed);
    return false;
  }

  ColonTable table_;
  SearchLimits limits_;
  std::vector<std::size_t> candidates_;
  std::unordered_set<std::vector<Mask>, BitsetHash> dead_;
  std::size_t states_ = 0;
};

}  // namespace

bool hasLinearQuotientsWrt(const MonomialIdeal& ideal, const GeneratorOrdering& ordering) {
  if (!isPermutation(ordering, ideal.size())) {
    fail(ErrorKind::PreconditionViolation, "ordering is not a permutation of the generators");
  }
  requireMaskable(ideal.ambientDim());
  ColonTable table(ideal.gens());
  for (std::size_t i = 1; i < ordering.size(); ++i) {
    std::span<const std::size_t> prefix(ordering.data(), i);
    if (!table.appendable(prefix, ordering[i])) return false;
  }
  return true;
}

std::optional<GeneratorOrdering> findLinearQuotientsOrder(const MonomialIdeal& ideal,
                                                          const SearchLimits& limits) {
  if (ideal.size() > limits.maxGenerators) {
    fail(ErrorKind::SearchTooLarge,
         "linear quotients search over " + std::to_string(ideal.size()) +
             " generators exceeds the limit of " + std::to_string(limits.maxGenerators));
  }
  requireMaskable(ideal.ambientDim());
  return QuotientOrderSearch(ideal, limits).run();
}

// ---------------------------------------------------------------------------
// k-decomposability.

bool sheddingCoprime(const ExponentVector& u, const ExponentVector& m) {
  requireSameDim(u, m);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] > 0 && m[i] >= u[i]) return false;
  }
  return true;
}

namespace {

// Every l in supp(u) must appear as a single-variable quotient M_j : M_i with
// M_j from the upper part, for every M_i of the lower part.
bool sheddingCondition(const ExponentVector& u, std::span<const ExponentVector> upper,
                       std::span<const ExponentVector> lower) {
  if (lower.empty()) return false;
  for (const auto& mi : lower) {
    for (std::size_t l : u.support()) {
      bool found = std::any_of(upper.begin(), upper.end(), [&](const ExponentVector& mj) {
        const auto q = quotientByGcd(mj, mi);
        return q.modulus() == 1 && q[l] == 1;
      });
      if (!found) return false;
    }
  }
  return true;
}

class SheddingSearch {
 public:
  SheddingSearch(const MonomialIdeal& ideal, int k, const SearchLimits& limits)
      : gens_(ideal.gens().members()), k_(k), limits_(limits) {}

  std::shared_ptr<const SheddingCertificate> run() {
    return decompose(gens_.size() == 64 ? ~Mask{0} : bit(gens_.size()) - 1);
  }

 private:
  std::shared_ptr<const SheddingCertificate> decompose(Mask subset) {
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    if (++states_ > limits_.maxStates) {
      fail(ErrorKind::SearchTooLarge, "shedding search exceeded state budget");
    }
    std::vector<ExponentVector> members;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (subset & bit(i)) members.push_back(gens_[i]);
    }
    std::shared_ptr<const SheddingCertificate> result;
    if (members.size() == 1) {
      result = std::make_shared<SheddingCertificate>(SheddingCertificate{members, {}, {}, {}});
    } else {
      result = tryShedding(subset, members);
    }
    memo_.emplace(subset, result);
    return result;
  }

  std::shared_ptr<const SheddingCertificate> tryShedding(
      Mask subset, const std::vector<ExponentVector>& members) {
    ExponentVector top = members.front();
    for (const auto& m : members) top = lcm(top, m);
    const std::size_t n = top.dim();
    std::vector<Exponent> u(n, 0);
    std::set<std::pair<Mask, Mask>> triedSplits;
    // Odometer over all divisors of the lcm.
    while (true) {
      std::size_t i = 0;
      while (i < n && u[i] == top[i]) u[i++] = 0;
      if (i == n) break;
      ++u[i];
      const ExponentVector cand(u);
      const auto supp = cand.support();
      if (supp.size() > static_cast<std::size_t>(k_) + 1) continue;
      Mask upperMask = 0;
      std::vector<ExponentVector> upper, lower;
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (!(subset & bit(g))) continue;
        if (sheddingCoprime(cand, gens_[g])) {
          lower.push_back(gens_[g]);
        } else {
          upper.push_back(gens_[g]);
          upperMask |= bit(g);
        }
      }
      if (upper.empty() || lower.empty()) continue;
      // The verdict only depends on the split and on supp(u).
      if (!triedSplits.emplace(upperMask, supportMask(cand)).second) continue;
      if (!sheddingCondition(cand, upper, lower)) continue;
      auto up = decompose(upperMask);
      if (!up) continue;
      auto down = decompose(subset & ~upperMask);
      if (!down) continue;
      return std::make_shared<SheddingCertificate>(
          SheddingCertificate{members, cand, std::move(up), std::move(down)});
    }
    return nullptr;
  }

  std::vector<ExponentVector> gens_;
  int k_;
  SearchLimits limits_;
  std::unordered_map<Mask, std::shared_ptr<const SheddingCertificate>> memo_;
  std::size_t states_ = 0;
};

}  // namespace

std::optional<SheddingCertificate> isKDecomposable(const MonomialIdeal& ideal, int k,
                                                   const SearchLimits& limits) {
  if (k < 0) fail(ErrorKind::PreconditionViolation, "k must be nonnegative");
  if (ideal.size() > limits.maxGenerators || ideal.size() > 64) {
    fail(ErrorKind::SearchTooLarge,
         "shedding search over " + std::to_string(ideal.size()) +
             " generators exceeds the limit of " + std::to_string(limits.maxGenerators));
  }
  if (ideal.size() == 0) return std::nullopt;
  auto cert = SheddingSearch(ideal, k, limits).run();
  if (!cert) return std::nullopt;
  return *cert;
}

bool checkSheddingCertificate(const SheddingCertificate& c, int k) {
  if (c.generators.empty()) return false;
  if (!c.shedding) return c.generators.size() == 1 && !c.upper && !c.lower;
  const auto& u = *c.shedding;
  if (u.support().empty() || u.support().size() > static_cast<std::size_t>(k) + 1) return false;
  if (!c.upper || !c.lower) return false;
  std::vector<ExponentVector> upper, lower;
  for (const auto& m : c.generators) {
    (sheddingCoprime(u, m) ? lower : upper).push_back(m);
  }
  auto sameSet = [](std::vector<ExponentVector> a, std::vector<ExponentVector> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  if (!sameSet(upper, c.upper->generators) || !sameSet(lower, c.lower->generators)) return false;
  if (!sheddingCondition(u, upper, lower)) return false;
  return checkSheddingCertificate(*c.upper, k) && checkSheddingCertificate(*c.lower, k);
}

}  // namespace expanse
