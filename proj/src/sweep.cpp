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


#include "expanse/sweep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "expanse/expansion.hpp"
#include "expanse/polymatroid.hpp"
#include "expanse/semigroup.hpp"
#include "expanse/sortable.hpp"

namespace expanse {

namespace {

enum class Outcome { Verified, Skipped, Violation };

struct InstanceResult {
  Outcome outcome = Outcome::Verified;
  std::string detail;
  std::vector<std::string> tallies;
};

using Rng = std::mt19937_64;
using Instance = std::function<InstanceResult(Rng&)>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

InstanceResult guarded(const Instance& instance, std::uint64_t seed, std::size_t index) {
  Rng rng(mix(seed ^ mix(index)));
  try {
    return instance(rng);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SearchTooLarge || e.kind() == ErrorKind::BudgetExhausted) {
      return {Outcome::Skipped, e.what(), {"skipped: " + std::string(toString(e.kind()))}};
    }
    return {Outcome::Violation, std::string(toString(e.kind())) + ": " + e.what(), {}};
  }
}

// Evaluates instances first..first+size-1, possibly on several threads.
std::vector<InstanceResult> evaluate(const std::function<InstanceResult(std::size_t)>& at,
                                     std::size_t first, std::size_t size, unsigned threads) {
  std::vector<InstanceResult> out(size);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(size)));
  if (workers == 1) {
    for (std::size_t k = 0; k < size; ++k) out[k] = at(first + k);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < size; k += workers) out[k] = at(first + k);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

void record(SuiteReport& report, InstanceResult r) {
  ++report.draws;
  for (auto& t : r.tallies) ++report.tallies[t];
  switch (r.outcome) {
    case Outcome::Verified: ++report.verified; break;
    case Outcome::Skipped: ++report.skipped; break;
    case Outcome::Violation:
      ++report.violations;
      if (report.failures.size() < 10) report.failures.push_back(std::move(r.detail));
      break;
  }
}

SuiteReport runRandom(const std::string& name, const SweepConfig& config, const Instance& instance) {
  SuiteReport report;
  report.name = name;
  const std::size_t maxDraws = config.count * std::max<std::size_t>(config.drawFactor, 1);
  const std::size_t batch = std::max<std::size_t>(config.threads, 1) * 4;
  std::size_t next = 0;
  while (report.verified < config.count && next < maxDraws) {
    const std::size_t size = std::min(batch, maxDraws - next);
    auto results = evaluate([&](std::size_t k) { return guarded(instance, config.seed, k); }, next,
                            size, config.threads);
    next += size;
    for (auto& r : results) {
      if (report.verified >= config.count) break;
      record(report, std::move(r));
    }
  }
  return report;
}

SuiteReport runAll(const std::string& name, const SweepConfig& config,
                   const std::vector<Instance>& instances) {
  SuiteReport report;
  report.name = name;
  auto results = evaluate([&](std::size_t k) { return guarded(instances[k], config.seed, k); }, 0,
                          instances.size(), config.threads);
  for (auto& r : results) record(report, std::move(r));
  return report;
}

InstanceResult violation(std::string detail) { return {Outcome::Violation, std::move(detail), {}}; }
InstanceResult skipped(std::string why) { return {Outcome::Skipped, why, {"skipped: " + why}}; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string describe(const std::vector<ExponentVector>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + vs[k].toString();
  return s + "}";
}

std::string describe(const MonomialSet& set) { return describe(set.members()); }

ExpansionShape randomShape(Rng& rng, std::size_t n, int maxEntry) {
  std::vector<int> a(n);
  for (auto& k : a) k = uniform(rng, 1, maxEntry);
  return ExpansionShape(std::move(a));
}

// A random monomial of degree in [minDegree, maxDegree] in n variables.
ExponentVector randomMonomial(Rng& rng, std::size_t n, int minDegree, int maxDegree) {
  std::vector<Exponent> e(n, 0);
  const int degree = uniform(rng, minDegree, maxDegree);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
  return ExponentVector(std::move(e));
}

// A random divisibility-minimal configuration. Half the draws are
// equigenerated; the rest mix degrees from 2 up, so that minimalization
// rarely collapses the set.
MonomialSet randomConfiguration(Rng& rng, std::size_t n, std::size_t maxSize, int maxDegree) {
  // More members than variables, so the toric ideal is usually nonzero.
  const int fewest = static_cast<int>(std::min(n + 1, maxSize));
  const auto m = static_cast<std::size_t>(uniform(rng, fewest, static_cast<int>(maxSize)));
  const int low = std::min(2, maxDegree);
  const int d = uniform(rng, low, maxDegree);
  const bool equal = uniform(rng, 0, 1) == 0;
  std::vector<ExponentVector> vs;
  for (std::size_t k = 0; k < m; ++k) {
    vs.push_back(equal ? randomMonomial(rng, n, d, d) : randomMonomial(rng, n, low, maxDegree));
  }
  return minimalize(n, vs);
}

MonomialSet randomEquigenerated(Rng& rng, std::size_t n, int degree, std::size_t maxSize) {
  const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(maxSize)));
  std::set<ExponentVector> vs;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Exponent> e(n, 0);
    for (int t = 0; t < degree; ++t) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
    vs.emplace(std::move(e));
  }
  return MonomialSet(n, std::vector<ExponentVector>(vs.begin(), vs.end()));
}

std::size_t binomial(std::size_t a, std::size_t b) {
  std::size_t r = 1;
  for (std::size_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

std::size_t expandedSize(const ExponentVector& u, const ExpansionShape& shape) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const auto k = static_cast<std::size_t>(shape.blockSize(i));
    size *= binomial(static_cast<std::size_t>(u[i]) + k - 1, k - 1);
  }
  return size;
}

std::size_t expandedSize(const MonomialSet& set, const ExpansionShape& shape) {
  std::size_t size = 0;
  for (const auto& u : set) size += expandedSize(u, shape);
  return size;
}

// Generators of P_{S_1} ... P_{S_k} for random nonempty variable subsets.
std::vector<ExponentVector> primeProduct(Rng& rng, std::size_t n, int factors) {
  std::vector<ExponentVector> gens{ExponentVector(n)};
  for (int f = 0; f < factors; ++f) {
    std::vector<std::size_t> subset;
    while (subset.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (uniform(rng, 0, 1)) subset.push_back(i);
      }
    }
    std::set<ExponentVector> next;
    for (const auto& g : gens) {
      for (std::size_t i : subset) next.insert(g.shifted(i, 1));
    }
    gens.assign(next.begin(), next.end());
  }
  return gens;
}

// Three families: arbitrary generators, products of monomial primes (always
// polymatroidal), and such products with one extra generator of the same
// degree. Draws with a single minimal generator are redrawn.
MonomialIdeal randomIdeal(Rng& rng, std::vector<std::string>& tallies) {
  const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
  const int mode = uniform(rng, 0, 2);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<ExponentVector> gens;
    if (mode > 0) {
      const int factors = uniform(rng, 1, 3);
      gens = primeProduct(rng, n, factors);
      if (mode == 2) gens.push_back(randomMonomial(rng, n, factors, factors));
    } else {
      const bool equal = uniform(rng, 0, 1) == 0;
      const int d = uniform(rng, 2, 3);
      const int r = uniform(rng, 2, 6);
      for (int k = 0; k < r; ++k) {
        if (equal) {
          gens.push_back(randomMonomial(rng, n, d, d));
          continue;
        }
        std::vector<Exponent> e(n);
        for (auto& x : e) x = uniform(rng, 0, 3);
        if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) e[0] = 1;
        gens.emplace_back(std::move(e));
      }
    }
    MonomialIdeal ideal(n, gens);
    if (ideal.size() < 2 || ideal.size() > 6) continue;
    tallies.push_back(mode == 0   ? "family: random"
                      : mode == 1 ? "family: prime products"
                                  : "family: perturbed prime products");
    return ideal;
  }
  tallies.push_back("family: fallback");
  return MonomialIdeal(n, primeProduct(rng, n, 1));
}

bool sameBinomials(std::vector<YBinomial> a, std::vector<YBinomial> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

SuiteReport sweepIdealTransfer(const SweepConfig& config) {
  return runRandom("ideal-transfer", config, [&](Rng& rng) -> InstanceResult {
    std::vector<std::string> tallies;
    const MonomialIdeal ideal = randomIdeal(rng, tallies);
    const std::size_t n = ideal.ambientDim();
    const ExpansionShape shape = randomShape(rng, n, 3);
    if (expandedSize(ideal.gens(), shape) > config.maxExpandedSize) {
      return skipped("expansion larger than " + std::to_string(config.maxExpandedSize));
    }
    const MonomialIdeal expanded = expandIdeal(ideal, shape);
    const std::string where = describe(ideal.gens()) + " alpha=" + shape.toString();

    const bool poly = isPolymatroidal(ideal);
    if (poly != isPolymatroidal(expanded)) return violation("polymatroidal differs: " + where);

    const auto wp = findWeaklyPolymatroidalOrder(ideal, config.limits);
    const auto wpExpanded = findWeaklyPolymatroidalOrder(expanded, config.limits);
    if (wp.has_value() != wpExpanded.has_value()) {
      return violation("weakly polymatroidal differs: " + where);
    }
    if ((wp && !isWeaklyPolymatroidalWrt(ideal, *wp)) ||
        (wpExpanded && !isWeaklyPolymatroidalWrt(expanded, *wpExpanded))) {
      return violation("weakly polymatroidal order does not verify: " + where);
    }

    const auto lq = findLinearQuotientsOrder(ideal, config.limits);
    const auto lqExpanded = findLinearQuotientsOrder(expanded, config.limits);
    if (lq.has_value() != lqExpanded.has_value()) {
      return violation("linear quotients differ: " + where);
    }
    if ((lq && !hasLinearQuotientsWrt(ideal, *lq)) ||
        (lqExpanded && !hasLinearQuotientsWrt(expanded, *lqExpanded))) {
      return violation("linear quotient order does not verify: " + where);
    }

    const auto cert = isKDecomposable(ideal, static_cast<int>(n) - 1, config.limits);
    if (cert.has_value() != lq.has_value()) {
      return violation("decomposability disagrees with linear quotients: " + where);
    }
    if (cert && !checkSheddingCertificate(*cert, static_cast<int>(n) - 1)) {
      return violation("shedding certificate does not verify: " + where);
    }
    if (poly && !wp) return violation("polymatroidal but not weakly polymatroidal: " + where);
    if (wp && !lq) return violation("weakly polymatroidal without linear quotients: " + where);

    if (poly) tallies.push_back("polymatroidal");
    if (wp) tallies.push_back("weakly polymatroidal");
    if (lq) tallies.push_back("linear quotients");
    return {Outcome::Verified, {}, tallies};
  });
}

SuiteReport sweepGrobnerContraction(const SweepConfig& config) {
  return runRandom("grobner-contraction", config, [&](Rng& rng) -> InstanceResult {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
    const MonomialSet a = randomConfiguration(rng, n, 6, 4);
    const ExpansionShape shape = randomShape(rng, n, 2);
    if (expandedSize(a, shape) > config.maxExpandedSize) {
      return skipped("expansion larger than " + std::to_string(config.maxExpandedSize));
    }
    const std::string where = describe(a) + " alpha=" + shape.toString();
    const auto expanded = expandSet(a, shape);
    const GroebnerBasis big = toricGB(expanded.vectors, inducedLex(expanded.vectors), config.buchberger);
    const GroebnerBasis small = toricGB(a, inducedLex(a), config.buchberger);
    const auto mapped = contractToBase(big, shape, a, small.order());
    if (!sameBinomials(mapped, small.elements())) {
      return violation("restriction differs from the direct basis: " + where);
    }
    return {Outcome::Verified,
            {},
            {small.empty() ? "zero toric ideal" : "nonzero toric ideal",
             "expanded members: " + std::to_string(expanded.vectors.size() / 10 * 10) + "+"}};
  });
}

namespace {

void monomialsOfDegree(std::size_t n, int d, std::vector<Exponent>& prefix,
                       std::vector<ExponentVector>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(d);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = d; first >= 0; --first) {
    prefix.push_back(first);
    monomialsOfDegree(n, d - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<ExponentVector> monomialsOfDegree(std::size_t n, int d) {
  std::vector<ExponentVector> out;
  std::vector<Exponent> prefix;
  monomialsOfDegree(n, d, prefix, out);
  return out;
}

// Calls visit on every nonempty subset of `pool` with at most maxSize members.
void subsets(const std::vector<ExponentVector>& pool, std::size_t maxSize,
             const std::function<void(const std::vector<ExponentVector>&)>& visit) {
  std::vector<ExponentVector> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!current.empty()) visit(current);
    if (current.size() == maxSize) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      current.push_back(pool[k]);
      rec(k + 1);
      current.pop_back();
    }
  };
  rec(0);
}

std::vector<ExpansionShape> binaryShapes(std::size_t n, bool includeIdentity) {
  std::vector<ExpansionShape> out;
  for (unsigned mask = includeIdentity ? 0 : 1; mask < (1u << n); ++mask) {
    std::vector<int> a(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) a[i] = 2;
    }
    out.emplace_back(std::move(a));
  }
  return out;
}

bool zeroOne(const MonomialSet& set) {
  return std::all_of(set.begin(), set.end(), [](const ExponentVector& u) {
    return std::all_of(u.entries().begin(), u.entries().end(), [](Exponent e) { return e <= 1; });
  });
}

}  // namespace

SuiteReport sweepWhite(const SweepConfig& config) {
  std::vector<Instance> instances;
  std::size_t candidates = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      subsets(monomialsOfDegree(n, d), 6, [&](const std::vector<ExponentVector>& pick) {
        ++candidates;
        MonomialSet set(n, pick);
        if (!validateBaseSet(set).valid) return;
        instances.push_back([&config, set](Rng&) -> InstanceResult {
          const BaseSet bases(set);
          const std::string where = describe(set);
          std::vector<std::string> tallies;
          if (zeroOne(set)) tallies.push_back("matroids");
          const bool white = checkWhite(bases, config.buchberger);
          const FiberReport fibers = fiberConnectedOracle(bases, 0, 2'000'000, config.buchberger);
          if (white != fibers.connected) return violation("oracle disagrees: " + where);
          if (!white) {
            tallies.push_back("premise false");
            return {Outcome::Verified, {}, tallies};
          }
          tallies.push_back("premise true");
          for (const auto& shape : binaryShapes(set.ambientDim(), false)) {
            tallies.push_back("expansions checked");
            if (!checkWhite(expandBases(bases, shape), config.buchberger)) {
              return violation("expansion loses double-swap generation: " + where +
                               " alpha=" + shape.toString());
            }
          }
          return {Outcome::Verified, {}, tallies};
        });
      });
    }
  }
  SuiteReport report = runAll("white", config, instances);
  report.tallies["candidate sets"] = candidates;
  return report;
}

SuiteReport sweepSortable(const SweepConfig& config) {
  std::vector<Instance> instances;
  for (std::size_t n = 1; n <= 3; ++n) {
    subsets(monomialsOfDegree(n, 2), 64, [&](const std::vector<ExponentVector>& pick) {
      MonomialSet set(n, pick);
      for (const auto& shape : binaryShapes(n, true)) {
        instances.push_back([&config, set, shape](Rng&) -> InstanceResult {
          const std::string where = describe(set) + " alpha=" + shape.toString();
          const auto check = verifyTheoremSort(set, shape);
          if (!check.holds()) return violation("sortability differs: " + where);
          const auto expanded = expandSet(set, shape);
          for (const auto& u : expanded.vectors) {
            for (const auto& v : expanded.vectors) {
              auto [a, b] = sortPair(u, v);
              auto [c, d] = sortPair(contractVector(u, shape), contractVector(v, shape));
              if (contractVector(a, shape) != c || contractVector(b, shape) != d) {
                return violation("sorting does not commute with contraction: " + where);
              }
            }
          }
          std::vector<std::string> tallies;
          if (check.base) {
            tallies.push_back("sortable");
            const TermOrder order = inducedLex(set);
            if (!verifySortingGeneration(set, order, config.buchberger)) {
              return violation("sorting relations do not generate: " + describe(set));
            }
            // Recorded, not required.
            tallies.push_back(verifyGB(sortingRelations(set, order), set, order, config.buchberger)
                                  ? "relations form a Groebner basis"
                                  : "relations do not form a Groebner basis");
            const auto& big = expanded.vectors;
            if (!verifySortingGeneration(big, inducedLex(big), config.buchberger)) {
              return violation("sorting relations do not generate the expansion: " + where);
            }
          }
          return {Outcome::Verified, {}, tallies};
        });
      }
    });
  }
  return runAll("sortable", config, instances);
}

SuiteReport sweepNormal(const SweepConfig& config) {
  return runRandom("normal", config, [&](Rng& rng) -> InstanceResult {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const MonomialSet a = randomEquigenerated(rng, n, uniform(rng, 1, 3), 4);
    const ExpansionShape shape = randomShape(rng, n, 2);
    const std::string where = describe(a) + " alpha=" + shape.toString();
    const auto check = verifyTheoremNormal(a, shape, config.normalityBound);
    if (!check.holds()) return violation("normality verdicts differ: " + where);
    return {Outcome::Verified, {}, {check.base.normalUpToBound() ? "normal up to bound" : "not normal"}};
  });
}

SuiteReport sweepStructure(const SweepConfig& config) {
  SuiteReport report;
  report.name = "structure";
  // Exhaustive counting identity and contraction of expansions.
  std::vector<Instance> counting;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<int> alpha(n, 1);
    while (true) {
      const ExpansionShape shape(alpha);
      counting.push_back([shape, n](Rng&) -> InstanceResult {
        std::vector<Exponent> u(n, 0);
        while (true) {
          const ExponentVector v(u);
          const auto w = expandVector(v, shape);
          if (w.size() != expandedSize(v, shape)) {
            return violation("count of " + v.toString() + " alpha=" + shape.toString());
          }
          if (std::set<ExponentVector>(w.begin(), w.end()).size() != w.size()) {
            return violation("repeated expansion of " + v.toString());
          }
          for (const auto& x : w) {
            if (contractVector(x, shape) != v) {
              return violation("contraction of " + x.toString() + " alpha=" + shape.toString());
            }
          }
          std::size_t i = 0;
          while (i < n && u[i] == 4) u[i++] = 0;
          if (i == n) break;
          ++u[i];
        }
        return {Outcome::Verified, {}, {"counting shapes"}};
      });
      std::size_t i = 0;
      while (i < n && alpha[i] == 3) alpha[i++] = 1;
      if (i == n) break;
      ++alpha[i];
    }
  }
  auto merge = [&](const SuiteReport& part) {
    report.draws += part.draws;
    report.verified += part.verified;
    report.skipped += part.skipped;
    report.violations += part.violations;
    for (const auto& [k, v] : part.tallies) report.tallies[k] += v;
    for (const auto& f : part.failures) {
      if (report.failures.size() < 10) report.failures.push_back(f);
    }
  };
  merge(runAll("counting", config, counting));

  merge(runRandom("relabeling", config, [&](Rng& rng) -> InstanceResult {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const MonomialSet a = randomConfiguration(rng, n, 4, 3);
    const ExpansionShape alpha = randomShape(rng, n, 2);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    const VariableRelabeling sigma = relabelIterated(alpha, i);
    const auto once = expandSet(a, alpha);
    const auto twice = expandSet(once.vectors, sigma.gamma);
    std::set<ExponentVector> image;
    for (const auto& w : twice.vectors) image.insert(sigma.apply(w));
    const auto direct = expandSet(a, sigma.beta);
    if (image != std::set<ExponentVector>(direct.vectors.begin(), direct.vectors.end())) {
      return violation("relabeled double expansion differs: " + describe(a) + " alpha=" +
                       alpha.toString() + " i=" + std::to_string(i + 1));
    }
    return {Outcome::Verified, {}, {"relabeling instances"}};
  }));

  merge(runRandom("order-invariance", config, [&](Rng& rng) -> InstanceResult {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const MonomialSet a = randomConfiguration(rng, n, 5, 3);
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ExponentVector> shuffled;
    for (std::size_t k : perm) shuffled.push_back(a[k]);
    const MonomialSet b(n, shuffled);
    const auto ga = toricGB(a, inducedLex(a), config.buchberger);
    const auto gb = toricGB(b, inducedLex(b), config.buchberger);
    std::vector<YBinomial> back;
    for (const auto& g : gb.elements()) {
      std::vector<Exponent> p(a.size(), 0), q(a.size(), 0);
      for (std::size_t k = 0; k < perm.size(); ++k) {
        p[perm[k]] = g.plus[k];
        q[perm[k]] = g.minus[k];
      }
      back.push_back(YBinomial{ExponentVector(std::move(p)), ExponentVector(std::move(q))});
    }
    if (!sameBinomials(back, ga.elements())) {
      return violation("reduced basis depends on input order: " + describe(a));
    }
    return {Outcome::Verified, {}, {"order-invariance instances"}};
  }));
  return report;
}

SuiteReport sweepToricTransfer(const SweepConfig& config) {
  return runRandom("toric-transfer", config, [&](Rng& rng) -> InstanceResult {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const MonomialSet a = randomConfiguration(rng, n, 5, 3);
    const ExpansionShape shape = randomShape(rng, n, 2);
    if (expandedSize(a, shape) > config.maxExpandedSize) {
      return skipped("expansion larger than " + std::to_string(config.maxExpandedSize));
    }
    const std::string where = describe(a) + " alpha=" + shape.toString();
    const auto expanded = expandSet(a, shape);
    const MonomialSet& big = expanded.vectors;
    const GroebnerBasis small = toricGB(a, inducedLex(a), config.buchberger);
    const GroebnerBasis direct = toricGB(big, inducedLex(big), config.buchberger);

    const GroebnerBasis lifted = expandGB(a, small, shape, config.buchberger);
    if (!(lifted.configuration() == big) || lifted.elements() != direct.elements()) {
      return violation("lifted basis differs from direct computation: " + where);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto step = expandGBSingleSplit(a, small, i, config.buchberger);
      if (!verifyGB(step.combined, step.expanded.vectors, inducedLex(step.expanded.vectors),
                    config.buchberger)) {
        return violation("G0 u G1 is not a Groebner basis: " + describe(a) + " i=" +
                         std::to_string(i + 1));
      }
    }

    std::vector<YBinomial> flattened;
    for (const auto& g : direct.elements()) {
      auto f = flattenBinomial(g, expanded, a, small.order());
      if (!f) continue;
      if (!kernelTest(*f, a)) return violation("flattened element leaves I_A: " + where);
      flattened.push_back(std::move(*f));
    }
    if (!generates(flattened, a, small.order(), config.buchberger)) {
      return violation("flattened basis does not generate I_A: " + where);
    }

    if ((small.maxDegree() <= 2) != (direct.maxDegree() <= 2)) {
      return violation("quadratic basis not transferred: " + where);
    }
    if (krullDimension(a) > krullDimension(big)) return violation("dimension drops: " + where);

    // Two membership tests on random binomials of degree <= 3.
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Exponent> p(a.size(), 0), q(a.size(), 0);
      const int degree = uniform(rng, 1, 3);
      for (int t = 0; t < degree; ++t) {
        ++p[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.size()) - 1))];
        ++q[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.size()) - 1))];
      }
      const YBinomial b{ExponentVector(std::move(p)), ExponentVector(std::move(q))};
      if (b.plus == b.minus) continue;
      if (kernelTest(b, a) != !normalForm(b, small).has_value()) {
        return violation("kernel test and normal form disagree: " + where);
      }
    }
    return {Outcome::Verified, {}, {small.maxDegree() <= 2 ? "quadratic basis" : "higher degree basis"}};
  });
}

std::vector<std::string> suiteNames() {
  return {"ideal-transfer", "grobner-contraction", "white", "sortable",
          "normal",         "structure",           "toric-transfer"};
}

SuiteReport runSuite(const std::string& name, const SweepConfig& config) {
  if (name == "ideal-transfer") return sweepIdealTransfer(config);
  if (name == "grobner-contraction") return sweepGrobnerContraction(config);
  if (name == "white") return sweepWhite(config);
  if (name == "sortable") return sweepSortable(config);
  if (name == "normal") return sweepNormal(config);
  if (name == "structure") return sweepStructure(config);
  if (name == "toric-transfer") return sweepToricTransfer(config);
  fail(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace expanse
