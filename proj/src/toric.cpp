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

#include "expanse/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "buchberger.hpp"

namespace expanse {

using detail::BinomialBuchberger;
using detail::Term;

namespace {

Term toTerm(const ExponentVector& u) { return Term(u.entries().begin(), u.entries().end()); }

YBinomial fromTerms(Term lead, Term trail) {
  return YBinomial{ExponentVector(std::move(lead)), ExponentVector(std::move(trail))};
}

void requireOrderDim(const TermOrder& order, std::size_t m) {
  if (order.dim() != m) {
    fail(ErrorKind::DimensionMismatch,
         "term order has " + std::to_string(order.dim()) + " variables, configuration has " +
             std::to_string(m));
  }
}

void requireBinomialDim(const YBinomial& b, std::size_t m) {
  if (b.plus.dim() != m || b.minus.dim() != m) {
    fail(ErrorKind::DimensionMismatch, "binomial does not match the configuration size");
  }
}

// Orients without cancelling: the polynomial itself must not change.
std::pair<Term, Term> oriented(const YBinomial& b, const TermOrder& order) {
  Term a = toTerm(b.plus);
  Term c = toTerm(b.minus);
  if (order.compare(a, c) < 0) std::swap(a, c);
  return {std::move(a), std::move(c)};
}

BinomialBuchberger divisorEngine(const std::vector<YBinomial>& divisors, const TermOrder& order) {
  BinomialBuchberger engine(order, false, 0);
  for (const auto& g : divisors) {
    requireBinomialDim(g, order.dim());
    auto [a, c] = oriented(g, order);
    if (a == c) continue;
    engine.addDivisor(std::move(a), std::move(c));
  }
  return engine;
}

std::optional<YBinomial> remainder(const BinomialBuchberger& engine, const YBinomial& b) {
  auto r = engine.normalForm(toTerm(b.plus), toTerm(b.minus));
  if (!r) return std::nullopt;
  return fromTerms(std::move(r->lead), std::move(r->trail));
}

ExponentVector imageSum(const ExponentVector& exps, const MonomialSet& configuration) {
  std::vector<Exponent> sum(configuration.ambientDim(), 0);
  for (std::size_t i = 0; i < exps.dim(); ++i) {
    if (exps[i] == 0) continue;
    const auto& u = configuration[i];
    for (std::size_t v = 0; v < sum.size(); ++v) {
      std::int64_t add = static_cast<std::int64_t>(exps[i]) * u[v];
      if (add > INT32_MAX || __builtin_add_overflow(sum[v], static_cast<Exponent>(add), &sum[v])) {
        fail(ErrorKind::Overflow, "exponent overflow in kernel test");
      }
    }
  }
  return ExponentVector(std::move(sum));
}

}  // namespace

std::optional<YBinomial> makeBinomial(const ExponentVector& a, const ExponentVector& b,
                                      const TermOrder& order) {
  requireSameDim(a, b);
  const ExponentVector g = gcd(a, b);
  ExponentVector p = a - g;
  ExponentVector q = b - g;
  const auto cmp = order.compare(p, q);
  if (cmp == 0) return std::nullopt;
  if (cmp < 0) std::swap(p, q);
  return YBinomial{std::move(p), std::move(q)};
}

std::optional<YBinomial> makeQuadric(std::size_t m, std::size_t i1, std::size_t i2,
                                     std::size_t j1, std::size_t j2, const TermOrder& order) {
  if (std::max({i1, i2, j1, j2}) >= m) {
    fail(ErrorKind::InvalidInput, "configuration index out of range");
  }
  std::vector<Exponent> a(m, 0), b(m, 0);
  ++a[i1];
  ++a[i2];
  ++b[j1];
  ++b[j2];
  return makeBinomial(ExponentVector(std::move(a)), ExponentVector(std::move(b)), order);
}

GroebnerBasis::GroebnerBasis(MonomialSet configuration, TermOrder order,
                             std::vector<YBinomial> elements)
    : configuration_(std::move(configuration)),
      order_(std::move(order)),
      elements_(std::move(elements)) {
  requireOrderDim(order_, configuration_.size());
  for (const auto& e : elements_) requireBinomialDim(e, configuration_.size());
  sortBinomials(elements_, order_);
}

std::int64_t GroebnerBasis::maxDegree() const {
  std::int64_t d = 0;
  for (const auto& e : elements_) d = std::max(d, e.degree());
  return d;
}

void sortBinomials(std::vector<YBinomial>& binomials, const TermOrder& order) {
  std::sort(binomials.begin(), binomials.end(), [&](const YBinomial& a, const YBinomial& b) {
    if (auto c = order.compare(a.plus, b.plus); c != 0) return c > 0;
    return order.compare(a.minus, b.minus) > 0;
  });
}

TermOrder inducedLex(const MonomialSet& configuration) {
  return TermOrder::inducedSharp(TermOrder::lex(configuration.ambientDim()), configuration);
}

GroebnerBasis toricGB(const MonomialSet& configuration, const TermOrder& order,
                      const BuchbergerOptions& options) {
  const std::size_t m = configuration.size();
  const std::size_t n = configuration.ambientDim();
  if (m == 0) fail(ErrorKind::InvalidInput, "configuration must be nonempty");
  requireOrderDim(order, m);

  // Combined layout [y_0..y_{m-1} | x_0..x_{n-1}]. The graph ideal
  // (y_i - x^{u_i}) is prime and contains no monomials, so gcds may be
  // divided out of every binomial.
  BinomialBuchberger engine(TermOrder::elimination(order, TermOrder::lex(n)), true,
                            options.pairBudget);
  for (std::size_t i = 0; i < m; ++i) {
    Term y(m + n, 0);
    Term x(m + n, 0);
    y[i] = 1;
    for (std::size_t v = 0; v < n; ++v) x[m + v] = configuration[i][v];
    engine.addGenerator(std::move(y), std::move(x));
  }
  engine.complete();

  std::vector<YBinomial> elements;
  for (auto& b : engine.reducedBasis()) {
    const bool yOnly = std::all_of(b.lead.begin() + static_cast<std::ptrdiff_t>(m), b.lead.end(),
                                   [](Exponent e) { return e == 0; }) &&
                       std::all_of(b.trail.begin() + static_cast<std::ptrdiff_t>(m),
                                   b.trail.end(), [](Exponent e) { return e == 0; });
    if (!yOnly) continue;
    b.lead.resize(m);
    b.trail.resize(m);
    elements.push_back(fromTerms(std::move(b.lead), std::move(b.trail)));
  }
  return GroebnerBasis(configuration, order, std::move(elements));
}

bool kernelTest(const YBinomial& b, const MonomialSet& configuration) {
  requireBinomialDim(b, configuration.size());
  return imageSum(b.plus, configuration) == imageSum(b.minus, configuration);
}

std::optional<YBinomial> normalForm(const YBinomial& b, const std::vector<YBinomial>& divisors,
                                    const TermOrder& order) {
  requireBinomialDim(b, order.dim());
  return remainder(divisorEngine(divisors, order), b);
}

std::optional<YBinomial> normalForm(const YBinomial& b, const GroebnerBasis& basis) {
  return normalForm(b, basis.elements(), basis.order());
}

std::vector<YBinomial> groebnerClosure(const std::vector<YBinomial>& generators,
                                       const TermOrder& order, const BuchbergerOptions& options) {
  BinomialBuchberger engine(order, false, options.pairBudget);
  for (const auto& g : generators) {
    requireBinomialDim(g, order.dim());
    engine.addGenerator(toTerm(g.plus), toTerm(g.minus));
  }
  engine.complete();
  std::vector<YBinomial> out;
  for (auto& b : engine.reducedBasis()) out.push_back(fromTerms(std::move(b.lead), std::move(b.trail)));
  sortBinomials(out, order);
  return out;
}

bool generates(const std::vector<YBinomial>& generators, const MonomialSet& configuration,
               const TermOrder& order, const BuchbergerOptions& options) {
  for (const auto& g : generators) {
    if (!kernelTest(g, configuration)) {
      fail(ErrorKind::PreconditionViolation, "generator is not in the toric ideal");
    }
  }
  const GroebnerBasis target = toricGB(configuration, order, options);
  if (target.empty()) return true;
  const auto closure = groebnerClosure(generators, order, options);
  const auto engine = divisorEngine(closure, order);
  return std::all_of(target.elements().begin(), target.elements().end(),
                     [&](const YBinomial& g) { return !remainder(engine, g); });
}

std::vector<YBinomial> interreduce(const std::vector<YBinomial>& basis, const TermOrder& order) {
  std::vector<std::pair<Term, Term>> terms;
  for (const auto& g : basis) {
    requireBinomialDim(g, order.dim());
    auto t = oriented(g, order);
    if (t.first != t.second) terms.push_back(std::move(t));
  }
  // Keep one element per minimal leading term.
  std::vector<bool> keep(terms.size(), true);
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = 0; b < terms.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (detail::termDivides(terms[b].first, terms[a].first) &&
          (terms[b].first != terms[a].first || b < a)) {
        keep[a] = false;
      }
    }
  }
  BinomialBuchberger engine(order, false, 0);
  for (std::size_t a = 0; a < terms.size(); ++a) {
    if (keep[a]) engine.addDivisor(terms[a].first, terms[a].second);
  }
  std::vector<YBinomial> out;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    if (!keep[a]) continue;
    Term tail = engine.reduceMonomial(terms[a].second);
    if (tail == terms[a].first) {
      fail(ErrorKind::InvariantViolation, "interreduction produced a zero element");
    }
    out.push_back(fromTerms(terms[a].first, std::move(tail)));
  }
  sortBinomials(out, order);
  return out;
}

GBCheck checkGB(const std::vector<YBinomial>& candidate, const MonomialSet& configuration,
                const TermOrder& order, const BuchbergerOptions& options) {
  requireOrderDim(order, configuration.size());
  GBCheck check;
  check.inIdeal = std::all_of(candidate.begin(), candidate.end(),
                              [&](const YBinomial& b) { return kernelTest(b, configuration); });

  const auto engine = divisorEngine(candidate, order);
  std::vector<std::pair<Term, Term>> terms;
  for (const auto& g : candidate) {
    auto t = oriented(g, order);
    if (t.first != t.second) terms.push_back(std::move(t));
  }
  check.spairsReduce = true;
  for (std::size_t i = 0; i < terms.size() && check.spairsReduce; ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const Term& li = terms[i].first;
      const Term& lj = terms[j].first;
      bool coprime = true;
      for (std::size_t v = 0; v < li.size() && coprime; ++v) coprime = li[v] == 0 || lj[v] == 0;
      if (coprime) continue;
      const Term l = detail::termLcm(li, lj);
      Term a = l;
      Term b = l;
      for (std::size_t v = 0; v < l.size(); ++v) {
        a[v] += terms[i].second[v] - li[v];
        b[v] += terms[j].second[v] - lj[v];
      }
      if (engine.normalForm(std::move(a), std::move(b))) {
        check.spairsReduce = false;
        break;
      }
    }
  }

  const GroebnerBasis target = toricGB(configuration, order, options);
  check.generatesIdeal =
      std::all_of(target.elements().begin(), target.elements().end(),
                  [&](const YBinomial& g) { return !remainder(engine, g); });
  return check;
}

GroebnerBasis contractGB(const GroebnerBasis& basis, const std::vector<std::size_t>& subset) {
  const MonomialSet& a = basis.configuration();
  if (subset.empty()) fail(ErrorKind::PreconditionViolation, "variable subset must be nonempty");
  std::vector<bool> inT(a.ambientDim(), false);
  for (std::size_t v : subset) {
    if (v >= a.ambientDim()) fail(ErrorKind::InvalidInput, "variable index out of range");
    inT[v] = true;
  }
  std::vector<std::size_t> kept;
  std::vector<std::size_t> local(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto s = a[i].support();
    if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return inT[v]; })) {
      local[i] = kept.size();
      kept.push_back(i);
    }
  }
  if (kept.empty()) fail(ErrorKind::PreconditionViolation, "empty subconfiguration");

  std::vector<ExponentVector> members;
  for (std::size_t i : kept) members.push_back(a[i]);
  MonomialSet sub(a.ambientDim(), std::move(members));

  std::vector<YBinomial> elements;
  for (const auto& g : basis.elements()) {
    bool inside = true;
    for (std::size_t i = 0; i < a.size() && inside; ++i) {
      if ((g.plus[i] > 0 || g.minus[i] > 0) && local[i] == a.size()) inside = false;
    }
    if (!inside) continue;
    std::vector<Exponent> p(kept.size()), q(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      p[k] = g.plus[kept[k]];
      q[k] = g.minus[kept[k]];
    }
    elements.push_back(YBinomial{ExponentVector(std::move(p)), ExponentVector(std::move(q))});
  }
  return GroebnerBasis(std::move(sub), basis.order().restrictedTo(kept), std::move(elements));
}

std::vector<YBinomial> contractToBase(const GroebnerBasis& expandedBasis,
                                      const ExpansionShape& shape, const MonomialSet& base,
                                      const TermOrder& order) {
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < shape.baseDim(); ++i) firsts.push_back(shape.flatIndex(i, 0));
  const GroebnerBasis contracted = contractGB(expandedBasis, firsts);
  const MonomialSet& sub = contracted.configuration();
  std::vector<std::size_t> to(sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) {
    auto idx = base.indexOf(contractVector(sub[k], shape));
    if (!idx) fail(ErrorKind::InvariantViolation, "restricted member is not a lift of the base");
    to[k] = *idx;
  }
  std::vector<YBinomial> out;
  for (const auto& g : contracted.elements()) {
    std::vector<Exponent> p(base.size(), 0), q(base.size(), 0);
    for (std::size_t k = 0; k < sub.size(); ++k) {
      p[to[k]] = g.plus[k];
      q[to[k]] = g.minus[k];
    }
    auto b = makeBinomial(ExponentVector(std::move(p)), ExponentVector(std::move(q)), order);
    if (!b) fail(ErrorKind::InvariantViolation, "restricted basis element vanished");
    out.push_back(std::move(*b));
  }
  sortBinomials(out, order);
  return out;
}

namespace {

// All multisets of lifts: one member of `fibres[idx]` per occurrence of idx
// in `exps`, as y-exponent vectors over `m` variables.
void enumerateLifts(const ExponentVector& exps,
                    const std::vector<std::vector<std::size_t>>& fibres, std::size_t m,
                    std::vector<ExponentVector>& out) {
  std::vector<std::pair<std::size_t, Exponent>> slots;  // (source index, multiplicity)
  for (std::size_t i = 0; i < exps.dim(); ++i) {
    if (exps[i] > 0) slots.emplace_back(i, exps[i]);
  }
  std::vector<Exponent> current(m, 0);
  // Distributes `left` copies over fibres[src][from..].
  auto rec = [&](auto&& self, std::size_t slot, std::size_t from, Exponent left) -> void {
    if (slot == slots.size()) {
      out.emplace_back(current);
      return;
    }
    const auto& fibre = fibres[slots[slot].first];
    if (left == 0) {
      if (slot + 1 < slots.size()) {
        self(self, slot + 1, 0, slots[slot + 1].second);
      } else {
        self(self, slot + 1, 0, 0);
      }
      return;
    }
    if (from == fibre.size()) return;
    for (Exponent c = left; c >= 0; --c) {
      current[fibre[from]] += c;
      self(self, slot, from + 1, left - c);
      current[fibre[from]] -= c;
    }
  };
  if (slots.empty()) {
    out.emplace_back(current);
    return;
  }
  rec(rec, 0, 0, slots[0].second);
}

void dedupe(std::vector<YBinomial>& v, const TermOrder& order) {
  std::set<YBinomial> seen;
  std::vector<YBinomial> out;
  for (auto& b : v) {
    if (seen.insert(b).second) out.push_back(std::move(b));
  }
  v = std::move(out);
  sortBinomials(v, order);
}

SingleSplitLift singleSplit(const MonomialSet& configuration, const GroebnerBasis& basis,
                            std::size_t splitVar) {
  const std::size_t n = configuration.ambientDim();
  if (splitVar >= n) fail(ErrorKind::PreconditionViolation, "split variable out of range");
  std::vector<int> sizes(n, 1);
  sizes[splitVar] = 2;
  SingleSplitLift out{expandSet(configuration, ExpansionShape(std::move(sizes))), {}, {}, {}};
  const MonomialSet& big = out.expanded.vectors;
  const std::size_t m = big.size();
  const TermOrder order = inducedLex(big);
  const std::size_t x1 = out.expanded.shape.flatIndex(splitVar, 0);
  const std::size_t x2 = out.expanded.shape.flatIndex(splitVar, 1);

  for (std::size_t p = 0; p < m; ++p) {
    if (big[p][x1] == 0) continue;
    const auto a = big[p].shifted(x1, -1).shifted(x2, 1);
    const std::size_t pa = *big.indexOf(a);
    for (std::size_t q = 0; q < m; ++q) {
      if (big[q][x2] == 0) continue;
      const auto b = big[q].shifted(x2, -1).shifted(x1, 1);
      const std::size_t qb = *big.indexOf(b);
      auto quad = makeQuadric(m, p, q, pa, qb, order);
      if (quad) out.swaps.push_back(std::move(*quad));
    }
  }
  dedupe(out.swaps, order);

  std::vector<std::vector<std::size_t>> fibres(configuration.size());
  for (std::size_t w = 0; w < m; ++w) fibres[out.expanded.provenance[w]].push_back(w);
  for (const auto& g : basis.elements()) {
    std::vector<ExponentVector> pluses, minuses;
    enumerateLifts(g.plus, fibres, m, pluses);
    enumerateLifts(g.minus, fibres, m, minuses);
    std::map<ExponentVector, std::vector<std::size_t>> bySum;
    for (std::size_t k = 0; k < minuses.size(); ++k) {
      bySum[imageSum(minuses[k], big)].push_back(k);
    }
    for (const auto& p : pluses) {
      auto it = bySum.find(imageSum(p, big));
      if (it == bySum.end()) continue;
      for (std::size_t k : it->second) {
        if (auto b = makeBinomial(p, minuses[k], order)) out.lifts.push_back(std::move(*b));
      }
    }
  }
  dedupe(out.lifts, order);

  out.combined = out.swaps;
  out.combined.insert(out.combined.end(), out.lifts.begin(), out.lifts.end());
  dedupe(out.combined, order);
  return out;
}

void requireInducedLexBasis(const MonomialSet& configuration, const GroebnerBasis& basis,
                            const BuchbergerOptions& options) {
  if (!(basis.configuration() == configuration) ||
      !(basis.order() == inducedLex(configuration))) {
    fail(ErrorKind::PreconditionViolation,
         "basis must belong to the configuration under the induced lex order");
  }
  if (!verifyGB(basis.elements(), configuration, basis.order(), options)) {
    fail(ErrorKind::PreconditionViolation, "input is not a Groebner basis of the toric ideal");
  }
}

}  // namespace

SingleSplitLift expandGBSingleSplit(const MonomialSet& configuration, const GroebnerBasis& basis,
                                    std::size_t splitVar, const BuchbergerOptions& options) {
  requireInducedLexBasis(configuration, basis, options);
  return singleSplit(configuration, basis, splitVar);
}

GroebnerBasis expandGB(const MonomialSet& configuration, const GroebnerBasis& basis,
                       const ExpansionShape& shape, const BuchbergerOptions& options) {
  if (shape.baseDim() != configuration.ambientDim()) {
    fail(ErrorKind::DimensionMismatch, "expansion shape does not match configuration");
  }
  requireInducedLexBasis(configuration, basis, options);

  ExpansionShape current = ExpansionShape::identity(configuration.ambientDim());
  MonomialSet config = configuration;
  std::vector<YBinomial> elements = basis.elements();
  for (std::size_t i = 0; i < shape.baseDim(); ++i) {
    while (current.blockSize(i) < shape.blockSize(i)) {
      const std::size_t last =
          current.flatIndex(i, static_cast<std::size_t>(current.blockSize(i)) - 1);
      GroebnerBasis g(config, inducedLex(config), std::move(elements));
      SingleSplitLift step = singleSplit(config, g, last);
      const VariableRelabeling sigma = relabelIterated(current, i);
      std::vector<ExponentVector> relabelled;
      for (const auto& w : step.expanded.vectors) relabelled.push_back(sigma.apply(w));
      config = MonomialSet(sigma.beta.totalDim(), std::move(relabelled));
      current = sigma.beta;
      elements = interreduce(step.combined, inducedLex(config));
    }
  }

  // Re-index onto the members of expandSet(A, alpha).
  const ExpandedVectorSet target = expandSet(configuration, shape);
  const MonomialSet& big = target.vectors;
  if (big.size() != config.size()) {
    fail(ErrorKind::InvariantViolation, "iterated expansion differs from direct expansion");
  }
  std::vector<std::size_t> to(config.size());
  for (std::size_t k = 0; k < config.size(); ++k) {
    auto idx = big.indexOf(config[k]);
    if (!idx) fail(ErrorKind::InvariantViolation, "iterated expansion differs from direct expansion");
    to[k] = *idx;
  }
  const TermOrder order = inducedLex(big);
  std::vector<YBinomial> mapped;
  for (const auto& g : elements) {
    std::vector<Exponent> p(big.size(), 0), q(big.size(), 0);
    for (std::size_t k = 0; k < config.size(); ++k) {
      p[to[k]] = g.plus[k];
      q[to[k]] = g.minus[k];
    }
    mapped.push_back(YBinomial{ExponentVector(std::move(p)), ExponentVector(std::move(q))});
  }
  return GroebnerBasis(big, order, interreduce(mapped, order));
}

std::optional<YBinomial> flattenBinomial(const YBinomial& b, const ExpandedVectorSet& expanded,
                                         const MonomialSet& source, const TermOrder& order) {
  requireBinomialDim(b, expanded.vectors.size());
  requireOrderDim(order, source.size());
  std::vector<Exponent> p(source.size(), 0), q(source.size(), 0);
  for (std::size_t w = 0; w < expanded.vectors.size(); ++w) {
    p[expanded.provenance[w]] += b.plus[w];
    q[expanded.provenance[w]] += b.minus[w];
  }
  return makeBinomial(ExponentVector(std::move(p)), ExponentVector(std::move(q)), order);
}

}  // namespace expanse
