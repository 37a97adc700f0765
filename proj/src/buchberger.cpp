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

#include "buchberger.hpp"

#include <algorithm>
#include <numeric>

namespace expanse::detail {

std::uint64_t termSignature(const Term& t) {
  std::uint64_t sig = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t[v] > 0) sig |= std::uint64_t{1} << (v % 64);
  }
  return sig;
}

bool termDivides(const Term& a, const Term& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

Term termLcm(const Term& a, const Term& b) {
  Term out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = std::max(a[v], b[v]);
  return out;
}

namespace {

bool coprime(const Term& a, const Term& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > 0 && b[v] > 0) return false;
  }
  return true;
}

std::int64_t degree(const Term& t) {
  return std::accumulate(t.begin(), t.end(), std::int64_t{0});
}

// t * (to / from); requires from | t.
void rewrite(Term& t, const Term& from, const Term& to) {
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (__builtin_add_overflow(t[v] - from[v], to[v], &t[v])) {
      fail(ErrorKind::Overflow, "exponent overflow during reduction");
    }
  }
}

void divideCommon(Term& a, Term& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    const Exponent g = std::min(a[v], b[v]);
    a[v] -= g;
    b[v] -= g;
  }
}

}  // namespace

BinomialBuchberger::BinomialBuchberger(TermOrder order, bool saturate,
                                       std::size_t pairBudget)
    : order_(std::move(order)), saturate_(saturate), pairBudget_(pairBudget) {}

std::optional<std::size_t> BinomialBuchberger::findReducer(const Term& t,
                                                           std::uint64_t sig) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if ((e.signature & ~sig) != 0) continue;
    if (termDivides(e.b.lead, t)) return i;
  }
  return std::nullopt;
}

Term BinomialBuchberger::reduceMonomial(Term t) const {
  while (auto r = findReducer(t, termSignature(t))) {
    rewrite(t, elements_[*r].b.lead, elements_[*r].b.trail);
  }
  return t;
}

std::optional<Binomial> BinomialBuchberger::reduce(Term a, Term b) const {
  if (a.size() != order_.dim() || b.size() != order_.dim()) {
    fail(ErrorKind::DimensionMismatch, "binomial does not match the term order");
  }
  while (true) {
    if (saturate_) divideCommon(a, b);
    const auto cmp = order_.compare(a, b);
    if (cmp == 0) return std::nullopt;
    if (cmp < 0) std::swap(a, b);
    auto r = findReducer(a, termSignature(a));
    if (!r) break;
    rewrite(a, elements_[*r].b.lead, elements_[*r].b.trail);
  }
  // The lead is now irreducible; reducing the tail only makes it smaller.
  b = reduceMonomial(std::move(b));
  if (saturate_) divideCommon(a, b);
  if (a == b) {
    fail(ErrorKind::InvariantViolation, "binomial collapsed after tail reduction");
  }
  return Binomial{std::move(a), std::move(b)};
}

std::optional<Binomial> BinomialBuchberger::normalForm(Term a, Term b) const {
  if (a.size() != order_.dim() || b.size() != order_.dim()) {
    fail(ErrorKind::DimensionMismatch, "binomial does not match the term order");
  }
  a = reduceMonomial(std::move(a));
  b = reduceMonomial(std::move(b));
  const auto cmp = order_.compare(a, b);
  if (cmp == 0) return std::nullopt;
  if (cmp < 0) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

void BinomialBuchberger::addGenerator(Term a, Term b) {
  if (auto h = reduce(std::move(a), std::move(b))) insert(std::move(*h));
}

void BinomialBuchberger::addDivisor(Term lead, Term trail) {
  if (lead.size() != order_.dim() || trail.size() != order_.dim()) {
    fail(ErrorKind::DimensionMismatch, "binomial does not match the term order");
  }
  const std::uint64_t sig = termSignature(lead);
  elements_.push_back(Element{Binomial{std::move(lead), std::move(trail)}, sig, false});
}

// Gebauer-Moeller update.
void BinomialBuchberger::insert(Binomial h) {
  const std::size_t t = elements_.size();
  const Term& lh = h.lead;

  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].redundant) continue;
    Term l = termLcm(elements_[i].b.lead, lh);
    const std::int64_t d = degree(l);
    const std::uint64_t sig = termSignature(l);
    fresh.push_back(Pair{i, t, std::move(l), d, sig});
  }
  // Chain criterion among the new pairs: drop (i,t) when some other (j,t)
  // has an lcm properly dividing it, or the same lcm and an earlier index.
  // A dropped pair never needs to eliminate another, so comparing against
  // the survivors suffices.
  std::vector<std::size_t> byDegree(fresh.size());
  std::iota(byDegree.begin(), byDegree.end(), std::size_t{0});
  std::stable_sort(byDegree.begin(), byDegree.end(), [&](std::size_t a, std::size_t b) {
    return fresh[a].degree < fresh[b].degree;
  });
  std::vector<std::size_t> survivors;
  for (std::size_t a : byDegree) {
    bool dominated = false;
    for (std::size_t b : survivors) {
      if ((fresh[b].signature & ~fresh[a].signature) != 0) continue;
      if (termDivides(fresh[b].lcm, fresh[a].lcm)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) survivors.push_back(a);
  }
  // Old pairs whose lcm is a proper multiple through the new lead.
  const std::uint64_t leadSig = termSignature(lh);
  auto lcmDiffers = [&](const Term& f, const Term& l) {
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (std::max(f[v], lh[v]) != l[v]) return true;
    }
    return false;
  };
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    if ((leadSig & ~it->signature) == 0 && termDivides(lh, it->lcm) &&
        lcmDiffers(elements_[it->i].b.lead, it->lcm) &&
        lcmDiffers(elements_[it->j].b.lead, it->lcm)) {
      it = pairs_.erase(it);
    } else {
      ++it;
    }
  }
  for (std::size_t a : survivors) {
    // Product criterion.
    if (coprime(elements_[fresh[a].i].b.lead, lh)) continue;
    pairs_.insert(std::move(fresh[a]));
  }
  for (auto& e : elements_) {
    if (!e.redundant && termDivides(lh, e.b.lead)) e.redundant = true;
  }
  const std::uint64_t sig = termSignature(lh);
  elements_.push_back(Element{std::move(h), sig, false});
}

void BinomialBuchberger::complete() {
  while (!pairs_.empty()) {
    Pair p = pairs_.extract(pairs_.begin()).value();
    if (++pairsProcessed_ > pairBudget_) {
      fail(ErrorKind::BudgetExhausted,
           "S-pair budget of " + std::to_string(pairBudget_) + " exhausted");
    }
    const auto& fi = elements_[p.i].b;
    const auto& fj = elements_[p.j].b;
    Term a = p.lcm;
    Term b = p.lcm;
    rewrite(a, fi.lead, fi.trail);
    rewrite(b, fj.lead, fj.trail);
    if (auto h = reduce(std::move(a), std::move(b))) insert(std::move(*h));
  }
}

std::vector<Binomial> BinomialBuchberger::basis() const {
  std::vector<Binomial> out;
  for (const auto& e : elements_) {
    if (!e.redundant) out.push_back(e.b);
  }
  return out;
}

std::vector<Binomial> BinomialBuchberger::reducedBasis() const {
  // Tail-reduce against the non-redundant elements only; their leading terms
  // generate the initial ideal, so the result is the reduced basis.
  BinomialBuchberger minimal(order_, false, pairBudget_);
  for (const auto& e : elements_) {
    if (e.redundant) continue;
    minimal.elements_.push_back(Element{e.b, e.signature, false});
  }
  std::vector<Binomial> out;
  for (const auto& e : minimal.elements_) {
    Term tail = minimal.reduceMonomial(e.b.trail);
    if (tail == e.b.lead) {
      fail(ErrorKind::InvariantViolation, "reduced basis element vanished");
    }
    out.push_back(Binomial{e.b.lead, std::move(tail)});
  }
  std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) {
    return order_.compare(a.lead, b.lead) > 0;
  });
  return out;
}

}  // namespace expanse::detail
