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

// Buchberger's algorithm restricted to pure binomials x^a - x^b.
//
// S-polynomials and reductions of pure binomials are again pure binomials
// (or zero), so a binomial is just an ordered pair of exponent vectors.
// When the ideal is known to be prime and monomial-free (toric ideals and the
// elimination ideals that produce them), `saturate` divides every binomial by
// the gcd of its two terms, which keeps degrees small.

#ifndef EXPANSE_SRC_BUCHBERGER_HPP
#define EXPANSE_SRC_BUCHBERGER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "expanse/core.hpp"

namespace expanse::detail {

using Term = std::vector<Exponent>;

struct Binomial {
  Term lead;
  Term trail;
};

class BinomialBuchberger {
 public:
  BinomialBuchberger(TermOrder order, bool saturate, std::size_t pairBudget);

  /// Adds a - b. Zero binomials are ignored.
  void addGenerator(Term a, Term b);
  /// Appends lead - trail verbatim as a divisor: no reduction, no pairs.
  void addDivisor(Term lead, Term trail);
  /// Completes the current generators to a Groebner basis.
  void complete();

  /// Non-redundant elements: minimal leading terms, not tail-reduced.
  std::vector<Binomial> basis() const;
  /// The reduced Groebner basis, sorted by leading term descending.
  std::vector<Binomial> reducedBasis() const;

  Term reduceMonomial(Term t) const;
  /// Normal form of a - b, oriented lead > trail, or nullopt for zero.
  std::optional<Binomial> normalForm(Term a, Term b) const;

  std::size_t pairsProcessed() const { return pairsProcessed_; }
  const TermOrder& order() const { return order_; }

 private:
  struct Element {
    Binomial b;
    std::uint64_t signature;
    bool redundant = false;
  };
  struct Pair {
    std::size_t i, j;
    Term lcm;
    std::int64_t degree;
    std::uint64_t signature;
  };
  // Normal strategy: lowest lcm degree first, ties by index.
  struct PairBefore {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  std::optional<std::size_t> findReducer(const Term& t, std::uint64_t sig) const;
  // Full reduction with orientation; nullopt when the binomial vanishes.
  std::optional<Binomial> reduce(Term a, Term b) const;
  void insert(Binomial h);

  TermOrder order_;
  bool saturate_;
  std::size_t pairBudget_;
  std::vector<Element> elements_;
  std::set<Pair, PairBefore> pairs_;
  std::size_t pairsProcessed_ = 0;
};

std::uint64_t termSignature(const Term& t);
bool termDivides(const Term& a, const Term& b);
Term termLcm(const Term& a, const Term& b);

}  // namespace expanse::detail

#endif  // EXPANSE_SRC_BUCHBERGER_HPP
