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

// Toric ideals of monomial configurations.
//
// A configuration A = {u_0, ..., u_{m-1}} gets one variable y_i per member;
// I_A is the kernel of y_i -> x^{u_i}. Every polynomial handled here is a
// binomial with coefficients +1 and -1, stored as two y-exponent vectors.

#ifndef EXPANSE_TORIC_HPP
#define EXPANSE_TORIC_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "expanse/core.hpp"
#include "expanse/expansion.hpp"

namespace expanse {

/// y^plus - y^minus over the y-variables of a configuration. Stored with
/// common factors cancelled and the leading term (under the order it was
/// normalized with) on the plus side.
struct YBinomial {
  ExponentVector plus;
  ExponentVector minus;

  std::size_t numVariables() const { return plus.dim(); }
  std::int64_t degree() const { return std::max(plus.modulus(), minus.modulus()); }

  friend bool operator==(const YBinomial&, const YBinomial&) = default;
  friend auto operator<=>(const YBinomial&, const YBinomial&) = default;
};

/// Cancels common factors and orients by `order`; nullopt when a == b.
std::optional<YBinomial> makeBinomial(const ExponentVector& a, const ExponentVector& b,
                                      const TermOrder& order);

/// y_{i1} y_{i2} - y_{j1} y_{j2} from configuration indices.
std::optional<YBinomial> makeQuadric(std::size_t m, std::size_t i1, std::size_t i2,
                                     std::size_t j1, std::size_t j2, const TermOrder& order);

struct BuchbergerOptions {
  std::size_t pairBudget = 1'000'000;
};

class GroebnerBasis {
 public:
  GroebnerBasis(MonomialSet configuration, TermOrder order, std::vector<YBinomial> elements);

  const MonomialSet& configuration() const { return configuration_; }
  const TermOrder& order() const { return order_; }
  /// Sorted by leading term descending.
  const std::vector<YBinomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::int64_t maxDegree() const;

 private:
  MonomialSet configuration_;
  TermOrder order_;
  std::vector<YBinomial> elements_;
};

/// Sorts by leading term under `order` (descending), then trailing term.
void sortBinomials(std::vector<YBinomial>& binomials, const TermOrder& order);

/// The canonical y-order: InducedSharp over the natural lex order of A's
/// ambient variables.
TermOrder inducedLex(const MonomialSet& configuration);

/// Reduced Groebner basis of I_A, by elimination: Buchberger on
/// {y_i - x^{u_i}} under an x-before-y order, keeping the y-only part.
GroebnerBasis toricGB(const MonomialSet& configuration, const TermOrder& order,
                      const BuchbergerOptions& options = {});

/// sum of u_i over plus == sum over minus.
bool kernelTest(const YBinomial& b, const MonomialSet& configuration);

/// Remainder of b modulo G; nullopt iff b lies in the ideal generated by G.
std::optional<YBinomial> normalForm(const YBinomial& b, const GroebnerBasis& basis);
/// Remainder modulo an arbitrary binomial set, used as-is as the divisor list.
std::optional<YBinomial> normalForm(const YBinomial& b, const std::vector<YBinomial>& divisors,
                                    const TermOrder& order);

/// Whether `generators` (each in I_A) generate all of I_A.
bool generates(const std::vector<YBinomial>& generators, const MonomialSet& configuration,
               const TermOrder& order, const BuchbergerOptions& options = {});

/// Groebner basis of the ideal generated by `generators`, without assuming
/// the ideal is toric.
std::vector<YBinomial> groebnerClosure(const std::vector<YBinomial>& generators,
                                       const TermOrder& order,
                                       const BuchbergerOptions& options = {});

/// The restriction of G to the combinatorial pure subring on the x-variables
/// `subset`: the elements that only involve members of
/// A_T = {u in A : supp(u) in subset}, re-indexed over A_T.
GroebnerBasis contractGB(const GroebnerBasis& basis, const std::vector<std::size_t>& subset);

/// contractGB onto the first variable of every block of `shape`, relabeled
/// over `base` through block sums and re-oriented by `order`.
std::vector<YBinomial> contractToBase(const GroebnerBasis& expandedBasis,
                                      const ExpansionShape& shape, const MonomialSet& base,
                                      const TermOrder& order);

struct SingleSplitLift {
  ExpandedVectorSet expanded;
  std::vector<YBinomial> swaps;    // G_0
  std::vector<YBinomial> lifts;    // G_1
  std::vector<YBinomial> combined; // G_0 u G_1, deduplicated and sorted
};

/// Builds G_0 and G_1 for alpha = 1 + e_i from a Groebner basis of I_A under
/// inducedLex(A). `splitVar` is 0-based. Orientation follows inducedLex(A^alpha).
SingleSplitLift expandGBSingleSplit(const MonomialSet& configuration, const GroebnerBasis& basis,
                                    std::size_t splitVar, const BuchbergerOptions& options = {});

/// Reduced Groebner basis of I_{A^alpha} under inducedLex(A^alpha), obtained
/// by iterating single splits. Members of the returned configuration follow
/// expandSet(A, alpha).
GroebnerBasis expandGB(const MonomialSet& configuration, const GroebnerBasis& basis,
                       const ExpansionShape& shape, const BuchbergerOptions& options = {});

struct GBCheck {
  bool inIdeal = false;        // every candidate passes kernelTest
  bool spairsReduce = false;   // Buchberger criterion on the candidates
  bool generatesIdeal = false; // toricGB reduces to zero modulo candidates
  bool ok() const { return inIdeal && spairsReduce && generatesIdeal; }
};

GBCheck checkGB(const std::vector<YBinomial>& candidate, const MonomialSet& configuration,
                const TermOrder& order, const BuchbergerOptions& options = {});

inline bool verifyGB(const std::vector<YBinomial>& candidate, const MonomialSet& configuration,
                     const TermOrder& order, const BuchbergerOptions& options = {}) {
  return checkGB(candidate, configuration, order, options).ok();
}

/// The reduced Groebner basis of the ideal generated by a Groebner basis.
std::vector<YBinomial> interreduce(const std::vector<YBinomial>& basis, const TermOrder& order);

/// Applies gamma: y_{w} -> y_{pi_0(w)} from A^alpha to A. Returns nullopt when
/// the image vanishes.
std::optional<YBinomial> flattenBinomial(const YBinomial& b, const ExpandedVectorSet& expanded,
                                         const MonomialSet& source, const TermOrder& order);

}  // namespace expanse

#endif  // EXPANSE_TORIC_HPP
