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

// Exponent vectors, monomial sets and ideals, and term orders.
//
// A monomial x^u is identified with its exponent vector u; the coefficient
// field never appears. Variables are identified by their flat index.

#ifndef EXPANSE_CORE_HPP
#define EXPANSE_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expanse/error.hpp"

namespace expanse {

using Exponent = std::int32_t;

/// A point of Z^n_+. Arithmetic is overflow-checked.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : entries_(dim, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries);
  explicit ExponentVector(std::vector<Exponent> entries);

  static ExponentVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Exponent> entries() const { return entries_; }

  /// Sum of entries, i.e. the total degree of x^u.
  std::int64_t modulus() const;
  bool isZero() const;
  std::vector<std::size_t> support() const;

  /// Componentwise u <= v, i.e. x^u divides x^v.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  /// Requires other to divide *this.
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector scaled(Exponent factor) const;
  /// Returns a copy with entry i shifted by delta; the result must stay
  /// nonnegative.
  ExponentVector shifted(std::size_t i, Exponent delta) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the entry sequences. Not a term order
  /// in general (dimension is compared implicitly); used for containers.
  friend std::strong_ordering operator<=>(const ExponentVector& a,
                                          const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string toString() const;

 private:
  std::vector<Exponent> entries_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& u) const noexcept;
};

void requireSameDim(const ExponentVector& a, const ExponentVector& b);

/// Entrywise max(u - v, 0): the exponent of u / gcd(u, v).
ExponentVector quotientByGcd(const ExponentVector& u, const ExponentVector& v);
ExponentVector lcm(const ExponentVector& u, const ExponentVector& v);
ExponentVector gcd(const ExponentVector& u, const ExponentVector& v);

/// A finite duplicate-free set of exponent vectors of one ambient dimension.
/// Members keep their construction order; the index of a member is stable and
/// is what y-variables refer to.
class MonomialSet {
 public:
  MonomialSet() = default;
  /// Throws on mixed dimensions or duplicates.
  MonomialSet(std::size_t ambientDim, std::vector<ExponentVector> members);

  std::size_t ambientDim() const { return ambientDim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const ExponentVector& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<ExponentVector>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> indexOf(const ExponentVector& u) const;
  bool contains(const ExponentVector& u) const { return indexOf(u).has_value(); }

  /// No member divides another.
  bool divisMinimal() const { return divisMinimal_; }
  /// All members share one modulus.
  bool equigenerated() const;

  /// Same members, sorted by plain lexicographic order descending.
  MonomialSet sorted() const;

  friend bool operator==(const MonomialSet& a, const MonomialSet& b);

 private:
  std::size_t ambientDim_ = 0;
  std::vector<ExponentVector> members_;
  bool divisMinimal_ = true;
};

/// The divisibility-minimal elements of `vectors`, in first-occurrence order.
MonomialSet minimalize(std::size_t ambientDim,
                       std::span<const ExponentVector> vectors);

/// A monomial ideal, held through its unique minimal generating set G(I).
/// Generators are stored sorted lexicographically descending.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t ambientDim, std::span<const ExponentVector> generators);

  std::size_t ambientDim() const { return gens_.ambientDim(); }
  const MonomialSet& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialSet gens_;
};

bool idealContains(const MonomialIdeal& ideal, const ExponentVector& u);

/// A total monomial order. Every supported order is lexicographic with
/// respect to some ranking of the variables; the kind records how the
/// ranking was obtained.
///
/// * Lex: x_{p[0]} > x_{p[1]} > ...
/// * Elimination: over a combined space laid out as [y_0..y_{m-1} | x_0..x_{n-1}],
///   every x variable outranks every y variable; lex inside each block.
/// * InducedSharp: over the y-variables of a configuration A, y_u > y_v iff
///   u > v under a base lex order on A's ambient variables.
class TermOrder {
 public:
  enum class Kind { Lex, Elimination, InducedSharp };

  TermOrder() = default;

  static TermOrder lex(std::size_t dim);
  /// `ranking[0]` is the largest variable. Must be a permutation.
  static TermOrder lex(std::vector<std::size_t> ranking);
  /// Combined layout [y | x]: x-monomials compared first by degree reverse
  /// lexicographic order over xOrder's ranking, ties broken by yOrder.
  static TermOrder elimination(const TermOrder& yOrder, const TermOrder& xOrder);
  static TermOrder inducedSharp(const TermOrder& baseOrder,
                                const MonomialSet& configuration);

  /// The order induced on the variables `vars` (re-indexed 0..size-1 in the
  /// given sequence), same kind.
  TermOrder restrictedTo(std::span<const std::size_t> vars) const;

  Kind kind() const { return kind_; }
  std::size_t dim() const { return ranking_.size(); }
  std::span<const std::size_t> ranking() const { return ranking_; }
  /// Position of variable v in the ranking (0 = largest).
  std::size_t rankOf(std::size_t v) const { return rankOf_[v]; }

  std::strong_ordering compare(std::span<const Exponent> a,
                               std::span<const Exponent> b) const;
  std::strong_ordering compare(const ExponentVector& a,
                               const ExponentVector& b) const;

  std::string describe() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.ranking_ == b.ranking_ && a.graded_ == b.graded_;
  }

 private:
  TermOrder(Kind kind, std::vector<std::size_t> ranking);

  Kind kind_ = Kind::Lex;
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> rankOf_;
  // Leading ranked variables compared as a degrevlex block (elimination x-block).
  std::size_t graded_ = 0;
};

/// Three-way comparison under a term order; throws on dimension mismatch.
std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             const TermOrder& order);

}  // namespace expanse

#endif  // EXPANSE_CORE_HPP
