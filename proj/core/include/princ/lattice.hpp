/*
 * Copyright 2026 The princ Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "princ/congruence_relation.hpp"
#include "princ/order.hpp"

namespace princ
{
/// A prime interval: `lower` is covered by `upper`.
struct IntervalEdge {
  Element lower = 0;
  Element upper = 0;

  friend bool
  operator==(const IntervalEdge &, const IntervalEdge &) = default;
  friend auto
  operator<=>(const IntervalEdge &, const IntervalEdge &) = default;
};

/**
 * A finite lattice with dense join and meet tables.
 *
 * Construct with FromPoset, which rejects orders lacking a unique least upper
 * bound or greatest lower bound for some pair and reports that pair.
 */
class FiniteLattice
{
 public:
  FiniteLattice() = default;

  static FiniteLattice
  FromPoset(Poset poset);

  [[nodiscard]] const Poset &
  poset() const noexcept
  {
    return poset_;
  }

  [[nodiscard]] std::size_t
  size() const noexcept
  {
    return poset_.size();
  }

  [[nodiscard]] const std::string &
  name(Element x) const
  {
    return poset_.name(x);
  }

  [[nodiscard]] Element
  IndexOf(std::string_view name) const
  {
    return poset_.IndexOf(name);
  }

  [[nodiscard]] bool
  Leq(Element x, Element y) const noexcept
  {
    return poset_.Leq(x, y);
  }

  [[nodiscard]] Element
  Join(Element x, Element y) const noexcept
  {
    return join_[x * size() + y];
  }

  [[nodiscard]] Element
  Meet(Element x, Element y) const noexcept
  {
    return meet_[x * size() + y];
  }

  [[nodiscard]] Element
  bottom() const noexcept
  {
    return bottom_;
  }

  [[nodiscard]] Element
  top() const noexcept
  {
    return top_;
  }

 private:
  Poset poset_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Number of covers on a longest chain.
std::size_t
Length(const FiniteLattice &lattice);

/// All cover pairs, sorted by (lower, upper).
std::vector<IntervalEdge>
PrimeIntervals(const FiniteLattice &lattice);

/// Closed under join and meet (no bounds required).
bool
IsSublattice(const FiniteLattice &lattice, const std::vector<Element> &subset);

/// Closed under join and meet and contains bottom and top.
bool
Is01Sublattice(const FiniteLattice &lattice, const std::vector<Element> &subset);

/// The lattice induced on a sublattice. Throws NotALattice if `subset` is not
/// closed.
FiniteLattice
Sublattice(const FiniteLattice &lattice, const std::vector<Element> &subset);

/// Exhaustive check of x = y (theta) => x v z = y v z and x ^ z = y ^ z.
bool
SatisfiesSubstitution(const FiniteLattice &lattice, const Congruence &theta);

/// Lattice on the blocks of `theta`. Block names are the names of their least
/// members. Throws NotACongruence.
FiniteLattice
Quotient(const FiniteLattice &lattice, const Congruence &theta);

/// A lattice isomorphism (result[x] is the image of x) or nullopt.
std::optional<std::vector<Element>>
LatticeIso(const FiniteLattice &a, const FiniteLattice &b);

/// Exhaustive axiom check: idempotence, commutativity, associativity,
/// absorption and agreement with the order.
bool
SatisfiesLatticeAxioms(const FiniteLattice &lattice);

namespace named
{
/// The n-element chain 0 < 1 < ... < n-1 (names "0".."n-1").
FiniteLattice
Chain(std::size_t n);

/// The diamond o < {x, y, z} < i.
FiniteLattice
M3();

/// The pentagon o < a < b < i, o < c < i.
FiniteLattice
N5();

/// The direct product of a 2-chain and a 3-chain; names "ij".
FiniteLattice
C2xC3();
}  // namespace named

}  // namespace princ
