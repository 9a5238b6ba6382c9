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
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace princ
{
/// Positional index of an element inside a Poset or lattice.
using Element = std::size_t;

using CoverList = std::vector<std::pair<std::string, std::string>>;

/**
 * A finite partial order over named elements.
 *
 * Names are opaque; everything internal is positional. The order relation is
 * stored densely, which is fine for the few hundred elements this library
 * works with.
 */
class Poset
{
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of a Hasse edge list
  /// (lower -> upper). Throws on duplicate/unknown names and on cycles.
  static Poset
  FromCovers(std::vector<std::string> names, const CoverList &covers);

  /// Index-based variant of FromCovers.
  static Poset
  FromCoverIndices(std::vector<std::string> names,
                   const std::vector<std::pair<Element, Element>> &covers);

  [[nodiscard]] std::size_t
  size() const noexcept
  {
    return names_.size();
  }

  [[nodiscard]] const std::vector<std::string> &
  names() const noexcept
  {
    return names_;
  }

  [[nodiscard]] const std::string &
  name(Element x) const
  {
    return names_.at(x);
  }

  [[nodiscard]] std::optional<Element>
  Find(std::string_view name) const;

  /// Like Find but throws UnknownElement.
  [[nodiscard]] Element
  IndexOf(std::string_view name) const;

  [[nodiscard]] bool
  Leq(Element x, Element y) const noexcept
  {
    return leq_[x * names_.size() + y] != 0;
  }

  [[nodiscard]] bool
  Less(Element x, Element y) const noexcept
  {
    return x != y && Leq(x, y);
  }

  [[nodiscard]] bool
  Comparable(Element x, Element y) const noexcept
  {
    return Leq(x, y) || Leq(y, x);
  }

  /// Cover pairs (x, y) with x < y and nothing strictly between, sorted.
  [[nodiscard]] std::vector<std::pair<Element, Element>>
  Covers() const;

  /// Length of the longest chain from a minimal element up to x.
  [[nodiscard]] std::vector<std::size_t>
  Heights() const;

  /// Length of the longest chain from x up to a maximal element.
  [[nodiscard]] std::vector<std::size_t>
  Depths() const;

  /// Elements sorted by (height, index); a linear extension.
  [[nodiscard]] std::vector<Element>
  LinearExtension() const;

  [[nodiscard]] std::size_t
  CountBelow(Element x) const;

  [[nodiscard]] std::size_t
  CountAbove(Element x) const;

  /// Sub-order induced on `members`, keeping their relative order.
  [[nodiscard]] Poset
  Induced(const std::vector<Element> &members) const;

  friend bool
  operator==(const Poset &a, const Poset &b) = default;

 private:
  Poset(std::vector<std::string> names, std::vector<char> leq);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<char> leq_;
};

/// A Poset with verified least and greatest elements.
struct BoundedPoset {
  Poset poset;
  Element zero = 0;
  Element one = 0;
  /// Elements other than the bounds, in positional order.
  std::vector<Element> interior;
  /// Interior elements incomparable to every other interior element.
  std::vector<Element> isolated;

  [[nodiscard]] bool
  IsIsolated(Element x) const;
};

/// Finds the bounds and derives the interior and isolated sets.
/// Throws NoZero / NoOne.
BoundedPoset
ToBounded(Poset poset);

/// A down-closed subset, stored as sorted positions.
struct DownSet {
  std::vector<Element> members;

  [[nodiscard]] bool
  Contains(Element x) const;

  [[nodiscard]] bool
  SubsetOf(const DownSet &other) const;

  friend bool
  operator==(const DownSet &, const DownSet &) = default;
  friend auto
  operator<=>(const DownSet &, const DownSet &) = default;
};

[[nodiscard]] bool
IsDownSet(const Poset &p, const std::vector<Element> &members);

/// All down sets of `p`, sorted by size then members (a linear extension of
/// containment). With `nonempty_only` the empty set is dropped.
std::vector<DownSet>
DownSets(const Poset &p, bool nonempty_only);

/// {x : x <= p}. Throws UnknownElement for a bad name.
DownSet
PrincipalDownSet(const Poset &p, std::string_view element);

DownSet
PrincipalDownSet(const Poset &p, Element element);

/// The down sets ordered by containment, as a Poset whose element names are
/// the member names joined as "{a,b}".
Poset
DownSetOrder(const Poset &p, const std::vector<DownSet> &sets);

/// An order isomorphism from `a` onto `b` (result[x] is the image of x), or
/// nullopt when the orders are not isomorphic.
std::optional<std::vector<Element>>
OrderIso(const Poset &a, const Poset &b);

}  // namespace princ
