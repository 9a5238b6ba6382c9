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

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "princ/order.hpp"

namespace princ
{
/**
 * An equivalence relation on the elements 0..n-1 of a lattice, kept in
 * canonical form: every element is labelled with the least member of its
 * block. Two relations are equal iff their labels are equal.
 *
 * Whether the relation is actually a congruence is a property checked against
 * a particular lattice (see SatisfiesSubstitution).
 */
class Congruence
{
 public:
  Congruence() = default;

  /// Canonicalizes an arbitrary block-id assignment.
  static Congruence
  FromBlockIds(const std::vector<std::size_t> &block_ids);

  static Congruence
  FromBlocks(std::size_t n, const std::vector<std::vector<Element>> &blocks);

  static Congruence
  Zero(std::size_t n);

  static Congruence
  One(std::size_t n);

  [[nodiscard]] std::size_t
  size() const noexcept
  {
    return label_.size();
  }

  [[nodiscard]] Element
  label(Element x) const
  {
    return label_.at(x);
  }

  [[nodiscard]] const std::vector<Element> &
  labels() const noexcept
  {
    return label_;
  }

  [[nodiscard]] bool
  Same(Element x, Element y) const
  {
    return label_.at(x) == label_.at(y);
  }

  /// Blocks sorted by least member, each block sorted.
  [[nodiscard]] std::vector<std::vector<Element>>
  Blocks() const;

  [[nodiscard]] std::size_t
  BlockCount() const;

  [[nodiscard]] std::size_t
  BlockSize(Element x) const;

  [[nodiscard]] bool
  IsZero() const;

  [[nodiscard]] bool
  IsOne() const;

  /// Refinement: every block of *this lies inside a block of `other`.
  [[nodiscard]] bool
  RefinedBy(const Congruence &other) const
  {
    return IsBelow(other);
  }

  [[nodiscard]] bool
  IsBelow(const Congruence &other) const;

  friend bool
  operator==(const Congruence &, const Congruence &) = default;
  friend auto
  operator<=>(const Congruence &, const Congruence &) = default;

 private:
  explicit Congruence(std::vector<Element> labels) : label_(std::move(labels)) {}

  std::vector<Element> label_;
};

}  // namespace princ
