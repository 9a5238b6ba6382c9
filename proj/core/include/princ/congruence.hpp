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
#include <utility>
#include <vector>

#include "princ/congruence_relation.hpp"
#include "princ/lattice.hpp"
#include "princ/order.hpp"

namespace princ
{
/// The smallest congruence collapsing every seed pair. Runs a union-find
/// closure: each merged pair (a, b) is queued once and forces
/// a v z = b v z and a ^ z = b ^ z for every z.
Congruence
GenerateCongruence(const FiniteLattice &lattice,
                   const std::vector<std::pair<Element, Element>> &seeds);

/// con(x, y).
Congruence
PrincipalCongruence(const FiniteLattice &lattice, Element x, Element y);

/// Join in Con L.
Congruence
JoinCongruences(const FiniteLattice &lattice, const Congruence &a, const Congruence &b);

/// Intersection of two equivalence relations (the meet in Con L).
Congruence
MeetCongruences(const Congruence &a, const Congruence &b);

/// Con L with the refinement order. Congruences are sorted by decreasing
/// block count and then by labels, so zero comes first and one last.
struct ConOrder {
  std::vector<Congruence> congruences;
  /// Refinement order; element k names congruences[k].
  Poset order;

  [[nodiscard]] std::optional<std::size_t>
  Find(const Congruence &theta) const;

  [[nodiscard]] std::size_t
  zero() const noexcept
  {
    return 0;
  }

  [[nodiscard]] std::size_t
  one() const noexcept
  {
    return congruences.size() - 1;
  }
};

/// All congruences of L as the join-closure of the principal congruences of
/// its prime intervals (for finite L every congruence is such a join).
ConOrder
AllCongruences(const FiniteLattice &lattice);

/// Princ L: the distinct principal congruences with one generating pair each.
struct PrincOrder {
  std::vector<Congruence> congruences;
  /// witnesses[k] generates congruences[k]; the zero congruence is witnessed
  /// by (bottom, bottom).
  std::vector<std::pair<Element, Element>> witnesses;
  /// Refinement order; element names are "con(x,y)" from the witnesses.
  Poset order;
};

PrincOrder
ComputePrincOrder(const FiniteLattice &lattice);

/// theta > 0 and the blocks of bottom and top are singletons.
bool
IsICongruence(const FiniteLattice &lattice, const Congruence &theta);

/// v(theta): least number of principal congruences joining to theta.
/// values[k] belongs to con.congruences[k].
struct Valuation {
  std::vector<std::size_t> values;
};

/// Breadth-first over join layers: layer 0 = {zero}, layer k joins one more
/// principal congruence. Throws ValuationDiverged past |L|^2 layers.
Valuation
ComputeValuation(const FiniteLattice &lattice, const ConOrder &con);

Valuation
ComputeValuation(const FiniteLattice &lattice);

/// Block list in element names, blocks sorted by least member. This is the
/// on-disk congruence format.
std::vector<std::vector<std::string>>
BlockNames(const FiniteLattice &lattice, const Congruence &theta);

}  // namespace princ
