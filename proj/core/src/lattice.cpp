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

#include "princ/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "princ/error.hpp"

namespace princ
{
namespace
{
// Least element of `candidates` w.r.t. `leq`, or nullopt when the set has no
// least element. Reports the minimal elements through `minimal`.
template <class LeqFn>
std::optional<Element>
LeastOf(const std::vector<Element> &candidates, LeqFn leq, std::vector<Element> &minimal)
{
  minimal.clear();
  for (const Element c : candidates) {
    const bool is_min = std::none_of(candidates.begin(), candidates.end(),
                                     [&](Element d) { return d != c && leq(d, c); });
    if (is_min) minimal.push_back(c);
  }
  if (minimal.size() == 1) return minimal.front();
  return std::nullopt;
}

[[noreturn]] void
ThrowNotALattice(const Poset &p, Element x, Element y, const char *what,
                 const std::vector<Element> &bounds)
{
  std::ostringstream os;
  os << "pair (" << p.name(x) << ", " << p.name(y) << ") has no " << what << "; candidates {";
  for (std::size_t k = 0; k < bounds.size(); ++k) os << (k ? "," : "") << p.name(bounds[k]);
  os << '}';
  throw Error(ErrorCode::kNotALattice, os.str());
}

}  // namespace

FiniteLattice
FiniteLattice::FromPoset(Poset poset)
{
  const std::size_t n = poset.size();
  if (n == 0) throw Error(ErrorCode::kNotALattice, "empty order");
  FiniteLattice l;
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  std::vector<Element> ub;
  std::vector<Element> lb;
  std::vector<Element> minimal;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      ub.clear();
      lb.clear();
      for (Element z = 0; z < n; ++z) {
        if (poset.Leq(x, z) && poset.Leq(y, z)) ub.push_back(z);
        if (poset.Leq(z, x) && poset.Leq(z, y)) lb.push_back(z);
      }
      const auto j = LeastOf(ub, [&](Element a, Element b) { return poset.Leq(a, b); }, minimal);
      if (!j) ThrowNotALattice(poset, x, y, "least upper bound", minimal);
      const auto m = LeastOf(lb, [&](Element a, Element b) { return poset.Leq(b, a); }, minimal);
      if (!m) ThrowNotALattice(poset, x, y, "greatest lower bound", minimal);
      l.join_[x * n + y] = l.join_[y * n + x] = *j;
      l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
    }
  }
  l.bottom_ = l.meet_[0];
  l.top_ = l.join_[0];
  for (Element x = 1; x < n; ++x) {
    l.bottom_ = l.meet_[l.bottom_ * n + x];
    l.top_ = l.join_[l.top_ * n + x];
  }
  l.poset_ = std::move(poset);
  return l;
}

std::size_t
Length(const FiniteLattice &lattice)
{
  return lattice.poset().Heights()[lattice.top()];
}

std::vector<IntervalEdge>
PrimeIntervals(const FiniteLattice &lattice)
{
  std::vector<IntervalEdge> out;
  for (const auto &[lo, hi] : lattice.poset().Covers()) out.push_back({lo, hi});
  return out;
}

bool
IsSublattice(const FiniteLattice &lattice, const std::vector<Element> &subset)
{
  std::vector<char> in(lattice.size(), 0);
  for (const Element x : subset) {
    if (x >= lattice.size()) return false;
    in[x] = 1;
  }
  for (const Element x : subset) {
    for (const Element y : subset) {
      if (!in[lattice.Join(x, y)] || !in[lattice.Meet(x, y)]) return false;
    }
  }
  return true;
}

bool
Is01Sublattice(const FiniteLattice &lattice, const std::vector<Element> &subset)
{
  const auto has = [&](Element e) { return std::find(subset.begin(), subset.end(), e) != subset.end(); };
  return has(lattice.bottom()) && has(lattice.top()) && IsSublattice(lattice, subset);
}

FiniteLattice
Sublattice(const FiniteLattice &lattice, const std::vector<Element> &subset)
{
  if (!IsSublattice(lattice, subset)) {
    throw Error(ErrorCode::kNotALattice, "subset is not closed under join and meet");
  }
  return FiniteLattice::FromPoset(lattice.poset().Induced(subset));
}

bool
SatisfiesSubstitution(const FiniteLattice &lattice, const Congruence &theta)
{
  const std::size_t n = lattice.size();
  if (theta.size() != n) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!theta.Same(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!theta.Same(lattice.Join(x, z), lattice.Join(y, z))) return false;
        if (!theta.Same(lattice.Meet(x, z), lattice.Meet(y, z))) return false;
      }
    }
  }
  return true;
}

FiniteLattice
Quotient(const FiniteLattice &lattice, const Congruence &theta)
{
  if (!SatisfiesSubstitution(lattice, theta)) {
    throw Error(ErrorCode::kNotACongruence, "relation violates the substitution property");
  }
  const auto blocks = theta.Blocks();
  std::vector<std::size_t> slot(lattice.size(), 0);
  std::vector<std::string> names;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    names.push_back(lattice.name(blocks[b].front()));
    for (const Element x : blocks[b]) slot[x] = b;
  }
  // [x] <= [y] iff x v y = y (theta).
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      const Element x = blocks[a].front();
      const Element y = blocks[b].front();
      if (theta.Same(lattice.Join(x, y), y)) rel.emplace_back(a, b);
    }
  }
  return FiniteLattice::FromPoset(Poset::FromCoverIndices(std::move(names), rel));
}

std::optional<std::vector<Element>>
LatticeIso(const FiniteLattice &a, const FiniteLattice &b)
{
  // Order isomorphisms between lattices preserve joins and meets.
  return OrderIso(a.poset(), b.poset());
}

bool
SatisfiesLatticeAxioms(const FiniteLattice &l)
{
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    if (l.Join(x, x) != x || l.Meet(x, x) != x) return false;
    if (!l.Leq(l.bottom(), x) || !l.Leq(x, l.top())) return false;
    for (Element y = 0; y < n; ++y) {
      const Element j = l.Join(x, y);
      const Element m = l.Meet(x, y);
      if (j != l.Join(y, x) || m != l.Meet(y, x)) return false;
      if (l.Meet(x, j) != x || l.Join(x, m) != x) return false;
      if (l.Leq(x, y) != (j == y) || l.Leq(x, y) != (m == x)) return false;
      for (Element z = 0; z < n; ++z) {
        if (l.Join(j, z) != l.Join(x, l.Join(y, z))) return false;
        if (l.Meet(m, z) != l.Meet(x, l.Meet(y, z))) return false;
      }
    }
  }
  return true;
}

namespace named
{
FiniteLattice
Chain(std::size_t n)
{
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(std::to_string(k));
    if (k) covers.emplace_back(k - 1, k);
  }
  return FiniteLattice::FromPoset(Poset::FromCoverIndices(std::move(names), covers));
}

FiniteLattice
M3()
{
  return FiniteLattice::FromPoset(Poset::FromCovers(
      {"o", "x", "y", "z", "i"},
      {{"o", "x"}, {"o", "y"}, {"o", "z"}, {"x", "i"}, {"y", "i"}, {"z", "i"}}));
}

FiniteLattice
N5()
{
  return FiniteLattice::FromPoset(Poset::FromCovers(
      {"o", "a", "b", "c", "i"}, {{"o", "a"}, {"a", "b"}, {"b", "i"}, {"o", "c"}, {"c", "i"}}));
}

FiniteLattice
C2xC3()
{
  return FiniteLattice::FromPoset(Poset::FromCovers(
      {"00", "10", "01", "11", "02", "12"},
      {{"00", "10"}, {"00", "01"}, {"10", "11"}, {"01", "11"}, {"01", "02"}, {"11", "12"},
       {"02", "12"}}));
}
}  // namespace named

}  // namespace princ
