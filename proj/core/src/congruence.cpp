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

#include "princ/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "princ/error.hpp"

namespace princ
{
namespace
{
class UnionFind
{
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  Element
  Find(Element x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool
  Unite(Element a, Element b)
  {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

  Congruence
  ToCongruence()
  {
    std::vector<std::size_t> ids(parent_.size());
    for (Element x = 0; x < parent_.size(); ++x) ids[x] = Find(x);
    return Congruence::FromBlockIds(ids);
  }

 private:
  std::vector<Element> parent_;
};

// Drains `queue`, adding every pair the substitution property forces.
void
Close(const FiniteLattice &l, UnionFind &uf, std::deque<std::pair<Element, Element>> &queue)
{
  const std::size_t n = l.size();
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    for (Element z = 0; z < n; ++z) {
      const Element ja = l.Join(a, z);
      const Element jb = l.Join(b, z);
      if (uf.Unite(ja, jb)) queue.emplace_back(ja, jb);
      const Element ma = l.Meet(a, z);
      const Element mb = l.Meet(b, z);
      if (uf.Unite(ma, mb)) queue.emplace_back(ma, mb);
    }
  }
}

bool
ConLess(const Congruence &a, const Congruence &b)
{
  const auto ca = a.BlockCount();
  const auto cb = b.BlockCount();
  if (ca != cb) return ca > cb;
  return a.labels() < b.labels();
}

Poset
RefinementOrder(const std::vector<Congruence> &cons, std::vector<std::string> names)
{
  std::vector<std::pair<Element, Element>> rel;
  for (Element i = 0; i < cons.size(); ++i) {
    for (Element j = 0; j < cons.size(); ++j) {
      if (i != j && cons[i].IsBelow(cons[j])) rel.emplace_back(i, j);
    }
  }
  return Poset::FromCoverIndices(std::move(names), rel);
}

}  // namespace

Congruence
GenerateCongruence(const FiniteLattice &lattice,
                   const std::vector<std::pair<Element, Element>> &seeds)
{
  UnionFind uf(lattice.size());
  std::deque<std::pair<Element, Element>> queue;
  for (const auto &[x, y] : seeds) {
    if (x >= lattice.size() || y >= lattice.size()) {
      throw Error(ErrorCode::kUnknownElement, "seed pair out of range");
    }
    if (uf.Unite(x, y)) queue.emplace_back(x, y);
  }
  Close(lattice, uf, queue);
  return uf.ToCongruence();
}

Congruence
PrincipalCongruence(const FiniteLattice &lattice, Element x, Element y)
{
  return GenerateCongruence(lattice, {{x, y}});
}

Congruence
JoinCongruences(const FiniteLattice &lattice, const Congruence &a, const Congruence &b)
{
  std::vector<std::pair<Element, Element>> seeds;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (a.label(x) != x) seeds.emplace_back(a.label(x), x);
    if (b.label(x) != x) seeds.emplace_back(b.label(x), x);
  }
  return GenerateCongruence(lattice, seeds);
}

Congruence
MeetCongruences(const Congruence &a, const Congruence &b)
{
  std::map<std::pair<Element, Element>, std::size_t> ids;
  std::vector<std::size_t> block(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    block[x] = ids.emplace(std::make_pair(a.label(x), b.label(x)), ids.size()).first->second;
  }
  return Congruence::FromBlockIds(block);
}

std::optional<std::size_t>
ConOrder::Find(const Congruence &theta) const
{
  const auto it = std::lower_bound(congruences.begin(), congruences.end(), theta, ConLess);
  if (it == congruences.end() || *it != theta) return std::nullopt;
  return static_cast<std::size_t>(it - congruences.begin());
}

ConOrder
AllCongruences(const FiniteLattice &lattice)
{
  const std::size_t n = lattice.size();
  std::set<Congruence> generators;
  for (const auto &edge : PrimeIntervals(lattice)) {
    generators.insert(PrincipalCongruence(lattice, edge.lower, edge.upper));
  }

  std::set<Congruence> seen{Congruence::Zero(n)};
  std::vector<Congruence> frontier{Congruence::Zero(n)};
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto &alpha : frontier) {
      for (const auto &g : generators) {
        if (g.IsBelow(alpha)) continue;
        auto joined = JoinCongruences(lattice, alpha, g);
        if (seen.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }

  ConOrder out;
  out.congruences.assign(seen.begin(), seen.end());
  std::sort(out.congruences.begin(), out.congruences.end(), ConLess);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < out.congruences.size(); ++k) names.push_back("c" + std::to_string(k));
  out.order = RefinementOrder(out.congruences, std::move(names));
  return out;
}

PrincOrder
ComputePrincOrder(const FiniteLattice &lattice)
{
  const std::size_t n = lattice.size();
  std::map<Congruence, std::pair<Element, Element>> found;
  found.emplace(Congruence::Zero(n), std::make_pair(lattice.bottom(), lattice.bottom()));
  // Every con(x, y) equals con(x ^ y, x v y), so comparable pairs suffice.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !lattice.Leq(x, y)) continue;
      found.emplace(PrincipalCongruence(lattice, x, y), std::make_pair(x, y));
    }
  }
  std::vector<std::pair<Congruence, std::pair<Element, Element>>> entries(found.begin(),
                                                                           found.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto &a, const auto &b) { return ConLess(a.first, b.first); });

  PrincOrder out;
  std::vector<std::string> names;
  for (auto &[theta, w] : entries) {
    names.push_back("con(" + lattice.name(w.first) + "," + lattice.name(w.second) + ")");
    out.congruences.push_back(theta);
    out.witnesses.push_back(w);
  }
  out.order = RefinementOrder(out.congruences, std::move(names));
  return out;
}

bool
IsICongruence(const FiniteLattice &lattice, const Congruence &theta)
{
  return !theta.IsZero() && theta.BlockSize(lattice.bottom()) == 1 &&
         theta.BlockSize(lattice.top()) == 1;
}

Valuation
ComputeValuation(const FiniteLattice &lattice, const ConOrder &con)
{
  const std::size_t n = lattice.size();
  const auto princ = ComputePrincOrder(lattice);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  Valuation v;
  v.values.assign(con.congruences.size(), kUnset);
  v.values[con.zero()] = 0;
  std::size_t assigned = 1;
  std::vector<Congruence> layer{Congruence::Zero(n)};
  const std::size_t cap = n * n;
  for (std::size_t k = 1; assigned < con.congruences.size(); ++k) {
    if (k > cap || layer.empty()) {
      throw Error(ErrorCode::kValuationDiverged,
                  "join layers did not reach every congruence within |L|^2 steps");
    }
    std::set<Congruence> next;
    for (const auto &alpha : layer) {
      for (const auto &p : princ.congruences) {
        next.insert(JoinCongruences(lattice, alpha, p));
      }
    }
    layer.clear();
    for (const auto &theta : next) {
      const auto idx = con.Find(theta);
      if (!idx) throw Error(ErrorCode::kNotACongruence, "join escaped the congruence order");
      if (v.values[*idx] == kUnset) {
        v.values[*idx] = k;
        ++assigned;
        layer.push_back(theta);
      }
    }
  }
  return v;
}

Valuation
ComputeValuation(const FiniteLattice &lattice)
{
  return ComputeValuation(lattice, AllCongruences(lattice));
}

std::vector<std::vector<std::string>>
BlockNames(const FiniteLattice &lattice, const Congruence &theta)
{
  std::vector<std::vector<std::string>> out;
  for (const auto &block : theta.Blocks()) {
    std::vector<std::string> names;
    for (const Element x : block) names.push_back(lattice.name(x));
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace princ
