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

#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace oracle
{
namespace
{
bool
Substitution(const FiniteLattice &l, const std::vector<std::size_t> &block)
{
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (block[x] != block[y]) continue;
      for (Element z = 0; z < n; ++z) {
        if (block[l.Join(x, z)] != block[l.Join(y, z)]) return false;
        if (block[l.Meet(x, z)] != block[l.Meet(y, z)]) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Congruence>
Congruences(const FiniteLattice &l)
{
  const std::size_t n = l.size();
  // Visit elements bottom-up so the first unassigned one is minimal in its block.
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    std::size_t da = 0;
    std::size_t db = 0;
    for (Element z = 0; z < n; ++z) {
      da += l.Leq(z, a) ? 1 : 0;
      db += l.Leq(z, b) ? 1 : 0;
    }
    return da < db;
  });

  std::set<Congruence> found;
  std::vector<std::size_t> block(n, n);
  std::function<void(std::size_t)> go = [&](std::size_t blocks) {
    const auto it =
        std::find_if(order.begin(), order.end(), [&](Element x) { return block[x] == n; });
    if (it == order.end()) {
      if (Substitution(l, block)) found.insert(Congruence::FromBlockIds(block));
      return;
    }
    const Element x = *it;
    for (Element top = 0; top < n; ++top) {
      if (!l.Leq(x, top)) continue;
      std::vector<Element> members;
      bool free = true;
      for (Element z = 0; z < n && free; ++z) {
        if (l.Leq(x, z) && l.Leq(z, top)) {
          free = block[z] == n;
          members.push_back(z);
        }
      }
      if (!free) continue;
      for (const Element z : members) block[z] = blocks;
      go(blocks + 1);
      for (const Element z : members) block[z] = n;
    }
  };
  go(0);
  return {found.begin(), found.end()};
}

Congruence
SmallestContaining(const std::vector<Congruence> &all, Element x, Element y)
{
  const std::size_t n = all.front().size();
  std::vector<std::vector<char>> same(n, std::vector<char>(n, 1));
  for (const auto &theta : all) {
    if (!theta.Same(x, y)) continue;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!theta.Same(a, b)) same[a][b] = 0;
      }
    }
  }
  std::vector<std::size_t> ids(n);
  for (Element a = 0; a < n; ++a) {
    ids[a] = a;
    for (Element b = 0; b < a; ++b) {
      if (same[a][b]) {
        ids[a] = ids[b];
        break;
      }
    }
  }
  return Congruence::FromBlockIds(ids);
}

std::size_t
CountDownSets(const Poset &p, bool nonempty_only)
{
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool down = true;
    for (Element y = 0; y < n && down; ++y) {
      if (!(mask >> y & 1u)) continue;
      for (Element x = 0; x < n && down; ++x) {
        if (p.Leq(x, y) && !(mask >> x & 1u)) down = false;
      }
    }
    if (down && (mask != 0 || !nonempty_only)) ++count;
  }
  return count;
}

bool
IsICongruence(const FiniteLattice &l, const Congruence &theta)
{
  bool nonzero = false;
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (x == y || !theta.Same(x, y)) continue;
      nonzero = true;
      if (x == l.bottom() || x == l.top()) return false;
    }
  }
  return nonzero;
}

std::vector<FiniteLattice>
SmallLattices(std::size_t max_size)
{
  std::vector<FiniteLattice> out;
  for (std::size_t n = 2; n <= max_size; ++n) {
    const std::size_t m = n - 2;
    std::vector<std::pair<Element, Element>> slots;
    for (Element a = 1; a <= m; ++a) {
      for (Element b = a + 1; b <= m; ++b) slots.emplace_back(a, b);
    }
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
      for (Element a = 1; a <= m; ++a) le[a][a] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1u) le[slots[s].first][slots[s].second] = 1;
      }
      bool transitive = true;
      for (Element a = 1; a <= m && transitive; ++a) {
        for (Element b = 1; b <= m && transitive; ++b) {
          for (Element c = 1; c <= m && transitive; ++c) {
            if (le[a][b] && le[b][c] && !le[a][c]) transitive = false;
          }
        }
      }
      if (!transitive) continue;
      std::vector<std::string> names;
      for (Element a = 0; a < n; ++a) names.push_back("e" + std::to_string(a));
      std::vector<std::pair<Element, Element>> rel;
      for (Element a = 1; a <= m; ++a) {
        rel.emplace_back(0, a);
        rel.emplace_back(a, n - 1);
        for (Element b = 1; b <= m; ++b) {
          if (a != b && le[a][b]) rel.emplace_back(a, b);
        }
      }
      if (m == 0) rel.emplace_back(0, n - 1);
      try {
        out.push_back(FiniteLattice::FromPoset(Poset::FromCoverIndices(names, rel)));
      } catch (const std::exception &) {
        // not a lattice
      }
    }
  }
  return out;
}

FiniteLattice
RandomLattice(std::mt19937_64 &rng, std::size_t max_size)
{
  std::uniform_int_distribution<int> pick(0, 15);
  std::uniform_int_distribution<int> count(1, 6);
  while (true) {
    std::set<int> family{15};
    const int k = count(rng);
    for (int j = 0; j < k; ++j) family.insert(pick(rng));
    bool grew = true;
    while (grew) {
      grew = false;
      for (const int a : std::vector<int>(family.begin(), family.end())) {
        for (const int b : std::vector<int>(family.begin(), family.end())) {
          grew = family.insert(a & b).second || grew;
        }
      }
    }
    if (family.size() > max_size || family.size() < 2) continue;
    const std::vector<int> sets(family.begin(), family.end());
    std::vector<std::string> names;
    for (const int s : sets) names.push_back("s" + std::to_string(s));
    std::vector<std::pair<Element, Element>> rel;
    for (Element a = 0; a < sets.size(); ++a) {
      for (Element b = 0; b < sets.size(); ++b) {
        if (a != b && (sets[a] & sets[b]) == sets[a]) rel.emplace_back(a, b);
      }
    }
    return FiniteLattice::FromPoset(Poset::FromCoverIndices(names, rel));
  }
}

bool
EveryElementInM3(const FiniteLattice &l)
{
  const Element o = l.bottom();
  const Element i = l.top();
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    if (x == o || x == i) continue;
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      for (Element z = 0; z < n && !found; ++z) {
        const std::vector<Element> s{o, x, y, z, i};
        std::set<Element> distinct(s.begin(), s.end());
        if (distinct.size() != 5) continue;
        bool closed = true;
        for (const Element a : s) {
          for (const Element b : s) {
            closed = closed && distinct.count(l.Join(a, b)) && distinct.count(l.Meet(a, b));
          }
        }
        // Closed, and the three middle elements pairwise incomparable: M3.
        found = closed && !l.poset().Comparable(x, y) && !l.poset().Comparable(x, z) &&
                !l.poset().Comparable(y, z);
      }
    }
    if (!found) return false;
  }
  return true;
}

std::size_t
LongestChain(const Poset &p)
{
  const std::size_t n = p.size();
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return p.CountBelow(a) < p.CountBelow(b); });
  std::vector<std::size_t> best(n, 0);
  std::size_t top = 0;
  for (const Element y : order) {
    for (const Element x : order) {
      if (p.Less(x, y)) best[y] = std::max(best[y], best[x] + 1);
    }
    top = std::max(top, best[y]);
  }
  return top;
}

}  // namespace oracle
