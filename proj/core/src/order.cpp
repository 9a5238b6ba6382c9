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

#include "princ/order.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include "princ/error.hpp"

namespace princ
{
namespace
{
std::unordered_map<std::string, Element>
BuildIndex(const std::vector<std::string> &names)
{
  std::unordered_map<std::string, Element> index;
  index.reserve(names.size());
  for (Element i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorCode::kDuplicateElement, "element '" + names[i] + "' declared twice");
    }
  }
  return index;
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<char> leq)
    : names_(std::move(names)), index_(BuildIndex(names_)), leq_(std::move(leq))
{
}

Poset
Poset::FromCovers(std::vector<std::string> names, const CoverList &covers)
{
  const auto index = BuildIndex(names);
  std::vector<std::pair<Element, Element>> edges;
  edges.reserve(covers.size());
  for (const auto &[lo, hi] : covers) {
    const auto a = index.find(lo);
    const auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::kUnknownElement, "cover references '" + lo + "'");
    if (b == index.end()) throw Error(ErrorCode::kUnknownElement, "cover references '" + hi + "'");
    edges.emplace_back(a->second, b->second);
  }
  return FromCoverIndices(std::move(names), edges);
}

Poset
Poset::FromCoverIndices(std::vector<std::string> names,
                        const std::vector<std::pair<Element, Element>> &covers)
{
  const std::size_t n = names.size();
  std::vector<char> leq(n * n, 0);
  for (Element i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto &[a, b] : covers) {
    if (a >= n || b >= n) throw Error(ErrorCode::kUnknownElement, "cover index out of range");
    if (a == b) {
      throw Error(ErrorCode::kCycleDetected, "self-loop on '" + names[a] + "'");
    }
    leq[a * n + b] = 1;
  }
  // Warshall closure.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      char *row = &leq[i * n];
      const char *krow = &leq[k * n];
      for (Element j = 0; j < n; ++j) row[j] |= krow[j];
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorCode::kCycleDetected,
                    "'" + names[i] + "' and '" + names[j] + "' lie on a cycle");
      }
    }
  }
  return Poset(std::move(names), std::move(leq));
}

std::optional<Element>
Poset::Find(std::string_view name) const
{
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element
Poset::IndexOf(std::string_view name) const
{
  if (auto x = Find(name)) return *x;
  throw Error(ErrorCode::kUnknownElement, "no element named '" + std::string(name) + "'");
}

std::vector<std::pair<Element, Element>>
Poset::Covers() const
{
  const std::size_t n = size();
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!Less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z) {
        if (z != x && z != y && Leq(x, z) && Leq(z, y)) cover = false;
      }
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::size_t>
Poset::Heights() const
{
  const std::size_t n = size();
  // Number of strict predecessors orders elements so that x < y implies
  // pred(x) < pred(y).
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> below(n);
  for (Element x = 0; x < n; ++x) below[x] = CountBelow(x);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  std::vector<std::size_t> h(n, 0);
  for (const Element y : order) {
    for (Element x = 0; x < n; ++x) {
      if (Less(x, y)) h[y] = std::max(h[y], h[x] + 1);
    }
  }
  return h;
}

std::vector<std::size_t>
Poset::Depths() const
{
  const std::size_t n = size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> above(n);
  for (Element x = 0; x < n; ++x) above[x] = CountAbove(x);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return above[a] < above[b]; });
  std::vector<std::size_t> d(n, 0);
  for (const Element x : order) {
    for (Element y = 0; y < n; ++y) {
      if (Less(x, y)) d[x] = std::max(d[x], d[y] + 1);
    }
  }
  return d;
}

std::vector<Element>
Poset::LinearExtension() const
{
  const auto h = Heights();
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return h[a] < h[b]; });
  return order;
}

std::size_t
Poset::CountBelow(Element x) const
{
  std::size_t c = 0;
  for (Element y = 0; y < size(); ++y) c += Leq(y, x) ? 1 : 0;
  return c;
}

std::size_t
Poset::CountAbove(Element x) const
{
  std::size_t c = 0;
  for (Element y = 0; y < size(); ++y) c += Leq(x, y) ? 1 : 0;
  return c;
}

Poset
Poset::Induced(const std::vector<Element> &members) const
{
  const std::size_t m = members.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (const Element x : members) names.push_back(name(x));
  std::vector<char> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = Leq(members[i], members[j]) ? 1 : 0;
  }
  return Poset(std::move(names), std::move(leq));
}

bool
BoundedPoset::IsIsolated(Element x) const
{
  return std::binary_search(isolated.begin(), isolated.end(), x);
}

BoundedPoset
ToBounded(Poset poset)
{
  const std::size_t n = poset.size();
  if (n == 0) throw Error(ErrorCode::kNoZero, "empty order");
  std::optional<Element> zero;
  std::optional<Element> one;
  for (Element x = 0; x < n; ++x) {
    if (poset.CountAbove(x) == n) zero = x;
    if (poset.CountBelow(x) == n) one = x;
  }
  if (!zero) throw Error(ErrorCode::kNoZero, "no least element");
  if (!one) throw Error(ErrorCode::kNoOne, "no greatest element");

  BoundedPoset out;
  out.zero = *zero;
  out.one = *one;
  for (Element x = 0; x < n; ++x) {
    if (x != *zero && x != *one) out.interior.push_back(x);
  }
  for (const Element x : out.interior) {
    const bool alone = std::none_of(out.interior.begin(), out.interior.end(), [&](Element y) {
      return y != x && poset.Comparable(x, y);
    });
    if (alone) out.isolated.push_back(x);
  }
  out.poset = std::move(poset);
  return out;
}

bool
DownSet::Contains(Element x) const
{
  return std::binary_search(members.begin(), members.end(), x);
}

bool
DownSet::SubsetOf(const DownSet &other) const
{
  return std::includes(other.members.begin(), other.members.end(), members.begin(),
                       members.end());
}

bool
IsDownSet(const Poset &p, const std::vector<Element> &members)
{
  std::vector<char> in(p.size(), 0);
  for (const Element x : members) {
    if (x >= p.size()) return false;
    in[x] = 1;
  }
  for (const Element x : members) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.Leq(y, x) && !in[y]) return false;
    }
  }
  return true;
}

std::vector<DownSet>
DownSets(const Poset &p, bool nonempty_only)
{
  const auto order = p.LinearExtension();
  const std::size_t n = order.size();
  std::vector<char> in(p.size(), 0);
  std::vector<DownSet> out;

  // Walk the linear extension bottom-up; an element may join only when every
  // element below it already has, so no branch ever dead-ends.
  std::function<void(std::size_t)> recurse = [&](std::size_t k) {
    if (k == n) {
      DownSet d;
      for (Element x = 0; x < p.size(); ++x) {
        if (in[x]) d.members.push_back(x);
      }
      if (!nonempty_only || !d.members.empty()) out.push_back(std::move(d));
      return;
    }
    const Element x = order[k];
    recurse(k + 1);
    bool allowed = true;
    for (Element y = 0; y < p.size() && allowed; ++y) {
      if (p.Less(y, x) && !in[y]) allowed = false;
    }
    if (allowed) {
      in[x] = 1;
      recurse(k + 1);
      in[x] = 0;
    }
  };
  recurse(0);

  std::sort(out.begin(), out.end(), [](const DownSet &a, const DownSet &b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

DownSet
PrincipalDownSet(const Poset &p, std::string_view element)
{
  return PrincipalDownSet(p, p.IndexOf(element));
}

DownSet
PrincipalDownSet(const Poset &p, Element element)
{
  if (element >= p.size()) throw Error(ErrorCode::kUnknownElement, "element index out of range");
  DownSet d;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.Leq(x, element)) d.members.push_back(x);
  }
  return d;
}

Poset
DownSetOrder(const Poset &p, const std::vector<DownSet> &sets)
{
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> rel;
  names.reserve(sets.size());
  for (Element i = 0; i < sets.size(); ++i) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < sets[i].members.size(); ++k) {
      if (k) os << ',';
      os << p.name(sets[i].members[k]);
    }
    os << '}';
    names.push_back(os.str());
    for (Element j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].SubsetOf(sets[j])) rel.emplace_back(i, j);
    }
  }
  return Poset::FromCoverIndices(std::move(names), rel);
}

std::optional<std::vector<Element>>
OrderIso(const Poset &a, const Poset &b)
{
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;

  using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  auto signatures = [](const Poset &p) {
    const auto h = p.Heights();
    const auto d = p.Depths();
    std::vector<Signature> s(p.size());
    for (Element x = 0; x < p.size(); ++x) s[x] = {p.CountBelow(x), p.CountAbove(x), h[x], d[x]};
    return s;
  };
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }

  const auto order = a.LinearExtension();
  std::vector<Element> image(n, n);
  std::vector<char> used(n, 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    const Element x = order[k];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Element u = order[j];
        const Element v = image[u];
        ok = a.Leq(u, x) == b.Leq(v, y) && a.Leq(x, u) == b.Leq(y, v);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(k + 1)) return true;
      used[y] = 0;
    }
    image[x] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace princ
