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

#include "princ/congruence_relation.hpp"

#include <algorithm>
#include <limits>

#include "princ/error.hpp"

namespace princ
{
Congruence
Congruence::FromBlockIds(const std::vector<std::size_t> &block_ids)
{
  const std::size_t n = block_ids.size();
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  // First (least) element seen for each id becomes the block label.
  std::vector<std::pair<std::size_t, Element>> first;
  std::vector<Element> labels(n, kUnset);
  for (Element x = 0; x < n; ++x) {
    const auto it = std::find_if(first.begin(), first.end(),
                                 [&](const auto &p) { return p.first == block_ids[x]; });
    if (it == first.end()) {
      first.emplace_back(block_ids[x], x);
      labels[x] = x;
    } else {
      labels[x] = it->second;
    }
  }
  return Congruence(std::move(labels));
}

Congruence
Congruence::FromBlocks(std::size_t n, const std::vector<std::vector<Element>> &blocks)
{
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> ids(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const Element x : blocks[b]) {
      if (x >= n || ids[x] != kUnset) {
        throw Error(ErrorCode::kInvalidInput, "blocks do not partition the elements");
      }
      ids[x] = b;
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (ids[x] == kUnset) ids[x] = blocks.size() + x;
  }
  return FromBlockIds(ids);
}

Congruence
Congruence::Zero(std::size_t n)
{
  std::vector<Element> labels(n);
  for (Element x = 0; x < n; ++x) labels[x] = x;
  return Congruence(std::move(labels));
}

Congruence
Congruence::One(std::size_t n)
{
  return Congruence(std::vector<Element>(n, 0));
}

std::vector<std::vector<Element>>
Congruence::Blocks() const
{
  std::vector<std::vector<Element>> blocks;
  std::vector<std::size_t> slot(size(), 0);
  for (Element x = 0; x < size(); ++x) {
    if (label_[x] == x) {
      slot[x] = blocks.size();
      blocks.push_back({x});
    } else {
      blocks[slot[label_[x]]].push_back(x);
    }
  }
  return blocks;
}

std::size_t
Congruence::BlockCount() const
{
  std::size_t c = 0;
  for (Element x = 0; x < size(); ++x) c += label_[x] == x ? 1 : 0;
  return c;
}

std::size_t
Congruence::BlockSize(Element x) const
{
  return static_cast<std::size_t>(std::count(label_.begin(), label_.end(), label_.at(x)));
}

bool
Congruence::IsZero() const
{
  for (Element x = 0; x < size(); ++x) {
    if (label_[x] != x) return false;
  }
  return true;
}

bool
Congruence::IsOne() const
{
  return std::all_of(label_.begin(), label_.end(), [](Element l) { return l == 0; });
}

bool
Congruence::IsBelow(const Congruence &other) const
{
  if (other.size() != size()) return false;
  for (Element x = 0; x < size(); ++x) {
    if (other.label_[x] != other.label_[label_[x]]) return false;
  }
  return true;
}

}  // namespace princ
