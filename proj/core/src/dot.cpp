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

#include "princ/dot.hpp"

#include <algorithm>
#include <sstream>

namespace princ
{
namespace
{
std::string
Quote(const std::string &s)
{
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string
ToDot(const Poset &poset, const std::string &graph_name)
{
  const auto heights = poset.Heights();
  const std::size_t max_height =
      heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());

  std::ostringstream out;
  out << "digraph " << Quote(graph_name.empty() ? "L" : graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t r = 0; r <= max_height && !heights.empty(); ++r) {
    out << "  { rank=same;";
    for (Element x = 0; x < poset.size(); ++x) {
      if (heights[x] == r) out << ' ' << Quote(poset.name(x)) << ';';
    }
    out << " }\n";
  }
  for (const auto &[x, y] : poset.Covers()) {
    out << "  " << Quote(poset.name(x)) << " -> " << Quote(poset.name(y)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace princ
