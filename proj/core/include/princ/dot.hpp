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

#include <string>

#include "princ/order.hpp"

namespace princ
{
/// Graphviz digraph of the Hasse diagram. Nodes are grouped into ranks by
/// height (minimal elements at rank 0) and emitted in (rank, position) order,
/// so the output is a pure function of the input.
std::string
ToDot(const Poset &poset, const std::string &graph_name);

}  // namespace princ
