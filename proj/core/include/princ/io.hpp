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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "princ/congruence.hpp"
#include "princ/lattice.hpp"
#include "princ/order.hpp"

namespace princ
{
/// Contents of a poset/lattice JSON file:
/// {"name": ..., "elements": [...], "covers": [[lower, upper], ...]}.
/// Lattice files written by the construction also carry "anchors".
struct PosetDocument {
  std::string name;
  Poset poset;
  /// (p, [a_p, b_p]) in file order; empty unless the file has anchors.
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> anchors;
};

/// Throws InvalidInput on malformed JSON and the Poset errors otherwise.
PosetDocument
ParsePosetDocument(const std::string &text);

PosetDocument
ReadPosetDocument(const std::filesystem::path &path);

/// Pretty JSON, covers taken from the transitive reduction. Ends in '\n'.
std::string
WritePosetDocument(const PosetDocument &doc);

/// Reads a lattice file and rebuilds the join/meet tables.
FiniteLattice
ReadLattice(const std::filesystem::path &path);

/// [["a","b"],["c"]] style block list.
std::string
CongruenceJson(const FiniteLattice &lattice, const Congruence &theta);

std::string
ReadTextFile(const std::filesystem::path &path);

void
WriteTextFile(const std::filesystem::path &path, const std::string &text);

}  // namespace princ
