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

#include "princ/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "princ/error.hpp"

namespace princ
{
namespace
{
using Json = nlohmann::ordered_json;

const Json &
Field(const Json &obj, const char *key)
{
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kInvalidInput, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string
AsString(const Json &j, const char *what)
{
  if (!j.is_string()) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json
BlockList(const FiniteLattice &lattice, const Congruence &theta)
{
  Json out = Json::array();
  for (const auto &block : BlockNames(lattice, theta)) out.push_back(block);
  return out;
}

}  // namespace

PosetDocument
ParsePosetDocument(const std::string &text)
{
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidInput, "top level must be an object");

  PosetDocument doc;
  if (const auto it = j.find("name"); it != j.end()) doc.name = AsString(*it, "name");

  const Json &elems = Field(j, "elements");
  if (!elems.is_array()) throw Error(ErrorCode::kInvalidInput, "\"elements\" must be an array");
  std::vector<std::string> names;
  for (const auto &e : elems) names.push_back(AsString(e, "element"));

  CoverList covers;
  const Json &cov = Field(j, "covers");
  if (!cov.is_array()) throw Error(ErrorCode::kInvalidInput, "\"covers\" must be an array");
  for (const auto &c : cov) {
    if (!c.is_array() || c.size() != 2) {
      throw Error(ErrorCode::kInvalidInput, "each cover must be a [lower, upper] pair");
    }
    covers.emplace_back(AsString(c[0], "cover end"), AsString(c[1], "cover end"));
  }
  doc.poset = Poset::FromCovers(std::move(names), covers);

  if (const auto it = j.find("anchors"); it != j.end()) {
    if (!it->is_object()) throw Error(ErrorCode::kInvalidInput, "\"anchors\" must be an object");
    for (const auto &[p, pair] : it->items()) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kInvalidInput, "anchor \"" + p + "\" must be [a, b]");
      }
      auto a = AsString(pair[0], "anchor");
      auto b = AsString(pair[1], "anchor");
      static_cast<void>(doc.poset.IndexOf(a));
      static_cast<void>(doc.poset.IndexOf(b));
      doc.anchors.emplace_back(p, std::make_pair(std::move(a), std::move(b)));
    }
  }
  return doc;
}

PosetDocument
ReadPosetDocument(const std::filesystem::path &path)
{
  return ParsePosetDocument(ReadTextFile(path));
}

std::string
WritePosetDocument(const PosetDocument &doc)
{
  Json j;
  j["name"] = doc.name;
  j["elements"] = doc.poset.names();
  Json covers = Json::array();
  for (const auto &[x, y] : doc.poset.Covers()) {
    covers.push_back(Json::array({doc.poset.name(x), doc.poset.name(y)}));
  }
  j["covers"] = std::move(covers);
  if (!doc.anchors.empty()) {
    Json anchors = Json::object();
    for (const auto &[p, ab] : doc.anchors) anchors[p] = Json::array({ab.first, ab.second});
    j["anchors"] = std::move(anchors);
  }
  return j.dump(2) + "\n";
}

FiniteLattice
ReadLattice(const std::filesystem::path &path)
{
  return FiniteLattice::FromPoset(ReadPosetDocument(path).poset);
}

std::string
CongruenceJson(const FiniteLattice &lattice, const Congruence &theta)
{
  return BlockList(lattice, theta).dump();
}

std::string
ReadTextFile(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void
WriteTextFile(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kInvalidInput, "write failed for " + path.string());
}

}  // namespace princ
