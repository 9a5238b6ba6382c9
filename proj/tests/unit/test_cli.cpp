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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "json.hpp"
#include "princ/io.hpp"
#include "princ/order.hpp"

namespace fs = std::filesystem;

namespace
{
struct Outcome {
  int code = -1;
  std::string out;
};

Outcome
Run(const std::string &args)
{
  const std::string cmd = std::string(PRINC_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path
Scratch()
{
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "princ-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string
Write(const std::string &name, const std::string &text)
{
  const auto path = Scratch() / name;
  princ::WriteTextFile(path, text);
  return path.string();
}

const char *kB2 =
    R"({"name":"B2","elements":["0","p","q","1"],"covers":[["0","p"],["0","q"],["p","1"],["q","1"]]})";
const char *kC4 =
    R"({"name":"C4","elements":["0","p","q","1"],"covers":[["0","p"],["p","q"],["q","1"]]})";
const char *kC3 = R"({"name":"C3","elements":["0","m","1"],"covers":[["0","m"],["m","1"]]})";
const char *kM3 =
    R"({"name":"M3","elements":["o","x","y","z","i"],"covers":[["o","x"],["o","y"],["o","z"],["x","i"],["y","i"],["z","i"]]})";

}  // namespace

TEST_CASE("build")
{
  const auto b2 = Run("build --poset " + Write("b2.json", kB2) + " --out " + (Scratch() / "kb2.json").string());
  CHECK(b2.code == 0);
  CHECK(b2.out.find("|K| = 8\nlength = 3\n") == 0);

  const auto c4 = Run("build --poset " + Write("c4.json", kC4) + " --out " + (Scratch() / "kc4.json").string());
  CHECK(c4.code == 0);
  CHECK(c4.out.find("|K| = 13\nlength = 5\n") == 0);
  const auto k = princ::ReadPosetDocument(Scratch() / "kc4.json");
  CHECK(k.anchors.size() == 4);

  const auto unbounded = Run("build --poset " +
                             Write("anti.json", R"({"elements":["x","y"],"covers":[]})") + " --out " +
                             (Scratch() / "never.json").string());
  CHECK(unbounded.code == 2);
  CHECK(Run("build --poset /nonexistent.json --out x.json").code == 2);
  CHECK(Run("build --poset").code == 2);
  CHECK(Run("frobnicate").code == 2);
}

TEST_CASE("verify")
{
  const auto c3 = Run("verify --poset " + Write("c3.json", kC3));
  CHECK(c3.code == 0);
  CHECK(c3.out.find("verdict: PASS") != std::string::npos);
  const auto c1 = Run("verify --poset " + Write("c1.json", R"({"elements":["0"],"covers":[]})"));
  CHECK(c1.code == 0);

  const auto broken = Scratch() / "broken-templates";
  fs::remove_all(broken);
  fs::create_directories(broken);
  for (const auto &e : fs::directory_iterator(PRINC_TEST_TEMPLATES)) {
    fs::copy_file(e.path(), broken / e.path().filename());
  }
  princ::WriteTextFile(broken / "S.json", "{\"elements\": [");
  const auto bad = Run("verify --poset " + Write("c3.json", kC3) + " --templates " + broken.string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("templates") != std::string::npos);
  const auto env = Run("verify --poset " + Write("c3.json", kC3));
  CHECK(env.code == 0);
  const auto via_env = [&] {
    const std::string cmd = "PRINC_TEMPLATES=" + broken.string() + " " + PRINC_CLI_PATH +
                            " verify --poset " + (Scratch() / "c3.json").string() + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }();
  CHECK(via_env == 1);
}

TEST_CASE("con, princ and valuation")
{
  const auto c3 = Write("c3l.json", kC3);
  const auto con = nlohmann::json::parse(Run("con --lattice " + c3).out);
  CHECK(con["congruences"].size() == 4);
  const auto princ = nlohmann::json::parse(Run("princ --lattice " + c3).out);
  CHECK(princ["principal"].size() == 4);
  const auto val = nlohmann::json::parse(Run("valuation --lattice " + c3).out);
  for (const auto &item : val["valuation"]) CHECK(item["v"].get<int>() <= 1);

  const auto m3 = Write("m3.json", kM3);
  CHECK(nlohmann::json::parse(Run("con --lattice " + m3).out)["congruences"].size() == 2);
  CHECK(nlohmann::json::parse(Run("princ --lattice " + m3).out)["principal"].size() == 2);

  Run("build --poset " + Write("b2.json", kB2) + " --out " + (Scratch() / "kb2.json").string());
  const auto kb2 = (Scratch() / "kb2.json").string();
  CHECK(nlohmann::json::parse(Run("con --lattice " + kb2).out)["congruences"].size() == 5);
  const auto pk = nlohmann::json::parse(Run("princ --lattice " + kb2).out);
  CHECK(pk["principal"].size() == 4);
  const auto order = princ::ParsePosetDocument(pk["order"].dump()).poset;
  CHECK(princ::OrderIso(princ::ParsePosetDocument(kB2).poset, order).has_value());

  CHECK(Run("con --lattice " + Write("notlat.json", R"({"elements":["a","b"],"covers":[]})")).code == 2);
}

TEST_CASE("export-dot")
{
  const auto out = (Scratch() / "m3.dot").string();
  CHECK(Run("export-dot --lattice " + Write("m3.json", kM3) + " --out " + out).code == 0);
  const auto dot = princ::ReadTextFile(out);
  CHECK(dot.find("digraph \"M3\"") == 0);
  CHECK(Run("export-dot --lattice " + Write("bad.json", "not json") + " --out " + out).code == 2);
}

TEST_CASE("fuzz")
{
  const auto a = Run("fuzz --max-size 2 --samples 10 --seed 3");
  CHECK(a.code == 0);
  CHECK(a.out.find("RESULT pass=10 fail=0") != std::string::npos);
  CHECK(Run("fuzz --max-size 0 --samples 10 --seed 3").code == 2);
  CHECK(Run("fuzz --max-size 5 --samples 30 --seed 9").out ==
        Run("fuzz --max-size 5 --samples 30 --seed 9 --jobs 4").out);
}
