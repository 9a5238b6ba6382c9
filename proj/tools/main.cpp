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

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "princ/congruence.hpp"
#include "princ/construction.hpp"
#include "princ/dot.hpp"
#include "princ/error.hpp"
#include "princ/fuzz.hpp"
#include "princ/io.hpp"

namespace
{
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

princ::TemplateSet
Templates(const std::string &dir)
{
  return dir.empty() ? princ::LoadTemplates() : princ::LoadTemplates(dir);
}

Json
Blocks(const princ::FiniteLattice &l, const princ::Congruence &theta)
{
  Json out = Json::array();
  for (const auto &b : princ::BlockNames(l, theta)) out.push_back(b);
  return out;
}

int
Build(const std::string &poset_path, const std::string &out_path, const std::string &tdir)
{
  const auto doc = princ::ReadPosetDocument(poset_path);
  const auto bounded = princ::ToBounded(doc.poset);
  const auto templates = Templates(tdir);
  const auto r = princ::AssembleK(bounded, templates);

  princ::PosetDocument out;
  out.name = "K(" + (doc.name.empty() ? std::string("P") : doc.name) + ")";
  out.poset = r.k.poset();
  for (princ::Element p = 0; p < bounded.poset.size(); ++p) {
    out.anchors.emplace_back(bounded.poset.name(p),
                             std::make_pair(r.k.name(r.anchors[p].first), r.k.name(r.anchors[p].second)));
  }
  princ::WriteTextFile(out_path, princ::WritePosetDocument(out));

  using princ::GadgetKind;
  std::cout << "|K| = " << r.k.size() << "\n"
            << "length = " << princ::Length(r.k) << "\n"
            << "gadgets: C=" << r.Count(GadgetKind::kChain) << " S=" << r.Count(GadgetKind::kS)
            << " SC=" << r.Count(GadgetKind::kSC) << " SV=" << r.Count(GadgetKind::kSV)
            << " SH=" << r.Count(GadgetKind::kSH) << "\n";
  return kOk;
}

int
Verify(const std::string &poset_path, const std::string &tdir)
{
  const auto doc = princ::ReadPosetDocument(poset_path);
  const auto bounded = princ::ToBounded(doc.poset);
  princ::TemplateSet templates;
  try {
    templates = Templates(tdir);
  } catch (const princ::Error &e) {
    std::cout << "FAIL  templates             " << e.what() << "\nverdict: FAIL\n";
    return kFailure;
  }
  const auto report = princ::VerifyTheorem(bounded, templates);
  std::cout << princ::FormatReport(report);
  if (const auto *bad = report.FirstFailure()) {
    std::cerr << "first failure: " << bad->id << ": " << bad->detail << "\n";
    return kFailure;
  }
  return kOk;
}

int
Fuzz(const princ::FuzzOptions &options, const std::string &tdir)
{
  const auto templates = Templates(tdir);
  const auto start = std::chrono::steady_clock::now();
  const auto samples = princ::RunFuzz(options, templates);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << princ::FormatFuzzReport(samples);
  double slowest = 0.0;
  for (const auto &s : samples) slowest = std::max(slowest, s.seconds);
  std::cerr << "elapsed " << elapsed << " s, slowest sample " << slowest << " s\n";
  for (const auto &s : samples) {
    if (!s.passed) return kFailure;
  }
  return kOk;
}

int
Con(const std::string &path)
{
  const auto l = princ::ReadLattice(path);
  const auto con = princ::AllCongruences(l);
  Json out = Json::object();
  Json list = Json::array();
  for (const auto &theta : con.congruences) list.push_back(Blocks(l, theta));
  out["congruences"] = std::move(list);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int
Princ(const std::string &path)
{
  const auto l = princ::ReadLattice(path);
  const auto princ = princ::ComputePrincOrder(l);
  Json out = Json::object();
  Json list = Json::array();
  for (std::size_t k = 0; k < princ.congruences.size(); ++k) {
    Json item = Json::object();
    item["name"] = princ.order.name(k);
    item["witness"] = Json::array({l.name(princ.witnesses[k].first), l.name(princ.witnesses[k].second)});
    item["blocks"] = Blocks(l, princ.congruences[k]);
    list.push_back(std::move(item));
  }
  out["principal"] = std::move(list);
  princ::PosetDocument order;
  order.name = "Princ";
  order.poset = princ.order;
  out["order"] = Json::parse(princ::WritePosetDocument(order));
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int
Valuation(const std::string &path)
{
  const auto l = princ::ReadLattice(path);
  const auto con = princ::AllCongruences(l);
  const auto v = princ::ComputeValuation(l, con);
  Json list = Json::array();
  for (std::size_t k = 0; k < con.congruences.size(); ++k) {
    Json item = Json::object();
    item["blocks"] = Blocks(l, con.congruences[k]);
    item["v"] = v.values[k];
    list.push_back(std::move(item));
  }
  Json out = Json::object();
  out["valuation"] = std::move(list);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int
ExportDot(const std::string &path, const std::string &out_path)
{
  const auto doc = princ::ReadPosetDocument(path);
  static_cast<void>(princ::FiniteLattice::FromPoset(doc.poset));
  princ::WriteTextFile(out_path, princ::ToDot(doc.poset, doc.name));
  return kOk;
}

}  // namespace

int
main(int argc, char **argv)
{
  CLI::App app{"princ: realize a finite bounded order as the principal congruences of a lattice"};
  app.require_subcommand(1);

  std::string poset_path;
  std::string lattice_path;
  std::string out_path;
  std::string template_dir;
  princ::FuzzOptions fuzz;

  auto *build = app.add_subcommand("build", "assemble K from a bounded order");
  build->add_option("--poset", poset_path, "poset JSON file")->required();
  build->add_option("--out", out_path, "lattice JSON output")->required();
  build->add_option("--templates", template_dir, "template directory");

  auto *verify = app.add_subcommand("verify", "assemble K and check every structural claim");
  verify->add_option("--poset", poset_path, "poset JSON file")->required();
  verify->add_option("--templates", template_dir, "template directory");

  auto *fuzz_cmd = app.add_subcommand("fuzz", "verify random bounded orders");
  fuzz_cmd->add_option("--max-size", fuzz.max_size, "largest |P|")
      ->required()
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--samples", fuzz.samples, "number of orders")
      ->required()
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz.seed, "generator seed")->required();
  fuzz_cmd->add_option("--jobs", fuzz.jobs, "worker threads")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--templates", template_dir, "template directory");

  auto *con = app.add_subcommand("con", "list all congruences of a lattice");
  con->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  auto *princ_cmd = app.add_subcommand("princ", "list principal congruences and their order");
  princ_cmd->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  auto *val = app.add_subcommand("valuation", "v for every congruence");
  val->add_option("--lattice", lattice_path, "lattice JSON file")->required();

  auto *dot = app.add_subcommand("export-dot", "write the Hasse diagram as Graphviz DOT");
  dot->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  dot->add_option("--out", out_path, "DOT output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*build) return Build(poset_path, out_path, template_dir);
    if (*verify) return Verify(poset_path, template_dir);
    if (*fuzz_cmd) return Fuzz(fuzz, template_dir);
    if (*con) return Con(lattice_path);
    if (*princ_cmd) return Princ(lattice_path);
    if (*val) return Valuation(lattice_path);
    if (*dot) return ExportDot(lattice_path, out_path);
  } catch (const princ::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return princ::IsInputError(e.code()) ? kInputError : kFailure;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInputError;
}
