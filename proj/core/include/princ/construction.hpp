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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "princ/congruence.hpp"
#include "princ/lattice.hpp"
#include "princ/order.hpp"

namespace princ
{
enum class GadgetKind {
  kFrame,  // o, i and the anchors of the bounds of P
  kChain,  // C_p for an isolated p
  kS,      // S(p,q) for p < q
  kSC,     // S(p<q, q<q2)
  kSV,     // S(p<q, p<q2)
  kSH,     // S(p<q, p2<q)
};

std::string_view
GadgetKindName(GadgetKind kind);

/// A placeholder's role: symbol plus parameter names, written "a:p" or
/// "c:p.q". Bounds are plain "o" and "i".
struct Role {
  std::string symbol;
  std::vector<std::string> params;

  friend bool
  operator==(const Role &, const Role &) = default;
};

/// Throws TemplateInvalid on malformed role strings.
Role
ParseRole(std::string_view text);

std::string
FormatRole(const Role &role);

struct GadgetTemplate {
  GadgetKind kind = GadgetKind::kS;
  FiniteLattice lattice;
  /// roles[x] is the role of placeholder x.
  std::vector<Role> roles;

  [[nodiscard]] std::optional<Element>
  FindRole(std::string_view role) const;
  /// Like FindRole but throws TemplateInvalid.
  [[nodiscard]] Element
  RoleIndex(std::string_view role) const;
};

struct CheckResult {
  std::string id;
  bool passed = false;
  /// Non-gating checks are reported but do not fail a run.
  bool gating = true;
  std::string detail;
};

struct TemplateSet {
  std::filesystem::path directory;
  GadgetTemplate frame;
  GadgetTemplate chain;
  GadgetTemplate s;
  GadgetTemplate sc;
  GadgetTemplate sv;
  GadgetTemplate sh;
  /// The two I-congruences of S: alpha = con(a_p, b_p) < beta = con(a_q, b_q).
  Congruence alpha;
  Congruence beta;
  /// Load-time suite results, gating and advisory.
  std::vector<CheckResult> checks;

  [[nodiscard]] const GadgetTemplate &
  Get(GadgetKind kind) const;
};

/// PRINC_TEMPLATES if set, else the source tree copy, else the installed one.
std::filesystem::path
DefaultTemplateDirectory();

/// Parses the six templates and runs the load suite. A failed gating check
/// throws TemplateInvalid naming the template and the check.
TemplateSet
LoadTemplates(const std::filesystem::path &directory);

TemplateSet
LoadTemplates();

/// The suite run by LoadTemplates, exposed for reporting.
std::vector<CheckResult>
TemplateSuite(const TemplateSet &templates);

struct GadgetInstance {
  GadgetKind kind = GadgetKind::kS;
  /// Elements of P bound to the template parameters, in parameter order.
  std::vector<Element> params;
  /// members[t] is the element of K standing for placeholder t.
  std::vector<Element> members;
  std::string label;
};

struct ConstructionResult {
  FiniteLattice k;
  BoundedPoset source;
  /// anchors[p] = (a_p, b_p); a_p = b_p for the bounds of P.
  std::vector<std::pair<Element, Element>> anchors;
  std::vector<GadgetInstance> instances;
  /// membership[x] lists the instances containing x.
  std::vector<std::vector<std::size_t>> membership;

  [[nodiscard]] std::size_t
  Count(GadgetKind kind) const;
};

/// Name of an element of K: "o", "i", "a@p", "c@p.q", with '@', '.' and '\'
/// escaped inside names taken from P.
std::string
ElementName(const Role &role, const std::vector<std::string> &bound);

/// Builds K. |P| <= 2 yields a one- or two-element chain. Throws
/// AssemblyNotALattice when the union of template orders is not a lattice
/// or some instance is not a sublattice.
ConstructionResult
AssembleK(const BoundedPoset &p, const TemplateSet &templates);

/// Interior elements p with a_p = b_p (beta). Throws NotICongruence.
DownSet
Base(const ConstructionResult &result, const Congruence &beta);

/// The congruence beta_H for a down set H of the interior of P. Throws
/// NotADownSet, and VerificationFailed when the relation is not a
/// congruence with chain blocks of size at most 3.
Congruence
BetaH(const ConstructionResult &result, const TemplateSet &templates, const DownSet &h);

struct IsoCorrespondence {
  std::vector<Congruence> congruences;  // all of Con K
  std::vector<DownSet> down_sets;       // nonempty down sets of P
  std::vector<std::size_t> forward;     // congruence -> down set
  std::vector<std::size_t> backward;    // down set -> congruence
};

/// Pairs Con K with the nonempty down sets of P. Throws
/// CorrespondenceBroken with a witness when the pairing fails.
IsoCorrespondence
Phi(const ConstructionResult &result, const TemplateSet &templates);

IsoCorrespondence
Phi(const ConstructionResult &result, const TemplateSet &templates, const ConOrder &con);

struct TheoremReport {
  std::vector<CheckResult> checks;
  std::optional<ConstructionResult> construction;
  /// Pairs x < y of K not ordered inside any single gadget instance.
  std::vector<std::pair<Element, Element>> cross_gadget_pairs;
  std::size_t congruence_count = 0;
  std::size_t principal_count = 0;

  /// True iff every gating check passed.
  [[nodiscard]] bool
  passed() const;
  [[nodiscard]] const CheckResult *
  FirstFailure() const;
};

/// Assembles K and runs every structural check plus Princ K = P.
TheoremReport
VerifyTheorem(const BoundedPoset &p, const TemplateSet &templates);

/// Plain-text rendering of a report, one line per check.
std::string
FormatReport(const TheoremReport &report);

}  // namespace princ
