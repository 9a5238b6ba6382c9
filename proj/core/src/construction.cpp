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

#include "princ/construction.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "princ/error.hpp"
#include "princ/io.hpp"

#ifndef PRINC_SOURCE_TEMPLATE_DIR
#define PRINC_SOURCE_TEMPLATE_DIR ""
#endif
#ifndef PRINC_DEFAULT_TEMPLATE_DIR
#define PRINC_DEFAULT_TEMPLATE_DIR ""
#endif

namespace princ
{
namespace
{
std::string
FileStem(GadgetKind kind)
{
  return std::string(GadgetKindName(kind));
}

[[noreturn]] void
Invalid(GadgetKind kind, const std::string &what)
{
  throw Error(ErrorCode::kTemplateInvalid, FileStem(kind) + ": " + what);
}

bool
ValidParam(std::string_view s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

std::vector<std::string>
SRoles(const std::string &p, const std::string &q)
{
  std::vector<std::string> out{"o", "i", "a:" + p, "b:" + p, "a:" + q, "b:" + q};
  for (const char *s : {"c", "d", "e", "f", "g"}) out.push_back(std::string(s) + ":" + p + "." + q);
  return out;
}

/// Parameter pairs of the S copies inside a template.
std::vector<std::pair<std::string, std::string>>
Copies(GadgetKind kind)
{
  switch (kind) {
    case GadgetKind::kS:
      return {{"p", "q"}};
    case GadgetKind::kSC:
      return {{"p", "q"}, {"q", "q2"}};
    case GadgetKind::kSV:
      return {{"p", "q"}, {"p", "q2"}};
    case GadgetKind::kSH:
      return {{"p", "q"}, {"p2", "q"}};
    default:
      return {};
  }
}

std::vector<std::string>
ExpectedRoles(GadgetKind kind)
{
  std::vector<std::string> out;
  switch (kind) {
    case GadgetKind::kFrame:
      out = {"o", "i", "a:zero", "a:one"};
      break;
    case GadgetKind::kChain:
      out = {"o", "i", "a:p", "b:p"};
      break;
    default:
      for (const auto &[p, q] : Copies(kind)) {
        for (auto &r : SRoles(p, q)) out.push_back(std::move(r));
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GadgetTemplate
ReadTemplate(const std::filesystem::path &dir, GadgetKind kind)
{
  GadgetTemplate t;
  t.kind = kind;
  PosetDocument doc;
  try {
    doc = ReadPosetDocument(dir / (FileStem(kind) + ".json"));
    t.lattice = FiniteLattice::FromPoset(doc.poset);
  } catch (const Error &e) {
    Invalid(kind, e.what());
  }

  nlohmann::json roles;
  try {
    roles = nlohmann::json::parse(ReadTextFile(dir / (FileStem(kind) + ".roles.json")));
  } catch (const std::exception &e) {
    Invalid(kind, std::string("role map: ") + e.what());
  }
  if (!roles.is_object()) Invalid(kind, "role map must be an object");
  if (roles.size() != t.lattice.size()) Invalid(kind, "role map does not cover every element");

  t.roles.resize(t.lattice.size());
  for (Element x = 0; x < t.lattice.size(); ++x) {
    const auto it = roles.find(t.lattice.name(x));
    if (it == roles.end() || !it->is_string()) {
      Invalid(kind, "no role for element " + t.lattice.name(x));
    }
    try {
      t.roles[x] = ParseRole(it->get<std::string>());
    } catch (const Error &e) {
      Invalid(kind, e.what());
    }
  }

  std::vector<std::string> have;
  for (const auto &r : t.roles) have.push_back(FormatRole(r));
  std::sort(have.begin(), have.end());
  if (std::adjacent_find(have.begin(), have.end()) != have.end()) Invalid(kind, "repeated role");
  if (have != ExpectedRoles(kind)) Invalid(kind, "role set does not match the gadget shape");
  return t;
}

CheckResult
Check(std::string id, bool passed, std::string detail, bool gating = true)
{
  return CheckResult{std::move(id), passed, gating, std::move(detail)};
}

/// Placeholders of the S copy with parameters (p, q), in S template order.
std::vector<Element>
CopyMembers(const GadgetTemplate &s, const GadgetTemplate &t, const std::string &p,
            const std::string &q)
{
  std::vector<Element> out;
  for (Element x = 0; x < s.lattice.size(); ++x) {
    Role r = s.roles[x];
    for (auto &param : r.params) param = (param == "p") ? p : q;
    out.push_back(t.RoleIndex(FormatRole(r)));
  }
  return out;
}

void
SuiteForS(const GadgetTemplate &s, std::vector<CheckResult> &out)
{
  const auto &l = s.lattice;
  const Element o = s.RoleIndex("o");
  const Element ap = s.RoleIndex("a:p");
  const Element bp = s.RoleIndex("b:p");
  const Element aq = s.RoleIndex("a:q");
  const Element bq = s.RoleIndex("b:q");
  const Element c = s.RoleIndex("c:p.q");
  const Element d = s.RoleIndex("d:p.q");
  const Element e = s.RoleIndex("e:p.q");
  const Element g = s.RoleIndex("g:p.q");

  bool complementary = true;
  for (const Element x : {ap, bp}) {
    for (const Element y : {aq, bq}) {
      complementary = complementary && l.Join(x, y) == l.top() && l.Meet(x, y) == l.bottom();
    }
  }
  out.push_back(Check("S-anchors", complementary && l.Leq(ap, bp) && l.Leq(aq, bq) && ap != bp &&
                                       aq != bq,
                      "a_p < b_p and a_q < b_q, each complementary to the other pair"));

  const auto con = AllCongruences(l);
  std::size_t count = 0;
  for (const auto &theta : con.congruences) count += IsICongruence(l, theta) ? 1 : 0;
  out.push_back(Check("S-i-congruences", count == 2,
                      "exactly two I-congruences (found " + std::to_string(count) + ")"));

  const auto alpha = PrincipalCongruence(l, ap, bp);
  const auto beta = PrincipalCongruence(l, aq, bq);
  out.push_back(Check("S-alpha-below-beta",
                      IsICongruence(l, alpha) && IsICongruence(l, beta) && alpha.IsBelow(beta) &&
                          alpha != beta,
                      "con(a_p,b_p) < con(a_q,b_q), both I-congruences"));
  out.push_back(Check("S-con-d-e", l.Leq(d, e) && PrincipalCongruence(l, d, e) == alpha,
                      "con(d,e) = con(a_p,b_p)"));

  const auto covers = PrimeIntervals(l);
  const bool bp_covered_by_g =
      std::find(covers.begin(), covers.end(), IntervalEdge{bp, g}) != covers.end();
  out.push_back(Check("S-bp-g", bp_covered_by_g && PrincipalCongruence(l, bp, g).Same(c, o),
                      "b_p is covered by g and c = o under con(b_p,g)"));

  bool quotient_ok = false;
  try {
    quotient_ok = LatticeIso(Quotient(l, beta), named::C2xC3()).has_value();
  } catch (const Error &) {
    quotient_ok = false;
  }
  out.push_back(Check("S-quotient", quotient_ok, "S / con(a_q,b_q) is isomorphic to C2 x C3"));

  bool primes_ok = true;
  std::string bad;
  for (const auto &edge : covers) {
    const auto theta = PrincipalCongruence(l, edge.lower, edge.upper);
    if (IsICongruence(l, theta) && theta != alpha && theta != beta) {
      primes_ok = false;
      bad = l.name(edge.lower) + "<" + l.name(edge.upper);
    }
  }
  out.push_back(Check("S-prime-congruences", primes_ok,
                      primes_ok ? "each prime interval generates a non-I-congruence, alpha or beta"
                                : "stray I-congruence from " + bad));

  out.push_back(Check("S-prime-count", covers.size() == 12,
                      "expected 12 prime intervals, found " + std::to_string(covers.size()),
                      /*gating=*/false));
}

void
SuiteForAmalgam(const GadgetTemplate &s, const GadgetTemplate &t, std::vector<CheckResult> &out)
{
  const std::string name(GadgetKindName(t.kind));
  bool ok = t.lattice.size() == 18;
  std::string detail = "18 elements, two sublattice copies of S";
  for (const auto &[p, q] : Copies(t.kind)) {
    const auto members = CopyMembers(s, t, p, q);
    if (!IsSublattice(t.lattice, members)) {
      ok = false;
      detail = "copy S(" + p + "," + q + ") is not a sublattice";
      continue;
    }
    for (Element x = 0; x < members.size(); ++x) {
      for (Element y = 0; y < members.size(); ++y) {
        if (s.lattice.Leq(x, y) != t.lattice.Leq(members[x], members[y])) {
          ok = false;
          detail = "copy S(" + p + "," + q + ") does not carry the order of S";
        }
      }
    }
  }
  out.push_back(Check(name + "-copies", ok, detail));
}

std::string
Escape(const std::string &s)
{
  std::string out;
  for (const char c : s) {
    if (c == '@' || c == '.' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

class UnionFind
{
 public:
  explicit UnionFind(std::size_t n) : parent_(n)
  {
    for (std::size_t k = 0; k < n; ++k) parent_[k] = k;
  }
  std::size_t
  Find(std::size_t x)
  {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void
  Unite(std::size_t a, std::size_t b)
  {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string
DownSetName(const Poset &p, const DownSet &d)
{
  std::string out = "{";
  for (std::size_t k = 0; k < d.members.size(); ++k) {
    out += (k ? "," : "") + p.name(d.members[k]);
  }
  return out + "}";
}

std::string
BlocksText(const FiniteLattice &l, const Congruence &theta)
{
  std::string out;
  for (const auto &block : BlockNames(l, theta)) {
    if (block.size() < 2) continue;
    out += "[";
    for (std::size_t k = 0; k < block.size(); ++k) out += (k ? " " : "") + block[k];
    out += "]";
  }
  return out.empty() ? "zero" : out;
}

/// Every x of K other than the bounds lies in some {o,i}-sublattice
/// {o, x, y, z, i} isomorphic to M3.
std::optional<Element>
FirstWithoutM3(const FiniteLattice &l)
{
  const Element o = l.bottom();
  const Element i = l.top();
  const auto m3 = named::M3();
  auto complementary = [&](Element a, Element b) {
    return a != b && l.Join(a, b) == i && l.Meet(a, b) == o;
  };
  for (Element x = 0; x < l.size(); ++x) {
    if (x == o || x == i) continue;
    bool found = false;
    for (Element y = 0; y < l.size() && !found; ++y) {
      if (y == o || y == i || !complementary(x, y)) continue;
      for (Element z = y + 1; z < l.size() && !found; ++z) {
        if (z == o || z == i || !complementary(x, z) || !complementary(y, z)) continue;
        const std::vector<Element> a{o, x, y, z, i};
        found = Is01Sublattice(l, a) && LatticeIso(Sublattice(l, a), m3).has_value();
      }
    }
    if (!found) return x;
  }
  return std::nullopt;
}

}  // namespace

std::string_view
GadgetKindName(GadgetKind kind)
{
  switch (kind) {
    case GadgetKind::kFrame:
      return "frame";
    case GadgetKind::kChain:
      return "Cp";
    case GadgetKind::kS:
      return "S";
    case GadgetKind::kSC:
      return "SC";
    case GadgetKind::kSV:
      return "SV";
    case GadgetKind::kSH:
      return "SH";
  }
  return "?";
}

Role
ParseRole(std::string_view text)
{
  if (text == "o" || text == "i") return Role{std::string(text), {}};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kTemplateInvalid, "bad role \"" + std::string(text) + "\"");
  }
  Role r;
  r.symbol = std::string(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto dot = rest.find('.');
    const auto part = rest.substr(0, dot);
    if (!ValidParam(part)) {
      throw Error(ErrorCode::kTemplateInvalid, "bad role parameter in \"" + std::string(text) + "\"");
    }
    r.params.emplace_back(part);
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  const bool anchor = (r.symbol == "a" || r.symbol == "b") && r.params.size() == 1;
  const bool inner = r.symbol.size() == 1 && r.symbol[0] >= 'c' && r.symbol[0] <= 'g' &&
                     r.params.size() == 2;
  if (!anchor && !inner) {
    throw Error(ErrorCode::kTemplateInvalid, "unknown role \"" + std::string(text) + "\"");
  }
  return r;
}

std::string
FormatRole(const Role &role)
{
  std::string out = role.symbol;
  for (std::size_t k = 0; k < role.params.size(); ++k) out += (k ? "." : ":") + role.params[k];
  return out;
}

std::optional<Element>
GadgetTemplate::FindRole(std::string_view role) const
{
  for (Element x = 0; x < roles.size(); ++x) {
    if (FormatRole(roles[x]) == role) return x;
  }
  return std::nullopt;
}

Element
GadgetTemplate::RoleIndex(std::string_view role) const
{
  if (const auto x = FindRole(role)) return *x;
  throw Error(ErrorCode::kTemplateInvalid,
              std::string(GadgetKindName(kind)) + ": missing role " + std::string(role));
}

const GadgetTemplate &
TemplateSet::Get(GadgetKind kind) const
{
  switch (kind) {
    case GadgetKind::kFrame:
      return frame;
    case GadgetKind::kChain:
      return chain;
    case GadgetKind::kS:
      return s;
    case GadgetKind::kSC:
      return sc;
    case GadgetKind::kSV:
      return sv;
    case GadgetKind::kSH:
      return sh;
  }
  return s;
}

std::filesystem::path
DefaultTemplateDirectory()
{
  if (const char *env = std::getenv("PRINC_TEMPLATES"); env != nullptr && *env != '\0') {
    return env;
  }
  const std::filesystem::path source = PRINC_SOURCE_TEMPLATE_DIR;
  std::error_code ec;
  if (!source.empty() && std::filesystem::exists(source / "S.json", ec)) return source;
  return PRINC_DEFAULT_TEMPLATE_DIR;
}

std::vector<CheckResult>
TemplateSuite(const TemplateSet &t)
{
  std::vector<CheckResult> out;
  {
    const auto &l = t.frame.lattice;
    const Element a0 = t.frame.RoleIndex("a:zero");
    const Element a1 = t.frame.RoleIndex("a:one");
    out.push_back(Check("frame-complements",
                        l.size() == 4 && l.Join(a0, a1) == l.top() && l.Meet(a0, a1) == l.bottom(),
                        "o, a_0, a_1, i with a_0 and a_1 complementary"));
  }
  {
    const auto &l = t.chain.lattice;
    const bool chain = l.size() == 4 && Length(l) == 3 &&
                       l.Leq(t.chain.RoleIndex("a:p"), t.chain.RoleIndex("b:p"));
    out.push_back(Check("Cp-chain", chain, "four-element chain o < a_p < b_p < i"));
  }
  out.push_back(Check("S-elements", t.s.lattice.size() == 11, "11 placeholders"));
  SuiteForS(t.s, out);
  for (const auto *a : {&t.sc, &t.sv, &t.sh}) SuiteForAmalgam(t.s, *a, out);
  return out;
}

TemplateSet
LoadTemplates(const std::filesystem::path &directory)
{
  TemplateSet t;
  t.directory = directory;
  t.frame = ReadTemplate(directory, GadgetKind::kFrame);
  t.chain = ReadTemplate(directory, GadgetKind::kChain);
  t.s = ReadTemplate(directory, GadgetKind::kS);
  t.sc = ReadTemplate(directory, GadgetKind::kSC);
  t.sv = ReadTemplate(directory, GadgetKind::kSV);
  t.sh = ReadTemplate(directory, GadgetKind::kSH);

  t.checks = TemplateSuite(t);
  for (const auto &c : t.checks) {
    if (c.gating && !c.passed) {
      throw Error(ErrorCode::kTemplateInvalid, c.id + " failed: " + c.detail);
    }
  }
  t.alpha = PrincipalCongruence(t.s.lattice, t.s.RoleIndex("a:p"), t.s.RoleIndex("b:p"));
  t.beta = PrincipalCongruence(t.s.lattice, t.s.RoleIndex("a:q"), t.s.RoleIndex("b:q"));
  return t;
}

TemplateSet
LoadTemplates()
{
  return LoadTemplates(DefaultTemplateDirectory());
}

std::size_t
ConstructionResult::Count(GadgetKind kind) const
{
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [&](const GadgetInstance &g) { return g.kind == kind; }));
}

std::string
ElementName(const Role &role, const std::vector<std::string> &bound)
{
  if (role.params.empty()) return role.symbol;
  std::string out = role.symbol + "@";
  for (std::size_t k = 0; k < bound.size(); ++k) out += (k ? "." : "") + Escape(bound[k]);
  return out;
}

ConstructionResult
AssembleK(const BoundedPoset &p, const TemplateSet &templates)
{
  ConstructionResult r;
  r.source = p;
  const Poset &order = p.poset;
  const std::size_t n = order.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "empty order");

  if (n <= 2) {
    r.k = n == 1 ? FiniteLattice::FromPoset(Poset::FromCovers({"o"}, {}))
                 : FiniteLattice::FromPoset(Poset::FromCovers({"o", "i"}, {{"o", "i"}}));
    r.anchors.assign(n, {r.k.bottom(), r.k.bottom()});
    r.anchors[p.one] = {r.k.top(), r.k.top()};
    r.membership.resize(r.k.size());
    return r;
  }

  struct Pending {
    GadgetKind kind;
    std::vector<Element> params;
    std::vector<std::string> names;
  };
  std::vector<Pending> pending;
  auto instantiate = [&](GadgetKind kind, std::vector<Element> params) {
    const GadgetTemplate &t = templates.Get(kind);
    // Template parameter names in binding order.
    std::vector<std::string> formal;
    switch (kind) {
      case GadgetKind::kFrame:
        formal = {"zero", "one"};
        break;
      case GadgetKind::kChain:
        formal = {"p"};
        break;
      case GadgetKind::kS:
        formal = {"p", "q"};
        break;
      case GadgetKind::kSC:
        formal = {"p", "q", "q2"};
        break;
      case GadgetKind::kSV:
        formal = {"p", "q", "q2"};
        break;
      case GadgetKind::kSH:
        formal = {"p", "q", "p2"};
        break;
    }
    Pending g{kind, std::move(params), {}};
    for (const auto &role : t.roles) {
      std::vector<std::string> bound;
      for (const auto &param : role.params) {
        const auto it = std::find(formal.begin(), formal.end(), param);
        if (it == formal.end()) Invalid(kind, "unbound parameter " + param);
        bound.push_back(order.name(g.params[static_cast<std::size_t>(it - formal.begin())]));
      }
      g.names.push_back(ElementName(role, bound));
    }
    pending.push_back(std::move(g));
  };

  const auto &in = p.interior;
  instantiate(GadgetKind::kFrame, {p.zero, p.one});
  for (const Element x : p.isolated) instantiate(GadgetKind::kChain, {x});
  for (const Element a : in) {
    for (const Element b : in) {
      if (order.Less(a, b)) instantiate(GadgetKind::kS, {a, b});
    }
  }
  for (const Element a : in) {
    for (const Element b : in) {
      if (!order.Less(a, b)) continue;
      for (const Element c : in) {
        if (order.Less(b, c)) instantiate(GadgetKind::kSC, {a, b, c});
        if (b < c && order.Less(a, c)) instantiate(GadgetKind::kSV, {a, b, c});
        if (a < c && order.Less(c, b)) instantiate(GadgetKind::kSH, {a, b, c});
      }
    }
  }

  std::vector<std::string> names{"o"};
  std::unordered_map<std::string, Element> index{{"o", 0}};
  for (const auto &g : pending) {
    for (const auto &name : g.names) {
      if (name != "i" && index.emplace(name, names.size()).second) names.push_back(name);
    }
  }
  index.emplace("i", names.size());
  names.push_back("i");

  std::vector<std::pair<Element, Element>> relation;
  for (const auto &g : pending) {
    GadgetInstance inst;
    inst.kind = g.kind;
    inst.params = g.params;
    for (const auto &name : g.names) inst.members.push_back(index.at(name));
    for (const auto &edge : PrimeIntervals(templates.Get(g.kind).lattice)) {
      relation.emplace_back(inst.members[edge.lower], inst.members[edge.upper]);
    }
    inst.label = std::string(GadgetKindName(g.kind)) + "(";
    for (std::size_t k = 0; k < g.params.size(); ++k) {
      inst.label += (k ? "," : "") + order.name(g.params[k]);
    }
    inst.label += ")";
    r.instances.push_back(std::move(inst));
  }

  try {
    r.k = FiniteLattice::FromPoset(Poset::FromCoverIndices(names, relation));
  } catch (const Error &e) {
    throw Error(ErrorCode::kAssemblyNotALattice, e.what());
  }

  r.membership.resize(r.k.size());
  for (std::size_t k = 0; k < r.instances.size(); ++k) {
    const auto &inst = r.instances[k];
    if (!IsSublattice(r.k, inst.members)) {
      throw Error(ErrorCode::kAssemblyNotALattice, inst.label + " is not a sublattice of K");
    }
    for (const Element x : inst.members) r.membership[x].push_back(k);
  }

  r.anchors.resize(n);
  const auto anchor = [&](const std::string &symbol, Element x) {
    return index.at(ElementName(Role{symbol, {"p"}}, {order.name(x)}));
  };
  for (Element x = 0; x < n; ++x) {
    if (x == p.zero || x == p.one) {
      r.anchors[x] = {anchor("a", x), anchor("a", x)};
    } else {
      r.anchors[x] = {anchor("a", x), anchor("b", x)};
    }
  }
  return r;
}

DownSet
Base(const ConstructionResult &result, const Congruence &beta)
{
  if (!IsICongruence(result.k, beta)) {
    throw Error(ErrorCode::kNotICongruence, "Base needs an I-congruence, got " +
                                                BlocksText(result.k, beta));
  }
  DownSet d;
  for (const Element x : result.source.interior) {
    const auto [a, b] = result.anchors[x];
    if (beta.Same(a, b)) d.members.push_back(x);
  }
  return d;
}

Congruence
BetaH(const ConstructionResult &result, const TemplateSet &templates, const DownSet &h)
{
  const Poset &order = result.source.poset;
  const auto &interior = result.source.interior;
  for (const Element x : h.members) {
    const bool inner = std::find(interior.begin(), interior.end(), x) != interior.end();
    if (!inner) {
      throw Error(ErrorCode::kNotADownSet, order.name(x) + " is not an interior element");
    }
    for (const Element y : interior) {
      if (order.Leq(y, x) && !h.Contains(y)) {
        throw Error(ErrorCode::kNotADownSet,
                    DownSetName(order, h) + " misses " + order.name(y) + " below " + order.name(x));
      }
    }
  }

  const FiniteLattice &k = result.k;
  if (h.members.empty()) return Congruence::Zero(k.size());

  UnionFind uf(k.size());
  std::set<std::pair<Element, Element>> related;
  auto relate = [&](Element x, Element y) {
    if (x == y) return;
    uf.Unite(x, y);
    related.emplace(std::min(x, y), std::max(x, y));
  };
  for (const Element x : result.source.isolated) {
    if (h.Contains(x)) relate(result.anchors[x].first, result.anchors[x].second);
  }
  for (const auto &inst : result.instances) {
    if (inst.kind != GadgetKind::kS) continue;
    const Element lower = inst.params[0];
    const Element upper = inst.params[1];
    const Congruence *theta = nullptr;
    if (h.Contains(upper)) {
      theta = &templates.beta;
    } else if (h.Contains(lower)) {
      theta = &templates.alpha;
    }
    if (theta == nullptr) continue;
    for (const auto &block : theta->Blocks()) {
      for (const Element x : block) {
        for (const Element y : block) relate(inst.members[x], inst.members[y]);
      }
    }
  }

  std::vector<std::size_t> ids(k.size());
  for (Element x = 0; x < k.size(); ++x) ids[x] = uf.Find(x);
  const auto beta = Congruence::FromBlockIds(ids);

  for (const auto &block : beta.Blocks()) {
    if (block.size() > 3) {
      throw Error(ErrorCode::kVerificationFailed,
                  "beta_H" + DownSetName(order, h) + " has a block of size " +
                      std::to_string(block.size()));
    }
    for (const Element x : block) {
      for (const Element y : block) {
        if (x < y && !related.count({x, y})) {
          throw Error(ErrorCode::kVerificationFailed,
                      "beta_H" + DownSetName(order, h) + " is not transitive at " + k.name(x) +
                          ", " + k.name(y));
        }
        if (!k.Leq(x, y) && !k.Leq(y, x)) {
          throw Error(ErrorCode::kVerificationFailed,
                      "beta_H" + DownSetName(order, h) + " block is not a chain");
        }
      }
    }
  }
  if (!SatisfiesSubstitution(k, beta)) {
    throw Error(ErrorCode::kVerificationFailed,
                "beta_H" + DownSetName(order, h) + " fails the substitution property");
  }
  return beta;
}

IsoCorrespondence
Phi(const ConstructionResult &result, const TemplateSet &templates)
{
  return Phi(result, templates, AllCongruences(result.k));
}

IsoCorrespondence
Phi(const ConstructionResult &result, const TemplateSet &templates, const ConOrder &con)
{
  const Poset &order = result.source.poset;
  const FiniteLattice &k = result.k;
  IsoCorrespondence phi;
  phi.congruences = con.congruences;
  phi.down_sets = DownSets(order, true);

  auto broken = [&](const std::string &what) {
    throw Error(ErrorCode::kCorrespondenceBroken, what);
  };
  auto locate = [&](const DownSet &d) {
    const auto it = std::find(phi.down_sets.begin(), phi.down_sets.end(), d);
    if (it == phi.down_sets.end()) broken(DownSetName(order, d) + " is not a down set of P");
    return static_cast<std::size_t>(it - phi.down_sets.begin());
  };
  DownSet everything;
  for (Element x = 0; x < order.size(); ++x) everything.members.push_back(x);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  phi.backward.assign(phi.down_sets.size(), kUnset);
  for (std::size_t c = 0; c < phi.congruences.size(); ++c) {
    const auto &theta = phi.congruences[c];
    DownSet d;
    if (theta.IsZero()) {
      d.members = {result.source.zero};
    } else if (theta.IsOne()) {
      d = everything;
    } else if (IsICongruence(k, theta)) {
      d = Base(result, theta);
      d.members.push_back(result.source.zero);
      std::sort(d.members.begin(), d.members.end());
    } else {
      broken("congruence " + BlocksText(k, theta) + " is neither 0, 1 nor an I-congruence");
    }
    const std::size_t idx = locate(d);
    if (phi.backward[idx] != kUnset) {
      broken("two congruences share the base " + DownSetName(order, d));
    }
    phi.forward.push_back(idx);
    phi.backward[idx] = c;
  }
  for (std::size_t d = 0; d < phi.down_sets.size(); ++d) {
    if (phi.backward[d] == kUnset) {
      broken(DownSetName(order, phi.down_sets[d]) + " has no congruence");
    }
  }
  for (std::size_t a = 0; a < phi.congruences.size(); ++a) {
    for (std::size_t b = 0; b < phi.congruences.size(); ++b) {
      const bool below = phi.congruences[a].IsBelow(phi.congruences[b]);
      const bool subset = phi.down_sets[phi.forward[a]].SubsetOf(phi.down_sets[phi.forward[b]]);
      if (below != subset) {
        broken("order not preserved between " + BlocksText(k, phi.congruences[a]) + " and " +
               BlocksText(k, phi.congruences[b]));
      }
    }
  }
  // The inverse is beta_H on the interior part of each proper down set.
  if (!result.source.interior.empty()) {
    for (std::size_t d = 0; d < phi.down_sets.size(); ++d) {
      if (phi.down_sets[d] == everything) continue;
      DownSet h;
      for (const Element x : phi.down_sets[d].members) {
        if (x != result.source.zero) h.members.push_back(x);
      }
      if (BetaH(result, templates, h) != phi.congruences[phi.backward[d]]) {
        broken("beta_H differs from the congruence paired with " +
               DownSetName(order, phi.down_sets[d]));
      }
    }
  }
  return phi;
}

bool
TheoremReport::passed() const
{
  return FirstFailure() == nullptr;
}

const CheckResult *
TheoremReport::FirstFailure() const
{
  for (const auto &c : checks) {
    if (c.gating && !c.passed) return &c;
  }
  return nullptr;
}

TheoremReport
VerifyTheorem(const BoundedPoset &p, const TemplateSet &templates)
{
  TheoremReport report;
  auto &checks = report.checks;
  const Poset &order = p.poset;

  {
    bool gating_ok = true;
    for (const auto &c : templates.checks) gating_ok = gating_ok && (!c.gating || c.passed);
    checks.push_back(Check("templates", gating_ok,
                           std::to_string(templates.checks.size()) + " load checks"));
    for (const auto &c : templates.checks) {
      if (!c.gating && !c.passed) checks.push_back(c);
    }
  }

  try {
    report.construction = AssembleK(p, templates);
  } catch (const Error &e) {
    checks.push_back(Check("assembly", false, e.what()));
    return report;
  }
  const auto &r = *report.construction;
  const FiniteLattice &k = r.k;
  {
    std::ostringstream os;
    os << "|K| = " << k.size() << ", gadgets C=" << r.Count(GadgetKind::kChain)
       << " S=" << r.Count(GadgetKind::kS) << " SC=" << r.Count(GadgetKind::kSC)
       << " SV=" << r.Count(GadgetKind::kSV) << " SH=" << r.Count(GadgetKind::kSH);
    checks.push_back(Check("assembly", true, os.str()));
  }

  const auto princ = ComputePrincOrder(k);
  report.principal_count = princ.congruences.size();
  if (p.interior.empty()) report.congruence_count = AllCongruences(k).congruences.size();

  if (p.interior.empty()) {
    const bool chain = k.size() == order.size() && Length(k) + 1 == k.size();
    checks.push_back(Check("degenerate", chain,
                           "K is the " + std::to_string(k.size()) + "-element chain"));
  } else {
    const auto con = AllCongruences(k);
    report.congruence_count = con.congruences.size();

    const auto lonely = FirstWithoutM3(k);
    checks.push_back(Check("m3-cover", !lonely,
                           lonely ? k.name(*lonely) + " lies in no M3 {o,i}-sublattice"
                                  : "every x in K- lies in an M3 {o,i}-sublattice"));

    std::string odd;
    for (const auto &theta : con.congruences) {
      if (!theta.IsZero() && !theta.IsOne() && !IsICongruence(k, theta)) {
        odd = BlocksText(k, theta);
        break;
      }
    }
    checks.push_back(Check("congruence-kinds", odd.empty(),
                           odd.empty() ? std::to_string(con.congruences.size()) +
                                             " congruences, each 0, 1 or an I-congruence"
                                       : "stray congruence " + odd));

    std::string bad_base;
    for (const auto &theta : con.congruences) {
      if (!IsICongruence(k, theta)) continue;
      const auto base = Base(r, theta);
      bool ok = !base.members.empty();
      for (const Element x : base.members) {
        for (const Element y : p.interior) ok = ok && (!order.Leq(y, x) || base.Contains(y));
      }
      if (!ok) {
        bad_base = DownSetName(order, base);
        break;
      }
    }
    checks.push_back(Check("base-down-set", bad_base.empty(),
                           bad_base.empty() ? "Base of every I-congruence is a nonempty down set"
                                            : "Base " + bad_base + " is not a nonempty down set"));

    std::string bad_anchor;
    for (const Element x : p.interior) {
      const auto theta = PrincipalCongruence(k, r.anchors[x].first, r.anchors[x].second);
      DownSet want;
      for (const Element y : p.interior) {
        if (order.Leq(y, x)) want.members.push_back(y);
      }
      if (!IsICongruence(k, theta) || Base(r, theta) != want) {
        bad_anchor = order.name(x);
        break;
      }
    }
    checks.push_back(Check("anchor-congruences", bad_anchor.empty(),
                           bad_anchor.empty()
                               ? "con(a_p,b_p) is an I-congruence with Base = down-set of p"
                               : "con(a_p,b_p) is wrong for p = " + bad_anchor));

    std::string beta_fail;
    {
      const auto interior_poset = order.Induced(p.interior);
      std::vector<std::pair<DownSet, Congruence>> betas;
      try {
        for (const auto &local : DownSets(interior_poset, false)) {
          DownSet h;
          for (const Element x : local.members) h.members.push_back(p.interior[x]);
          std::sort(h.members.begin(), h.members.end());
          auto beta = BetaH(r, templates, h);
          if (h.members.empty() != beta.IsZero()) {
            beta_fail = "beta_H" + DownSetName(order, h) + " zero mismatch";
          } else if (!h.members.empty() && !IsICongruence(k, beta)) {
            beta_fail = "beta_H" + DownSetName(order, h) + " is not an I-congruence";
          } else if (!con.Find(beta)) {
            beta_fail = "beta_H" + DownSetName(order, h) + " is not a congruence of K";
          }
          if (!beta_fail.empty()) break;
          betas.emplace_back(std::move(h), std::move(beta));
        }
      } catch (const Error &e) {
        beta_fail = e.what();
      }
      for (std::size_t a = 0; a < betas.size() && beta_fail.empty(); ++a) {
        for (std::size_t b = 0; b < betas.size() && beta_fail.empty(); ++b) {
          const bool subset = betas[a].first.SubsetOf(betas[b].first);
          if (subset != betas[a].second.IsBelow(betas[b].second)) {
            beta_fail = "H -> beta_H is not an order embedding at " +
                        DownSetName(order, betas[a].first) + ", " +
                        DownSetName(order, betas[b].first);
          }
        }
      }
      checks.push_back(Check("beta-h", beta_fail.empty(),
                             beta_fail.empty()
                                 ? std::to_string(betas.size()) +
                                       " down sets, each beta_H a congruence with chain blocks"
                                 : beta_fail));
    }

    std::optional<IsoCorrespondence> phi;
    try {
      phi = Phi(r, templates, con);
      checks.push_back(Check("correspondence", true,
                             "Con K has " + std::to_string(con.congruences.size()) +
                                 " members, matching the nonempty down sets of P"));
    } catch (const Error &e) {
      checks.push_back(Check("correspondence", false, e.what()));
    }

    if (phi) {
      std::string mismatch;
      for (std::size_t c = 0; c < phi->congruences.size(); ++c) {
        const bool principal =
            std::find(princ.congruences.begin(), princ.congruences.end(), phi->congruences[c]) !=
            princ.congruences.end();
        const auto &d = phi->down_sets[phi->forward[c]];
        bool principal_down = false;
        for (Element x = 0; x < order.size(); ++x) {
          principal_down = principal_down || PrincipalDownSet(order, x) == d;
        }
        if (principal != principal_down) {
          mismatch = DownSetName(order, d);
          break;
        }
      }
      checks.push_back(Check("principal-preserved", mismatch.empty(),
                             mismatch.empty()
                                 ? "principal congruences map onto principal down sets"
                                 : "principality differs at " + mismatch));
    }
  }

  {
    const auto iso = OrderIso(order, princ.order);
    checks.push_back(Check("princ-iso", iso.has_value(),
                           "Princ K has " + std::to_string(princ.congruences.size()) +
                               " members, |P| = " + std::to_string(order.size())));
  }

  {
    bool comparable_pair = false;
    for (const Element a : p.interior) {
      for (const Element b : p.interior) comparable_pair = comparable_pair || order.Less(a, b);
    }
    const std::size_t len = Length(k);
    const bool ok = p.interior.empty() ? true : (comparable_pair ? len == 5 : len <= 5);
    checks.push_back(Check("length", ok,
                           "length(K) = " + std::to_string(len) +
                               (comparable_pair ? ", expected 5" : ", expected at most 5"),
                           /*gating=*/false));
  }

  if (!p.interior.empty()) {
    // Order contributed by single S or C_p instances and the frame.
    std::vector<char> own(k.size() * k.size(), 0);
    for (const auto &inst : r.instances) {
      if (inst.kind != GadgetKind::kS && inst.kind != GadgetKind::kChain &&
          inst.kind != GadgetKind::kFrame) {
        continue;
      }
      const auto &t = templates.Get(inst.kind).lattice;
      for (Element x = 0; x < t.size(); ++x) {
        for (Element y = 0; y < t.size(); ++y) {
          if (t.Leq(x, y)) own[inst.members[x] * k.size() + inst.members[y]] = 1;
        }
      }
    }
    bool contained = true;
    for (Element x = 0; x < k.size(); ++x) {
      for (Element y = 0; y < k.size(); ++y) {
        const bool in_union = own[x * k.size() + y] != 0;
        if (in_union && !k.Leq(x, y)) contained = false;
        if (x != y && k.Leq(x, y) && !in_union) report.cross_gadget_pairs.emplace_back(x, y);
      }
    }
    checks.push_back(Check("order-extension", contained,
                           std::to_string(report.cross_gadget_pairs.size()) +
                               " comparable pairs beyond the union of gadget orders",
                           /*gating=*/false));
  }
  return report;
}

std::string
FormatReport(const TheoremReport &report)
{
  std::ostringstream os;
  for (const auto &c : report.checks) {
    const char *status = c.passed ? "PASS" : (c.gating ? "FAIL" : "WARN");
    os << status << "  " << std::left << std::setw(22) << c.id << c.detail << '\n';
  }
  os << "verdict: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace princ
