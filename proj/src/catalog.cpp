#include "zelcalc/catalog.hpp"

#include <functional>

#include "zelcalc/distinction.hpp"
#include "zelcalc/dsl.hpp"
#include "zelcalc/errors.hpp"
#include "zelcalc/json_out.hpp"
#include "zelcalc/universe_io.hpp"

namespace zelcalc {

namespace {

using nlohmann::json;

json self_line(const char* id, int deg, int eta0, int dist_a) {
  return {{"id", id}, {"deg", deg}, {"conj_dual", "self"}, {"eta0", eta0}, {"dist_a", dist_a}};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.id = "E1-gl3-induced";
    e.universe = {{"lines", {self_line("one", 1, 1, 0), self_line("rho2", 2, 1, 0)}}};
    e.input = "([0]@one)*([0]@rho2!chi)";
    e.expected.csd = true;
    e.expected.n = 3;
    // Not rigid: the two conjugate self-dual points carry opposite parities.
    e.expected.bc_class = BcTag::ConjSelfDualNoParity;
    e.expected.induced_twist0 = "NotDistinguished(UnpairedFixedFactorNotHDistinguished)";
    e.expected.induced_twist1 = "NotDistinguished(UnpairedFixedFactorNotHDistinguished)";
    e.expected.factor_verdicts = {"OnlyExponent(0)", "OnlyExponent(1)"};
    e.provenance =
        "GL_3(E) representation induced from the trivial character of GL_1(E) and the chi-twist of a "
        "GL_2(F)-distinguished conjugate self-dual cuspidal of GL_2(E). Conjugate self-dual, yet neither it "
        "nor its chi-twist is GL_3(F)-distinguished.";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E2-speh-like-ladder";
    e.universe = {{"lines", {self_line("sigma", 2, 1, 0)}}};
    e.input = "[-1,0]@sigma+[0,1]@sigma";
    e.expected.csd = true;
    e.expected.n = 8;
    e.expected.bc_class = BcTag::Both;
    e.expected.single_image = false;
    e.expected.is_ladder = true;
    e.expected.is_proper_ladder = true;
    e.expected.ladder_verdict = "OnlyExponent(1)";
    e.expected.chi_ladder_verdict = "OnlyExponent(0)";
    e.provenance =
        "L([nu^-1 sigma, sigma], [sigma, nu sigma]) with sigma conjugate self-dual and H-distinguished: in the "
        "image of the unstable base change map but not H-distinguished, while its chi-twist is.";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E3-unlinked-ladders";
    e.universe = {{"lines", {self_line("one", 1, 1, 0)}}};
    e.input = "([-1/2]@one+[1/2]@one)*([-1/2,1/2]@one)";
    e.expected.csd = true;
    e.expected.n = 4;
    e.expected.induced_twist0 = "NotDistinguished(UnpairedFixedFactorNotHDistinguished)";
    e.expected.induced_twist1 = "NotDistinguished(UnpairedFixedFactorNotHDistinguished)";
    e.expected.factor_verdicts = {"OnlyExponent(0)", "OnlyExponent(1)"};
    e.provenance =
        "L([nu^-1/2],[nu^1/2]) x L([nu^-1/2, nu^1/2]): a product of mutually unlinked proper ladders that is "
        "conjugate self-dual but neither H-distinguished nor (H, omega)-distinguished.";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E4-imprimitive-theta";
    e.universe = {{"lines", {self_line("sigma", 2, 1, 0)}}};
    e.input = "[1/2,3/2]@sigma+[-1/2,7/2]@sigma+[-3/2,-1/2]@sigma+[-5/2,5/2]@sigma+[-7/2,1/2]@sigma";
    e.expected.csd = true;
    e.expected.n = 40;
    e.expected.bc_class = BcTag::StableOnly;
    e.expected.single_image = true;
    e.expected.is_ladder = false;
    e.expected.is_proper_ladder = false;
    e.provenance =
        "theta = L(m) for the five-segment multisegment above: conjugate self-dual, imprimitive, not a ladder, "
        "and in exactly one base change image. Its imprimitivity and the fact that it is neither "
        "H-distinguished nor (H, omega)-distinguished are recorded facts, not recomputed here (they rest on "
        "irreducibility criteria for products of ladders and on derivatives).";
    out.push_back(std::move(e));
  }
  return out;
}

std::string str(bool b) { return b ? "true" : "false"; }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

EntryReport verify_entry(const CatalogEntry& entry) {
  EntryReport report;
  report.id = entry.id;
  const CatalogExpected& x = entry.expected;

  auto check = [&](const std::string& name, const std::string& expected, const std::function<std::string()>& compute) {
    CatalogCheck c{name, expected, {}, false};
    try {
      c.actual = compute();
    } catch (const std::exception& ex) {
      c.actual = std::string("error: ") + ex.what();
    }
    c.pass = c.actual == c.expected;
    report.checks.push_back(std::move(c));
  };

  std::optional<Universe> u;
  std::optional<RepSpec> rep;
  try {
    u.emplace(universe_from_json(entry.universe));
    rep.emplace(parse_rep(entry.input, *u));
  } catch (const std::exception& ex) {
    report.checks.push_back({"input", "valid", std::string("error: ") + ex.what(), false});
    return report;
  }
  const MultiSegment whole = rep->concatenated();
  const bool single_factor = rep->size() == 1;

  check("csd", str(x.csd), [&] { return str(is_conj_self_dual(whole, *u)); });
  if (x.n) check("n", std::to_string(*x.n), [&] { return std::to_string(total_degree(whole, *u)); });
  if (x.bc_class) {
    check("bc_class", std::string(to_string(*x.bc_class)), [&] { return std::string(to_string(bc_class(whole, *u).tag)); });
  }
  if (x.single_image) {
    check("single_image", str(*x.single_image), [&] {
      BcTag t = bc_class(whole, *u).tag;
      return str(t == BcTag::StableOnly || t == BcTag::UnstableOnly);
    });
  }
  if (x.is_ladder) check("is_ladder", str(*x.is_ladder), [&] { return str(single_factor && is_ladder(whole)); });
  if (x.is_proper_ladder) {
    check("is_proper_ladder", str(*x.is_proper_ladder), [&] { return str(single_factor && is_proper_ladder(whole)); });
  }
  if (x.ladder_verdict) {
    check("ladder_verdict", *x.ladder_verdict, [&] { return describe(ladder_distinction(whole, *u)); });
  }
  if (x.chi_ladder_verdict) {
    check("chi_ladder_verdict", *x.chi_ladder_verdict,
          [&] { return describe(ladder_distinction(chi_twist(whole, *u), *u)); });
  }
  if (x.induced_twist0) {
    check("induced_twist0", *x.induced_twist0, [&] { return describe(induced_distinction(*rep, *u, 0)); });
  }
  if (x.induced_twist1) {
    check("induced_twist1", *x.induced_twist1, [&] { return describe(induced_distinction(*rep, *u, 1)); });
  }
  if (!x.factor_verdicts.empty()) {
    std::string expected;
    for (const std::string& v : x.factor_verdicts) expected += (expected.empty() ? "" : ",") + v;
    check("factor_verdicts", expected, [&] {
      std::string out;
      for (const MultiSegment& f : rep->factors()) {
        out += (out.empty() ? "" : ",") + describe(ladder_distinction(f, *u));
      }
      return out;
    });
  }

  report.pass = !report.checks.empty();
  for (const CatalogCheck& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

std::vector<EntryReport> verify_catalog() {
  std::vector<EntryReport> out;
  for (const CatalogEntry& e : catalog()) out.push_back(verify_entry(e));
  return out;
}

json to_json(const EntryReport& r) {
  json checks = json::array();
  for (const CatalogCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"id", r.id}, {"pass", r.pass}, {"checks", std::move(checks)}};
}

}  // namespace zelcalc
