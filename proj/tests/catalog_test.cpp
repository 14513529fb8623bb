#include <doctest.h>

#include <set>

#include "support.hpp"
#include "zelcalc/catalog.hpp"
#include "zelcalc/distinction.hpp"
#include "zelcalc/json_out.hpp"
#include "zelcalc/universe_io.hpp"

using namespace zelcalc;

TEST_CASE("four entries with distinct ids") {
  const auto& entries = catalog();
  CHECK(entries.size() == 4);
  std::set<std::string> ids;
  for (const CatalogEntry& e : entries) ids.insert(e.id);
  CHECK(ids.size() == 4);
}

TEST_CASE("every entry verifies") {
  for (const EntryReport& r : verify_catalog()) {
    CAPTURE(r.id);
    for (const CatalogCheck& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.actual == c.expected);
      CHECK(c.pass);
    }
    CHECK(r.pass);
  }
}

TEST_CASE("verification is deterministic") {
  nlohmann::json a, b;
  for (const EntryReport& r : verify_catalog()) a.push_back(to_json(r));
  for (const EntryReport& r : verify_catalog()) b.push_back(to_json(r));
  CHECK(a.dump() == b.dump());
}

// Recomputed here from the entry data, independent of the catalog's expected values.
TEST_CASE("conjugate self-dual but not distinguished") {
  const CatalogEntry& e3 = catalog()[2];
  const Universe u = universe_from_json(e3.universe);
  const RepSpec r = parse_rep(e3.input, u);
  CHECK(is_conj_self_dual(r.concatenated(), u));
  for (int twist : {0, 1}) CHECK_FALSE(induced_distinction(r, u, twist).distinguished);
  const DistinctionVerdict a = ladder_distinction(r[0], u);
  const DistinctionVerdict b = ladder_distinction(r[1], u);
  CHECK(a.tag == DistTag::OnlyExponent);
  CHECK(b.tag == DistTag::OnlyExponent);
  CHECK(a.exponent != b.exponent);
}

TEST_CASE("theta lies in exactly one image") {
  const CatalogEntry& e4 = catalog()[3];
  const Universe u = universe_from_json(e4.universe);
  const MultiSegment theta = parse_multisegment(e4.input, u);
  CHECK(theta == parse_multisegment(testing::kTheta, u));
  CHECK(is_conj_self_dual(theta, u));
  CHECK_FALSE(is_ladder(theta));
  const BcTag t = bc_class(theta, u).tag;
  CHECK((t == BcTag::StableOnly || t == BcTag::UnstableOnly));
}

TEST_CASE("a wrong expectation fails") {
  CatalogEntry e = catalog()[1];
  e.expected.ladder_verdict = "OnlyExponent(0)";
  const EntryReport r = verify_entry(e);
  CHECK_FALSE(r.pass);
}
