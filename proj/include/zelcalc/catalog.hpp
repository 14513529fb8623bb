#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zelcalc/basechange.hpp"

namespace zelcalc {

// Values an entry must reproduce. Unset fields are not checked.
struct CatalogExpected {
  bool csd = false;
  std::optional<BcTag> bc_class;
  std::optional<std::int64_t> n;
  std::optional<bool> single_image;  // in exactly one of the two base change images
  std::optional<bool> is_ladder;
  std::optional<bool> is_proper_ladder;
  std::optional<std::string> ladder_verdict;      // describe(DistinctionVerdict)
  std::optional<std::string> chi_ladder_verdict;  // verdict for the chi-twisted input
  std::optional<std::string> induced_twist0;      // describe(InducedVerdict)
  std::optional<std::string> induced_twist1;
  std::vector<std::string> factor_verdicts;       // ladder verdict of each factor
};

struct CatalogEntry {
  std::string id;
  nlohmann::json universe;
  std::string input;  // DSL representation spec
  CatalogExpected expected;
  std::string provenance;
};

struct CatalogCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct EntryReport {
  std::string id;
  std::vector<CatalogCheck> checks;
  bool pass = false;
};

const std::vector<CatalogEntry>& catalog();

EntryReport verify_entry(const CatalogEntry& entry);
std::vector<EntryReport> verify_catalog();

nlohmann::json to_json(const EntryReport& r);

}  // namespace zelcalc
