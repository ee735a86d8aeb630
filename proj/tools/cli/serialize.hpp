#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fermat/certificate.hpp"
#include "fermat/identities.hpp"
#include "fermat/rational_map.hpp"
#include "fermat/varieties.hpp"

namespace fermat::cli {

// Every record type serializes to a TSV row and to a JSON object whose keys
// are the TSV column names, so the two formats carry identical data.

// A count row, or a refusal when the brute-force search is over budget.
struct CountRow {
  std::uint32_t p;
  std::string variety;
  CountMethod method;
  std::optional<CountReport> report;
  std::string refusal;
};

// A census row, or a refusal when the search is over budget.
struct CensusRow {
  std::uint32_t p;
  std::optional<FiberCensus> census;
  std::string refusal;
};

const std::vector<std::string>& count_columns();
const std::vector<std::string>& census_columns();
const std::vector<std::string>& ap_columns();
const std::vector<std::string>& membership_columns();
const std::vector<std::string>& family_columns();
const std::vector<std::string>& violation_columns();

nlohmann::ordered_json to_json(const CountRow& row);
nlohmann::ordered_json to_json(const CensusRow& row);
nlohmann::ordered_json to_json(const ApRow& row);
nlohmann::ordered_json to_json(const MembershipCheck& check);
nlohmann::ordered_json to_json(const IdentityFamily& family);

// Tab-joined values of `object` in `columns` order. Strings are written
// bare, booleans as true/false.
std::string to_tsv(const nlohmann::ordered_json& object, const std::vector<std::string>& columns);
std::string tsv_header(const std::vector<std::string>& columns);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json json_integer(const mpz_class& v);

}  // namespace fermat::cli
