#include "serialize.hpp"

namespace fermat::cli {

using nlohmann::ordered_json;

const std::vector<std::string>& count_columns() {
  static const std::vector<std::string> c{"p", "variety", "method", "affine_cone", "projective"};
  return c;
}

const std::vector<std::string>& census_columns() {
  static const std::vector<std::string> c{"p",      "targets_total", "undefined",      "fiber0",
                                          "fiber1", "fiber3",        "source_matched", "conserved"};
  return c;
}

const std::vector<std::string>& ap_columns() {
  static const std::vector<std::string> c{"p", "residue_mod_3", "ap_w2", "ap_w4", "identity_ok"};
  return c;
}

const std::vector<std::string>& membership_columns() {
  static const std::vector<std::string> c{"check", "generator", "pullback", "normal_form", "member"};
  return c;
}

const std::vector<std::string>& family_columns() {
  static const std::vector<std::string> c{"family", "checked", "violations", "ok"};
  return c;
}

const std::vector<std::string>& violation_columns() {
  static const std::vector<std::string> c{"family", "violation"};
  return c;
}

ordered_json json_integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json to_json(const CountRow& row) {
  ordered_json j;
  j["p"] = row.p;
  j["variety"] = row.variety;
  j["method"] = to_string(row.method);
  if (!row.report) {
    j["affine_cone"] = "refused";
    j["projective"] = "refused";
    j["error"] = row.refusal;
    return j;
  }
  j["affine_cone"] = row.report->affine_cone_count ? json_integer(*row.report->affine_cone_count) : ordered_json("NA");
  j["projective"] = json_integer(row.report->projective_count);
  return j;
}

ordered_json to_json(const CensusRow& row) {
  ordered_json j;
  j["p"] = row.p;
  if (!row.census) {
    for (const auto& c : census_columns()) {
      if (c != "p") j[c] = "refused";
    }
    j["error"] = row.refusal;
    return j;
  }
  const auto& c = *row.census;
  j["targets_total"] = c.targets_total;
  j["undefined"] = c.undefined;
  j["fiber0"] = c.fiber0;
  j["fiber1"] = c.fiber1;
  j["fiber3"] = c.fiber3;
  j["source_matched"] = c.source_matched;
  j["conserved"] = c.conserved;
  return j;
}

ordered_json to_json(const ApRow& row) {
  ordered_json j;
  j["p"] = row.p;
  j["residue_mod_3"] = row.residue_mod_3;
  j["ap_w2"] = row.ap_w2;
  j["ap_w4"] = json_integer(row.ap_w4);
  j["identity_ok"] = row.identity_ok();
  return j;
}

ordered_json to_json(const MembershipCheck& check) {
  ordered_json j;
  j["check"] = check.label;
  j["generator"] = check.generator;
  j["pullback"] = check.pullback;
  j["normal_form"] = check.normal_form;
  j["member"] = check.member;
  return j;
}

ordered_json to_json(const IdentityFamily& family) {
  ordered_json j;
  j["family"] = family.name;
  j["checked"] = family.checked;
  j["violations"] = family.violations.size();
  j["ok"] = family.violations.empty();
  return j;
}

std::string to_tsv(const ordered_json& object, const std::vector<std::string>& columns) {
  std::string line;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) line += '\t';
    const auto& v = object.at(columns[i]);
    line += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return line;
}

std::string tsv_header(const std::vector<std::string>& columns) {
  std::string line = "#";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) line += '\t';
    line += columns[i];
  }
  return line;
}

}  // namespace fermat::cli
