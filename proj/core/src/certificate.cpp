#include "fermat/certificate.hpp"

#include <algorithm>

#include "fermat/varieties.hpp"

namespace fermat {

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const MembershipCheck& c) { return c.member; });
}

bool HomogenizedCertificate::passed() const {
  return forms_trihomogeneous && restriction_matches_input && restriction_matches_reference &&
         std::all_of(checks.begin(), checks.end(), [](const MembershipCheck& c) { return c.member; });
}

const GroebnerBasis& e3_patch_basis() {
  static const GroebnerBasis gb = buchberger(varieties::e3_patch().equations);
  return gb;
}

const GroebnerBasis& e3_homogeneous_basis() {
  static const GroebnerBasis gb = [] {
    const auto& r = rings::e3_homogeneous();
    return buchberger({parse_poly(r, "x1^3 + y1^3 + z1^3"), parse_poly(r, "x2^3 + y2^3 + z2^3"),
                       parse_poly(r, "x3^3 + y3^3 + z3^3")});
  }();
  return gb;
}

namespace {

MembershipCheck reduce_pullback(const std::string& label, const MapSpec& map, const MultiPoly& generator,
                                const GroebnerBasis& gb) {
  const MultiPoly pulled = pullback(map, generator);
  const RationalPoly nf = gb.normal_form(pulled);
  return {label, generator.to_string(), pulled.to_string(), nf.to_string(), nf.is_zero()};
}

}  // namespace

MembershipCheck patch_membership(const std::string& label, const MultiPoly& f) {
  const RationalPoly nf = e3_patch_basis().normal_form(f);
  return {label, f.to_string(), f.to_string(), nf.to_string(), nf.is_zero()};
}

Certificate verify_map_well_defined(const MapSpec& map) {
  Certificate cert;
  const auto& gens = varieties::v33_patch().equations;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cert.checks.push_back(reduce_pullback("v33_generator_" + std::to_string(i + 1), map, gens[i], e3_patch_basis()));
  }
  return cert;
}

Certificate verify_degree_relation(const MapSpec& map) {
  const auto& src = map.source();
  const MultiPoly y3 = MultiPoly::variable(src, "y3");
  const MultiPoly relation = y3.pow(3) + map.image("X2").pow(3) + MultiPoly::constant(src, 1);
  Certificate cert;
  cert.checks.push_back(patch_membership("degree_relation", relation));
  return cert;
}

HomogenizedCertificate verify_homogenized(const MapSpec& map) {
  HomogenizedCertificate cert{homogenize_map(map), {}, false, false, false};
  const auto& h = cert.homogenized;

  const auto& gens = varieties::v33().equations;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cert.checks.push_back(
        reduce_pullback("v33_cubic_" + std::to_string(i + 1), h.forms, gens[i], e3_homogeneous_basis()));
  }

  cert.forms_trihomogeneous = true;
  for (const auto& [name, form] : h.forms.assignments()) {
    for (const auto& [m, c] : form.terms()) {
      for (std::size_t k = 0; k < 3; ++k) {
        const std::uint32_t d = m[3 * k] + m[3 * k + 1] + m[3 * k + 2];
        if (d != h.tridegree[k]) cert.forms_trihomogeneous = false;
      }
    }
  }

  // Dehomogenize: x_i -> x_i, y_i -> y_i, z_i -> 1.
  const auto& patch = map.source();
  std::map<std::string, MultiPoly> dehom;
  for (const auto& name : rings::e3_homogeneous()->names()) {
    dehom.emplace(name, name.front() == 'z' ? MultiPoly::constant(patch, 1) : MultiPoly::variable(patch, name));
  }
  const MapSpec restrict_map(patch, rings::e3_homogeneous(), std::move(dehom));
  std::map<std::string, MultiPoly> restricted;
  for (const auto& [name, form] : h.forms.assignments()) restricted.emplace(name, pullback(restrict_map, form));

  const bool x3_is_one = restricted.at("X3") == MultiPoly::constant(patch, 1);
  restricted.erase("X3");
  cert.restriction_matches_input = x3_is_one && restricted == map.assignments();
  cert.restriction_matches_reference = x3_is_one && restricted == fermat_map().assignments();
  return cert;
}

}  // namespace fermat
