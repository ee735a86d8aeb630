#pragma once

#include <string>
#include <vector>

#include "fermat/groebner.hpp"
#include "fermat/polynomial.hpp"
#include "fermat/rational_map.hpp"

namespace fermat {

// One ideal-membership check: does the pullback of `generator` reduce to zero?
struct MembershipCheck {
  std::string label;
  std::string generator;
  std::string pullback;
  std::string normal_form;
  bool member;
};

struct Certificate {
  std::vector<MembershipCheck> checks;
  bool passed() const;
};

// Reduced grevlex basis of (x1^3+y1^3+1, x2^3+y2^3+1, x3^3+y3^3+1).
const GroebnerBasis& e3_patch_basis();
// Reduced grevlex basis of (x_i^3 + y_i^3 + z_i^3), i = 1, 2, 3.
const GroebnerBasis& e3_homogeneous_basis();

// Membership of an arbitrary polynomial in the E^3 patch ideal.
MembershipCheck patch_membership(const std::string& label, const MultiPoly& f);

// Pulls back both dehomogenized V33 generators and reduces them modulo the
// E^3 patch ideal.
Certificate verify_map_well_defined(const MapSpec& map = fermat_map());

// y3^3 + (pullback of X2)^3 + 1 lies in the patch ideal.
Certificate verify_degree_relation(const MapSpec& map = fermat_map());

struct HomogenizedCertificate {
  HomogenizedMap homogenized;
  // Both homogeneous V33 cubics, reduced modulo the tri-homogeneous ideal.
  std::vector<MembershipCheck> checks;
  // Each form is tri-homogeneous of the reported tridegree.
  bool forms_trihomogeneous = false;
  // Setting z1 = z2 = z3 = 1 turns X3 into 1 and the rest into the input map.
  bool restriction_matches_input = false;
  // ... and into fermat_map() verbatim.
  bool restriction_matches_reference = false;

  bool passed() const;
};

HomogenizedCertificate verify_homogenized(const MapSpec& map = fermat_map());

}  // namespace fermat
