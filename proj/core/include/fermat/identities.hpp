#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/modular.hpp"

namespace fermat {

// Every route to a_p for one prime.
struct ApRow {
  std::uint32_t p = 0;
  std::uint32_t residue_mod_3 = 0;
  std::int64_t ap_w2 = 0;      // from the CM decomposition
  mpz_class ap_w4;             // t^3 - 3pt
  mpz_class f2_coefficient;    // from the weight-2 eta expansion
  mpz_class f4_coefficient;    // from the weight-4 eta expansion
  std::int64_t point_count_trace = 0;  // p + 1 - #E(F_p), table method

  bool weight2_agrees() const { return f2_coefficient == ap_w2 && point_count_trace == ap_w2; }
  bool weight4_agrees() const { return f4_coefficient == ap_w4; }
  bool within_bounds() const;
  bool identity_ok() const { return weight2_agrees() && weight4_agrees(); }
};

// Both eta expansions to a common bound, plus the specs they came from.
struct FormPair {
  EtaProductSpec f2;
  EtaProductSpec f4;
  QSeries f2_series;
  QSeries f4_series;
};

// Throws std::domain_error if either spec does not expand to an integral
// q-series.
FormPair expand_forms(std::size_t bound, const EtaProductSpec& f2 = eta_products::weight2(),
                      const EtaProductSpec& f4 = eta_products::weight4());

// Requires p <= bound of the series; refuses p = 3.
ApRow compute_ap_row(std::uint32_t p, const FormPair& forms);

struct IdentityFamily {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

struct IdentityReport {
  std::uint32_t max_prime = 0;
  std::size_t bound = 0;
  std::vector<IdentityFamily> families;
  std::vector<ApRow> rows;

  bool ok() const;
};

// Every prime p <= max_prime except 3: three-way weight-2 agreement, the
// weight-4 identity, spot values, support, Weil bounds, and the Hecke
// relations of both series up to `bound`. A spec whose expansion is not an
// integral q-series is reported as a violation of its family.
IdentityReport check_identities(std::uint32_t max_prime, std::size_t bound = 1000,
                                const EtaProductSpec& f2 = eta_products::weight2(),
                                const EtaProductSpec& f4 = eta_products::weight4(), unsigned threads = 1);

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace fermat
