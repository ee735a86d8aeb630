#include "fermat/identities.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fermat/finite_field.hpp"
#include "fermat/parallel.hpp"
#include "fermat/varieties.hpp"

namespace fermat {

bool ApRow::within_bounds() const {
  return within_weil_bound(f2_coefficient, p, 2) && within_weil_bound(f4_coefficient, p, 4);
}

FormPair expand_forms(std::size_t bound, const EtaProductSpec& f2, const EtaProductSpec& f4) {
  return {f2, f4, eta_expand(f2, bound), eta_expand(f4, bound)};
}

ApRow compute_ap_row(std::uint32_t p, const FormPair& forms) {
  if (p == 3) throw BadReduction("p = 3 is a prime of bad reduction");
  ApRow row;
  row.p = p;
  row.residue_mod_3 = p % 3;
  row.ap_w2 = ap_weight2(p);
  row.ap_w4 = ap_weight4(p);
  row.f2_coefficient = forms.f2_series[p];
  row.f4_coefficient = forms.f4_series[p];
  const mpz_class count = count_E(p).projective_count;
  row.point_count_trace = static_cast<std::int64_t>(p) + 1 - count.get_si();
  return row;
}

bool IdentityReport::ok() const {
  return std::all_of(families.begin(), families.end(), [](const IdentityFamily& f) { return f.violations.empty(); });
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

namespace {

std::string hecke_text(const HeckeViolation& v) {
  if (v.kind == HeckeViolation::Kind::multiplicativity) {
    return "a_" + std::to_string(v.m * v.n) + " = " + v.actual.get_str() + ", expected a_" + std::to_string(v.m) +
           " * a_" + std::to_string(v.n) + " = " + v.expected.get_str();
  }
  return "a_{" + std::to_string(v.m) + "^" + std::to_string(v.n) + "} = " + v.actual.get_str() +
         ", recursion gives " + v.expected.get_str();
}

}  // namespace

IdentityReport check_identities(std::uint32_t max_prime, std::size_t bound, const EtaProductSpec& f2,
                                const EtaProductSpec& f4, unsigned threads) {
  if (max_prime > bound) {
    throw std::invalid_argument("max prime " + std::to_string(max_prime) + " exceeds the truncation bound " +
                                std::to_string(bound));
  }
  IdentityReport report;
  report.max_prime = max_prime;
  report.bound = bound;

  IdentityFamily expansion{"eta_expansion", 2, {}};
  std::optional<QSeries> s2;
  std::optional<QSeries> s4;
  try {
    s2 = eta_expand(f2, bound);
  } catch (const std::domain_error& e) {
    expansion.violations.push_back(std::string("f2: ") + e.what());
  }
  try {
    s4 = eta_expand(f4, bound);
  } catch (const std::domain_error& e) {
    expansion.violations.push_back(std::string("f4: ") + e.what());
  }
  report.families.push_back(expansion);
  if (!s2 || !s4) return report;

  const FormPair forms{f2, f4, *s2, *s4};
  std::vector<std::uint32_t> primes = primes_in_range(2, max_prime);
  std::erase(primes, 3u);
  report.rows = parallel_map(primes.size(), threads, [&](std::size_t i) { return compute_ap_row(primes[i], forms); });

  IdentityFamily w2{"weight2_three_way", 0, {}};
  IdentityFamily w4{"weight4_identity", 0, {}};
  IdentityFamily bounds{"weil_bounds", 0, {}};
  for (const auto& r : report.rows) {
    const std::string p = "p=" + std::to_string(r.p) + ": ";
    ++w2.checked;
    if (!r.weight2_agrees()) {
      w2.violations.push_back(p + "f2 coefficient " + r.f2_coefficient.get_str() + ", p+1-#E " +
                              std::to_string(r.point_count_trace) + ", CM trace " + std::to_string(r.ap_w2));
    }
    ++w4.checked;
    if (!r.weight4_agrees()) {
      w4.violations.push_back(p + "f4 coefficient " + r.f4_coefficient.get_str() + ", t^3-3pt " + r.ap_w4.get_str());
    }
    ++bounds.checked;
    if (!r.within_bounds()) {
      bounds.violations.push_back(p + "a_p(f2) = " + r.f2_coefficient.get_str() +
                                  ", a_p(f4) = " + r.f4_coefficient.get_str());
    }
  }

  IdentityFamily spots{"spot_values", 0, {}};
  constexpr std::array<std::pair<std::size_t, long>, 3> kSpot{{{4, -8}, {7, 20}, {13, -70}}};
  for (const auto& [n, value] : kSpot) {
    if (n > bound) continue;
    ++spots.checked;
    if ((*s4)[n] != value) {
      spots.violations.push_back("a_" + std::to_string(n) + "(f4) = " + (*s4)[n].get_str() + ", expected " +
                                 std::to_string(value));
    }
  }

  IdentityFamily support{"support", 0, {}};
  for (const auto& [name, series] : {std::pair{"f2", &*s2}, std::pair{"f4", &*s4}}) {
    support.checked += bound;
    for (std::size_t n : support_violations(*series, bound)) {
      support.violations.push_back(std::string(name) + ": a_" + std::to_string(n) + " = " + (*series)[n].get_str());
    }
  }

  std::vector<IdentityFamily> hecke;
  for (const auto& [name, series, weight, level] :
       {std::tuple{"hecke_f2", &*s2, 2u, eta_products::kWeight2Level},
        std::tuple{"hecke_f4", &*s4, 4u, eta_products::kWeight4Level}}) {
    const HeckeReport h = hecke_check(*series, weight, level, bound);
    IdentityFamily fam{name, h.multiplicativity_checked + h.prime_power_checked, {}};
    for (const auto& v : h.violations) fam.violations.push_back(hecke_text(v));
    hecke.push_back(std::move(fam));
  }

  report.families.push_back(std::move(w2));
  report.families.push_back(std::move(w4));
  report.families.push_back(std::move(spots));
  report.families.push_back(std::move(support));
  report.families.push_back(std::move(bounds));
  for (auto& h : hecke) report.families.push_back(std::move(h));
  return report;
}

}  // namespace fermat
