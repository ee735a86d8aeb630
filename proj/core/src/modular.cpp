#include "fermat/modular.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fermat/finite_field.hpp"

namespace fermat {

EtaProductSpec::EtaProductSpec(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("eta product with no factors");
  for (const auto& f : factors_) {
    if (f.scale == 0) throw std::invalid_argument("eta factor with scale 0");
  }
}

mpq_class EtaProductSpec::leading_power() const {
  mpz_class sum = 0;
  for (const auto& f : factors_) sum += mpz_class(f.scale) * f.exponent;
  mpq_class q(sum, 24);
  q.canonicalize();
  return q;
}

mpq_class EtaProductSpec::weight() const {
  mpz_class sum = 0;
  for (const auto& f : factors_) sum += f.exponent;
  mpq_class q(sum, 2);
  q.canonicalize();
  return q;
}

std::string EtaProductSpec::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    out += std::to_string(f.scale) + '^' + std::to_string(f.exponent);
  }
  return out;
}

EtaProductSpec parse_eta_spec(std::string_view raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  std::vector<EtaFactor> factors;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("eta spec \"" + std::string(raw) + "\": " + msg);
  };
  if (text.empty()) fail("empty");
  auto read_int = [&](bool allow_sign) -> long long {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected an integer");
    return std::stoll(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    const long long scale = read_int(false);
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = read_int(true);
    }
    if (scale <= 0 || scale > 1'000'000) fail("scale out of range");
    if (exponent < -1000 || exponent > 1000) fail("exponent out of range");
    factors.push_back({static_cast<std::uint32_t>(scale), static_cast<std::int32_t>(exponent)});
    if (pos < text.size()) {
      if (text[pos] != '*') fail("expected '*'");
      ++pos;
      if (pos == text.size()) fail("trailing '*'");
    }
  }
  return EtaProductSpec(std::move(factors));
}

namespace eta_products {

const EtaProductSpec& weight4() {
  static const EtaProductSpec s({{3, 8}});
  return s;
}

const EtaProductSpec& weight2() {
  static const EtaProductSpec s({{3, 2}, {9, 2}});
  return s;
}

}  // namespace eta_products

QSeries::QSeries(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {}

const mpz_class& QSeries::operator[](std::size_t n) const {
  if (n == 0 || n > coeffs_.size()) {
    throw std::out_of_range("coefficient a_" + std::to_string(n) + " outside 1.." + std::to_string(coeffs_.size()));
  }
  return coeffs_[n - 1];
}

QSeries eta_expand(const EtaProductSpec& spec, std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("eta_expand: bound must be positive");
  const mpq_class lead = spec.leading_power();
  if (lead.get_den() != 1 || lead <= 0) {
    throw std::domain_error("eta product " + spec.to_string() + " has leading power q^" + lead.get_str() +
                            ", not a positive integer");
  }
  const std::size_t shift = lead.get_num().get_ui();
  // series[k] is the coefficient of q^k in the infinite product.
  std::vector<mpz_class> series(bound + 1, 0);
  series[0] = 1;
  for (const auto& f : spec.factors()) {
    for (std::size_t m = f.scale; m <= bound; m += f.scale) {
      if (f.exponent >= 0) {
        for (std::int32_t k = 0; k < f.exponent; ++k) {
          // multiply by (1 - q^m)
          for (std::size_t i = bound; i >= m; --i) series[i] -= series[i - m];
        }
      } else {
        for (std::int32_t k = 0; k < -f.exponent; ++k) {
          // divide by (1 - q^m)
          for (std::size_t i = m; i <= bound; ++i) series[i] += series[i - m];
        }
      }
    }
  }
  std::vector<mpz_class> coeffs(bound, 0);
  for (std::size_t n = shift; n <= bound; ++n) coeffs[n - 1] = series[n - shift];
  return QSeries(std::move(coeffs));
}

CMDecomposition cm_decompose(std::uint32_t p) {
  if (!is_prime(p) || p % 3 != 1) {
    throw std::domain_error("cm_decompose needs a prime p = 1 mod 3, got " + std::to_string(p));
  }
  const std::int64_t four_p = 4 * static_cast<std::int64_t>(p);
  for (std::int64_t M = 1; 27 * M * M <= four_p; ++M) {
    const std::int64_t rest = four_p - 27 * M * M;
    auto L = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (L * L > rest) --L;
    while ((L + 1) * (L + 1) <= rest) ++L;
    if (L * L != rest) continue;
    // Exactly one of +-L lies in the calibrated class, as 3 does not divide L.
    if (((L % 3) + 3) % 3 != kTraceResidueMod3) L = -L;
    return {p, L, M};
  }
  throw std::logic_error("no representation 4p = L^2 + 27M^2 for p = " + std::to_string(p));
}

std::int64_t ap_weight2(std::uint32_t p) {
  if (p == 3) throw BadReduction("a_3 requested; 3 is a prime of bad reduction");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p % 3 != 1) return 0;
  return cm_decompose(p).L;
}

mpz_class ap_weight4(std::uint32_t p) {
  const mpz_class t = ap_weight2(p);
  return t * t * t - 3 * mpz_class(p) * t;
}

namespace {

std::vector<std::size_t> primes_up_to(std::size_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::size_t> out;
  for (std::size_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

HeckeReport hecke_check(const QSeries& series, unsigned weight, std::uint64_t level, std::size_t bound) {
  if (bound > series.bound()) throw std::invalid_argument("hecke_check: series is truncated below the bound");
  if (weight == 0) throw std::invalid_argument("hecke_check: weight must be positive");
  HeckeReport report;
  for (std::size_t m = 2; m * m < bound; ++m) {
    for (std::size_t n = m + 1; m * n <= bound; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++report.multiplicativity_checked;
      const mpz_class expected = series[m] * series[n];
      if (series[m * n] != expected) {
        report.violations.push_back({HeckeViolation::Kind::multiplicativity, m, n, expected, series[m * n]});
      }
    }
  }
  for (std::size_t p : primes_up_to(bound)) {
    const bool bad = level % p == 0;
    mpz_class p_pow;
    mpz_ui_pow_ui(p_pow.get_mpz_t(), p, weight - 1);
    // prev = a_{p^{r-1}}, cur = a_{p^r}
    mpz_class prev = 1;
    mpz_class cur = series[p];
    std::size_t r = 1;
    for (std::size_t q = p * p; q <= bound; q *= p) {
      ++r;
      mpz_class expected = series[p] * cur;
      if (!bad) expected -= p_pow * prev;
      ++report.prime_power_checked;
      if (series[q] != expected) {
        report.violations.push_back({HeckeViolation::Kind::prime_power, p, r, expected, series[q]});
      }
      prev = cur;
      cur = series[q];
      if (q > bound / p) break;
    }
  }
  return report;
}

std::vector<std::size_t> support_violations(const QSeries& series, std::size_t bound) {
  if (bound > series.bound()) throw std::invalid_argument("support_violations: series is truncated below the bound");
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (n % 3 != 1 && series[n] != 0) out.push_back(n);
  }
  return out;
}

bool within_weil_bound(const mpz_class& ap, std::uint32_t p, unsigned weight) {
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), p, weight - 1);
  rhs *= 4;
  return ap * ap <= rhs;
}

}  // namespace fermat
