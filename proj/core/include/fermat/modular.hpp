#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fermat {

struct EtaFactor {
  std::uint32_t scale;  // a in eta(a*tau)
  std::int32_t exponent;

  bool operator==(const EtaFactor&) const = default;
};

// prod eta(a_i tau)^{e_i}.
class EtaProductSpec {
 public:
  explicit EtaProductSpec(std::vector<EtaFactor> factors);

  const std::vector<EtaFactor>& factors() const { return factors_; }
  // sum a_i e_i / 24.
  mpq_class leading_power() const;
  // sum e_i / 2; only meaningful when the sum is even.
  mpq_class weight() const;
  // "3^2*9^2" style text, the inverse of parse_eta_spec.
  std::string to_string() const;

  bool operator==(const EtaProductSpec&) const = default;

 private:
  std::vector<EtaFactor> factors_;
};

// Parses "3^8" or "3^2*9^2"; a bare scale means exponent 1.
EtaProductSpec parse_eta_spec(std::string_view text);

namespace eta_products {
// eta(3 tau)^8: weight 4, level 9.
const EtaProductSpec& weight4();
// eta(3 tau)^2 eta(9 tau)^2: weight 2, level 27, the form of the Fermat cubic.
const EtaProductSpec& weight2();
inline constexpr std::uint64_t kWeight4Level = 9;
inline constexpr std::uint64_t kWeight2Level = 27;
}  // namespace eta_products

// Exact coefficients a_1..a_N of a q-expansion.
class QSeries {
 public:
  explicit QSeries(std::vector<mpz_class> coefficients);  // index 0 holds a_1

  std::size_t bound() const { return coeffs_.size(); }
  // 1 <= n <= bound(); throws std::out_of_range otherwise.
  const mpz_class& operator[](std::size_t n) const;

 private:
  std::vector<mpz_class> coeffs_;
};

// q^L prod_i prod_{n>=1} (1 - q^{a_i n})^{e_i}, truncated at q^N.
// Throws std::domain_error unless L is a positive integer.
QSeries eta_expand(const EtaProductSpec& spec, std::size_t bound);

// 4p = L^2 + 27 M^2 for a split prime, with M > 0 and L in the residue
// class fixed by kTraceResidueMod3.
struct CMDecomposition {
  std::uint32_t p;
  std::int64_t L;
  std::int64_t M;
};

// Residue of a_p(E) = p + 1 - #E(F_p) mod 3 at every split prime. Calibrated
// at p = 7, where #E(F_7) = 9 gives a_7 = -1.
inline constexpr int kTraceResidueMod3 = 2;

// Throws std::domain_error unless p is a prime with p = 1 mod 3.
CMDecomposition cm_decompose(std::uint32_t p);

// Trace of Frobenius of the Fermat cubic. Refuses p = 3.
std::int64_t ap_weight2(std::uint32_t p);

// p-th coefficient of the weight-4 CM form: t^3 - 3pt for t = ap_weight2(p).
// Refuses p = 3.
mpz_class ap_weight4(std::uint32_t p);

struct HeckeViolation {
  enum class Kind { multiplicativity, prime_power };
  Kind kind;
  std::size_t m;  // for prime_power: the prime
  std::size_t n;  // for prime_power: the exponent r of a_{p^r}
  mpz_class expected;
  mpz_class actual;
};

struct HeckeReport {
  std::size_t multiplicativity_checked = 0;
  std::size_t prime_power_checked = 0;
  std::vector<HeckeViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks a_{mn} = a_m a_n for coprime m, n with mn <= bound, and
//   a_{p^{r+1}} = a_p a_{p^r} - p^{k-1} a_{p^{r-1}}   (p not dividing level)
//   a_{p^{r+1}} = a_p a_{p^r}                          (p dividing level)
// for p^{r+1} <= bound.
HeckeReport hecke_check(const QSeries& series, unsigned weight, std::uint64_t level, std::size_t bound);

// Indices n <= bound with n != 1 mod 3 and a_n != 0.
std::vector<std::size_t> support_violations(const QSeries& series, std::size_t bound);

// |a_p| <= 2 p^{(k-1)/2}, compared exactly as a_p^2 <= 4 p^{k-1}.
bool within_weil_bound(const mpz_class& ap, std::uint32_t p, unsigned weight);

}  // namespace fermat
