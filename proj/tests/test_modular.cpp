#include <doctest.h>

#include "fermat/identities.hpp"
#include "fermat/modular.hpp"
#include "fermat/varieties.hpp"
#include "oracles.hpp"

using namespace fermat;

namespace {

std::vector<std::pair<int, int>> factors_of(const EtaProductSpec& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : s.factors()) out.emplace_back(static_cast<int>(f.scale), f.exponent);
  return out;
}

}  // namespace

TEST_CASE("eta expansion examples") {
  const auto f4 = eta_expand(eta_products::weight4(), 100);
  CHECK(f4[1] == 1);
  CHECK(f4[4] == -8);
  CHECK(f4[7] == 20);
  CHECK(f4[13] == -70);
  CHECK(f4[2] == 0);
  const auto f2 = eta_expand(eta_products::weight2(), 100);
  CHECK(f2[1] == 1);
  CHECK(f2[7] == -1);
  CHECK(f2[13] == 5);
  CHECK_THROWS_AS(f2[0], std::out_of_range);
  CHECK_THROWS_AS(f2[101], std::out_of_range);
}

TEST_CASE("eta expansion matches direct convolution") {
  const int bound = 300;
  for (const auto* spec : {&eta_products::weight4(), &eta_products::weight2()}) {
    const auto s = eta_expand(*spec, bound);
    const auto o = oracle::eta_coefficients(factors_of(*spec), 1, bound);
    for (int n = 1; n <= bound; ++n) REQUIRE(s[n] == o[n]);
  }
  const auto g = parse_eta_spec("1^12*2^12");  // leading power 36/24
  CHECK_THROWS_AS(eta_expand(g, 10), std::domain_error);
  const auto h = parse_eta_spec("1^24");
  const auto delta = eta_expand(h, 10);
  CHECK(delta[1] == 1);
  CHECK(delta[2] == -24);
  CHECK(delta[3] == 252);
  CHECK(delta[4] == -1472);
}

TEST_CASE("negative exponents divide") {
  // eta(tau)^-1 eta(tau)^25 = Delta.
  const auto a = eta_expand(EtaProductSpec({{1, 25}, {1, -1}}), 40);
  const auto b = eta_expand(parse_eta_spec("1^24"), 40);
  for (int n = 1; n <= 40; ++n) REQUIRE(a[n] == b[n]);
}

TEST_CASE("support on n = 1 mod 3") {
  for (const auto* spec : {&eta_products::weight4(), &eta_products::weight2()}) {
    const auto s = eta_expand(*spec, 1000);
    CHECK(support_violations(s, 1000).empty());
    for (std::size_t n = 1; n <= 1000; ++n)
      if (n % 3 != 1) REQUIRE(s[n] == 0);
  }
  CHECK(support_violations(eta_expand(parse_eta_spec("1^24"), 10), 10) == std::vector<std::size_t>{2, 3, 5, 6, 8, 9});
}

TEST_CASE("eta spec parsing") {
  CHECK(parse_eta_spec("3^8") == eta_products::weight4());
  CHECK(parse_eta_spec("3^2*9^2") == eta_products::weight2());
  CHECK(parse_eta_spec("3^2 * 9^2") == eta_products::weight2());
  CHECK(parse_eta_spec("2").factors() == std::vector<EtaFactor>{{2, 1}});
  CHECK(parse_eta_spec("1^-1").factors() == std::vector<EtaFactor>{{1, -1}});
  CHECK(eta_products::weight2().to_string() == "3^2*9^2");
  CHECK(eta_products::weight4().weight() == 4);
  CHECK(eta_products::weight2().weight() == 2);
  CHECK(eta_products::weight4().leading_power() == 1);
  CHECK(eta_products::weight2().leading_power() == 1);
  CHECK_THROWS_AS(parse_eta_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("3^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("0^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("3^8x"), std::invalid_argument);
}

TEST_CASE("cm_decompose examples") {
  const auto d7 = cm_decompose(7);
  CHECK(std::abs(d7.L) == 1);
  CHECK(d7.M == 1);
  const auto d13 = cm_decompose(13);
  CHECK(std::abs(d13.L) == 5);
  CHECK(d13.M == 1);
  const auto d31 = cm_decompose(31);
  CHECK(std::abs(d31.L) == 4);
  CHECK(d31.M == 2);
  CHECK_THROWS_AS(cm_decompose(5), std::domain_error);
  CHECK_THROWS_AS(cm_decompose(3), std::domain_error);
  CHECK_THROWS_AS(cm_decompose(91), std::domain_error);
}

TEST_CASE("cm_decompose for every split prime below 10^4") {
  for (auto p : primes_in_range(2, 10000)) {
    if (p % 3 != 1) continue;
    const auto d = cm_decompose(p);
    REQUIRE(d.L * d.L + 27 * d.M * d.M == 4 * static_cast<std::int64_t>(p));
    REQUIRE(d.M > 0);
    REQUIRE(((d.L % 3) + 3) % 3 == kTraceResidueMod3);
  }
}

TEST_CASE("sign calibration against point counts") {
  // #E(F_7) = 9 by enumeration, so the trace at 7 is -1.
  CHECK(enumerate_points(varieties::fermat_cubic(), PrimeField(7)).size() == 9);
  CHECK(ap_weight2(7) == -1);
  CHECK(((ap_weight2(7) % 3) + 3) % 3 == kTraceResidueMod3);
}

TEST_CASE("ap examples") {
  CHECK(ap_weight2(2) == 0);
  CHECK(ap_weight2(7) == -1);
  CHECK(ap_weight2(13) == 5);
  CHECK(ap_weight4(7) == 20);
  CHECK(ap_weight4(13) == -70);
  CHECK(ap_weight4(2) == 0);
  CHECK_THROWS_AS(ap_weight2(3), BadReduction);
  CHECK_THROWS_AS(ap_weight4(3), BadReduction);
}

TEST_CASE("Hecke examples") {
  const auto f4 = eta_expand(eta_products::weight4(), 100);
  CHECK(f4[4] == f4[2] * f4[2] - 8);
  CHECK(f4[28] == -160);
  CHECK(f4[28] == f4[4] * f4[7]);
  const auto f2 = eta_expand(eta_products::weight2(), 100);
  CHECK(f2[49] == -6);
  CHECK(f2[49] == f2[7] * f2[7] - 7);
}

TEST_CASE("Hecke relations hold to 1000") {
  const auto f4 = eta_expand(eta_products::weight4(), 1000);
  const auto r4 = hecke_check(f4, 4, eta_products::kWeight4Level, 1000);
  CHECK(r4.ok());
  CHECK(r4.multiplicativity_checked > 0);
  CHECK(r4.prime_power_checked > 0);
  const auto f2 = eta_expand(eta_products::weight2(), 1000);
  CHECK(hecke_check(f2, 2, eta_products::kWeight2Level, 1000).ok());
}

TEST_CASE("Hecke check reports a planted violation") {
  const auto f2 = eta_expand(eta_products::weight2(), 200);
  std::vector<mpz_class> c;
  for (std::size_t n = 1; n <= 200; ++n) c.push_back(f2[n]);
  c[91 - 1] += 1;  // a_91 = a_7 a_13
  const auto r = hecke_check(QSeries(c), 2, eta_products::kWeight2Level, 200);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    found = found || (v.kind == HeckeViolation::Kind::multiplicativity && v.m * v.n == 91);
  CHECK(found);
  // A wrong weight breaks the prime-power recursion.
  CHECK_FALSE(hecke_check(f2, 4, eta_products::kWeight2Level, 200).ok());
}

TEST_CASE("Weil bounds") {
  CHECK(within_weil_bound(mpz_class(5), 13, 2));
  CHECK_FALSE(within_weil_bound(mpz_class(8), 13, 2));
  CHECK(within_weil_bound(mpz_class(-70), 13, 4));
  // 4 * 13^3 = 8788 sits between 93^2 and 94^2.
  CHECK(within_weil_bound(mpz_class(93), 13, 4));
  CHECK(within_weil_bound(mpz_class(-93), 13, 4));
  CHECK_FALSE(within_weil_bound(mpz_class(94), 13, 4));
  for (auto p : primes_in_range(2, 1000)) {
    if (p == 3) continue;
    REQUIRE(within_weil_bound(mpz_class(ap_weight2(p)), p, 2));
    REQUIRE(within_weil_bound(ap_weight4(p), p, 4));
  }
}
