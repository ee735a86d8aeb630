#include <doctest.h>

#include <numeric>

#include "fermat/varieties.hpp"
#include "oracles.hpp"

using namespace fermat;

TEST_CASE("points of E") {
  CHECK(enumerate_points(varieties::fermat_cubic(), PrimeField(2)).size() == 3);
  CHECK(enumerate_points(varieties::fermat_cubic(), PrimeField(7)).size() == 9);
  CHECK(enumerate_points(varieties::fermat_cubic(), PrimeField(13)).size() == 9);
}

TEST_CASE("enumerated projective points are normalised and distinct") {
  const PrimeField f(7);
  const auto pts = enumerate_points(varieties::fermat_cubic(), f);
  for (const auto& pt : pts) {
    const ProjectivePoint n(pt);
    CHECK(n.coordinates() == pt);
    std::size_t last = pt.size();
    while (last > 0 && pt[last - 1].value() == 0) --last;
    REQUIRE(last > 0);
    CHECK(pt[last - 1].value() == 1);
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(pts[i] != pts[j]);
}

TEST_CASE("ProjectivePoint scales the last nonzero coordinate") {
  const PrimeField f(7);
  const ProjectivePoint a({f.element(2), f.element(4), f.zero()});
  CHECK(a.coordinates()[0].value() == 4);
  CHECK(a.coordinates()[1].value() == 1);
  CHECK(ProjectivePoint({f.element(3), f.element(6), f.zero()}) == a);
  CHECK_THROWS_AS(ProjectivePoint({f.zero(), f.zero()}), std::invalid_argument);
}

TEST_CASE("count_E examples") {
  CHECK(count_E(2).projective_count == 3);
  CHECK(count_E(7).projective_count == 9);
  CHECK(count_E(13).projective_count == 9);
  CHECK_THROWS_AS(count_E(3), BadReduction);
}

TEST_CASE("cube_sum_table") {
  CHECK(cube_sum_table(2) == std::vector<std::uint64_t>{2, 2});
  // The last three primes cross the kernel's tile boundaries at 2048 and 4096.
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 31u, 97u, 2053u, 4099u, 4127u}) {
    const auto a = cube_sum_table(p);
    const auto expected = oracle::cube_sum_table(p);
    REQUIRE(a.size() == p);
    for (std::uint32_t t = 0; t < p; ++t) REQUIRE(a[t] == static_cast<std::uint64_t>(expected[t]));
    CHECK(std::accumulate(a.begin(), a.end(), std::uint64_t{0}) == std::uint64_t{p} * p);
    if (p % 3 == 2) {
      for (auto v : a) CHECK(v == p);
    }
    CHECK(cube_sum_table(p, 4) == a);
  }
}

TEST_CASE("table and brute force agree on E for every p <= 100") {
  for (std::uint32_t p = 2; p <= 100; ++p) {
    if (!is_prime(p) || p == 3) continue;
    const auto t = count_E(p, CountMethod::table);
    const auto b = count_E(p, CountMethod::brute);
    REQUIRE(t.projective_count == b.projective_count);
    REQUIRE(t.affine_cone_count == b.affine_cone_count);
    REQUIRE(t.projective_count == oracle::count_E(p));
    if (p % 3 == 2) CHECK(t.projective_count == p + 1);
    // Hasse: (p + 1 - N)^2 <= 4p.
    const mpz_class a = mpz_class(p + 1) - t.projective_count;
    CHECK(a * a <= 4 * p);
  }
}

TEST_CASE("V33 counts") {
  const auto r2 = count_V33(2);
  CHECK(*r2.affine_cone_count == 16);
  CHECK(r2.projective_count == 15);
  CHECK(count_V33(5).projective_count == 156);
  for (std::uint32_t p : {2u, 5u, 7u}) {
    const auto t = count_V33(p, CountMethod::table);
    const auto b = count_V33(p, CountMethod::brute);
    CHECK(t.projective_count == b.projective_count);
    CHECK(*t.affine_cone_count == oracle::v33_cone(p));
  }
  CHECK_THROWS_AS(count_V33(3), BadReduction);
}

TEST_CASE("V33 closed form for p = 2 mod 3") {
  // A(t) = p for every t gives N = p^4, so the projective count is p^3 + p^2 + p + 1.
  for (std::uint32_t p : {2u, 5u, 11u, 17u, 101u}) {
    const auto r = count_V33(p);
    CHECK(*r.affine_cone_count == mpz_class(p) * p * p * p);
    CHECK(r.projective_count == mpz_class(p) * p * p + p * p + p + 1);
  }
}

TEST_CASE("projective count divides exactly") {
  for (std::uint32_t p : {2u, 5u, 7u, 13u, 19u, 31u, 37u, 43u, 97u, 1009u}) {
    for (const auto& r : {count_V33(p), count_E(p)}) {
      const mpz_class cone = *r.affine_cone_count;
      CHECK((cone - 1) % (p - 1) == 0);
      CHECK((cone - 1) / (p - 1) == r.projective_count);
    }
  }
}

TEST_CASE("multithreaded table count matches single-threaded") {
  for (std::uint32_t p : {7u, 1009u, 2503u}) CHECK(count_V33(p, CountMethod::table, kDefaultBudget, 4) == count_V33(p));
}

TEST_CASE("count_E3") {
  CHECK(count_E3(2).projective_count == 27);
  CHECK(count_E3(7).projective_count == 729);
  CHECK(count_E3(13).projective_count == 729);
  CHECK_FALSE(count_E3(7).affine_cone_count.has_value());
  CHECK(count_E3(5, CountMethod::brute) == [] {
    auto r = count_E3(5, CountMethod::table);
    r.method = CountMethod::brute;
    return r;
  }());
}

TEST_CASE("budget refusal") {
  CHECK(varieties::v33().search_space(101) > kDefaultBudget);
  CHECK_THROWS_AS(count_V33(101, CountMethod::brute), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_points(varieties::v33(), PrimeField(11), 1000), BudgetExceeded);
  std::size_t visited = 0;
  CHECK_THROWS_AS(for_each_point(varieties::v33(), PrimeField(11), 1000, [&](auto) { ++visited; }), BudgetExceeded);
  CHECK(visited == 0);
  CHECK_NOTHROW(count_points_brute(varieties::fermat_cubic(), PrimeField(11), 2000));
}

TEST_CASE("affine patches") {
  // x^3 + y^3 + 1 = 0 over F_7: #E minus the 3 points at X2 = 0.
  CHECK(count_points_brute(varieties::fermat_cubic_patch(), PrimeField(7)) == 6);
  CHECK(count_points_brute(varieties::e3_patch(), PrimeField(7)) == 216);
}

TEST_CASE("projective specs must be homogeneous") {
  const RingPtr& r = rings::p2();
  CHECK_THROWS_AS(VarietySpec::projective("bad", r, {parse_poly(r, "X0^3 + X1")}), std::invalid_argument);
  CHECK_NOTHROW(VarietySpec::affine("ok", r, {parse_poly(r, "X0^3 + X1")}));
}

TEST_CASE("count method names") {
  CHECK(to_string(CountMethod::table) == "table");
  CHECK(parse_count_method("brute") == CountMethod::brute);
  CHECK_THROWS_AS(parse_count_method("fast"), std::invalid_argument);
}
