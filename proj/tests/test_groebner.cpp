#include <doctest.h>

#include <random>

#include "fermat/certificate.hpp"
#include "fermat/groebner.hpp"

using namespace fermat;

namespace {

const RingPtr& xyz() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}

MultiPoly P(const RingPtr& r, const char* s) { return parse_poly(r, s); }

std::vector<std::string> gens_text(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(g.to_string());
  return out;
}

MultiPoly random_poly(std::mt19937_64& rng, const RingPtr& ring, int terms, int max_exp) {
  MultiPoly f(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) m[i] = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    f.add_term(m, mpz_class(static_cast<long>(rng() % 11) - 5));
  }
  return f;
}

}  // namespace

TEST_CASE("principal ideal") {
  const auto gb = buchberger({P(xyz(), "x - 1")});
  CHECK(gens_text(gb) == std::vector<std::string>{"x - 1"});
  CHECK(gb.is_groebner());
  CHECK(gb.is_reduced());
}

TEST_CASE("monomial ideal x^2, xy") {
  const auto gb = buchberger({P(xyz(), "x^2"), P(xyz(), "x*y")});
  CHECK(gens_text(gb) == std::vector<std::string>{"x^2", "x*y"});
  CHECK(gb.contains(P(xyz(), "x^3*y + x^2*z")));
  CHECK_FALSE(gb.contains(P(xyz(), "x*z")));
}

TEST_CASE("output is monic and reduced") {
  const auto gb = buchberger({P(xyz(), "2*x^2 - 4*y"), P(xyz(), "3*x*y - 3"), P(xyz(), "x + y + z")});
  CHECK(gb.is_groebner());
  CHECK(gb.is_reduced());
  for (const auto& g : gb.generators()) CHECK(g.leading().second == 1);
  for (const auto& f : gb.source_ideal()) CHECK(gb.contains(f));
}

TEST_CASE("the unit ideal collapses to 1") {
  const auto gb = buchberger({P(xyz(), "x*y - 1"), P(xyz(), "x")});
  CHECK(gens_text(gb) == std::vector<std::string>{"1"});
  CHECK(gb.contains(P(xyz(), "z^5 + 7")));
}

TEST_CASE("textbook basis: twisted cubic under lex") {
  // (y - x^2, z - x^3) under lex z > y > x has reduced basis {z - x^3, y - x^2}.
  const MonomialOrder lex(MonomialOrder::Kind::lex, std::vector<std::size_t>{2, 1, 0});
  const auto gb = buchberger({P(xyz(), "y - x^2"), P(xyz(), "z - x^3")}, lex);
  CHECK(gens_text(gb) == std::vector<std::string>{"-x^3 + z", "-x^2 + y"});
  CHECK(gb.contains(P(xyz(), "y^3 - z^2")));
  CHECK(gb.contains(P(xyz(), "x*z - y^2")));
}

TEST_CASE("three disjoint Fermat cubics form a basis already") {
  const auto& gb = e3_patch_basis();
  CHECK(gens_text(gb) ==
        std::vector<std::string>{"x1^3 + y1^3 + 1", "x2^3 + y2^3 + 1", "x3^3 + y3^3 + 1"});
  CHECK(gb.stats().skipped_coprime == 3);
  CHECK(gb.is_groebner());
  CHECK(gb.is_reduced());
}

TEST_CASE("normal_form examples") {
  const auto& gb = e3_patch_basis();
  const RingPtr& r = rings::e3_patch();
  CHECK(gb.normal_form(P(r, "x1^3 + y1^3 + 1")).is_zero());
  CHECK(gb.normal_form(P(r, "x1")) == to_rational(P(r, "x1")));
  const auto pulled = pullback(fermat_map(), P(rings::v33_patch(), "X0^3 + X1^3 + X2^3 + 1"));
  CHECK(pulled == P(r, "-x1^3*y3^3 - y1^3*y3^3 + x3^3 + 1"));
  CHECK(gb.normal_form(pulled).is_zero());
  // x1^3 reduces to -y1^3 - 1.
  CHECK(gb.normal_form(P(r, "x1^4")) == to_rational(P(r, "-x1*y1^3 - x1")));
}

TEST_CASE("map certificate") {
  const auto cert = verify_map_well_defined();
  REQUIRE(cert.checks.size() == 2);
  CHECK(cert.passed());
  for (const auto& c : cert.checks) {
    CHECK(c.member);
    CHECK(c.normal_form == "0");
  }
  CHECK(cert.checks[0].generator == "X0^3 + X1^3 + X2^3 + 1");
  CHECK(cert.checks[1].generator == "X2^3 + X4^3 + X5^3 + 1");
}

TEST_CASE("perturbed generator is not a member") {
  const auto pulled = pullback(fermat_map(), P(rings::v33_patch(), "X0^3 + X1^3 + X2^3 + 2"));
  const auto check = patch_membership("perturbed", pulled);
  CHECK_FALSE(check.member);
  CHECK(check.normal_form == "1");
}

TEST_CASE("degree relation") {
  const auto cert = verify_degree_relation();
  REQUIRE(cert.checks.size() == 1);
  CHECK(cert.passed());
  const RingPtr& r = rings::e3_patch();
  CHECK_FALSE(patch_membership("a", P(r, "y3^2 + x3^3 + 1")).member);
  const auto shifted = patch_membership("b", P(r, "y3^3 + x3^3 + 2"));
  CHECK_FALSE(shifted.member);
  CHECK(shifted.normal_form == "1");
}

TEST_CASE("a corrupted map fails the certificate") {
  const auto bad = fermat_map().with_assignment("X1", P(rings::e3_patch(), "y1*y3"));
  const auto cert = verify_map_well_defined(bad);
  CHECK_FALSE(cert.passed());
  CHECK_FALSE(cert.checks[0].member);
  CHECK(cert.checks[1].member);
  CHECK_FALSE(verify_degree_relation(fermat_map().with_assignment("X2", P(rings::e3_patch(), "-x3"))).passed());
}

TEST_CASE("random ideal combinations reduce to zero") {
  std::mt19937_64 rng(314);
  const auto& gb = e3_patch_basis();
  const RingPtr& r = rings::e3_patch();
  const std::vector<MultiPoly> g{P(r, "x1^3 + y1^3 + 1"), P(r, "x2^3 + y2^3 + 1"), P(r, "x3^3 + y3^3 + 1")};
  for (int i = 0; i < 40; ++i) {
    MultiPoly f(r);
    for (const auto& gi : g) f += random_poly(rng, r, 3, 2) * gi;
    REQUIRE(gb.contains(f));
    // Shifting by a constant always leaves the ideal.
    REQUIRE_FALSE(gb.contains(f + MultiPoly::constant(r, 1)));
  }
}

TEST_CASE("normal form is linear") {
  std::mt19937_64 rng(271);
  const auto gb = buchberger({P(xyz(), "x^2 - y*z"), P(xyz(), "y^2 - x*z + 1")});
  for (int i = 0; i < 40; ++i) {
    const auto f = random_poly(rng, xyz(), 4, 3);
    const auto g = random_poly(rng, xyz(), 4, 3);
    REQUIRE(gb.normal_form(f + g) == gb.normal_form(f) + gb.normal_form(g));
    REQUIRE(gb.normal_form(gb.normal_form(f)) == gb.normal_form(f));
  }
}

TEST_CASE("grevlex and lex bases generate the same ideal") {
  const std::vector<std::vector<const char*>> ideals{
      {"x^2 - y", "x*y - z"},
      {"x^2 + y^2 - 1", "x - y"},
      {"x*y - z^2", "y^2 - x*z", "x^2*y - z"},
  };
  for (const auto& texts : ideals) {
    std::vector<MultiPoly> gens;
    for (const char* t : texts) gens.push_back(P(xyz(), t));
    const auto a = buchberger(gens, MonomialOrder::grevlex(*xyz()));
    const auto b = buchberger(gens, MonomialOrder::lex(*xyz()));
    CHECK(a.is_groebner());
    CHECK(b.is_groebner());
    CHECK(a.is_reduced());
    CHECK(b.is_reduced());
    for (const auto& g : a.generators()) CHECK(b.contains(g));
    for (const auto& g : b.generators()) CHECK(a.contains(g));
  }
}

TEST_CASE("homogeneous E^3 ideal is a basis as given") {
  const auto& gb = e3_homogeneous_basis();
  CHECK(gb.generators().size() == 3);
  CHECK(gb.is_reduced());
}

TEST_CASE("monomial orders") {
  const MonomialOrder g = MonomialOrder::grevlex(*xyz());
  const MonomialOrder l = MonomialOrder::lex(*xyz());
  const Monomial xz2({1, 0, 2});
  const Monomial y2({0, 2, 0});
  const Monomial x2({2, 0, 0});
  CHECK(g.greater(xz2, x2));  // degree first
  CHECK(l.greater(x2, xz2));
  CHECK(l.greater(Monomial({1, 0, 0}), y2));
  CHECK(g.compare(y2, y2) == std::strong_ordering::equal);
  CHECK_THROWS_AS(buchberger(std::vector<MultiPoly>{}), std::invalid_argument);
}
