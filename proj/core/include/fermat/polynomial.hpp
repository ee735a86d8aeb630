#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/finite_field.hpp"

namespace fermat {

// An ordered, fixed set of variable names. Polynomials only combine when
// their rings declare the same variables in the same order.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

// Coordinate rings used throughout the library.
namespace rings {
// x1, y1, x2, y2, x3, y3: the E^3 patch where X2 != 0 on every factor.
const RingPtr& e3_patch();
// X0, X1, X2, X4, X5: the V33 patch X3 = 1.
const RingPtr& v33_patch();
// x1, y1, z1, x2, y2, z2, x3, y3, z3: homogeneous coordinates on (P^2)^3.
const RingPtr& e3_homogeneous();
// X0, ..., X5: homogeneous coordinates on P^5.
const RingPtr& p5();
// X0, X1, X2: homogeneous coordinates on P^2.
const RingPtr& p2();
}  // namespace rings

// Dense exponent vector indexed by the ring's variable order. Zero entries
// stand for absent variables, so equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  // Requires divides(*this) by o.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// Strict "a comes before b" for graded reverse lexicographic order, largest first.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

template <typename Coeff>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, Coeff, GrevlexGreater>;

  explicit BasicPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static BasicPoly constant(RingPtr ring, const Coeff& c);
  static BasicPoly variable(RingPtr ring, std::string_view name);
  static BasicPoly term(RingPtr ring, Monomial m, const Coeff& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  // Largest grevlex term; requires a nonzero polynomial.
  const std::pair<const Monomial, Coeff>& leading() const { return *terms_.begin(); }
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  Coeff constant_term() const;

  // Adds c * m, dropping the term if the sum vanishes.
  void add_term(const Monomial& m, const Coeff& c);

  BasicPoly& operator+=(const BasicPoly& o);
  BasicPoly& operator-=(const BasicPoly& o);
  BasicPoly operator+(const BasicPoly& o) const;
  BasicPoly operator-(const BasicPoly& o) const;
  BasicPoly operator*(const BasicPoly& o) const;
  BasicPoly operator-() const;
  BasicPoly scaled(const Coeff& c) const;
  BasicPoly pow(unsigned n) const;

  bool operator==(const BasicPoly& o) const { return *ring_ == *o.ring_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void require_same_ring(const BasicPoly& o) const;

  RingPtr ring_;
  Terms terms_;
};

using MultiPoly = BasicPoly<mpz_class>;
using RationalPoly = BasicPoly<mpq_class>;

extern template class BasicPoly<mpz_class>;
extern template class BasicPoly<mpq_class>;

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const BasicPoly<Coeff>& f) {
  return os << f.to_string();
}

RationalPoly to_rational(const MultiPoly& f);
// Nullopt when some coefficient is not an integer.
std::optional<MultiPoly> to_integral(const RationalPoly& f);

// Plain-text syntax: sums of products of integers (or a/b for the rational
// variant), variables, powers with ^, and parenthesised subexpressions,
// e.g. "-x1^3*y3 + 2". Throws std::invalid_argument on malformed input or
// names outside the ring.
MultiPoly parse_poly(const RingPtr& ring, std::string_view text);
RationalPoly parse_rational_poly(const RingPtr& ring, std::string_view text);

// A ring homomorphism given by images of the target ring's variables in the
// source ring. Pulling back a polynomial on the target substitutes them.
class MapSpec {
 public:
  MapSpec(RingPtr source, RingPtr target, std::map<std::string, MultiPoly> assignments);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::map<std::string, MultiPoly>& assignments() const { return assignments_; }
  const MultiPoly& image(std::string_view target_var) const;
  bool is_complete() const;
  // Names of target variables that have no assignment.
  std::vector<std::string> unassigned() const;

  MapSpec with_assignment(const std::string& target_var, MultiPoly image) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::map<std::string, MultiPoly> assignments_;
};

// Throws std::invalid_argument naming the first variable of f with no assignment.
MultiPoly pullback(const MapSpec& m, const MultiPoly& f);

// Values aligned with the ring's variable order.
FieldElement eval_mod_p(const MultiPoly& f, std::span<const FieldElement> point, const PrimeField& field);
FieldElement eval_mod_p(const MultiPoly& f, const std::map<std::string, FieldElement>& point,
                        const PrimeField& field);

// f with coefficients reduced mod p, flattened for fast repeated evaluation
// on raw residues. Used by the enumeration kernels.
class ReducedPoly {
 public:
  ReducedPoly(const MultiPoly& f, const PrimeField& field);

  std::uint32_t operator()(std::span<const std::uint32_t> point) const;
  std::size_t num_vars() const { return nvars_; }

 private:
  struct Term {
    std::uint32_t coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (var, exponent)
  };
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace fermat
