#pragma once

#include <compare>
#include <vector>

#include "fermat/polynomial.hpp"

namespace fermat {

// A monomial order over a ring's variables. `priority` lists variable
// indices from most to least significant; the default is the ring's own
// declaration order.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex };

  MonomialOrder(Kind kind, std::size_t nvars);
  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  static MonomialOrder grevlex(const Ring& r) { return MonomialOrder(Kind::grevlex, r.size()); }
  static MonomialOrder lex(const Ring& r) { return MonomialOrder(Kind::lex, r.size()); }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis over Q. Generators are monic and sorted by leading
// monomial, largest first.
class GroebnerBasis {
 public:
  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<RationalPoly>& generators() const { return generators_; }
  const std::vector<MultiPoly>& source_ideal() const { return source_; }
  const BuchbergerStats& stats() const { return stats_; }

  // Remainder of f on full division by the basis; zero iff f is in the ideal.
  RationalPoly normal_form(const RationalPoly& f) const;
  RationalPoly normal_form(const MultiPoly& f) const { return normal_form(to_rational(f)); }
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }
  bool contains(const RationalPoly& f) const { return normal_form(f).is_zero(); }

  // Every S-polynomial of generator pairs reduces to zero.
  bool is_groebner() const;
  // No term of any generator is divisible by another generator's leading monomial.
  bool is_reduced() const;

 private:
  friend GroebnerBasis buchberger(const std::vector<MultiPoly>&, const MonomialOrder&);

  GroebnerBasis(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<RationalPoly> generators_;
  std::vector<MultiPoly> source_;
  BuchbergerStats stats_;
};

// Buchberger's algorithm with the normal selection strategy and both of
// Buchberger's criteria. Ties between pairs of equal lcm degree break on
// generator indices, so output is deterministic.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order);

inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  return buchberger(gens, MonomialOrder::grevlex(*gens.front().ring()));
}

// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const RationalPoly& f, const MonomialOrder& order);

}  // namespace fermat
