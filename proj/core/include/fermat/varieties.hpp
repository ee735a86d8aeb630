#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermat/finite_field.hpp"
#include "fermat/polynomial.hpp"

namespace fermat {

// Raised instead of returning a partial answer when a search would exceed
// its tuple budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct VarietySpec {
  enum class Kind { projective, affine };

  std::string name;
  Kind kind;
  RingPtr ring;
  std::vector<MultiPoly> equations;

  // Throws std::invalid_argument if an equation is not homogeneous.
  static VarietySpec projective(std::string name, RingPtr ring, std::vector<MultiPoly> equations);
  static VarietySpec affine(std::string name, RingPtr ring, std::vector<MultiPoly> equations);

  // Number of coordinate tuples enumerate_points visits; saturates at UINT64_MAX.
  std::uint64_t search_space(std::uint32_t p) const;
};

namespace varieties {
// E: X0^3 + X1^3 + X2^3 = 0 in P^2.
const VarietySpec& fermat_cubic();
// V33: the two cubics X0^3+X1^3+X2^3+X3^3 and X2^3+X3^3+X4^3+X5^3 in P^5.
const VarietySpec& v33();
// V33 on X3 = 1, coordinates (X0, X1, X2, X4, X5).
const VarietySpec& v33_patch();
// E^3 on X2 = 1 in every factor, coordinates (x1, y1, x2, y2, x3, y3).
const VarietySpec& e3_patch();
// One factor of the E^3 patch: x^3 + y^3 + 1 in coordinates (x1, y1).
const VarietySpec& fermat_cubic_patch();
}  // namespace varieties

// Coordinates over F_p stored with the last nonzero entry scaled to 1.
class ProjectivePoint {
 public:
  // Throws std::invalid_argument on the all-zero tuple.
  explicit ProjectivePoint(std::vector<FieldElement> coords);

  const std::vector<FieldElement>& coordinates() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  bool operator==(const ProjectivePoint&) const = default;

 private:
  std::vector<FieldElement> coords_;
};

using AffinePoint = std::vector<FieldElement>;

// Visits every solution as raw residues (normalised for projective specs).
// Throws BudgetExceeded before doing any work if the search is too large.
void for_each_point(const VarietySpec& v, const PrimeField& field, std::uint64_t budget,
                    const std::function<void(std::span<const std::uint32_t>)>& visit);

// All F_p-points. Projective specs yield normalised representatives.
std::vector<AffinePoint> enumerate_points(const VarietySpec& v, const PrimeField& field,
                                          std::uint64_t budget = kDefaultBudget);

std::uint64_t count_points_brute(const VarietySpec& v, const PrimeField& field,
                                 std::uint64_t budget = kDefaultBudget);

// A(t) = #{(u, v) in F_p^2 : u^3 + v^3 = t}, indexed by t in [0, p).
// The build splits the u range across `threads` workers.
std::vector<std::uint64_t> cube_sum_table(std::uint32_t p, unsigned threads = 1);

enum class CountMethod { table, brute };

std::string to_string(CountMethod m);
CountMethod parse_count_method(std::string_view s);

struct CountReport {
  std::uint32_t p;
  std::string variety;
  CountMethod method;
  // Points on the affine cone, including the origin. Absent for products of
  // projective spaces (E^3), where no single cone exists.
  std::optional<mpz_class> affine_cone_count;
  mpz_class projective_count;

  bool operator==(const CountReport&) const = default;
};

// #E(F_p). The table method sums A(-z^3) over z. Refuses p = 3.
CountReport count_E(std::uint32_t p, CountMethod method = CountMethod::table,
                    std::uint64_t budget = kDefaultBudget);

// #V33(F_p). The table method computes sum_t A(t) A(-t)^2 for the affine cone.
// Refuses p = 3.
CountReport count_V33(std::uint32_t p, CountMethod method = CountMethod::table,
                      std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

// #E(F_p)^3. Refuses p = 3.
CountReport count_E3(std::uint32_t p, CountMethod method = CountMethod::table,
                     std::uint64_t budget = kDefaultBudget);

}  // namespace fermat
