#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fermat/finite_field.hpp"
#include "fermat/polynomial.hpp"
#include "fermat/varieties.hpp"

namespace fermat {

// The map E^3 -> V33 on affine patches:
//   X0 -> -x1*y3, X1 -> -y1*y3, X2 -> x3, X4 -> -x2*y3, X5 -> -y2*y3
// from (x1, y1, x2, y2, x3, y3) to (X0, X1, X2, X4, X5).
const MapSpec& fermat_map();

// A point of an affine patch over F_p, as residues in ring order.
template <std::size_t N>
class PatchPoint {
 public:
  PatchPoint(const PrimeField& field, std::array<std::uint32_t, N> residues) : field_(field), residues_(residues) {
    for (auto& r : residues_) r %= field.modulus();
  }

  const PrimeField& field() const { return field_; }
  const std::array<std::uint32_t, N>& residues() const { return residues_; }
  FieldElement operator[](std::size_t i) const { return FieldElement(residues_[i], field_); }

  bool operator==(const PatchPoint&) const = default;
  auto operator<=>(const PatchPoint& o) const { return residues_ <=> o.residues_; }

 private:
  PrimeField field_;
  std::array<std::uint32_t, N> residues_;
};

// (x1, y1, x2, y2, x3, y3)
using E3PatchPoint = PatchPoint<6>;
// (X0, X1, X2, X4, X5)
using V33PatchPoint = PatchPoint<5>;

struct Fiber {
  V33PatchPoint base;
  std::vector<E3PatchPoint> preimages;
  // False when X2^3 + 1 = 0: every preimage would need y3 = 0, which lies
  // outside the source patch.
  bool defined;
};

// The patch map over one prime field, with the map's images compiled mod p.
class PatchMap {
 public:
  // Refuses p = 3.
  explicit PatchMap(std::uint32_t p, const MapSpec& spec = fermat_map());

  const PrimeField& field() const { return field_; }

  bool on_source(const E3PatchPoint& q) const;
  bool on_target(const V33PatchPoint& q) const;

  // Throws std::invalid_argument if src is off the E^3 patch. Throws
  // std::logic_error if the image misses V33, which a valid map never does.
  V33PatchPoint forward(const E3PatchPoint& src) const;
  // Image without the on-curve checks; for kernels that already know.
  V33PatchPoint forward_unchecked(const E3PatchPoint& src) const;

  // Preimages via y3^3 = -(X2^3 + 1); each candidate is kept only if it lies
  // on the source patch and maps forward onto `target`.
  // Throws std::invalid_argument if target is off the V33 patch.
  Fiber fiber(const V33PatchPoint& target) const;

 private:
  PrimeField field_;
  std::vector<ReducedPoly> images_;  // in target-ring order
  std::vector<ReducedPoly> source_eqs_;
  std::vector<ReducedPoly> target_eqs_;
};

struct FiberCensus {
  std::uint32_t p = 0;
  std::uint64_t targets_total = 0;
  std::uint64_t undefined = 0;
  std::uint64_t fiber0 = 0;
  std::uint64_t fiber1 = 0;
  std::uint64_t fiber3 = 0;
  // Fibers of any other size; always zero for a correct map.
  std::uint64_t fiber_other = 0;
  std::uint64_t source_total = 0;
  // Source points whose image has a defined fiber.
  std::uint64_t source_matched = 0;
  // Sum of fiber sizes equals source_matched and, target by target, every
  // fiber size equals the number of source points mapping there.
  bool conserved = false;

  std::uint64_t defined() const { return fiber0 + fiber1 + fiber3 + fiber_other; }
  double fraction_fiber3() const {
    return defined() == 0 ? 0.0 : static_cast<double>(fiber3) / static_cast<double>(defined());
  }
};

// Exhaustive census over the V33 patch and the E^3 patch. The budget applies
// to the p^5 target search.
FiberCensus fiber_census(std::uint32_t p, std::uint64_t budget = kDefaultBudget, unsigned threads = 1,
                         const MapSpec& spec = fermat_map());

// The map written with tri-homogeneous forms on (P^2)^3 -> P^5, obtained by
// clearing the z_i denominators of the affine images.
struct HomogenizedMap {
  MapSpec forms;  // source rings::e3_homogeneous(), target rings::p5()
  std::array<std::uint32_t, 3> tridegree;
};

// Throws std::invalid_argument for an incomplete map.
HomogenizedMap homogenize_map(const MapSpec& affine = fermat_map());

// Image of a point of (P^2)^3 (coordinates x1,y1,z1,...,z3). Nullopt marks
// the base locus, where all six forms vanish.
std::optional<ProjectivePoint> evaluate_homogeneous(const HomogenizedMap& h, std::span<const FieldElement> point,
                                                    const PrimeField& field);

// Number of F_p-points of E^3 in the base locus of the homogenized map.
std::uint64_t base_locus_count(const HomogenizedMap& h, std::uint32_t p);

}  // namespace fermat
