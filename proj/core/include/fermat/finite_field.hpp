#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

// Raised when an operation needs good reduction (p != 3) and gets p = 3.
class BadReduction : public std::domain_error {
 public:
  explicit BadReduction(const std::string& what) : std::domain_error(what) {}
};

bool is_prime(std::uint64_t n);

class FieldElement;

// The prime field F_p for 2 <= p < 2^31. Products of two residues fit in
// 64 bits, which every kernel in the library relies on.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p);

  // Same as the constructor, but also refuses p = 3.
  static PrimeField with_good_reduction(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t residue_mod_3() const { return p_ % 3; }

  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Primitive cube roots of unity (empty when p != 1 mod 3).
  std::vector<FieldElement> primitive_cube_roots_of_unity() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a, b < 2^31
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t cube(std::uint32_t a) const { return mul(mul(a, a), a); }
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

class FieldElement {
 public:
  FieldElement(std::uint32_t value, const PrimeField& field);

  std::uint32_t value() const { return value_; }
  PrimeField field() const { return PrimeField(p_); }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;

 private:
  FieldElement(std::uint32_t value, std::uint32_t p, bool) : value_(value), p_(p) {}
  void check_same_field(const FieldElement& o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

FieldElement pow(const FieldElement& a, std::uint64_t e);

bool is_cube(const FieldElement& a);

// All x with x^3 = a, sorted by residue.
std::vector<FieldElement> cube_roots(const FieldElement& a);

namespace detail {
// Cube roots as raw residues; exposed so the counting kernels can skip the
// FieldElement wrapper.
std::vector<std::uint32_t> cube_roots(const PrimeField& f, std::uint32_t a);
// One cube root of a known cubic residue via the 3-Sylow discrete-log method.
std::uint32_t sylow_cube_root(const PrimeField& f, std::uint32_t a);
}  // namespace detail

}  // namespace fermat
