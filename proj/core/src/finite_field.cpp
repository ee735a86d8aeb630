#include "fermat/finite_field.hpp"

#include <algorithm>
#include <array>

namespace fermat {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kExhaustiveCubeRootLimit = 10000;

}  // namespace

// Miller-Rabin with the first twelve prime bases is deterministic for all
// n < 3.3 * 10^24, so in particular for every 64-bit input.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto b : bases) {
    std::uint64_t x = powmod64(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= kMaxModulus) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField PrimeField::with_good_reduction(std::uint64_t p) {
  if (p == 3) throw BadReduction("p = 3 is a prime of bad reduction");
  return PrimeField(p);
}

FieldElement PrimeField::element(std::int64_t v) const { return FieldElement(reduce(v), *this); }
FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1 % p_, *this); }

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::vector<FieldElement> PrimeField::primitive_cube_roots_of_unity() const {
  std::vector<FieldElement> out;
  if (p_ % 3 != 1) return out;
  for (std::uint32_t r : detail::cube_roots(*this, 1)) {
    if (r != 1) out.emplace_back(r, *this);
  }
  return out;
}

FieldElement::FieldElement(std::uint32_t value, const PrimeField& field)
    : value_(value % field.modulus()), p_(field.modulus()) {}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (p_ != o.p_) {
    throw std::invalid_argument("mixing elements of F_" + std::to_string(p_) + " and F_" +
                                std::to_string(o.p_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return {field().add(value_, o.value_), p_, true};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return {field().sub(value_, o.value_), p_, true};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return {field().mul(value_, o.value_), p_, true};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const { return {field().neg(value_), p_, true}; }

FieldElement FieldElement::inverse() const { return {field().inv(value_), p_, true}; }

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  const PrimeField f = a.field();
  return FieldElement(f.pow(a.value(), e), f);
}

bool is_cube(const FieldElement& a) {
  const PrimeField f = a.field();
  const std::uint32_t p = f.modulus();
  if (a.is_zero() || p % 3 != 1) return true;
  return f.pow(a.value(), (p - 1) / 3) == 1;
}

namespace detail {

std::uint32_t sylow_cube_root(const PrimeField& f, std::uint32_t a) {
  const std::uint32_t p = f.modulus();
  // p - 1 = 3^s * t with 3 not dividing t.
  std::uint32_t t = p - 1;
  int s = 0;
  while (t % 3 == 0) {
    t /= 3;
    ++s;
  }
  std::uint32_t nonresidue = 2;
  while (f.pow(nonresidue, (p - 1) / 3) == 1) ++nonresidue;
  const std::uint32_t z = f.pow(nonresidue, t);  // generates the 3-Sylow subgroup

  // u = 3^{-1} mod t, so a^u cubes to a times an element of the 3-Sylow subgroup.
  std::uint64_t u = 0;
  if (t > 1) u = (t % 3 == 2) ? (std::uint64_t{t} + 1) / 3 : (2 * std::uint64_t{t} + 1) / 3;
  const std::uint32_t x0 = f.pow(a, u);
  const std::uint32_t c = f.mul(f.cube(x0), f.inv(a));

  // Discrete log of c to base z, one base-3 digit at a time.
  std::uint32_t pow3 = 1;
  for (int i = 0; i + 1 < s; ++i) pow3 *= 3;
  const std::uint32_t omega = f.pow(z, pow3);
  const std::uint32_t z_inv = f.inv(z);
  std::uint64_t log = 0;
  std::uint64_t digit_weight = 1;
  for (int i = 0; i < s; ++i) {
    const std::uint32_t residual = f.mul(c, f.pow(z_inv, log));
    std::uint32_t e = 1;
    for (int k = 0; k < s - 1 - i; ++k) e *= 3;
    const std::uint32_t h = f.pow(residual, e);
    std::uint32_t d = 0;
    if (h == omega) {
      d = 1;
    } else if (h == f.mul(omega, omega)) {
      d = 2;
    } else if (h != 1) {
      throw std::logic_error("discrete log failed; argument is not a cubic residue");
    }
    log += d * digit_weight;
    digit_weight *= 3;
  }
  if (log % 3 != 0) throw std::logic_error("argument is not a cubic residue");
  return f.mul(x0, f.pow(z_inv, log / 3));
}

std::vector<std::uint32_t> cube_roots(const PrimeField& f, std::uint32_t a) {
  const std::uint32_t p = f.modulus();
  a %= p;
  if (a == 0) return {0};
  if (p % 3 != 1) {
    // Cubing is a bijection; its inverse is x -> x^k with 3k = 1 mod (p - 1).
    if (p == 3 || p == 2) return {a};
    const std::uint64_t k = (2 * static_cast<std::uint64_t>(p) - 1) / 3;
    return {f.pow(a, k)};
  }
  if (f.pow(a, (p - 1) / 3) != 1) return {};

  std::uint32_t root = 0;
  if (p < kExhaustiveCubeRootLimit) {
    for (std::uint32_t x = 1; x < p; ++x) {
      if (f.cube(x) == a) {
        root = x;
        break;
      }
    }
  } else {
    root = sylow_cube_root(f, a);
  }
  // Multiply by the cube roots of unity, taken as (nonresidue)^((p-1)/3) powers.
  std::uint32_t g = 2;
  while (f.pow(g, (p - 1) / 3) == 1) ++g;
  const std::uint32_t omega = f.pow(g, (p - 1) / 3);
  std::vector<std::uint32_t> roots{root, f.mul(root, omega), f.mul(root, f.mul(omega, omega))};
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

std::vector<FieldElement> cube_roots(const FieldElement& a) {
  const PrimeField f = a.field();
  std::vector<FieldElement> out;
  for (std::uint32_t r : detail::cube_roots(f, a.value())) out.emplace_back(r, f);
  return out;
}

}  // namespace fermat
