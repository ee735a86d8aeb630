#pragma once

// Independent reference computations for the tests. Everything here uses
// plain 64-bit loops and never calls into the library, so a bug in a kernel
// cannot hide behind the same bug in its oracle.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t cube(std::int64_t a, std::int64_t p) { return mod(a * a % p * a, p); }

inline std::int64_t pow_naive(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  for (std::uint64_t i = 0; i < e; ++i) r = r * mod(a, p) % p;
  return r;
}

inline std::vector<std::int64_t> cube_roots(std::int64_t a, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < p; ++x) {
    if (cube(x, p) == mod(a, p)) out.push_back(x);
  }
  return out;
}

inline std::vector<std::int64_t> cube_sum_table(std::int64_t p) {
  std::vector<std::int64_t> a(p, 0);
  for (std::int64_t u = 0; u < p; ++u) {
    for (std::int64_t v = 0; v < p; ++v) ++a[mod(u * u * u + v * v * v, p)];
  }
  return a;
}

// #E(F_p) from all nonzero triples on the cone.
inline std::int64_t count_E(std::int64_t p) {
  std::int64_t cone = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      for (std::int64_t z = 0; z < p; ++z) {
        if (mod(x * x * x + y * y * y + z * z * z, p) == 0) ++cone;
      }
    }
  }
  return (cone - 1) / (p - 1);
}

// Affine cone of V33 by looping over all six coordinates.
inline std::int64_t v33_cone(std::int64_t p) {
  std::vector<std::int64_t> c(p);
  for (std::int64_t x = 0; x < p; ++x) c[x] = cube(x, p);
  std::int64_t n = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t x2 = 0; x2 < p; ++x2)
        for (std::int64_t x3 = 0; x3 < p; ++x3) {
          if (mod(c[a] + c[b] + c[x2] + c[x3], p) != 0) continue;
          for (std::int64_t d = 0; d < p; ++d)
            for (std::int64_t e = 0; e < p; ++e) {
              if (mod(c[x2] + c[x3] + c[d] + c[e], p) == 0) ++n;
            }
        }
  return n;
}

// Coefficients a_1..a_N of q^L prod (1 - q^{a n})^e by explicit
// convolution of truncated factor polynomials. Exponents must be >= 0.
inline std::vector<std::int64_t> eta_coefficients(const std::vector<std::pair<int, int>>& factors, int shift,
                                                  int bound) {
  std::vector<std::int64_t> prod(bound + 1, 0);
  prod[0] = 1;
  for (auto [scale, exponent] : factors) {
    for (int n = 1; scale * n <= bound; ++n) {
      for (int k = 0; k < exponent; ++k) {
        std::vector<std::int64_t> factor(bound + 1, 0);
        factor[0] = 1;
        factor[scale * n] = -1;
        std::vector<std::int64_t> next(bound + 1, 0);
        for (int i = 0; i <= bound; ++i) {
          if (prod[i] == 0) continue;
          for (int j = 0; i + j <= bound; ++j) next[i + j] += prod[i] * factor[j];
        }
        prod = std::move(next);
      }
    }
  }
  std::vector<std::int64_t> a(bound + 1, 0);  // a[n] for 1 <= n <= bound
  for (int n = shift; n <= bound; ++n) a[n] = prod[n - shift];
  return a;
}

struct Census {
  std::int64_t targets = 0, undefined = 0, f0 = 0, f1 = 0, f3 = 0, source = 0, matched = 0;
};

// Direct double enumeration, mirroring the hand derivation of the fibers.
inline Census census(std::int64_t p) {
  Census c;
  for (std::int64_t X0 = 0; X0 < p; ++X0)
    for (std::int64_t X1 = 0; X1 < p; ++X1)
      for (std::int64_t X2 = 0; X2 < p; ++X2) {
        if (mod(cube(X0, p) + cube(X1, p) + cube(X2, p) + 1, p) != 0) continue;
        for (std::int64_t X4 = 0; X4 < p; ++X4)
          for (std::int64_t X5 = 0; X5 < p; ++X5) {
            if (mod(cube(X2, p) + 1 + cube(X4, p) + cube(X5, p), p) != 0) continue;
            ++c.targets;
            const std::int64_t s = mod(cube(X2, p) + 1, p);
            if (s == 0) {
              ++c.undefined;
              continue;
            }
            switch (cube_roots(-s, p).size()) {
              case 0: ++c.f0; break;
              case 1: ++c.f1; break;
              default: ++c.f3; break;
            }
          }
      }
  std::vector<std::pair<std::int64_t, std::int64_t>> curve;
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y)
      if (mod(cube(x, p) + cube(y, p) + 1, p) == 0) curve.emplace_back(x, y);
  c.source = static_cast<std::int64_t>(curve.size() * curve.size() * curve.size());
  for (const auto& third : curve) {
    if (third.second != 0) c.matched += static_cast<std::int64_t>(curve.size() * curve.size());
  }
  return c;
}

}  // namespace oracle
