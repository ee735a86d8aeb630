#include "fermat/varieties.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace fermat {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

mpz_class to_mpz(unsigned __int128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

void require_budget(const VarietySpec& v, std::uint32_t p, std::uint64_t budget) {
  const auto space = v.search_space(p);
  if (space > budget) {
    throw BudgetExceeded("enumerating " + v.name + " over F_" + std::to_string(p) + " needs " +
                         (space == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                               : std::to_string(space)) +
                         " tuples, budget is " + std::to_string(budget));
  }
}

// Cone size from a projective count: (p - 1) * N + 1.
mpz_class cone_from_projective(const mpz_class& n, std::uint32_t p) { return n * (p - 1) + 1; }

mpz_class projective_from_cone(const mpz_class& cone, std::uint32_t p) {
  mpz_class num = cone - 1;
  if (num % (p - 1) != 0) {
    throw std::logic_error("affine cone count " + cone.get_str() + " - 1 is not divisible by p - 1");
  }
  return num / (p - 1);
}

}  // namespace

VarietySpec VarietySpec::projective(std::string name, RingPtr ring, std::vector<MultiPoly> equations) {
  for (const auto& e : equations) {
    if (!(*e.ring() == *ring)) throw std::invalid_argument(name + ": equation outside the ambient ring");
    if (!e.is_homogeneous()) throw std::invalid_argument(name + ": equation " + e.to_string() + " is not homogeneous");
  }
  return {std::move(name), Kind::projective, std::move(ring), std::move(equations)};
}

VarietySpec VarietySpec::affine(std::string name, RingPtr ring, std::vector<MultiPoly> equations) {
  for (const auto& e : equations) {
    if (!(*e.ring() == *ring)) throw std::invalid_argument(name + ": equation outside the ambient ring");
  }
  return {std::move(name), Kind::affine, std::move(ring), std::move(equations)};
}

std::uint64_t VarietySpec::search_space(std::uint32_t p) const {
  const std::size_t n = ring->size();
  if (kind == Kind::affine) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total = saturating_mul(total, p);
    return total;
  }
  // Normalised projective tuples: sum_{k < n} p^k.
  std::uint64_t total = 0;
  std::uint64_t pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    total = saturating_add(total, pk);
    pk = saturating_mul(pk, p);
  }
  return total;
}

namespace varieties {

const VarietySpec& fermat_cubic() {
  static const VarietySpec v = VarietySpec::projective(
      "E", rings::p2(), {parse_poly(rings::p2(), "X0^3 + X1^3 + X2^3")});
  return v;
}

const VarietySpec& v33() {
  static const VarietySpec v = VarietySpec::projective(
      "V33", rings::p5(),
      {parse_poly(rings::p5(), "X0^3 + X1^3 + X2^3 + X3^3"), parse_poly(rings::p5(), "X2^3 + X3^3 + X4^3 + X5^3")});
  return v;
}

const VarietySpec& v33_patch() {
  static const VarietySpec v = VarietySpec::affine(
      "V33_patch", rings::v33_patch(),
      {parse_poly(rings::v33_patch(), "X0^3 + X1^3 + X2^3 + 1"),
       parse_poly(rings::v33_patch(), "X2^3 + 1 + X4^3 + X5^3")});
  return v;
}

const VarietySpec& e3_patch() {
  static const VarietySpec v = VarietySpec::affine(
      "E3_patch", rings::e3_patch(),
      {parse_poly(rings::e3_patch(), "x1^3 + y1^3 + 1"), parse_poly(rings::e3_patch(), "x2^3 + y2^3 + 1"),
       parse_poly(rings::e3_patch(), "x3^3 + y3^3 + 1")});
  return v;
}

const VarietySpec& fermat_cubic_patch() {
  static const RingPtr ring = make_ring({"x1", "y1"});
  static const VarietySpec v = VarietySpec::affine("E_patch", ring, {parse_poly(ring, "x1^3 + y1^3 + 1")});
  return v;
}

}  // namespace varieties

ProjectivePoint::ProjectivePoint(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  auto last = std::find_if(coords_.rbegin(), coords_.rend(), [](const FieldElement& x) { return !x.is_zero(); });
  if (last == coords_.rend()) throw std::invalid_argument("projective point with all coordinates zero");
  const FieldElement scale = last->inverse();
  for (auto& x : coords_) x = x * scale;
}

void for_each_point(const VarietySpec& v, const PrimeField& field, std::uint64_t budget,
                    const std::function<void(std::span<const std::uint32_t>)>& visit) {
  const std::uint32_t p = field.modulus();
  require_budget(v, p, budget);
  std::vector<ReducedPoly> eqs;
  for (const auto& e : v.equations) eqs.emplace_back(e, field);
  const std::size_t n = v.ring->size();
  std::vector<std::uint32_t> x(n, 0);

  auto on_variety = [&]() {
    return std::all_of(eqs.begin(), eqs.end(), [&](const ReducedPoly& e) { return e(x) == 0; });
  };
  // Odometer over the first `free` coordinates.
  auto sweep = [&](std::size_t free) {
    std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(free), 0u);
    for (;;) {
      if (on_variety()) visit(x);
      std::size_t i = 0;
      while (i < free && ++x[i] == p) x[i++] = 0;
      if (i == free) break;
    }
  };

  if (v.kind == VarietySpec::Kind::affine) {
    sweep(n);
    return;
  }
  for (std::size_t last = n; last-- > 0;) {
    std::fill(x.begin(), x.end(), 0u);
    x[last] = 1;
    sweep(last);
  }
}

std::vector<AffinePoint> enumerate_points(const VarietySpec& v, const PrimeField& field, std::uint64_t budget) {
  std::vector<AffinePoint> out;
  for_each_point(v, field, budget, [&](std::span<const std::uint32_t> x) {
    AffinePoint pt;
    pt.reserve(x.size());
    for (auto r : x) pt.emplace_back(r, field);
    out.push_back(std::move(pt));
  });
  return out;
}

std::uint64_t count_points_brute(const VarietySpec& v, const PrimeField& field, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_point(v, field, budget, [&](std::span<const std::uint32_t>) { ++count; });
  return count;
}

namespace {

// A(t) = sum over u of m(t - u^3), where m(c) <= 3 counts the cube roots
// of c. Each u adds a rotated copy of m. The t axis is tiled so one tile of
// A plus the byte array m stay in L1 while every u sweeps the tile; each
// sweep reads at most two contiguous runs of m and vectorizes.
template <typename Count>
void add_rotations(const std::vector<std::uint32_t>& cubes, const std::vector<std::uint8_t>& roots,
                   std::uint32_t begin, std::uint32_t end, std::vector<Count>& table) {
  constexpr std::uint32_t kTile = 2048;
  const std::uint32_t p = static_cast<std::uint32_t>(roots.size());
  const std::uint8_t* m = roots.data();
  for (std::uint32_t lo = 0; lo < p; lo += kTile) {
    const std::uint32_t hi = std::min(p, lo + kTile);
    Count* a = table.data();
    for (std::uint32_t u = begin; u < end; ++u) {
      const std::uint32_t c = cubes[u];
      // Indices t with t >= c read m[t - c]; the rest wrap to m[t + p - c].
      const std::uint32_t split = std::clamp(c, lo, hi);
      const std::uint8_t* wrapped = m + (p - c);
      for (std::uint32_t t = lo; t < split; ++t) a[t] += wrapped[t];
      const std::uint8_t* direct = m - c;
      for (std::uint32_t t = split; t < hi; ++t) a[t] += direct[t];
    }
  }
}

template <typename Count>
std::vector<std::uint64_t> build_table(std::uint32_t p, unsigned threads) {
  const PrimeField field(p);
  std::vector<std::uint32_t> cubes(p);
  std::vector<std::uint8_t> roots(p, 0);
  for (std::uint32_t u = 0; u < p; ++u) {
    cubes[u] = field.cube(u);
    ++roots[cubes[u]];
  }

  threads = std::clamp(threads, 1u, std::max(1u, p / 64));
  std::vector<std::vector<Count>> partial(threads, std::vector<Count>(p, 0));
  if (threads == 1) {
    add_rotations(cubes, roots, 0, p, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < threads; ++k) {
      const auto begin = static_cast<std::uint32_t>(std::uint64_t{p} * k / threads);
      const auto end = static_cast<std::uint32_t>(std::uint64_t{p} * (k + 1) / threads);
      workers.emplace_back([&, begin, end, k] { add_rotations(cubes, roots, begin, end, partial[k]); });
    }
  }
  std::vector<std::uint64_t> table(p, 0);
  for (const auto& part : partial) {
    for (std::uint32_t t = 0; t < p; ++t) table[t] += part[t];
  }
  return table;
}

}  // namespace

std::vector<std::uint64_t> cube_sum_table(std::uint32_t p, unsigned threads) {
  // A(t) <= 3p - 2, so 32-bit counters suffice below 2^32 / 3.
  if (p < 0x5555'5555u) return build_table<std::uint32_t>(p, threads);
  return build_table<std::uint64_t>(p, threads);
}

std::string to_string(CountMethod m) { return m == CountMethod::table ? "table" : "brute"; }

CountMethod parse_count_method(std::string_view s) {
  if (s == "table") return CountMethod::table;
  if (s == "brute") return CountMethod::brute;
  throw std::invalid_argument("unknown count method '" + std::string(s) + "'");
}

CountReport count_E(std::uint32_t p, CountMethod method, std::uint64_t budget) {
  const PrimeField field = PrimeField::with_good_reduction(p);
  CountReport r{p, "E", method, std::nullopt, 0};
  if (method == CountMethod::brute) {
    r.projective_count = count_points_brute(varieties::fermat_cubic(), field, budget);
    r.affine_cone_count = cone_from_projective(r.projective_count, p);
    return r;
  }
  const auto table = cube_sum_table(p);
  unsigned __int128 cone = 0;
  for (std::uint32_t z = 0; z < p; ++z) cone += table[field.neg(field.cube(z))];
  r.affine_cone_count = to_mpz(cone);
  r.projective_count = projective_from_cone(*r.affine_cone_count, p);
  return r;
}

CountReport count_V33(std::uint32_t p, CountMethod method, std::uint64_t budget, unsigned threads) {
  const PrimeField field = PrimeField::with_good_reduction(p);
  CountReport r{p, "V33", method, std::nullopt, 0};
  if (method == CountMethod::brute) {
    r.projective_count = count_points_brute(varieties::v33(), field, budget);
    r.affine_cone_count = cone_from_projective(r.projective_count, p);
    return r;
  }
  // With t = X2^3 + X3^3 the two equations decouple into X0^3 + X1^3 = -t
  // and X4^3 + X5^3 = -t.
  const auto table = cube_sum_table(p, threads);
  unsigned __int128 cone = 0;
  for (std::uint32_t t = 0; t < p; ++t) {
    const unsigned __int128 opposite = table[field.neg(t)];
    cone += static_cast<unsigned __int128>(table[t]) * opposite * opposite;
  }
  r.affine_cone_count = to_mpz(cone);
  r.projective_count = projective_from_cone(*r.affine_cone_count, p);
  return r;
}

CountReport count_E3(std::uint32_t p, CountMethod method, std::uint64_t budget) {
  const CountReport e = count_E(p, method, budget);
  CountReport r{p, "E3", method, std::nullopt, 0};
  r.projective_count = e.projective_count * e.projective_count * e.projective_count;
  return r;
}

}  // namespace fermat
