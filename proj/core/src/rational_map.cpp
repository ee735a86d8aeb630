#include "fermat/rational_map.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace fermat {

const MapSpec& fermat_map() {
  static const MapSpec m = [] {
    const auto& src = rings::e3_patch();
    std::map<std::string, MultiPoly> a;
    a.emplace("X0", parse_poly(src, "-x1*y3"));
    a.emplace("X1", parse_poly(src, "-y1*y3"));
    a.emplace("X2", parse_poly(src, "x3"));
    a.emplace("X4", parse_poly(src, "-x2*y3"));
    a.emplace("X5", parse_poly(src, "-y2*y3"));
    return MapSpec(src, rings::v33_patch(), std::move(a));
  }();
  return m;
}

PatchMap::PatchMap(std::uint32_t p, const MapSpec& spec) : field_(PrimeField::with_good_reduction(p)) {
  if (!(*spec.source() == *rings::e3_patch()) || !(*spec.target() == *rings::v33_patch())) {
    throw std::invalid_argument("PatchMap needs a map from the E^3 patch to the V33 patch");
  }
  for (const auto& name : spec.target()->names()) images_.emplace_back(spec.image(name), field_);
  for (const auto& e : varieties::e3_patch().equations) source_eqs_.emplace_back(e, field_);
  for (const auto& e : varieties::v33_patch().equations) target_eqs_.emplace_back(e, field_);
}

bool PatchMap::on_source(const E3PatchPoint& q) const {
  return std::all_of(source_eqs_.begin(), source_eqs_.end(),
                     [&](const ReducedPoly& e) { return e(q.residues()) == 0; });
}

bool PatchMap::on_target(const V33PatchPoint& q) const {
  return std::all_of(target_eqs_.begin(), target_eqs_.end(),
                     [&](const ReducedPoly& e) { return e(q.residues()) == 0; });
}

V33PatchPoint PatchMap::forward_unchecked(const E3PatchPoint& src) const {
  std::array<std::uint32_t, 5> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[i](src.residues());
  return V33PatchPoint(field_, out);
}

V33PatchPoint PatchMap::forward(const E3PatchPoint& src) const {
  if (src.field().modulus() != field_.modulus()) throw std::invalid_argument("source point over a different field");
  if (!on_source(src)) throw std::invalid_argument("source point is not on the E^3 patch");
  V33PatchPoint image = forward_unchecked(src);
  if (!on_target(image)) throw std::logic_error("image of an E^3 point is not on V33");
  return image;
}

Fiber PatchMap::fiber(const V33PatchPoint& target) const {
  if (target.field().modulus() != field_.modulus()) throw std::invalid_argument("target point over a different field");
  if (!on_target(target)) throw std::invalid_argument("target point is not on the V33 patch");
  const PrimeField& f = field_;
  const auto& t = target.residues();
  const std::uint32_t X0 = t[0], X1 = t[1], X2 = t[2], X4 = t[3], X5 = t[4];
  Fiber fib{target, {}, true};
  const std::uint32_t shift = f.add(f.cube(X2), 1);
  if (shift == 0) {
    fib.defined = false;
    return fib;
  }
  for (std::uint32_t y3 : detail::cube_roots(f, f.neg(shift))) {
    const std::uint32_t minus_inv = f.neg(f.inv(y3));
    const E3PatchPoint candidate(
        f, {f.mul(X0, minus_inv), f.mul(X1, minus_inv), f.mul(X4, minus_inv), f.mul(X5, minus_inv), X2, y3});
    if (on_source(candidate) && forward_unchecked(candidate) == target) fib.preimages.push_back(candidate);
  }
  return fib;
}

FiberCensus fiber_census(std::uint32_t p, std::uint64_t budget, unsigned threads, const MapSpec& spec) {
  const PatchMap map(p, spec);
  const PrimeField& f = map.field();

  std::vector<V33PatchPoint> targets;
  for_each_point(varieties::v33_patch(), f, budget, [&](std::span<const std::uint32_t> x) {
    targets.emplace_back(f, std::array<std::uint32_t, 5>{x[0], x[1], x[2], x[3], x[4]});
  });

  // Fiber sizes, computed in parallel over contiguous target blocks.
  std::vector<int> sizes(targets.size(), 0);  // -1 marks undefined
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Fiber fib = map.fiber(targets[i]);
      sizes[i] = fib.defined ? static_cast<int>(fib.preimages.size()) : -1;
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || targets.size() < 1024) {
    work(0, targets.size());
  } else {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < threads; ++k) {
      workers.emplace_back(work, targets.size() * k / threads, targets.size() * (k + 1) / threads);
    }
  }

  FiberCensus c;
  c.p = p;
  c.targets_total = targets.size();
  std::map<std::array<std::uint32_t, 5>, std::uint64_t> expected;
  std::uint64_t fiber_sum = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    switch (sizes[i]) {
      case -1: ++c.undefined; continue;
      case 0: ++c.fiber0; break;
      case 1: ++c.fiber1; break;
      case 3: ++c.fiber3; break;
      default: ++c.fiber_other; break;
    }
    fiber_sum += static_cast<std::uint64_t>(sizes[i]);
    if (sizes[i] > 0) expected.emplace(targets[i].residues(), static_cast<std::uint64_t>(sizes[i]));
  }

  // Independent side: push every source point forward and tally images.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> curve;
  for_each_point(varieties::fermat_cubic_patch(), f, budget,
                 [&](std::span<const std::uint32_t> x) { curve.emplace_back(x[0], x[1]); });
  // A broken map can send source points off V33; those have no fiber to
  // land in and void conservation.
  std::map<std::array<std::uint32_t, 5>, std::uint64_t> observed;
  std::uint64_t off_target = 0;
  for (const auto& a : curve) {
    for (const auto& b : curve) {
      for (const auto& d : curve) {
        ++c.source_total;
        const E3PatchPoint src(f, {a.first, a.second, b.first, b.second, d.first, d.second});
        const V33PatchPoint img = map.forward_unchecked(src);
        if (!map.on_target(img)) {
          ++off_target;
          continue;
        }
        if (f.add(f.cube(img.residues()[2]), 1) == 0) continue;
        ++c.source_matched;
        ++observed[img.residues()];
      }
    }
  }
  c.conserved = off_target == 0 && fiber_sum == c.source_matched && observed == expected;
  return c;
}

HomogenizedMap homogenize_map(const MapSpec& affine) {
  if (!affine.is_complete()) throw std::invalid_argument("cannot homogenize an incomplete map");
  const auto& src = *affine.source();
  const auto& hom = rings::e3_homogeneous();
  // Source variable i (x1,y1,x2,y2,x3,y3) belongs to factor i / 2.
  auto factor_of = [](std::size_t i) { return i / 2; };
  auto hom_index = [&](std::size_t i) { return *hom->index_of(src.name(i)); };
  const std::array<std::size_t, 3> z_index{*hom->index_of("z1"), *hom->index_of("z2"), *hom->index_of("z3")};

  std::array<std::uint32_t, 3> tri{0, 0, 0};
  for (const auto& [name, image] : affine.assignments()) {
    for (const auto& [m, c] : image.terms()) {
      std::array<std::uint32_t, 3> d{0, 0, 0};
      for (std::size_t i = 0; i < m.size(); ++i) d[factor_of(i)] += m[i];
      for (std::size_t k = 0; k < 3; ++k) tri[k] = std::max(tri[k], d[k]);
    }
  }

  std::map<std::string, MultiPoly> forms;
  for (const auto& [name, image] : affine.assignments()) {
    MultiPoly h(hom);
    for (const auto& [m, c] : image.terms()) {
      Monomial hm(hom->size());
      std::array<std::uint32_t, 3> d{0, 0, 0};
      for (std::size_t i = 0; i < m.size(); ++i) {
        hm[hom_index(i)] = m[i];
        d[factor_of(i)] += m[i];
      }
      for (std::size_t k = 0; k < 3; ++k) hm[z_index[k]] = tri[k] - d[k];
      h.add_term(hm, c);
    }
    forms.emplace(name, std::move(h));
  }
  Monomial denom(hom->size());
  for (std::size_t k = 0; k < 3; ++k) denom[z_index[k]] = tri[k];
  forms.emplace("X3", MultiPoly::term(hom, denom, 1));
  return {MapSpec(hom, rings::p5(), std::move(forms)), tri};
}

std::optional<ProjectivePoint> evaluate_homogeneous(const HomogenizedMap& h, std::span<const FieldElement> point,
                                                    const PrimeField& field) {
  std::vector<FieldElement> out;
  for (const auto& name : h.forms.target()->names()) out.push_back(eval_mod_p(h.forms.image(name), point, field));
  if (std::all_of(out.begin(), out.end(), [](const FieldElement& x) { return x.is_zero(); })) return std::nullopt;
  return ProjectivePoint(std::move(out));
}

std::uint64_t base_locus_count(const HomogenizedMap& h, std::uint32_t p) {
  const PrimeField f = PrimeField::with_good_reduction(p);
  const auto curve = enumerate_points(varieties::fermat_cubic(), f);
  std::vector<ReducedPoly> forms;
  for (const auto& name : h.forms.target()->names()) forms.emplace_back(h.forms.image(name), f);
  std::uint64_t count = 0;
  std::vector<std::uint32_t> x(9);
  for (const auto& a : curve) {
    for (const auto& b : curve) {
      for (const auto& c : curve) {
        for (std::size_t k = 0; k < 3; ++k) {
          x[k] = a[k].value();
          x[3 + k] = b[k].value();
          x[6 + k] = c[k].value();
        }
        if (std::all_of(forms.begin(), forms.end(), [&](const ReducedPoly& g) { return g(x) == 0; })) ++count;
      }
    }
  }
  return count;
}

}  // namespace fermat
