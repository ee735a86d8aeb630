#include "fermat/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fermat {

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars) : kind_(kind), priority_(nvars) {
  std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::lex) {
    for (auto v : priority_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da <=> db;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

namespace {

struct Term {
  Monomial mono;
  mpq_class coeff;
};

// Terms sorted strictly decreasing under the active order.
using Sparse = std::vector<Term>;

Sparse to_sparse(const RationalPoly& f, const MonomialOrder& order) {
  Sparse s;
  s.reserve(f.num_terms());
  for (const auto& [m, c] : f.terms()) s.push_back({m, c});
  std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return s;
}

RationalPoly from_sparse(const RingPtr& ring, const Sparse& s) {
  RationalPoly f(ring);
  for (const auto& t : s) f.add_term(t.mono, t.coeff);
  return f;
}

void make_monic(Sparse& s) {
  if (s.empty()) return;
  const mpq_class lc = s.front().coeff;
  if (lc == 1) return;
  for (auto& t : s) t.coeff /= lc;
}

// f - c * m * g, exploiting that multiplication by m preserves the order.
Sparse sub_scaled(const Sparse& f, const mpq_class& c, const Monomial& m, const Sparse& g,
                  const MonomialOrder& order) {
  Sparse out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == f.size()) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
      continue;
    }
    const auto cmp = order.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      mpq_class v = f[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by `basis`, skipping the element at index `skip`.
Sparse reduce(Sparse f, const std::vector<Sparse>& basis, const MonomialOrder& order,
              std::size_t skip = static_cast<std::size_t>(-1)) {
  Sparse remainder;
  while (!f.empty()) {
    const Term& lead = f.front();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const Term& g_lead = basis[k].front();
      if (g_lead.mono.divides(lead.mono)) {
        const mpq_class c = lead.coeff / g_lead.coeff;
        f = sub_scaled(f, c, lead.mono / g_lead.mono, basis[k], order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(f.front());
      f.erase(f.begin());
    }
  }
  return remainder;
}

Sparse s_polynomial(const Sparse& f, const Sparse& g, const MonomialOrder& order) {
  const Monomial l = f.front().mono.lcm(g.front().mono);
  Sparse left = sub_scaled(Sparse{}, mpq_class(-1) / f.front().coeff, l / f.front().mono, f, order);
  return sub_scaled(left, mpq_class(1) / g.front().coeff, l / g.front().mono, g, order);
}

}  // namespace

Monomial leading_monomial(const RationalPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (!best || order.greater(m, *best)) best = &m;
  }
  return *best;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const RingPtr ring = gens.front().ring();
  if (order.priority().size() != ring->size()) throw std::invalid_argument("order arity does not match ring");
  GroebnerBasis gb(ring, order);
  gb.source_ = gens;

  std::vector<Sparse> basis;
  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw std::invalid_argument("buchberger: generators live in different rings");
    Sparse s = to_sparse(to_rational(g), order);
    if (s.empty()) continue;
    make_monic(s);
    basis.push_back(std::move(s));
  }

  // pending[i][j] (i < j) marks pairs not yet treated.
  std::vector<std::vector<bool>> pending;
  auto grow_pending = [&](std::size_t n) {
    for (auto& row : pending) row.resize(n, false);
    pending.resize(n, std::vector<bool>(n, false));
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending[a][b] : pending[b][a];
  };
  grow_pending(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending[i][j] = true;
  }

  for (;;) {
    // Normal strategy: smallest lcm degree, ties broken by (i, j).
    bool found = false;
    std::size_t bi = 0;
    std::size_t bj = 0;
    std::uint64_t best_deg = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!pending[i][j]) continue;
        const auto d = basis[i].front().mono.lcm(basis[j].front().mono).degree();
        if (!found || d < best_deg) {
          found = true;
          best_deg = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) break;
    pending[bi][bj] = false;
    ++gb.stats_.pairs_considered;

    const Monomial& li = basis[bi].front().mono;
    const Monomial& lj = basis[bj].front().mono;
    if (li.coprime(lj)) {
      ++gb.stats_.skipped_coprime;
      continue;
    }
    const Monomial l = li.lcm(lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == bi || k == bj) continue;
      if (basis[k].front().mono.divides(l) && !is_pending(bi, k) && !is_pending(bj, k)) chain = true;
    }
    if (chain) {
      ++gb.stats_.skipped_chain;
      continue;
    }

    Sparse r = reduce(s_polynomial(basis[bi], basis[bj], order), basis, order);
    if (r.empty()) {
      ++gb.stats_.zero_reductions;
      continue;
    }
    make_monic(r);
    basis.push_back(std::move(r));
    const std::size_t n = basis.size();
    grow_pending(n);
    for (std::size_t i = 0; i + 1 < n; ++i) pending[i][n - 1] = true;
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = basis[i].front().mono;
      const Monomial& mj = basis[j].front().mono;
      if (mj.divides(mi) && (!(mj == mi) || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Sparse> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(std::move(basis[i]));
  }
  // Interreduce; leading terms are untouched because the set is minimal.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    minimal[i] = reduce(minimal[i], minimal, order, i);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Sparse& a, const Sparse& b) { return order.greater(a.front().mono, b.front().mono); });
  for (const auto& s : minimal) gb.generators_.push_back(from_sparse(ring, s));
  return gb;
}

RationalPoly GroebnerBasis::normal_form(const RationalPoly& f) const {
  if (!(*f.ring() == *ring_)) throw std::invalid_argument("normal_form: polynomial is not in the basis ring");
  std::vector<Sparse> basis;
  basis.reserve(generators_.size());
  for (const auto& g : generators_) basis.push_back(to_sparse(g, order_));
  return from_sparse(ring_, reduce(to_sparse(f, order_), basis, order_));
}

bool GroebnerBasis::is_groebner() const {
  std::vector<Sparse> basis;
  for (const auto& g : generators_) basis.push_back(to_sparse(g, order_));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce(s_polynomial(basis[i], basis[j], order_), basis, order_).empty()) return false;
    }
  }
  return true;
}

bool GroebnerBasis::is_reduced() const {
  std::vector<Monomial> leads;
  for (const auto& g : generators_) {
    leads.push_back(leading_monomial(g, order_));
    if (g.terms().at(leads.back()) != 1) return false;
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (const auto& [m, c] : generators_[i].terms()) {
      for (std::size_t j = 0; j < leads.size(); ++j) {
        if (j != i && leads[j].divides(m)) return false;
      }
    }
  }
  return true;
}

}  // namespace fermat
