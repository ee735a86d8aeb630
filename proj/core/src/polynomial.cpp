#include "fermat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fermat {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

namespace rings {

const RingPtr& e3_patch() {
  static const RingPtr r = make_ring({"x1", "y1", "x2", "y2", "x3", "y3"});
  return r;
}

const RingPtr& v33_patch() {
  static const RingPtr r = make_ring({"X0", "X1", "X2", "X4", "X5"});
  return r;
}

const RingPtr& e3_homogeneous() {
  static const RingPtr r = make_ring({"x1", "y1", "z1", "x2", "y2", "z2", "x3", "y3", "z3"});
  return r;
}

const RingPtr& p5() {
  static const RingPtr r = make_ring({"X0", "X1", "X2", "X3", "X4", "X5"});
  return r;
}

const RingPtr& p2() {
  static const RingPtr r = make_ring({"X0", "X1", "X2"});
  return r;
}

}  // namespace rings

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (o.exps_[i] > exps_[i]) throw std::invalid_argument("monomial division is not exact");
    r.exps_[i] -= o.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  }
  return true;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// BasicPoly

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::constant(RingPtr ring, const Coeff& c) {
  BasicPoly f(ring);
  f.add_term(Monomial(ring->size()), c);
  return f;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return term(ring, Monomial::variable(ring->size(), *idx), Coeff(1));
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::term(RingPtr ring, Monomial m, const Coeff& c) {
  if (m.size() != ring->size()) throw std::invalid_argument("monomial arity does not match ring");
  BasicPoly f(std::move(ring));
  f.add_term(m, c);
  return f;
}

template <typename Coeff>
std::uint64_t BasicPoly<Coeff>::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

template <typename Coeff>
std::uint32_t BasicPoly<Coeff>::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

template <typename Coeff>
bool BasicPoly<Coeff>::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

template <typename Coeff>
Coeff BasicPoly<Coeff>::constant_term() const {
  auto it = terms_.find(Monomial(ring_->size()));
  return it == terms_.end() ? Coeff(0) : it->second;
}

template <typename Coeff>
void BasicPoly<Coeff>::add_term(const Monomial& m, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

template <typename Coeff>
void BasicPoly<Coeff>::require_same_ring(const BasicPoly& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

template <typename Coeff>
BasicPoly<Coeff>& BasicPoly<Coeff>::operator+=(const BasicPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

template <typename Coeff>
BasicPoly<Coeff>& BasicPoly<Coeff>::operator-=(const BasicPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, Coeff(-c));
  return *this;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::operator+(const BasicPoly& o) const {
  BasicPoly r(*this);
  r += o;
  return r;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::operator-(const BasicPoly& o) const {
  BasicPoly r(*this);
  r -= o;
  return r;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::operator*(const BasicPoly& o) const {
  require_same_ring(o);
  BasicPoly r(ring_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, Coeff(c1 * c2));
  }
  return r;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::operator-() const {
  BasicPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, Coeff(-c));
  return r;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::scaled(const Coeff& k) const {
  BasicPoly r(ring_);
  if (k == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, Coeff(c * k));
  return r;
}

template <typename Coeff>
BasicPoly<Coeff> BasicPoly<Coeff>::pow(unsigned n) const {
  BasicPoly result = constant(ring_, Coeff(1));
  BasicPoly base(*this);
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

namespace {

std::string coeff_text(const mpz_class& c) { return c.get_str(); }
std::string coeff_text(const mpq_class& c) { return c.get_str(); }

}  // namespace

template <typename Coeff>
std::string BasicPoly<Coeff>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Coeff mag = negative ? Coeff(-c) : c;
    const bool unit = (mag == 1);
    if (m.is_one()) {
      os << coeff_text(mag);
      continue;
    }
    if (!unit) os << coeff_text(mag) << '*';
    bool first_var = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << ring_->name(i);
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

template class BasicPoly<mpz_class>;
template class BasicPoly<mpq_class>;

RationalPoly to_rational(const MultiPoly& f) {
  RationalPoly r(f.ring());
  for (const auto& [m, c] : f.terms()) r.add_term(m, mpq_class(c));
  return r;
}

std::optional<MultiPoly> to_integral(const RationalPoly& f) {
  MultiPoly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    r.add_term(m, c.get_num());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

template <typename Coeff>
class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  BasicPoly<Coeff> parse() {
    auto f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  using Poly = BasicPoly<Coeff>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg +
                                " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly sum(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly t = term();
    sum += negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        break;
      }
    }
    return sum;
  }

  Poly term() {
    Poly prod = power();
    while (accept('*')) prod = prod * power();
    return prod;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::string num = read_digits();
      Coeff value{mpz_class(num)};
      if (pos_ < text_.size() && text_[pos_] == '/') {
        if constexpr (std::is_same_v<Coeff, mpq_class>) {
          ++pos_;
          const std::string den = read_digits();
          if (den.empty()) fail("expected denominator");
          value = mpq_class(mpz_class(num), mpz_class(den));
          if (value.get_den() == 0) fail("zero denominator");
          value.canonicalize();
        } else {
          fail("rational coefficient in an integer polynomial");
        }
      }
      return Poly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      if (!ring_->index_of(name)) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::variable(ring_, name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, std::string_view text) { return Parser<mpz_class>(ring, text).parse(); }

RationalPoly parse_rational_poly(const RingPtr& ring, std::string_view text) {
  return Parser<mpq_class>(ring, text).parse();
}

// ---------------------------------------------------------------------------
// MapSpec and pullback

MapSpec::MapSpec(RingPtr source, RingPtr target, std::map<std::string, MultiPoly> assignments)
    : source_(std::move(source)), target_(std::move(target)), assignments_(std::move(assignments)) {
  for (const auto& [name, image] : assignments_) {
    if (!target_->index_of(name)) throw std::invalid_argument("'" + name + "' is not a target variable");
    if (!(*image.ring() == *source_)) {
      throw std::invalid_argument("image of '" + name + "' does not live in the source ring");
    }
  }
}

const MultiPoly& MapSpec::image(std::string_view target_var) const {
  auto it = assignments_.find(std::string(target_var));
  if (it == assignments_.end()) {
    throw std::invalid_argument("variable '" + std::string(target_var) + "' has no assignment");
  }
  return it->second;
}

bool MapSpec::is_complete() const { return unassigned().empty(); }

std::vector<std::string> MapSpec::unassigned() const {
  std::vector<std::string> out;
  for (const auto& name : target_->names()) {
    if (!assignments_.contains(name)) out.push_back(name);
  }
  return out;
}

MapSpec MapSpec::with_assignment(const std::string& target_var, MultiPoly image) const {
  auto copy = assignments_;
  copy.insert_or_assign(target_var, std::move(image));
  return MapSpec(source_, target_, std::move(copy));
}

MultiPoly pullback(const MapSpec& m, const MultiPoly& f) {
  if (!(*f.ring() == *m.target())) throw std::invalid_argument("pullback: polynomial is not on the target ring");
  const auto& target = *m.target();
  std::vector<const MultiPoly*> images(target.size(), nullptr);
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (f.degree_in(i) == 0) continue;
    images[i] = &m.image(target.name(i));
  }
  // Cache image powers; the same power of a variable shows up in many terms.
  std::map<std::pair<std::size_t, std::uint32_t>, MultiPoly> powers;
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images[var]->pow(e)).first;
    return it->second;
  };
  MultiPoly out(m.source());
  for (const auto& [mono, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(m.source(), c);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0) t = t * power_of(i, mono[i]);
    }
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation mod p

FieldElement eval_mod_p(const MultiPoly& f, std::span<const FieldElement> point, const PrimeField& field) {
  if (point.size() != f.ring()->size()) throw std::invalid_argument("point arity does not match ring");
  std::vector<std::uint32_t> residues(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i].modulus() != field.modulus()) throw std::invalid_argument("point lies over a different field");
    residues[i] = point[i].value();
  }
  return FieldElement(ReducedPoly(f, field)(residues), field);
}

FieldElement eval_mod_p(const MultiPoly& f, const std::map<std::string, FieldElement>& point,
                        const PrimeField& field) {
  const auto& ring = *f.ring();
  std::vector<FieldElement> aligned(ring.size(), field.zero());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto it = point.find(ring.name(i));
    if (it != point.end()) {
      aligned[i] = it->second;
    } else if (f.degree_in(i) != 0) {
      throw std::invalid_argument("variable '" + ring.name(i) + "' has no value");
    }
  }
  return eval_mod_p(f, aligned, field);
}

ReducedPoly::ReducedPoly(const MultiPoly& f, const PrimeField& field) : field_(field), nvars_(f.ring()->size()) {
  for (const auto& [m, c] : f.terms()) {
    const auto r = static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), field.modulus()));
    if (r == 0) continue;
    Term t{r, {}};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t.factors.emplace_back(static_cast<std::uint32_t>(i), m[i]);
    }
    terms_.push_back(std::move(t));
  }
}

std::uint32_t ReducedPoly::operator()(std::span<const std::uint32_t> point) const {
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.coeff;
    for (const auto& [var, e] : t.factors) v = field_.mul(v, field_.pow(point[var], e));
    acc = field_.add(acc, v);
  }
  return acc;
}

}  // namespace fermat
