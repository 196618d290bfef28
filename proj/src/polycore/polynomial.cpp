#include "ppa/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ppa/errors.hpp"

namespace ppa {

// ---------------------------------------------------------------- Exponent

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("exponent arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Exponent make_exponent(__int128 num, __int128 den) {
  if (den == 0) throw DivisionByZeroError("exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Exponent(narrow(num), narrow(den));
}

}  // namespace

Exponent::Exponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw DivisionByZeroError("exponent with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Exponent Exponent::from_rational(const Rational& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw std::overflow_error("exponent does not fit in 64 bits");
  return Exponent(r.get_num().get_si(), r.get_den().get_si());
}

std::string Exponent::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Exponent operator+(Exponent a, Exponent b) {
  if (a.den_ == 1 && b.den_ == 1) return Exponent(narrow(static_cast<__int128>(a.num_) + b.num_), 1);
  return make_exponent(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
}

Exponent operator-(Exponent a, Exponent b) { return a + (-b); }

Exponent operator*(Exponent a, Exponent b) {
  return make_exponent(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw VariableSetError("duplicate variable '" + names_[i] + "'");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

RingPtr numbered_ring(std::string_view prefix, std::size_t n, bool zero_based) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(zero_based ? i : i + 1));
  return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (const auto& e : exps_) degree_ += e;
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, Exponent e) {
  std::vector<Exponent> v(nvars);
  v.at(var) = e;
  return Monomial(std::move(v));
}

Exponent Monomial::weighted_degree(std::span<const Exponent> weights) const {
  if (weights.size() != exps_.size()) throw VariableSetError("weight tuple does not match variable count");
  Exponent d;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += exps_[i] * weights[i];
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](const Exponent& e) { return e.is_zero(); });
}

bool Monomial::polynomial_grade() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](const Exponent& e) { return e.is_natural(); });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (!(other.exps_[i] - exps_[i]).is_natural()) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps_.empty()) return o;
  if (o.exps_.empty()) return *this;
  std::vector<Exponent> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] + o.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::operator/(const Monomial& o) const {
  std::vector<Exponent> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] - o.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::scaled(Exponent factor) const {
  std::vector<Exponent> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] * factor;
  return Monomial(std::move(v));
}

Monomial Monomial::with_exponent(std::size_t var, Exponent e) const {
  auto v = exps_;
  v.at(var) = e;
  return Monomial(std::move(v));
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() > b.size();
}

// ---------------------------------------------------------------- PolyExpr

PolyExpr::PolyExpr(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

PolyExpr::PolyExpr(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Monomial::one(nvars()), c);
}

PolyExpr PolyExpr::variable(const RingPtr& ring, std::size_t var) {
  if (!ring || var >= ring->size()) throw VariableSetError("variable index out of range");
  return term(ring, Monomial::unit(ring->size(), var), Rational(1));
}

PolyExpr PolyExpr::variable(const RingPtr& ring, std::string_view name) {
  auto idx = ring ? ring->index_of(name) : std::nullopt;
  if (!idx) throw VariableSetError("unknown variable '" + std::string(name) + "'");
  return variable(ring, *idx);
}

PolyExpr PolyExpr::term(const RingPtr& ring, Monomial m, const Rational& c) {
  if (m.size() != (ring ? ring->size() : 0)) throw VariableSetError("monomial length does not match ring");
  PolyExpr p;
  p.ring_ = ring;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool PolyExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational PolyExpr::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return Rational(0);
}

std::pair<Monomial, Rational> PolyExpr::leading_term() const {
  if (terms_.empty()) return {Monomial::one(nvars()), Rational(0)};
  return *terms_.begin();
}

Rational PolyExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool PolyExpr::polynomial_grade() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.polynomial_grade(); });
}

std::optional<Exponent> PolyExpr::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

std::optional<Exponent> PolyExpr::weighted_degree(std::span<const Exponent> weights) const {
  std::optional<Exponent> best;
  for (const auto& [m, c] : terms_) {
    Exponent d = m.is_one() ? Exponent() : m.weighted_degree(weights);
    if (!best || d > *best) best = d;
  }
  return best;
}

bool PolyExpr::is_homogeneous(std::span<const Exponent> weights) const {
  std::optional<Exponent> d;
  for (const auto& [m, c] : terms_) {
    Exponent e = m.is_one() ? Exponent() : m.weighted_degree(weights);
    if (d && *d != e) return false;
    d = e;
  }
  return true;
}

std::optional<Exponent> PolyExpr::degree_in(std::size_t var) const {
  std::optional<Exponent> best;
  for (const auto& [m, c] : terms_) {
    Exponent e = m.is_one() ? Exponent() : m[var];
    if (!best || e > *best) best = e;
  }
  return best;
}

std::map<Exponent, PolyExpr> PolyExpr::homogeneous_components(std::span<const Exponent> weights) const {
  std::map<Exponent, PolyExpr> out;
  for (const auto& [m, c] : terms_) {
    Exponent d = m.is_one() ? Exponent() : m.weighted_degree(weights);
    auto [it, inserted] = out.try_emplace(d);
    if (inserted) it->second.ring_ = ring_;
    it->second.add_term(m, c);
  }
  return out;
}

std::map<Exponent, PolyExpr> PolyExpr::homogeneous_components() const {
  std::vector<Exponent> ones(nvars(), Exponent(1));
  return homogeneous_components(ones);
}

PolyExpr PolyExpr::over(const RingPtr& ring) const {
  if (same_ring(ring_, ring)) {
    PolyExpr p = *this;
    p.ring_ = ring;
    return p;
  }
  if (!is_constant()) throw VariableSetError("variable sets differ");
  return ring ? PolyExpr(ring, constant_term()) : PolyExpr(constant_term());
}

void PolyExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

namespace {

// Brings two operands onto a common ring; constants adopt the other ring.
RingPtr common_ring(const PolyExpr& a, const PolyExpr& b) {
  if (same_ring(a.ring(), b.ring())) return a.ring() ? a.ring() : b.ring();
  if (a.is_constant()) return b.ring();
  if (b.is_constant()) return a.ring();
  throw VariableSetError("mismatched variable sets");
}

Monomial fit(const Monomial& m, std::size_t n) {
  if (m.size() == n) return m;
  if (m.is_one()) return Monomial::one(n);
  throw VariableSetError("monomial length does not match ring");
}

}  // namespace

PolyExpr& PolyExpr::operator+=(const PolyExpr& o) {
  RingPtr r = common_ring(*this, o);
  if (!same_ring(ring_, r)) *this = over(r);
  ring_ = r;
  for (const auto& [m, c] : o.terms_) add_term(fit(m, nvars()), c);
  return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& o) { return *this += -o; }

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  RingPtr r = common_ring(a, b);
  PolyExpr out;
  out.ring_ = r;
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = r ? r->size() : 0;
  for (const auto& [ma, ca] : a.terms_) {
    const Monomial fa = fit(ma, n);
    for (const auto& [mb, cb] : b.terms_) out.add_term(fa * fit(mb, n), ca * cb);
  }
  return out;
}

PolyExpr& PolyExpr::operator*=(const PolyExpr& o) { return *this = *this * o; }

PolyExpr PolyExpr::scaled(const Rational& c) const {
  PolyExpr p;
  p.ring_ = ring_;
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

bool operator==(const PolyExpr& a, const PolyExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (!same_ring(a.ring_, b.ring_)) {
    if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
    return false;
  }
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------- free functions

PolyExpr poly_arith(const PolyExpr& a, const PolyExpr& b, ArithOp op) {
  if (!a.is_constant() && !b.is_constant() && !same_ring(a.ring(), b.ring()))
    throw VariableSetError("poly_arith: operands live over different variable sets");
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw ContractViolation("unknown arithmetic op");
}

PolyExpr pow(const PolyExpr& p, Exponent e) {
  if (e.is_natural()) {
    PolyExpr result = PolyExpr(p.ring(), Rational(1));
    PolyExpr base = p;
    auto n = e.num();
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }
  if (p.term_count() != 1) {
    if (p.is_zero()) throw DivisionByZeroError("zero raised to a non-natural power");
    throw DomainError("non-natural power of a polynomial with several terms");
  }
  const auto& [m, c] = *p.terms().begin();
  Rational coef;
  if (c == 1) {
    coef = 1;
  } else {
    auto root = exact_root(c, static_cast<std::uint64_t>(e.den()));
    if (!root) throw DomainError("coefficient " + to_string(c) + " has no exact root of order " + std::to_string(e.den()));
    coef = pow(*root, e.num());
  }
  return PolyExpr::term(p.ring(), m.scaled(e), coef);
}

PolyExpr partial_derivative(const PolyExpr& p, std::size_t var) {
  if (var >= p.nvars()) {
    if (p.nvars() == 0) return PolyExpr(p.ring(), Rational(0));
    throw VariableSetError("derivative variable out of range");
  }
  PolyExpr out(p.ring(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m[var];
    if (e.is_zero()) continue;
    out += PolyExpr::term(p.ring(), m.with_exponent(var, e - Exponent(1)), c * e.to_rational());
  }
  return out;
}

PolyExpr partial_derivative(const PolyExpr& p, std::string_view var) {
  auto idx = p.ring() ? p.ring()->index_of(var) : std::nullopt;
  if (!idx) throw VariableSetError("unknown variable '" + std::string(var) + "'");
  return partial_derivative(p, *idx);
}

PolyExpr substitute_variable(const PolyExpr& p, std::size_t var, const PolyExpr& replacement) {
  if (p.nvars() == 0) return p;
  if (var >= p.nvars()) throw VariableSetError("substitution variable out of range");
  const PolyExpr repl = replacement.over(p.ring());
  PolyExpr out(p.ring(), Rational(0));
  std::map<std::int64_t, PolyExpr> powers;
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m[var];
    if (!e.is_natural()) throw DomainError("substitution requires a natural exponent on the replaced variable");
    auto it = powers.find(e.num());
    if (it == powers.end()) it = powers.emplace(e.num(), pow(repl, e)).first;
    out += PolyExpr::term(p.ring(), m.with_exponent(var, Exponent(0)), c) * it->second;
  }
  return out;
}

PolyExpr rename(const PolyExpr& p, const RingPtr& target) {
  if (p.nvars() == 0) return p.over(target);
  if (!target || target->size() != p.nvars()) throw VariableSetError("rename: variable counts differ");
  PolyExpr out(target, Rational(0));
  for (const auto& [m, c] : p.terms()) out += PolyExpr::term(target, m, c);
  return out;
}

DivisionResult exact_divisibility(const PolyExpr& p, const PolyExpr& q) {
  if (q.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
  if (!p.polynomial_grade() || !q.polynomial_grade())
    throw DomainError("exact_divisibility requires polynomial-grade operands");
  RingPtr ring = p.nvars() ? p.ring() : q.ring();
  PolyExpr rem = p.over(ring);
  const PolyExpr divisor = q.over(ring);
  const auto [lm, lc] = divisor.leading_term();
  PolyExpr quotient(ring, Rational(0));
  PolyExpr remainder(ring, Rational(0));
  while (!rem.is_zero()) {
    const auto [m, c] = rem.leading_term();
    if (lm.divides(m)) {
      PolyExpr t = PolyExpr::term(ring, m / lm, c / lc);
      quotient += t;
      rem -= t * divisor;
    } else {
      PolyExpr t = PolyExpr::term(ring, m, c);
      remainder += t;
      rem -= t;
    }
  }
  DivisionResult r;
  r.divisible = remainder.is_zero();
  if (r.divisible) r.quotient = std::move(quotient);
  r.remainder = std::move(remainder);
  return r;
}

Rational evaluate(const PolyExpr& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw VariableSetError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Exponent e = m[i];
      if (e.is_zero()) continue;
      Rational base = point[i];
      if (!e.is_integer()) {
        if (base < 0 && e.den() % 2 == 0) throw DomainError("negative base with fractional exponent");
        auto root = exact_root(base, static_cast<std::uint64_t>(e.den()));
        if (!root) throw DomainError("no exact rational root at evaluation point");
        base = *root;
      }
      v *= pow(base, e.num());
    }
    total += v;
  }
  return total;
}

double evaluate(const PolyExpr& p, std::span<const double> point) {
  if (point.size() != p.nvars()) throw VariableSetError("evaluation point has wrong dimension");
  double total = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double v = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Exponent e = m[i];
      if (e.is_zero()) continue;
      if (e.is_integer()) {
        v *= std::pow(point[i], static_cast<double>(e.num()));
      } else {
        if (point[i] < 0) throw DomainError("negative base with fractional exponent");
        v *= std::pow(point[i], static_cast<double>(e.num()) / static_cast<double>(e.den()));
      }
    }
    total += v;
  }
  return total;
}

// ---------------------------------------------------------------- rendering

std::string to_string(const PolyExpr& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Exponent e = m[i];
      if (e.is_zero()) continue;
      if (!factors.empty()) factors += "*";
      factors += p.ring()->name(i);
      if (e == Exponent(1)) continue;
      factors += e.is_natural() ? "^" + e.to_string() : "^(" + e.to_string() + ")";
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

}  // namespace ppa
