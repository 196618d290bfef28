#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/rational.hpp"

namespace ppa {

// ---------------------------------------------------------------------------
// Exponent: a small exact fraction. Polynomial-grade monomials only ever use
// nonnegative integers; fractional and negative values appear during
// monomial changes of variables and Laurent eliminations.
// ---------------------------------------------------------------------------
class Exponent {
 public:
  constexpr Exponent() = default;
  Exponent(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_natural() const noexcept { return den_ == 1 && num_ >= 0; }

  Rational to_rational() const { return make_rational(num_, den_); }
  static Exponent from_rational(const Rational& r);

  std::string to_string() const;

  friend Exponent operator+(Exponent a, Exponent b);
  friend Exponent operator-(Exponent a, Exponent b);
  friend Exponent operator*(Exponent a, Exponent b);
  Exponent operator-() const { return Exponent(-num_, den_); }
  Exponent& operator+=(Exponent o) { return *this = *this + o; }

  friend bool operator==(Exponent a, Exponent b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// ---------------------------------------------------------------------------
// Ring: the ordered list of variable names a polynomial lives over.
// ---------------------------------------------------------------------------
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// "x1".."xn" (or prefix0..prefix{n-1} when zero_based).
RingPtr numbered_ring(std::string_view prefix, std::size_t n, bool zero_based = false);

bool same_ring(const RingPtr& a, const RingPtr& b);

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars)); }
  static Monomial unit(std::size_t nvars, std::size_t var, Exponent e = Exponent(1));

  std::size_t size() const noexcept { return exps_.size(); }
  const Exponent& operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  Exponent degree() const noexcept { return degree_; }
  Exponent weighted_degree(std::span<const Exponent> weights) const;

  bool is_one() const noexcept;
  bool polynomial_grade() const noexcept;
  /// True iff this divides other with a polynomial-grade cofactor.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial scaled(Exponent factor) const;
  Monomial with_exponent(std::size_t var, Exponent e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_;
};

/// Graded lexicographic order, largest first. Used as the term-map comparator
/// so that begin() is always the leading term.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// ---------------------------------------------------------------------------
// PolyExpr: sparse multivariate polynomial with rational coefficients.
// A polynomial without a ring is a constant and adopts the ring of whatever
// it is combined with.
// ---------------------------------------------------------------------------
class PolyExpr {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  PolyExpr() = default;
  PolyExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  PolyExpr(std::int64_t c) : PolyExpr(make_rational(c)) {}  // NOLINT(google-explicit-constructor)
  PolyExpr(RingPtr ring, const Rational& c);

  static PolyExpr variable(const RingPtr& ring, std::size_t var);
  static PolyExpr variable(const RingPtr& ring, std::string_view name);
  static PolyExpr term(const RingPtr& ring, Monomial m, const Rational& c);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_ ? ring_->size() : 0; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Coefficient of the leading (grlex-largest) term; zero for the zero polynomial.
  std::pair<Monomial, Rational> leading_term() const;
  Rational coefficient(const Monomial& m) const;

  bool polynomial_grade() const;
  /// Maximal total degree; nullopt for the zero polynomial.
  std::optional<Exponent> degree() const;
  std::optional<Exponent> weighted_degree(std::span<const Exponent> weights) const;
  bool is_homogeneous(std::span<const Exponent> weights) const;
  /// Total degree of the monomials in a single variable.
  std::optional<Exponent> degree_in(std::size_t var) const;
  /// Weighted-homogeneous components keyed by weighted degree.
  std::map<Exponent, PolyExpr> homogeneous_components(std::span<const Exponent> weights) const;
  std::map<Exponent, PolyExpr> homogeneous_components() const;

  /// Returns a copy expressed over the given ring (constants are promoted;
  /// otherwise the variable lists must agree).
  PolyExpr over(const RingPtr& ring) const;

  PolyExpr operator-() const;
  PolyExpr& operator+=(const PolyExpr& o);
  PolyExpr& operator-=(const PolyExpr& o);
  PolyExpr& operator*=(const PolyExpr& o);
  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  PolyExpr scaled(const Rational& c) const;

  friend bool operator==(const PolyExpr& a, const PolyExpr& b);

 private:
  void add_term(const Monomial& m, const Rational& c);
  friend class PolyBuilder;

  RingPtr ring_;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

/// Ring-checked binary arithmetic; throws VariableSetError on mismatched rings.
PolyExpr poly_arith(const PolyExpr& a, const PolyExpr& b, ArithOp op);

/// p^e. Natural e works for any p; other exponents require a single term whose
/// coefficient has an exact rational e-th power.
PolyExpr pow(const PolyExpr& p, Exponent e);

PolyExpr partial_derivative(const PolyExpr& p, std::size_t var);
PolyExpr partial_derivative(const PolyExpr& p, std::string_view var);

/// Replace a variable (appearing with natural exponents only) by a polynomial
/// over the same ring.
PolyExpr substitute_variable(const PolyExpr& p, std::size_t var, const PolyExpr& replacement);

/// Relabel onto another ring with the same number of variables.
PolyExpr rename(const PolyExpr& p, const RingPtr& target);

struct DivisionResult {
  bool divisible = false;
  std::optional<PolyExpr> quotient;
  PolyExpr remainder;
};

/// Single-divisor reduction under graded-lex order.
DivisionResult exact_divisibility(const PolyExpr& p, const PolyExpr& q);

Rational evaluate(const PolyExpr& p, std::span<const Rational> point);
double evaluate(const PolyExpr& p, std::span<const double> point);

/// Canonical text: terms in descending grlex order, `coef*x1^e1*...`,
/// fractional or negative exponents parenthesised as `x^(p/q)`.
std::string to_string(const PolyExpr& p);

/// Name lookup for identifiers that are not ring variables (parameters,
/// named polynomials). Returns nullopt for unknown names.
using NameResolver = std::function<std::optional<PolyExpr>(std::string_view)>;

/// Parses polyexpr text over the ring. Accepts everything `to_string` emits.
PolyExpr parse_poly(std::string_view text, const RingPtr& ring, const NameResolver& resolve = {});

}  // namespace ppa
