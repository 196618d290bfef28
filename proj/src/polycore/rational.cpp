#include "ppa/rational.hpp"

#include <cmath>
#include <limits>

#include "ppa/errors.hpp"

namespace ppa {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw DivisionByZeroError("rational literal with zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZeroError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::optional<mpz_class> integer_root(const mpz_class& value, std::uint64_t k) {
  if (value < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(-value, k);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& value, std::uint64_t k) {
  if (k == 0) throw DomainError("zeroth root");
  auto num = integer_root(value.get_num(), k);
  auto den = integer_root(value.get_den(), k);
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

long double to_long_double(const Rational& value) {
  const auto& num = value.get_num();
  const auto& den = value.get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    return static_cast<long double>(num.get_si()) / static_cast<long double>(den.get_si());
  }
  return static_cast<long double>(value.get_d());
}

}  // namespace ppa
