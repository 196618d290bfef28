#include "ppa/monomial_map.hpp"

#include <optional>

#include "ppa/detail/lexer.hpp"
#include "ppa/errors.hpp"

namespace ppa {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::optional<Matrix> invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// prod_a s_a^{f_a} for rational f, exactly.
Rational scale_power(const std::vector<Rational>& scales, const std::vector<Rational>& f) {
  Rational out = 1;
  for (std::size_t a = 0; a < scales.size(); ++a) {
    if (f[a] == 0 || scales[a] == 1) continue;
    const Exponent e = Exponent::from_rational(f[a]);
    const auto root = exact_root(scales[a], static_cast<std::uint64_t>(e.den()));
    if (!root) throw DomainError("scale factor " + to_string(scales[a]) + " has no exact root of order " + std::to_string(e.den()));
    out *= pow(*root, e.num());
  }
  return out;
}

}  // namespace

MonomialMap::MonomialMap(RingPtr source, RingPtr target, Matrix exponents, std::vector<Rational> scales)
    : source_(std::move(source)), target_(std::move(target)), exps_(std::move(exponents)), scales_(std::move(scales)) {
  const std::size_t n = source_->size();
  if (target_->size() != n || exps_.size() != n) throw SingularMapError("monomial map must be square");
  for (const auto& row : exps_) {
    if (row.size() != n) throw SingularMapError("monomial map must be square");
  }
  if (scales_.empty()) scales_.assign(n, Rational(1));
  if (scales_.size() != n) throw ContractViolation("scale factor count does not match variable count");
  for (const auto& s : scales_) {
    if (s == 0) throw SingularMapError("zero scale factor");
  }
  auto inv = invert(exps_);
  if (!inv) throw SingularMapError("exponent matrix is singular");
  inv_ = std::move(*inv);
}

MonomialMap MonomialMap::identity(const RingPtr& ring) {
  const std::size_t n = ring->size();
  Matrix e(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return MonomialMap(ring, ring, e);
}

MonomialMap MonomialMap::inverse() const {
  // x_i = prod_a (y_a / s_a)^{inv[i][a]}
  const std::size_t n = exps_.size();
  std::vector<Rational> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> f(n);
    for (std::size_t a = 0; a < n; ++a) f[a] = -inv_[i][a];
    s[i] = scale_power(scales_, f);
  }
  return MonomialMap(target_, source_, inv_, s);
}

std::vector<PolyExpr> MonomialMap::images() const {
  std::vector<PolyExpr> out;
  for (std::size_t a = 0; a < exps_.size(); ++a) {
    std::vector<Exponent> e;
    for (const auto& r : exps_[a]) e.push_back(Exponent::from_rational(r));
    out.push_back(PolyExpr::term(source_, Monomial(std::move(e)), scales_[a]));
  }
  return out;
}

std::vector<PolyExpr> MonomialMap::preimages() const {
  const std::size_t n = exps_.size();
  std::vector<PolyExpr> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Exponent> e(n);
    e[i] = Exponent(1);
    out.push_back(substitute(PolyExpr::term(source_, Monomial(std::move(e)), Rational(1)), *this));
  }
  return out;
}

PolyExpr substitute(const PolyExpr& p, const MonomialMap& map) {
  if (p.is_constant()) return PolyExpr(map.target(), p.constant_term());
  if (!same_ring(p.ring(), map.source()) && !(*p.ring() == *map.source())) {
    throw VariableSetError("polynomial is not over the map's source variables");
  }
  const std::size_t n = map.exponents().size();
  const auto& Einv = map.inverse_exponents();
  PolyExpr out(map.target(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    // x^e = (y/s)^{e E^{-1}}
    std::vector<Rational> f(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < n; ++i) f[a] += m[i].to_rational() * Einv[i][a];
    }
    std::vector<Exponent> ye(n);
    std::vector<Rational> neg(n);
    for (std::size_t a = 0; a < n; ++a) {
      ye[a] = Exponent::from_rational(f[a]);
      neg[a] = -f[a];
    }
    out += PolyExpr::term(map.target(), Monomial(std::move(ye)), c * scale_power(map.scales(), neg));
  }
  return out;
}

MonomialMap parse_monomial_map(std::string_view text, const RingPtr& source) {
  detail::TokenCursor cur(detail::tokenize(text));
  std::vector<std::string> names;
  Matrix rows;
  std::vector<Rational> scales;
  while (!cur.at_end()) {
    if (!cur.accept_word("map")) cur.fail("expected 'map'");
    const detail::Token& name = cur.expect_identifier("new variable name");
    for (const auto& n : names) {
      if (n == name.text) cur.fail_at(name, "duplicate map variable");
    }
    cur.expect('=', "'='");
    const detail::Token& start = cur.peek();
    PolyExpr img = detail::parse_expression(cur, source, {});
    cur.expect(';', "';'");
    if (img.term_count() != 1 || img.is_constant()) cur.fail_at(start, "map image must be a single monomial");
    const auto [m, c] = img.leading_term();
    std::vector<Rational> row;
    for (std::size_t i = 0; i < m.size(); ++i) row.push_back(m[i].to_rational());
    names.push_back(name.text);
    rows.push_back(std::move(row));
    scales.push_back(c);
  }
  if (names.size() != source->size()) {
    throw ParseError("map needs one line per variable (" + std::to_string(source->size()) + ")", 1, 1, "");
  }
  return MonomialMap(source, make_ring(names), rows, scales);
}

std::string to_string(const MonomialMap& map) {
  std::string out;
  const auto imgs = map.images();
  for (std::size_t a = 0; a < imgs.size(); ++a) {
    out += "map " + map.target()->name(a) + " = " + to_string(imgs[a]) + ";\n";
  }
  return out;
}

}  // namespace ppa
