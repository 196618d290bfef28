#pragma once

#include <string_view>
#include <vector>

#include "ppa/polynomial.hpp"

namespace ppa {

/// Invertible monomial change of variables y_a = s_a * prod_i x_i^E[a][i].
/// Rows of E index the new variables, columns the old ones.
class MonomialMap {
 public:
  MonomialMap(RingPtr source, RingPtr target, std::vector<std::vector<Rational>> exponents,
              std::vector<Rational> scales = {});

  static MonomialMap identity(const RingPtr& ring);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<std::vector<Rational>>& exponents() const noexcept { return exps_; }
  const std::vector<Rational>& scales() const noexcept { return scales_; }
  const std::vector<std::vector<Rational>>& inverse_exponents() const noexcept { return inv_; }

  /// The map sending y back to x. Scale factors must have exact rational roots.
  MonomialMap inverse() const;

  /// y_a as polynomials (possibly fractional) in the source variables.
  std::vector<PolyExpr> images() const;
  /// x_i as polynomials (possibly fractional) in the target variables.
  std::vector<PolyExpr> preimages() const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<std::vector<Rational>> exps_;
  std::vector<Rational> scales_;
  std::vector<std::vector<Rational>> inv_;
};

/// Rewrites p (over map.source()) in the target variables.
PolyExpr substitute(const PolyExpr& p, const MonomialMap& map);

/// Lines of the form `map y = c*x1^e1*...;` over the given source ring.
MonomialMap parse_monomial_map(std::string_view text, const RingPtr& source);

std::string to_string(const MonomialMap& map);

}  // namespace ppa
