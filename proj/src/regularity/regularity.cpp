#include "ppa/regularity.hpp"

#include "ppa/errors.hpp"

namespace ppa {

Rational factorial(std::size_t m) {
  Rational f = 1;
  for (std::size_t k = 2; k <= m; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

Theorem31Report theorem31_check(const PoissonStructure& ps, std::span<const PolyExpr> casimirs) {
  const std::size_t n = ps.dim();
  const std::size_t l = casimirs.size();
  if (l > n || (n - l) % 2) {
    throw ParityError("n - l = " + std::to_string(static_cast<long>(n) - static_cast<long>(l)) + " is not even");
  }
  for (const auto& q : casimirs) {
    if (!is_casimir(ps, q)) throw ContractViolation("not a Casimir: " + to_string(q));
  }
  Theorem31Report rep;
  rep.residual = PolyMultivector(ps.ring(), n, n - l);
  rep.m = (n - l) / 2;
  const PolyMultivector M = wedge_power(ps.bivector(), rep.m);
  const PolyMultivector D = volume_dual(wedge_differentials(ps.ring(), casimirs));
  const Rational mfact = factorial(rep.m);

  for (Subset s : subsets_of_size(n, 2 * rep.m)) {
    SubsetComparison c{s, pfaffian(ps.matrix(), s).over(ps.ring()), M.coefficient(s), D.coefficient(s)};
    if (!(c.wedge == c.pfaffian.scaled(mfact))) rep.wedge_pfaffian_consistent = false;
    rep.subsets.push_back(std::move(c));
  }

  if (D.is_zero()) {
    if (!M.is_zero()) throw DegenerateCasimirError("dQ_1^...^dQ_l vanishes identically while the wedge power does not");
    rep.reason = "both sides vanish identically";
    rep.residual = M;
    return rep;
  }

  const auto& pivot = *std::find_if(rep.subsets.begin(), rep.subsets.end(),
                                    [](const SubsetComparison& c) { return !c.minor.is_zero(); });
  bool proportional = true;
  for (const auto& c : rep.subsets) {
    if (!(c.wedge * pivot.minor == pivot.wedge * c.minor)) {
      proportional = false;
      break;
    }
  }
  if (!proportional) {
    rep.reason = "coefficient ratios differ between subsets";
    rep.residual = M;
    return rep;
  }
  const DivisionResult q = exact_divisibility(pivot.wedge, pivot.minor);
  if (!q.divisible || !q.quotient->is_constant()) {
    if (q.divisible) rep.nonconstant_ratio = *q.quotient;
    rep.reason = "ratio is not a constant";
    rep.residual = M;
    return rep;
  }
  const Rational lam = q.quotient->constant_term();
  rep.lambda = lam;
  rep.lambda_prime = lam / mfact;
  rep.residual = M - D.scaled(PolyExpr(lam));
  rep.holds = lam != 0 && rep.residual.is_zero();
  if (!rep.holds) rep.reason = lam == 0 ? "lambda is zero" : "nonzero residual";
  return rep;
}

DegreeSumReport degree_sum_check(std::span<const PolyExpr> casimirs, std::size_t n, std::span<const Exponent> weights,
                                 DegreeMode mode) {
  std::vector<Exponent> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(n, Exponent(1));
  if (w.size() != n) throw ContractViolation("weight count does not match dimension");
  DegreeSumReport rep;
  for (const auto& q : casimirs) {
    if (q.is_zero()) throw HomogeneityError("zero Casimir has no degree");
    if (mode == DegreeMode::homogeneous && !q.is_homogeneous(w)) {
      throw HomogeneityError("not weighted-homogeneous: " + to_string(q));
    }
    rep.sum_of_degrees += *q.weighted_degree(w);
  }
  for (const auto& x : w) rep.weight_total += x;
  rep.equals_dimension = rep.sum_of_degrees == rep.weight_total;
  return rep;
}

}  // namespace ppa
