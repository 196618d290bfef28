#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppa/exterior.hpp"
#include "ppa/structures.hpp"

namespace ppa {

struct SubsetComparison {
  Subset subset = 0;
  PolyExpr pfaffian;  // principal Pfaffian of the bracket matrix
  PolyExpr wedge;     // coefficient of the wedge power
  PolyExpr minor;     // coefficient of the dual of dQ_1^...^dQ_l
};

struct Theorem31Report {
  bool holds = false;
  std::size_t m = 0;  // wedge power (n-l)/2
  /// pi^m = lambda * dual(dQ); nullopt when the ratio is not a constant.
  std::optional<Rational> lambda;
  /// lambda / m!, the normalization of the coordinate form.
  std::optional<Rational> lambda_prime;
  std::optional<PolyExpr> nonconstant_ratio;
  PolyMultivector residual{nullptr, 0, 0};
  std::vector<SubsetComparison> subsets;
  /// wedge coefficient == m! * Pfaffian on every subset.
  bool wedge_pfaffian_consistent = true;
  std::string reason;
};

/// Compares pi^((n-l)/2) with the volume dual of dQ_1^...^dQ_l. Casimirs must be
/// genuine Casimirs of ps.
Theorem31Report theorem31_check(const PoissonStructure& ps, std::span<const PolyExpr> casimirs);

enum class DegreeMode {
  homogeneous,  // every Casimir must be weighted-homogeneous
  leading_form  // use the top weighted-homogeneous component
};

struct DegreeSumReport {
  Exponent sum_of_degrees;
  Exponent weight_total;
  bool equals_dimension = false;
};

DegreeSumReport degree_sum_check(std::span<const PolyExpr> casimirs, std::size_t n, std::span<const Exponent> weights,
                                 DegreeMode mode = DegreeMode::homogeneous);

Rational factorial(std::size_t m);

}  // namespace ppa
