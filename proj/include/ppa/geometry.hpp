#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppa/monomial_map.hpp"
#include "ppa/structures.hpp"

namespace ppa {

struct TransportResult {
  RingPtr ring;
  PolyMatrix matrix;  // may carry fractional exponents
  bool polynomial_grade = false;
  /// Present when every entry is polynomial.
  std::optional<PoissonStructure> structure;
};

/// Brackets of the new coordinates, re-expressed in the new coordinates.
TransportResult transport_bracket(const PoissonStructure& ps, const MonomialMap& map);

struct ExtendabilityVerdict {
  std::optional<Exponent> max_degree;
  bool degree_ok = true;
  /// X_k{X_i,X_j}_3 + X_i{X_j,X_k}_3 + X_j{X_k,X_i}_3 for i<j<k.
  std::map<std::array<std::size_t, 3>, PolyExpr> cyclic_residuals;
  /// Only necessary conditions are tested; true means no obstruction found.
  bool extendable_necessary_conditions = true;
};

ExtendabilityVerdict check_projective_extendability(const PoissonStructure& ps);

struct ChartEntry {
  std::size_t i = 0, j = 0;  // indices in psA's ring
  PolyExpr a;                 // psA entry
  PolyExpr b;                 // psB entry after eliminating z
  PolyExpr residual;          // b - kappa * a
  bool agrees = false;
  bool modulo_surface = false;
};

struct ChartComparison {
  bool agree = false;
  std::optional<Rational> kappa;  // b = kappa * a
  PolyExpr z_solution;
  std::vector<ChartEntry> entries;
  std::string reason;
};

/// Solves eliminator = c*z + d = 0 for z (c a monomial), substitutes into psB and
/// compares with psA up to one constant. With a surface polynomial, entries that
/// differ by a multiple of it still count as agreeing (flagged modulo_surface).
ChartComparison chart_compare(const PoissonStructure& psA, const PoissonStructure& psB, const PolyExpr& eliminator,
                              std::string_view z, const std::optional<PolyExpr>& surface = std::nullopt);

/// {x_i,x_j} * dP/dx_k == -(dP/dx_k)^2: the bracket pairs with the residue form
/// dx_i^dx_j / (dP/dx_k) to -1.
bool mukai_pairing_check(const PoissonStructure& ps, const PolyExpr& p, std::size_t i, std::size_t j, std::size_t k);

}  // namespace ppa
