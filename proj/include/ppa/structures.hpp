#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ppa/exterior.hpp"
#include "ppa/polynomial.hpp"

namespace ppa {

struct TableProvenance {};

struct JacobianProvenance {
  std::vector<PolyExpr> casimirs;
  PolyExpr lambda;
};

using Provenance = std::variant<TableProvenance, JacobianProvenance>;

/// Antisymmetric matrix of polynomial brackets {x_i, x_j}.
class PoissonStructure {
 public:
  /// Validates antisymmetry and polynomial grade.
  static PoissonStructure from_table(const RingPtr& ring, PolyMatrix p);
  /// Upper-triangular entries; everything else is filled in by antisymmetry.
  static PoissonStructure from_upper(const RingPtr& ring, const std::map<std::pair<std::size_t, std::size_t>, PolyExpr>& entries);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return p_.size(); }
  const PolyMatrix& matrix() const noexcept { return p_; }
  const PolyExpr& entry(std::size_t i, std::size_t j) const { return p_.at(i).at(j); }
  const Provenance& provenance() const noexcept { return provenance_; }
  bool is_jacobian() const noexcept { return std::holds_alternative<JacobianProvenance>(provenance_); }

  PolyMultivector bivector() const { return ppa::bivector(ring_, p_); }
  PoissonStructure scaled(const Rational& c) const;

  friend bool operator==(const PoissonStructure& a, const PoissonStructure& b) { return a.p_ == b.p_; }

 private:
  PoissonStructure(RingPtr ring, PolyMatrix p, Provenance prov)
      : ring_(std::move(ring)), p_(std::move(p)), provenance_(std::move(prov)) {}
  friend PoissonStructure jacobian_structure(const RingPtr&, std::span<const PolyExpr>, const PolyExpr&);

  RingPtr ring_;
  PolyMatrix p_;
  Provenance provenance_;
};

/// {f,g} = lambda * (df ^ dg ^ dQ_1 ^ ... ^ dQ_{n-2}) / vol on the coordinates.
PoissonStructure jacobian_structure(const RingPtr& ring, std::span<const PolyExpr> casimirs, const PolyExpr& lambda);

PolyExpr bracket_of(const PoissonStructure& ps, const PolyExpr& f, const PolyExpr& g);

/// {x_i,{x_j,x_k}} + cyclic.
PolyExpr jacobiator(const PoissonStructure& ps, std::size_t i, std::size_t j, std::size_t k);

struct JacobiWitness {
  std::size_t i, j, k;
  PolyExpr residual;
};

struct JacobiReport {
  bool holds = true;
  std::vector<JacobiWitness> witnesses;
};

JacobiReport check_jacobi(const PoissonStructure& ps);

bool is_casimir(const PoissonStructure& ps, const PolyExpr& q);
bool is_quasi_casimir(const PoissonStructure& ps, const PolyExpr& q);

struct PluckerReport {
  bool rank_le_2 = true;
  std::optional<std::array<std::size_t, 4>> witness;
  PolyExpr value;
};

/// All 4x4 principal Pfaffians vanish.
PluckerReport plucker_rank2_test(const PoissonStructure& ps);

/// Rank of a rational matrix by exact elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m);

/// Max rank of the bracket matrix over seeded points of the grid {-7..7}\{0} / 3.
std::size_t generic_rank(const PoissonStructure& ps, std::size_t samples, std::uint64_t seed);

/// (n-m)-ary bracket lambda * (df_1 ^ ... ^ df_r ^ dQ_1 ^ ... ^ dQ_m) / vol.
class NambuStructure {
 public:
  NambuStructure(RingPtr ring, std::vector<PolyExpr> casimirs, PolyExpr lambda);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return ring_->size(); }
  std::size_t arity() const noexcept { return dim() - casimirs_.size(); }
  const std::vector<PolyExpr>& casimirs() const noexcept { return casimirs_; }
  const PolyExpr& lambda() const noexcept { return lambda_; }

 private:
  RingPtr ring_;
  std::vector<PolyExpr> casimirs_;
  PolyExpr lambda_;
  PolyForm casimir_form_;
  friend PolyExpr nambu_bracket(const NambuStructure&, std::span<const PolyExpr>);
};

PolyExpr nambu_bracket(const NambuStructure& ns, std::span<const PolyExpr> args);

struct FundamentalIdentityReport {
  bool holds = true;
  PolyExpr residual;
};

/// args = (f_1..f_{r-1}, g_1..g_r); residual is
/// {f, {g_1..g_r}} - sum_i {g_1.., {f, g_i}, ..g_r}.
FundamentalIdentityReport check_fundamental_identity(const NambuStructure& ns, std::span<const PolyExpr> args);

/// Same identity for any r-ary bracket (r = 2 gives the Jacobi identity on the arguments).
using BracketFn = std::function<PolyExpr(std::span<const PolyExpr>)>;
FundamentalIdentityReport check_fundamental_identity(const BracketFn& bracket, std::size_t arity,
                                                     std::span<const PolyExpr> args);

std::string to_string(const PoissonStructure& ps);

}  // namespace ppa
