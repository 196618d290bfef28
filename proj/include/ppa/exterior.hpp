#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ppa/polynomial.hpp"

namespace ppa {

inline constexpr std::size_t kMaxDimension = 8;

/// Index subsets of {0..n-1} as bitmasks.
using Subset = std::uint32_t;

inline std::size_t subset_size(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }
std::vector<std::size_t> subset_indices(Subset s);
Subset make_subset(std::span<const std::size_t> indices);
Subset full_subset(std::size_t n);
/// All subsets of {0..n-1} with k elements, ascending as bitmasks.
std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k);
/// (-1)^{#{(s,t): s in S, t in T, s > t}}: the sign that sorts the concatenation (S,T).
int shuffle_sign(Subset s, Subset t);

using PolyMatrix = std::vector<std::vector<PolyExpr>>;

enum class ExteriorKind { form, multivector };

/// Homogeneous element of grade k: sorted k-subsets mapped to polynomial coefficients.
template <ExteriorKind Kind>
class Exterior {
 public:
  Exterior(RingPtr ring, std::size_t dim, std::size_t grade);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t grade() const noexcept { return grade_; }
  const std::map<Subset, PolyExpr>& coefficients() const noexcept { return coeffs_; }

  PolyExpr coefficient(Subset s) const;
  void set(Subset s, const PolyExpr& value);
  void add(Subset s, const PolyExpr& value);
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Exterior& operator+=(const Exterior& o);
  Exterior& operator-=(const Exterior& o);
  Exterior scaled(const PolyExpr& f) const;
  Exterior operator-() const { return scaled(PolyExpr(Rational(-1))); }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingPtr ring_;
  std::size_t dim_;
  std::size_t grade_;
  std::map<Subset, PolyExpr> coeffs_;
};

using PolyForm = Exterior<ExteriorKind::form>;
using PolyMultivector = Exterior<ExteriorKind::multivector>;

extern template class Exterior<ExteriorKind::form>;
extern template class Exterior<ExteriorKind::multivector>;

/// Exterior product. Grade overflow yields the zero element of grade > n.
template <ExteriorKind K>
Exterior<K> wedge(const Exterior<K>& a, const Exterior<K>& b);

/// dx_i
PolyForm basis_form(const RingPtr& ring, std::size_t i);
/// df = sum_i (df/dx_i) dx_i
PolyForm differential(const PolyExpr& f);
/// df_1 ^ ... ^ df_k (the unit 0-form when the list is empty)
PolyForm wedge_differentials(const RingPtr& ring, std::span<const PolyExpr> fs);

/// Coefficient on the complement T of S is sign(S,T) times the coefficient on S.
PolyMultivector volume_dual(const PolyForm& form);
PolyForm volume_dual(const PolyMultivector& mv);

/// Coefficient of dx_1^...^dx_n in a top-grade form.
PolyExpr top_coefficient(const PolyForm& form);

/// sum_{i<j} p_ij d_i ^ d_j
PolyMultivector bivector(const RingPtr& ring, const PolyMatrix& p);
PolyMultivector wedge_power(const PolyMultivector& a, std::size_t m);

/// Pfaffian of the principal submatrix taken in the given row order.
PolyExpr pfaffian(const PolyMatrix& p, std::span<const std::size_t> order);
PolyExpr pfaffian(const PolyMatrix& p, Subset s);

template <ExteriorKind K>
std::string to_string(const Exterior<K>& e);

}  // namespace ppa
