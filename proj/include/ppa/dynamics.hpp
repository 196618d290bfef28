#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppa/errors.hpp"
#include "ppa/structures.hpp"

namespace ppa {

struct PolyVectorField {
  RingPtr ring;
  std::vector<PolyExpr> components;

  std::size_t dim() const { return components.size(); }
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;
};

/// x_i' = {x_i, H}
PolyVectorField hamiltonian_vector_field(const PoissonStructure& ps, const PolyExpr& h);
/// x_i' = {H_1, ..., H_{r-1}, x_i}
PolyVectorField nambu_vector_field(const NambuStructure& ns, std::span<const PolyExpr> hamiltonians);

/// sum_i dF/dx_i * x_i'
PolyExpr lie_derivative(const PolyVectorField& field, const PolyExpr& f);

struct ConservationResult {
  bool conserved = false;
  PolyExpr residual;
};

std::vector<ConservationResult> constants_of_motion_check(const PolyVectorField& field, std::span<const PolyExpr> invariants);

/// Returns c with a = c * b, if one exists.
std::optional<Rational> proportionality(const PolyVectorField& a, const PolyVectorField& b);

/// x1' = x2x3x4, x2' = x1x3x4, x3' = x1x2x4, x4' = g2*x1x2x3
PolyVectorField fairlie_field(const RingPtr& ring, const Rational& g2);

struct DecouplingReport {
  /// Positive root of the multiplier equation; nullopt if it is irrational.
  std::optional<Rational> a;
  double a_float = 0.0;
  /// Polynomial in a whose roots are the consistent multipliers (a^2 - g2 up to scale).
  PolyExpr multiplier_equation;
  bool consistent = false;
  /// u+, v+, w+, u-, v-, w- residuals (rhs - lhs) at the solved a.
  std::array<PolyExpr, 6> residuals;
  bool nahm_match = false;
  /// Same residuals at the literal multiplier a = g2.
  std::array<PolyExpr, 6> literal_residuals;
  bool literal_match = false;
  /// u+^2 - v+^2 == (x3^2 - x2^2)(x4^2 - a^2 x1^2) and both are conserved.
  bool factorization_holds = false;
  bool factor_conserved = false;
};

DecouplingReport decoupling_check(const Rational& g2);

class DivergenceError;

struct TrajectoryReport {
  std::vector<long double> times;
  std::vector<std::vector<long double>> states;
  std::vector<std::string> invariant_names;
  std::vector<std::vector<long double>> invariant_values;
  std::vector<long double> drift;
};

class DivergenceError : public Error {
 public:
  DivergenceError(long double last_time, TrajectoryReport partial)
      : Error("non-finite state after t = " + std::to_string(static_cast<double>(last_time))),
        last_time_(last_time),
        partial_(std::move(partial)) {}
  long double last_time() const noexcept { return last_time_; }
  const TrajectoryReport& partial() const noexcept { return partial_; }

 private:
  long double last_time_;
  TrajectoryReport partial_;
};

struct MonitoredInvariant {
  std::string name;
  PolyExpr f;
};

/// Fixed-step classical RK4 in the given floating type. Drift of F is
/// max_t |F(x(t)) - F(x0)| / max(1, |F(x0)|). With record=false only the final
/// state is kept.
template <class Real>
TrajectoryReport integrate(const PolyVectorField& field, std::span<const double> x0, double step, double t_end,
                           std::span<const MonitoredInvariant> monitored, bool record = true);

extern template TrajectoryReport integrate<double>(const PolyVectorField&, std::span<const double>, double, double,
                                                   std::span<const MonitoredInvariant>, bool);
extern template TrajectoryReport integrate<long double>(const PolyVectorField&, std::span<const double>, double, double,
                                                        std::span<const MonitoredInvariant>, bool);

}  // namespace ppa
