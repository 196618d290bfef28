#include "ppa/dynamics.hpp"

#include <cmath>

namespace ppa {

PolyVectorField hamiltonian_vector_field(const PoissonStructure& ps, const PolyExpr& h) {
  if (!h.over(ps.ring()).polynomial_grade()) throw ContractViolation("Hamiltonian must be polynomial");
  PolyVectorField f{ps.ring(), {}};
  for (std::size_t i = 0; i < ps.dim(); ++i) f.components.push_back(bracket_of(ps, PolyExpr::variable(ps.ring(), i), h));
  return f;
}

PolyVectorField nambu_vector_field(const NambuStructure& ns, std::span<const PolyExpr> hamiltonians) {
  if (hamiltonians.size() + 1 != ns.arity()) {
    throw ArityError("Nambu flow needs " + std::to_string(ns.arity() - 1) + " Hamiltonians");
  }
  PolyVectorField f{ns.ring(), {}};
  std::vector<PolyExpr> args(hamiltonians.begin(), hamiltonians.end());
  args.emplace_back(ns.ring(), Rational(0));
  for (std::size_t i = 0; i < ns.dim(); ++i) {
    args.back() = PolyExpr::variable(ns.ring(), i);
    f.components.push_back(nambu_bracket(ns, args));
  }
  return f;
}

PolyExpr lie_derivative(const PolyVectorField& field, const PolyExpr& f) {
  const PolyExpr fr = f.over(field.ring);
  PolyExpr acc(field.ring, Rational(0));
  for (std::size_t i = 0; i < field.dim(); ++i) {
    if (field.components[i].is_zero()) continue;
    acc += partial_derivative(fr, i) * field.components[i];
  }
  return acc;
}

std::vector<ConservationResult> constants_of_motion_check(const PolyVectorField& field, std::span<const PolyExpr> invariants) {
  std::vector<ConservationResult> out;
  for (const auto& f : invariants) {
    PolyExpr r = lie_derivative(field, f);
    out.push_back({r.is_zero(), std::move(r)});
  }
  return out;
}

std::optional<Rational> proportionality(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  std::optional<Rational> c;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b.components[i].is_zero()) {
      if (!a.components[i].is_zero()) return std::nullopt;
      continue;
    }
    if (!c) {
      auto [mb, cb] = b.components[i].leading_term();
      c = a.components[i].coefficient(mb) / cb;
    }
    if (!(a.components[i] == b.components[i].scaled(*c))) return std::nullopt;
  }
  return c;
}

PolyVectorField fairlie_field(const RingPtr& ring, const Rational& g2) {
  auto x = [&](std::size_t i) { return PolyExpr::variable(ring, i); };
  return {ring, {x(1) * x(2) * x(3), x(0) * x(2) * x(3), x(0) * x(1) * x(3), (x(0) * x(1) * x(2)).scaled(g2)}};
}

namespace {

// Residuals rhs - lhs of u' = vw, v' = wu, w' = uv for u = x3x4 + s a x1x2 etc.
std::array<PolyExpr, 6> nahm_residuals(const PolyVectorField& field, const PolyExpr& a) {
  const auto& R = field.ring;
  auto x = [&](std::size_t i) { return PolyExpr::variable(R, i); };
  std::array<PolyExpr, 6> out;
  for (int s = 0; s < 2; ++s) {
    const PolyExpr sa = s == 0 ? a : -a;
    const PolyExpr u = x(2) * x(3) + sa * x(0) * x(1);
    const PolyExpr v = x(1) * x(3) + sa * x(0) * x(2);
    const PolyExpr w = x(0) * x(3) + sa * x(1) * x(2);
    out[3 * s + 0] = v * w - lie_derivative(field, u);
    out[3 * s + 1] = w * u - lie_derivative(field, v);
    out[3 * s + 2] = u * v - lie_derivative(field, w);
  }
  return out;
}

bool all_zero(const std::array<PolyExpr, 6>& r) {
  for (const auto& p : r) {
    if (!p.is_zero()) return false;
  }
  return true;
}

}  // namespace

DecouplingReport decoupling_check(const Rational& g2) {
  DecouplingReport rep;
  // a as a fifth variable makes the residuals polynomials in (x, a).
  const RingPtr Ra = make_ring({"x1", "x2", "x3", "x4", "a"});
  const RingPtr R = make_ring({"x1", "x2", "x3", "x4"});
  PolyVectorField fa = fairlie_field(Ra, g2);
  fa.components.push_back(PolyExpr(Ra, Rational(0)));
  const auto sym = nahm_residuals(fa, PolyExpr::variable(Ra, 4));

  // Every x-coefficient of every residual is a polynomial in a that must vanish.
  // Collect them and take the lowest-degree nonzero one as the defining equation.
  const RingPtr A = make_ring({"a"});
  std::vector<PolyExpr> eqs;
  for (const auto& r : sym) {
    std::map<std::vector<Exponent>, PolyExpr> by_x;
    for (const auto& [m, c] : r.terms()) {
      std::vector<Exponent> xe(m.exponents().begin(), m.exponents().begin() + 4);
      auto it = by_x.try_emplace(xe, PolyExpr(A, Rational(0))).first;
      it->second += PolyExpr::term(A, Monomial({m[4]}), c);
    }
    for (auto& [xe, e] : by_x) eqs.push_back(e);
  }
  if (eqs.empty()) {
    rep.consistent = true;
    rep.a = 0;
  } else {
    const auto lowest = std::min_element(eqs.begin(), eqs.end(), [](const PolyExpr& p, const PolyExpr& q) {
      return *p.degree() < *q.degree();
    });
    const PolyExpr eq = *lowest;
    rep.multiplier_equation = eq;
    // Roots of a quadratic c2 a^2 + c1 a + c0 (or linear).
    const Rational c2 = eq.coefficient(Monomial({Exponent(2)}));
    const Rational c1 = eq.coefficient(Monomial({Exponent(1)}));
    const Rational c0 = eq.coefficient(Monomial({Exponent(0)}));
    std::vector<Rational> exact_roots;
    std::vector<double> float_roots;
    if (*eq.degree() > Exponent(2)) {
      throw ContractViolation("multiplier equation of unexpected degree: " + to_string(eq));
    }
    if (c2 == 0) {
      if (c1 != 0) exact_roots.push_back(-c0 / c1);
    } else {
      const Rational disc = c1 * c1 - 4 * c2 * c0;
      if (disc >= 0) {
        if (auto s = exact_root(disc, 2)) {
          exact_roots.push_back((-c1 + *s) / (2 * c2));
          exact_roots.push_back((-c1 - *s) / (2 * c2));
        } else {
          const double sd = std::sqrt(disc.get_d());
          float_roots.push_back((-c1.get_d() + sd) / (2 * c2.get_d()));
          float_roots.push_back((-c1.get_d() - sd) / (2 * c2.get_d()));
        }
      }
    }
    std::vector<Rational> common;
    for (const auto& root : exact_roots) {
      bool ok = true;
      for (const auto& e : eqs) {
        std::array<Rational, 1> pt{root};
        if (evaluate(e, pt) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) common.push_back(root);
    }
    if (!common.empty()) {
      rep.consistent = true;
      rep.a = *std::max_element(common.begin(), common.end());
      rep.a_float = rep.a->get_d();
    } else if (!float_roots.empty()) {
      rep.a_float = *std::max_element(float_roots.begin(), float_roots.end());
      rep.consistent = true;
      for (const auto& e : eqs) {
        std::array<double, 1> pt{rep.a_float};
        if (std::abs(evaluate(e, pt)) > 1e-9 * std::max(1.0, std::abs(rep.a_float))) rep.consistent = false;
      }
    }
  }

  const PolyVectorField f = fairlie_field(R, g2);
  auto x = [&](std::size_t i) { return PolyExpr::variable(R, i); };
  if (rep.a) {
    rep.residuals = nahm_residuals(f, PolyExpr(R, *rep.a));
    rep.nahm_match = all_zero(rep.residuals);
    const PolyExpr a = PolyExpr(R, *rep.a);
    const PolyExpr up = x(2) * x(3) + a * x(0) * x(1);
    const PolyExpr vp = x(1) * x(3) + a * x(0) * x(2);
    const PolyExpr lhs = up * up - vp * vp;
    rep.factorization_holds = lhs == (x(2) * x(2) - x(1) * x(1)) * (x(3) * x(3) - a * a * x(0) * x(0));
    rep.factor_conserved = lie_derivative(f, lhs).is_zero();
  } else if (rep.consistent) {
    rep.nahm_match = true;  // numerically, see multiplier_equation
  }
  rep.literal_residuals = nahm_residuals(f, PolyExpr(R, g2));
  rep.literal_match = all_zero(rep.literal_residuals);
  return rep;
}

namespace {

template <class Real>
struct CompiledPoly {
  struct Term {
    Real coef;
    std::vector<std::pair<std::size_t, std::int64_t>> powers;
  };
  std::vector<Term> terms;

  explicit CompiledPoly(const PolyExpr& p) {
    for (const auto& [m, c] : p.terms()) {
      Term t{static_cast<Real>(to_long_double(c)), {}};
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        if (!m[i].is_natural()) throw ContractViolation("integration needs polynomial components");
        t.powers.emplace_back(i, m[i].num());
      }
      terms.push_back(std::move(t));
    }
  }

  Real operator()(const std::vector<Real>& x) const {
    Real acc = 0;
    for (const auto& t : terms) {
      Real v = t.coef;
      for (const auto& [i, e] : t.powers) {
        for (std::int64_t k = 0; k < e; ++k) v *= x[i];
      }
      acc += v;
    }
    return acc;
  }
};

}  // namespace

template <class Real>
TrajectoryReport integrate(const PolyVectorField& field, std::span<const double> x0, double step, double t_end,
                           std::span<const MonitoredInvariant> monitored, bool record) {
  if (!(step > 0) || !(t_end > 0)) throw ContractViolation("step and t_end must be positive");
  const std::size_t n = field.dim();
  if (x0.size() != n) throw ContractViolation("initial point has " + std::to_string(x0.size()) + " coordinates, field has " + std::to_string(n));
  std::vector<CompiledPoly<Real>> rhs;
  for (const auto& c : field.components) rhs.emplace_back(c);
  std::vector<CompiledPoly<Real>> inv;
  TrajectoryReport rep;
  for (const auto& m : monitored) {
    inv.emplace_back(m.f.over(field.ring));
    rep.invariant_names.push_back(m.name);
  }

  std::vector<Real> x(x0.begin(), x0.end());
  std::vector<Real> f0(inv.size());
  for (std::size_t k = 0; k < inv.size(); ++k) f0[k] = inv[k](x);
  std::vector<Real> drift(inv.size(), Real(0));

  auto push = [&](Real t, const std::vector<Real>& state) {
    rep.times.push_back(static_cast<long double>(t));
    rep.states.emplace_back(state.begin(), state.end());
    std::vector<long double> vals;
    for (const auto& f : inv) vals.push_back(static_cast<long double>(f(state)));
    rep.invariant_values.push_back(std::move(vals));
  };
  auto finish = [&]() {
    rep.drift.assign(drift.begin(), drift.end());
  };

  push(Real(0), x);
  const auto steps = static_cast<std::int64_t>(std::ceil(t_end / step - 1e-9));
  const Real h = static_cast<Real>(step);
  std::vector<Real> k1(n), k2(n), k3(n), k4(n), tmp(n);
  auto eval = [&](const std::vector<Real>& s, std::vector<Real>& out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i](s);
  };
  Real t = 0;
  for (std::int64_t s = 0; s < steps; ++s) {
    const Real hs = (s == steps - 1) ? static_cast<Real>(t_end) - t : h;
    eval(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + hs / 2 * k1[i];
    eval(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + hs / 2 * k2[i];
    eval(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + hs * k3[i];
    eval(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + hs / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    bool finite = true;
    for (auto v : tmp) finite = finite && std::isfinite(v);
    if (finite) {
      for (std::size_t k = 0; k < inv.size(); ++k) {
        const Real d = std::abs(inv[k](tmp) - f0[k]) / std::max(Real(1), std::abs(f0[k]));
        if (!std::isfinite(d)) finite = false;
      }
    }
    if (!finite) {
      finish();
      throw DivergenceError(static_cast<long double>(t), std::move(rep));
    }
    x.swap(tmp);
    t = (s == steps - 1) ? static_cast<Real>(t_end) : static_cast<Real>(s + 1) * h;
    for (std::size_t k = 0; k < inv.size(); ++k) {
      drift[k] = std::max(drift[k], std::abs(inv[k](x) - f0[k]) / std::max(Real(1), std::abs(f0[k])));
    }
    if (record || s == steps - 1) push(t, x);
  }
  finish();
  return rep;
}

template TrajectoryReport integrate<double>(const PolyVectorField&, std::span<const double>, double, double,
                                            std::span<const MonitoredInvariant>, bool);
template TrajectoryReport integrate<long double>(const PolyVectorField&, std::span<const double>, double, double,
                                                 std::span<const MonitoredInvariant>, bool);

}  // namespace ppa
