#include "ppa/geometry.hpp"

#include "ppa/errors.hpp"

namespace ppa {

TransportResult transport_bracket(const PoissonStructure& ps, const MonomialMap& map) {
  if (!(*map.source() == *ps.ring())) throw VariableSetError("map source variables differ from the structure's");
  const auto ys = map.images();
  const std::size_t n = ps.dim();
  TransportResult out;
  out.ring = map.target();
  out.matrix.assign(n, std::vector<PolyExpr>(n, PolyExpr(out.ring, Rational(0))));
  out.polynomial_grade = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      PolyExpr e = substitute(bracket_of(ps, ys[a].over(ps.ring()), ys[b].over(ps.ring())), map);
      if (!e.polynomial_grade()) out.polynomial_grade = false;
      out.matrix[a][b] = e;
      out.matrix[b][a] = -e;
    }
  }
  if (out.polynomial_grade) out.structure = PoissonStructure::from_table(out.ring, out.matrix);
  return out;
}

ExtendabilityVerdict check_projective_extendability(const PoissonStructure& ps) {
  ExtendabilityVerdict v;
  const std::size_t n = ps.dim();
  const auto& R = ps.ring();
  PolyMatrix cubic(n, std::vector<PolyExpr>(n, PolyExpr(R, Rational(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const PolyExpr& p = ps.entry(i, j);
      if (p.is_zero()) continue;
      const Exponent d = *p.degree();
      if (!v.max_degree || *v.max_degree < d) v.max_degree = d;
      auto comps = p.homogeneous_components();
      if (auto it = comps.find(Exponent(3)); it != comps.end()) cubic[i][j] = it->second.over(R);
    }
  }
  v.degree_ok = !v.max_degree || *v.max_degree <= Exponent(3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const PolyExpr xi = PolyExpr::variable(R, i), xj = PolyExpr::variable(R, j), xk = PolyExpr::variable(R, k);
        PolyExpr r = xk * cubic[i][j] + xi * cubic[j][k] + xj * cubic[k][i];
        if (!r.is_zero()) v.extendable_necessary_conditions = false;
        v.cyclic_residuals.emplace(std::array<std::size_t, 3>{i, j, k}, std::move(r));
      }
    }
  }
  if (!v.degree_ok) v.extendable_necessary_conditions = false;
  return v;
}

ChartComparison chart_compare(const PoissonStructure& psA, const PoissonStructure& psB, const PolyExpr& eliminator,
                              std::string_view z, const std::optional<PolyExpr>& surface) {
  const RingPtr& A = psA.ring();
  const RingPtr& B = psB.ring();
  const auto zi = B->index_of(z);
  if (!zi) throw VariableSetError("eliminated variable is not in the second chart");
  if (B->size() != A->size() + 1) throw VariableSetError("second chart must have exactly one extra variable");
  std::vector<std::size_t> a_to_b;
  for (const auto& name : A->names()) {
    auto idx = B->index_of(name);
    if (!idx || *idx == *zi) throw VariableSetError("chart variables do not match: " + name);
    a_to_b.push_back(*idx);
  }

  const PolyExpr e = eliminator.over(B);
  PolyExpr c(B, Rational(0)), d(B, Rational(0));
  for (const auto& [m, coef] : e.terms()) {
    const Exponent ez = m[*zi];
    const PolyExpr t = PolyExpr::term(B, m.with_exponent(*zi, Exponent(0)), coef);
    if (ez == Exponent(1)) {
      c += t;
    } else if (ez.is_zero()) {
      d += t;
    } else {
      throw ContractViolation("eliminator is not linear in " + std::string(z));
    }
  }
  if (c.is_zero() || c.term_count() != 1) throw ContractViolation("coefficient of the eliminated variable must be a monomial");

  ChartComparison out;
  const PolyExpr zsol = -d * pow(c, Exponent(-1));

  // B-ring polynomial without z -> A-ring polynomial
  auto to_a = [&](const PolyExpr& p) {
    PolyExpr r(A, Rational(0));
    const PolyExpr pb = p.over(B);
    for (const auto& [m, coef] : pb.terms()) {
      if (!m[*zi].is_zero()) throw ContractViolation("eliminated variable survived substitution");
      std::vector<Exponent> ex(A->size());
      for (std::size_t k = 0; k < ex.size(); ++k) ex[k] = m[a_to_b[k]];
      r += PolyExpr::term(A, Monomial(std::move(ex)), coef);
    }
    return r;
  };
  out.z_solution = to_a(zsol);

  // common denominator: the monomial c^N with N the top z-degree in psB
  Exponent top;
  for (const auto& row : psB.matrix()) {
    for (const auto& p : row) {
      if (auto dz = p.degree_in(*zi); dz && top < *dz) top = *dz;
    }
  }
  const PolyExpr denom = to_a(pow(c, top));

  const std::size_t n = A->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ChartEntry ce;
      ce.i = i;
      ce.j = j;
      ce.a = psA.entry(i, j);
      ce.b = to_a(substitute_variable(psB.entry(a_to_b[i], a_to_b[j]), *zi, zsol));
      out.entries.push_back(std::move(ce));
    }
  }

  for (const auto& ce : out.entries) {
    if (ce.a.is_zero() || ce.b.is_zero()) continue;
    auto q = exact_divisibility(ce.b * denom, ce.a * denom);
    if (q.divisible && q.quotient->is_constant()) {
      out.kappa = q.quotient->constant_term();
      break;
    }
  }
  if (!out.kappa) {
    out.reason = "no entry pair with a constant ratio";
    return out;
  }
  out.agree = true;
  for (auto& ce : out.entries) {
    ce.residual = ce.b - ce.a.scaled(*out.kappa);
    ce.agrees = ce.residual.is_zero();
    if (!ce.agrees && surface) {
      const PolyExpr cleared = ce.residual * denom;
      if (cleared.polynomial_grade() && exact_divisibility(cleared, surface->over(A)).divisible) {
        ce.agrees = true;
        ce.modulo_surface = true;
      }
    }
    if (!ce.agrees) out.agree = false;
  }
  if (!out.agree) out.reason = "entries disagree beyond one global constant";
  return out;
}

bool mukai_pairing_check(const PoissonStructure& ps, const PolyExpr& p, std::size_t i, std::size_t j, std::size_t k) {
  const PolyExpr dk = partial_derivative(p.over(ps.ring()), k);
  return ps.entry(i, j) * dk == -(dk * dk);
}

}  // namespace ppa
