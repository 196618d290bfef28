#include "ppa/structures.hpp"

#include <random>

#include "ppa/errors.hpp"

namespace ppa {

namespace {

PolyExpr zero(const RingPtr& r) { return PolyExpr(r, Rational(0)); }

std::vector<PolyExpr> gradient(const PolyExpr& f, const RingPtr& ring) {
  std::vector<PolyExpr> g;
  const PolyExpr fr = f.over(ring);
  for (std::size_t i = 0; i < ring->size(); ++i) g.push_back(partial_derivative(fr, i));
  return g;
}

}  // namespace

PoissonStructure PoissonStructure::from_table(const RingPtr& ring, PolyMatrix p) {
  const std::size_t n = ring->size();
  if (p.size() != n) throw ContractViolation("bracket table must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].size() != n) throw ContractViolation("bracket table must be n x n");
    for (auto& e : p[i]) {
      e = e.over(ring);
      if (!e.polynomial_grade()) throw ContractViolation("bracket entries must be polynomial");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p[i][i].is_zero()) throw ContractViolation("diagonal bracket entries must vanish");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(p[i][j] + p[j][i]).is_zero()) throw ContractViolation("bracket table is not antisymmetric");
    }
  }
  return PoissonStructure(ring, std::move(p), TableProvenance{});
}

PoissonStructure PoissonStructure::from_upper(const RingPtr& ring,
                                              const std::map<std::pair<std::size_t, std::size_t>, PolyExpr>& entries) {
  const std::size_t n = ring->size();
  PolyMatrix p(n, std::vector<PolyExpr>(n, zero(ring)));
  for (const auto& [ij, v] : entries) {
    const auto [i, j] = ij;
    if (i >= n || j >= n || i == j) throw ContractViolation("bad bracket index");
    p[i][j] = v.over(ring);
    p[j][i] = -p[i][j];
  }
  return from_table(ring, std::move(p));
}

PoissonStructure PoissonStructure::scaled(const Rational& c) const {
  PolyMatrix q = p_;
  for (auto& row : q) {
    for (auto& e : row) e = e.scaled(c);
  }
  Provenance prov = provenance_;
  if (auto* jac = std::get_if<JacobianProvenance>(&prov)) jac->lambda = jac->lambda.scaled(c);
  return PoissonStructure(ring_, std::move(q), std::move(prov));
}

PoissonStructure jacobian_structure(const RingPtr& ring, std::span<const PolyExpr> casimirs, const PolyExpr& lambda) {
  const std::size_t n = ring->size();
  if (n < 2 || casimirs.size() != n - 2) {
    throw ArityError("a Jacobian bracket in " + std::to_string(n) + " variables needs " +
                     std::to_string(n < 2 ? 0 : n - 2) + " Casimirs, got " + std::to_string(casimirs.size()));
  }
  const PolyExpr lam = lambda.over(ring);
  if (!lam.polynomial_grade()) throw ContractViolation("multiplier must be polynomial");
  const PolyForm omega = wedge_differentials(ring, casimirs);
  PolyMatrix p(n, std::vector<PolyExpr>(n, zero(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PolyForm top = wedge(wedge(basis_form(ring, i), basis_form(ring, j)), omega);
      p[i][j] = lam * top_coefficient(top);
      p[j][i] = -p[i][j];
    }
  }
  std::vector<PolyExpr> cs;
  for (const auto& q : casimirs) cs.push_back(q.over(ring));
  return PoissonStructure(ring, std::move(p), JacobianProvenance{std::move(cs), lam});
}

PolyExpr bracket_of(const PoissonStructure& ps, const PolyExpr& f, const PolyExpr& g) {
  const auto& ring = ps.ring();
  const auto df = gradient(f, ring);
  const auto dg = gradient(g, ring);
  PolyExpr acc = zero(ring);
  const std::size_t n = ps.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PolyExpr& p = ps.entry(i, j);
      if (p.is_zero()) continue;
      const PolyExpr cross = df[i] * dg[j] - df[j] * dg[i];
      if (!cross.is_zero()) acc += p * cross;
    }
  }
  return acc;
}

PolyExpr jacobiator(const PoissonStructure& ps, std::size_t i, std::size_t j, std::size_t k) {
  PolyExpr acc = zero(ps.ring());
  const std::size_t n = ps.dim();
  for (std::size_t l = 0; l < n; ++l) {
    acc += ps.entry(i, l) * partial_derivative(ps.entry(j, k), l);
    acc += ps.entry(j, l) * partial_derivative(ps.entry(k, i), l);
    acc += ps.entry(k, l) * partial_derivative(ps.entry(i, j), l);
  }
  return acc;
}

JacobiReport check_jacobi(const PoissonStructure& ps) {
  JacobiReport report;
  const std::size_t n = ps.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        PolyExpr r = jacobiator(ps, i, j, k);
        if (!r.is_zero()) {
          report.holds = false;
          report.witnesses.push_back({i, j, k, std::move(r)});
        }
      }
    }
  }
  return report;
}

bool is_casimir(const PoissonStructure& ps, const PolyExpr& q) {
  if (!q.over(ps.ring()).polynomial_grade()) throw ContractViolation("Casimir candidate must be polynomial");
  for (std::size_t i = 0; i < ps.dim(); ++i) {
    if (!bracket_of(ps, q, PolyExpr::variable(ps.ring(), i)).is_zero()) return false;
  }
  return true;
}

bool is_quasi_casimir(const PoissonStructure& ps, const PolyExpr& q) {
  if (q.is_zero()) throw ContractViolation("quasi-Casimir candidate must be nonzero");
  const PolyExpr qr = q.over(ps.ring());
  for (std::size_t i = 0; i < ps.dim(); ++i) {
    if (!exact_divisibility(bracket_of(ps, qr, PolyExpr::variable(ps.ring(), i)), qr).divisible) return false;
  }
  return true;
}

PluckerReport plucker_rank2_test(const PoissonStructure& ps) {
  PluckerReport report;
  report.value = zero(ps.ring());
  for (Subset s : subsets_of_size(ps.dim(), 4)) {
    PolyExpr pf = pfaffian(ps.matrix(), s);
    if (!pf.is_zero()) {
      const auto idx = subset_indices(s);
      report.rank_le_2 = false;
      report.witness = std::array<std::size_t, 4>{idx[0], idx[1], idx[2], idx[3]};
      report.value = std::move(pf);
      break;
    }
  }
  return report;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t generic_rank(const PoissonStructure& ps, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw ContractViolation("generic_rank needs at least one sample");
  std::mt19937_64 rng(seed);
  const std::size_t n = ps.dim();
  std::size_t best = 0;
  std::vector<Rational> point(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& x : point) {
      const auto idx = static_cast<std::int64_t>(rng() % 14);
      x = make_rational(idx < 7 ? idx - 7 : idx - 6, 3);
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = evaluate(ps.entry(i, j), point);
    }
    best = std::max(best, rational_rank(std::move(m)));
    if (best == n) break;
  }
  return best;
}

NambuStructure::NambuStructure(RingPtr ring, std::vector<PolyExpr> casimirs, PolyExpr lambda)
    : ring_(std::move(ring)), casimirs_(std::move(casimirs)), lambda_(lambda.over(ring_)), casimir_form_(ring_, ring_->size(), 0) {
  if (casimirs_.size() >= ring_->size()) throw ArityError("Nambu structure needs fewer Casimirs than variables");
  for (auto& q : casimirs_) q = q.over(ring_);
  casimir_form_ = wedge_differentials(ring_, casimirs_);
}

PolyExpr nambu_bracket(const NambuStructure& ns, std::span<const PolyExpr> args) {
  if (args.size() != ns.arity()) {
    throw ArityError("Nambu bracket takes " + std::to_string(ns.arity()) + " arguments, got " + std::to_string(args.size()));
  }
  const PolyForm df = wedge_differentials(ns.ring(), args);
  if (df.is_zero()) return zero(ns.ring());
  return ns.lambda() * top_coefficient(wedge(df, ns.casimir_form_));
}

FundamentalIdentityReport check_fundamental_identity(const BracketFn& bracket, std::size_t r,
                                                     std::span<const PolyExpr> args) {
  if (r < 2 || args.size() != 2 * r - 1) {
    throw ArityError("Fundamental Identity needs " + std::to_string(2 * r - 1) + " arguments");
  }
  std::vector<PolyExpr> f(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(r - 1));
  std::vector<PolyExpr> g(args.begin() + static_cast<std::ptrdiff_t>(r - 1), args.end());
  auto with = [&](const PolyExpr& last) {
    std::vector<PolyExpr> a = f;
    a.push_back(last);
    return bracket(a);
  };
  PolyExpr residual = with(bracket(g));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<PolyExpr> gi = g;
    gi[i] = with(g[i]);
    residual -= bracket(gi);
  }
  return {residual.is_zero(), residual};
}

FundamentalIdentityReport check_fundamental_identity(const NambuStructure& ns, std::span<const PolyExpr> args) {
  return check_fundamental_identity([&](std::span<const PolyExpr> a) { return nambu_bracket(ns, a); }, ns.arity(), args);
}

std::string to_string(const PoissonStructure& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.dim(); ++i) {
    for (std::size_t j = i + 1; j < ps.dim(); ++j) {
      if (ps.entry(i, j).is_zero()) continue;
      out += "{" + ps.ring()->name(i) + "," + ps.ring()->name(j) + "} = " + to_string(ps.entry(i, j)) + "\n";
    }
  }
  return out;
}

}  // namespace ppa
