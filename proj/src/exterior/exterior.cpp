#include "ppa/exterior.hpp"

#include "ppa/errors.hpp"

namespace ppa {

std::vector<std::size_t> subset_indices(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

Subset make_subset(std::span<const std::size_t> indices) {
  Subset s = 0;
  for (auto i : indices) {
    if (i >= kMaxDimension) throw ContractViolation("index exceeds the dimension cap");
    s |= Subset{1} << i;
  }
  return s;
}

Subset full_subset(std::size_t n) { return n == 0 ? 0 : (Subset{1} << n) - 1; }

std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= full_subset(n); ++s) {
    if (subset_size(s) == k) out.push_back(s);
  }
  return out;
}

int shuffle_sign(Subset s, Subset t) {
  std::size_t inversions = 0;
  for (auto i : subset_indices(s)) inversions += subset_size(t & ((Subset{1} << i) - 1));
  return inversions % 2 ? -1 : 1;
}

template <ExteriorKind K>
Exterior<K>::Exterior(RingPtr ring, std::size_t dim, std::size_t grade)
    : ring_(std::move(ring)), dim_(dim), grade_(grade) {
  if (dim_ > kMaxDimension) throw ContractViolation("exterior algebra limited to 8 variables");
}

template <ExteriorKind K>
PolyExpr Exterior<K>::coefficient(Subset s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? PolyExpr(ring_, Rational(0)) : it->second;
}

template <ExteriorKind K>
void Exterior<K>::set(Subset s, const PolyExpr& value) {
  if (subset_size(s) != grade_ || (s & ~full_subset(dim_))) throw ContractViolation("subset does not match grade");
  if (value.is_zero()) {
    coeffs_.erase(s);
  } else {
    coeffs_.insert_or_assign(s, value.over(ring_));
  }
}

template <ExteriorKind K>
void Exterior<K>::add(Subset s, const PolyExpr& value) {
  if (value.is_zero()) return;
  set(s, coefficient(s) + value);
}

template <ExteriorKind K>
Exterior<K>& Exterior<K>::operator+=(const Exterior& o) {
  if (o.dim_ != dim_ || o.grade_ != grade_) throw ContractViolation("adding exterior elements of different shape");
  for (const auto& [s, c] : o.coeffs_) add(s, c);
  return *this;
}

template <ExteriorKind K>
Exterior<K>& Exterior<K>::operator-=(const Exterior& o) {
  return *this += -o;
}

template <ExteriorKind K>
Exterior<K> Exterior<K>::scaled(const PolyExpr& f) const {
  Exterior out(ring_, dim_, grade_);
  for (const auto& [s, c] : coeffs_) out.set(s, c * f);
  return out;
}

template class Exterior<ExteriorKind::form>;
template class Exterior<ExteriorKind::multivector>;

template <ExteriorKind K>
Exterior<K> wedge(const Exterior<K>& a, const Exterior<K>& b) {
  if (a.dim() != b.dim()) throw ContractViolation("wedge of elements in different dimensions");
  Exterior<K> out(a.ring() ? a.ring() : b.ring(), a.dim(), a.grade() + b.grade());
  if (out.grade() > out.dim()) return out;
  for (const auto& [s, c] : a.coefficients()) {
    for (const auto& [t, d] : b.coefficients()) {
      if (s & t) continue;
      const PolyExpr prod = c * d;
      out.add(s | t, shuffle_sign(s, t) < 0 ? -prod : prod);
    }
  }
  return out;
}

template PolyForm wedge(const PolyForm&, const PolyForm&);
template PolyMultivector wedge(const PolyMultivector&, const PolyMultivector&);

PolyForm basis_form(const RingPtr& ring, std::size_t i) {
  PolyForm f(ring, ring->size(), 1);
  f.set(Subset{1} << i, PolyExpr(ring, Rational(1)));
  return f;
}

PolyForm differential(const PolyExpr& f) {
  if (!f.ring()) throw ContractViolation("differential of a ringless constant");
  PolyForm out(f.ring(), f.nvars(), 1);
  for (std::size_t i = 0; i < f.nvars(); ++i) out.set(Subset{1} << i, partial_derivative(f, i));
  return out;
}

PolyForm wedge_differentials(const RingPtr& ring, std::span<const PolyExpr> fs) {
  PolyForm acc(ring, ring->size(), 0);
  acc.set(0, PolyExpr(ring, Rational(1)));
  for (const auto& f : fs) acc = wedge(acc, differential(f.over(ring)));
  return acc;
}

namespace {

template <ExteriorKind From, ExteriorKind To>
Exterior<To> dualize(const Exterior<From>& e) {
  const std::size_t n = e.dim();
  Exterior<To> out(e.ring(), n, n - e.grade());
  const Subset all = full_subset(n);
  for (const auto& [s, c] : e.coefficients()) {
    const Subset t = all & ~s;
    out.set(t, shuffle_sign(s, t) < 0 ? -c : c);
  }
  return out;
}

}  // namespace

PolyMultivector volume_dual(const PolyForm& form) {
  if (form.grade() > form.dim()) throw ContractViolation("form grade exceeds dimension");
  return dualize<ExteriorKind::form, ExteriorKind::multivector>(form);
}

PolyForm volume_dual(const PolyMultivector& mv) {
  if (mv.grade() > mv.dim()) throw ContractViolation("multivector grade exceeds dimension");
  return dualize<ExteriorKind::multivector, ExteriorKind::form>(mv);
}

PolyExpr top_coefficient(const PolyForm& form) {
  if (form.grade() != form.dim()) throw ContractViolation("top_coefficient needs a top-grade form");
  return form.coefficient(full_subset(form.dim()));
}

PolyMultivector bivector(const RingPtr& ring, const PolyMatrix& p) {
  const std::size_t n = p.size();
  PolyMultivector out(ring, n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.set((Subset{1} << i) | (Subset{1} << j), p[i][j]);
  }
  return out;
}

PolyMultivector wedge_power(const PolyMultivector& a, std::size_t m) {
  PolyMultivector acc(a.ring(), a.dim(), 0);
  acc.set(0, PolyExpr(a.ring(), Rational(1)));
  for (std::size_t k = 0; k < m; ++k) acc = wedge(acc, a);
  return acc;
}

namespace {

PolyExpr pfaffian_rec(const PolyMatrix& p, std::vector<std::size_t>& rows) {
  if (rows.empty()) return PolyExpr(Rational(1));
  const std::size_t first = rows[0];
  PolyExpr acc(Rational(0));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const PolyExpr& a = p[first][rows[k]];
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(rows.size() - 2);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (r != k) rest.push_back(rows[r]);
    }
    const PolyExpr sub = a * pfaffian_rec(p, rest);
    if (k % 2 == 1) {
      acc += sub;
    } else {
      acc -= sub;
    }
  }
  return acc;
}

}  // namespace

PolyExpr pfaffian(const PolyMatrix& p, std::span<const std::size_t> order) {
  if (order.size() % 2) throw ContractViolation("pfaffian of an odd-size subset");
  if (order.size() > kMaxDimension) throw ContractViolation("pfaffian subset larger than 8");
  std::vector<std::size_t> rows(order.begin(), order.end());
  for (auto r : rows) {
    if (r >= p.size()) throw ContractViolation("pfaffian index out of range");
  }
  PolyExpr out = pfaffian_rec(p, rows);
  if (!p.empty() && !p[0].empty()) {
    for (const auto& row : p) {
      for (const auto& e : row) {
        if (e.ring()) return out.over(e.ring());
      }
    }
  }
  return out;
}

PolyExpr pfaffian(const PolyMatrix& p, Subset s) {
  const auto idx = subset_indices(s);
  return pfaffian(p, std::span<const std::size_t>(idx));
}

template <ExteriorKind K>
std::string to_string(const Exterior<K>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : e.coefficients()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    const auto idx = subset_indices(s);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      out += k == 0 ? "*" : "^";
      const std::string name = e.ring() ? e.ring()->name(idx[k]) : std::to_string(idx[k] + 1);
      out += (K == ExteriorKind::form ? "d" : "D") + name;
    }
  }
  return out;
}

template std::string to_string(const PolyForm&);
template std::string to_string(const PolyMultivector&);

}  // namespace ppa
