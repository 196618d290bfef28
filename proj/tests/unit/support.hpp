#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ppa/catalog.hpp"
#include "ppa/checks.hpp"
#include "ppa/polynomial.hpp"

namespace ppa::testing {

inline PolyExpr P(std::string_view text, const RingPtr& ring) { return parse_poly(text, ring); }

// Small random polynomials with natural exponents and small rational coefficients.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  Rational coeff() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int a = 0;
    while (a == 0) a = num(rng_);
    return make_rational(a, den(rng_));
  }

  PolyExpr poly(const RingPtr& ring, int max_terms = 4, int max_deg = 3) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    PolyExpr p(ring, Rational(0));
    const int t = terms(rng_);
    for (int k = 0; k < t; ++k) {
      std::vector<Exponent> e(ring->size());
      for (auto& x : e) x = Exponent(deg(rng_));
      p += PolyExpr::term(ring, Monomial(e), coeff());
    }
    return p;
  }

  // Allows fractional and negative exponents.
  PolyExpr laurent(const RingPtr& ring, int max_terms = 3) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> num(-4, 6);
    std::uniform_int_distribution<int> den(1, 3);
    PolyExpr p(ring, Rational(0));
    const int t = terms(rng_);
    for (int k = 0; k < t; ++k) {
      std::vector<Exponent> e(ring->size());
      for (auto& x : e) x = Exponent(num(rng_), den(rng_));
      p += PolyExpr::term(ring, Monomial(e), coeff());
    }
    return p;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Sign of a permutation by counting inversions.
inline int perm_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] > p[b]) s = -s;
    }
  }
  return s;
}

// Leibniz expansion; independent of the exterior module.
inline PolyExpr det_oracle(const std::vector<std::vector<PolyExpr>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PolyExpr acc(0);
  do {
    PolyExpr t(perm_sign(perm));
    for (std::size_t r = 0; r < n; ++r) t *= m[r][perm[r]];
    acc += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Jacobian matrix rows d f_a / d x_i.
inline PolyExpr jacobian_det(const std::vector<PolyExpr>& fs) {
  std::vector<std::vector<PolyExpr>> m;
  for (const auto& f : fs) {
    std::vector<PolyExpr> row;
    for (std::size_t i = 0; i < fs.size(); ++i) row.push_back(partial_derivative(f, i));
    m.push_back(row);
  }
  return det_oracle(m);
}

inline PolyExpr var(const RingPtr& r, std::size_t i) { return PolyExpr::variable(r, i); }

inline ModelSpec model(std::string_view name, const Bindings& b = {}) { return build_model(name, b); }

inline PoissonStructure poisson(const ModelSpec& m) { return *build_structure(m).poisson; }

// Default binding first, then the two alternates.
inline std::vector<Bindings> all_bindings(std::string_view name) {
  const auto& info = catalog_info(name);
  std::vector<Bindings> out{{}};
  out.insert(out.end(), info.alternates.begin(), info.alternates.end());
  return out;
}

}  // namespace ppa::testing
