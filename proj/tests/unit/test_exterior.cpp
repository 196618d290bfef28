#include "doctest.h"

#include "ppa/errors.hpp"
#include "ppa/exterior.hpp"
#include "support.hpp"

using namespace ppa;
using namespace ppa::testing;

namespace {

template <ExteriorKind K>
Exterior<K> random_element(PolyGen& g, const RingPtr& r, std::size_t grade) {
  Exterior<K> e(r, r->size(), grade);
  for (Subset s : subsets_of_size(r->size(), grade)) {
    if (g.uniform(0, 2) == 0) continue;
    e.set(s, g.poly(r, 2, 2));
  }
  return e;
}

PolyMatrix random_antisymmetric(PolyGen& g, const RingPtr& r, std::size_t n) {
  PolyMatrix p(n, std::vector<PolyExpr>(n, PolyExpr(r, Rational(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      p[i][j] = g.poly(r, 2, 1);
      p[j][i] = -p[i][j];
    }
  }
  return p;
}

}  // namespace

TEST_CASE("basis wedges") {
  auto R = numbered_ring("x", 3);
  auto w = wedge(basis_form(R, 0), basis_form(R, 1));
  CHECK(w.grade() == 2);
  CHECK(w.coefficients().size() == 1);
  CHECK(w.coefficient(make_subset(std::vector<std::size_t>{0, 1})) == PolyExpr(R, 1));
  CHECK(wedge(basis_form(R, 0), basis_form(R, 0)).is_zero());
  CHECK(wedge(w, wedge(basis_form(R, 2), basis_form(R, 1))).is_zero());
}

TEST_CASE("wedge signs match the inversion count of the concatenation") {
  auto R = numbered_ring("x", 5);
  for (std::size_t a = 0; a <= 5; ++a) {
    for (Subset s : subsets_of_size(5, a)) {
      for (std::size_t b = 0; a + b <= 5; ++b) {
        for (Subset t : subsets_of_size(5, b)) {
          PolyForm fs(R, 5, a), ft(R, 5, b);
          fs.set(s, PolyExpr(R, 1));
          ft.set(t, PolyExpr(R, 1));
          auto w = wedge(fs, ft);
          if (s & t) {
            CHECK(w.is_zero());
            continue;
          }
          auto cat = subset_indices(s);
          for (auto i : subset_indices(t)) cat.push_back(i);
          CHECK(w.coefficient(s | t) == PolyExpr(R, perm_sign(cat)));
        }
      }
    }
  }
}

TEST_CASE("wedge is associative and graded-commutative") {
  auto R = numbered_ring("x", 5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    PolyGen g(seed);
    const std::size_t ga = g.uniform(0, 3), gb = g.uniform(0, 3), gc = g.uniform(0, 2);
    auto a = random_element<ExteriorKind::form>(g, R, ga);
    auto b = random_element<ExteriorKind::form>(g, R, gb);
    auto c = random_element<ExteriorKind::form>(g, R, gc);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    auto ab = wedge(a, b), ba = wedge(b, a);
    if ((ga * gb) % 2 == 1) ba = -ba;
    CHECK(ab == ba);
  }
}

TEST_CASE("volume_dual signs") {
  auto R3 = numbered_ring("x", 3);
  auto d3 = volume_dual(basis_form(R3, 2));
  CHECK(d3.grade() == 2);
  CHECK(d3.coefficient(make_subset(std::vector<std::size_t>{0, 1})) == PolyExpr(R3, 1));

  auto R2 = numbered_ring("x", 2);
  CHECK(volume_dual(basis_form(R2, 0)).coefficient(0b10) == PolyExpr(R2, 1));
  CHECK(volume_dual(basis_form(R2, 1)).coefficient(0b01) == PolyExpr(R2, -1));
}

TEST_CASE("double dual sign law") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto R = numbered_ring("x", n);
    PolyGen g(100 + n);
    for (std::size_t l = 0; l <= n; ++l) {
      auto w = random_element<ExteriorKind::form>(g, R, l);
      auto back = volume_dual(volume_dual(w));
      if ((l * (n - l)) % 2 == 1) back = -back;
      CHECK(back == w);
    }
  }
}

TEST_CASE("top coefficient of df1^...^dfn is the Jacobian determinant") {
  auto R = numbered_ring("x", 4);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    PolyGen g(seed);
    std::vector<PolyExpr> fs;
    for (int a = 0; a < 4; ++a) fs.push_back(g.poly(R, 3, 2));
    CHECK(top_coefficient(wedge_differentials(R, fs)) == jacobian_det(fs));
  }
}

TEST_CASE("pfaffian small cases") {
  auto V = make_ring({"a", "b", "c", "d", "e", "f"});
  auto a = var(V, 0), b = var(V, 1), c = var(V, 2), d = var(V, 3), e = var(V, 4), f = var(V, 5);
  PolyExpr z(V, 0);
  PolyMatrix p2{{z, a}, {-a, z}};
  CHECK(pfaffian(p2, Subset{0b11}) == a);

  // p12=a p13=b p14=c p23=d p24=e p34=f
  PolyMatrix p4{{z, a, b, c}, {-a, z, d, e}, {-b, -d, z, f}, {-c, -e, -f, z}};
  CHECK(pfaffian(p4, Subset{0b1111}) == a * f - b * e + c * d);
  CHECK_THROWS_AS(pfaffian(p4, Subset{0b0111}), ContractViolation);
}

TEST_CASE("pfaffian squares to the determinant") {
  auto R = numbered_ring("x", 2);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    PolyGen g(seed);
    for (std::size_t n : {2, 4, 6}) {
      auto p = random_antisymmetric(g, R, n);
      auto pf = pfaffian(p, full_subset(n));
      CHECK(pf * pf == det_oracle(p));
    }
  }
}

TEST_CASE("wedge power coefficients are m! times the pfaffian") {
  auto R = numbered_ring("x", 6);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    PolyGen g(seed);
    auto p = random_antisymmetric(g, R, 6);
    auto pi = bivector(R, p);
    for (std::size_t m = 1; m <= 3; ++m) {
      auto w = wedge_power(pi, m);
      Rational mf = 1;
      for (std::size_t k = 2; k <= m; ++k) mf *= static_cast<long>(k);
      for (Subset s : subsets_of_size(6, 2 * m)) CHECK(w.coefficient(s) == pfaffian(p, s).scaled(mf));
    }
  }
}

TEST_CASE("q5 wedge square and cyclic pfaffians") {
  for (const auto& b : all_bindings("q5")) {
    auto spec = model("q5", b);
    auto ps = poisson(spec);
    const auto& R = ps.ring();
    auto pp = [&](std::size_t i, std::size_t j) { return ps.entry(i, j); };
    auto sq = wedge(ps.bivector(), ps.bivector());
    CHECK(sq.coefficient(0b11110) == (pp(1, 2) * pp(3, 4) - pp(1, 3) * pp(2, 4) + pp(1, 4) * pp(2, 3)).scaled(2));
    const PolyExpr P = spec.casimirs.front().second;
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<std::size_t> order{(i + 1) % 5, (i + 2) % 5, (i + 3) % 5, (i + 4) % 5};
      CHECK(pfaffian(ps.matrix(), order) == partial_derivative(P, i).scaled(make_rational(1, 5)));
    }
    CHECK(P.ring() == R);
  }
}

TEST_CASE("to_string renders forms and multivectors") {
  auto R = numbered_ring("x", 3);
  auto w = wedge(basis_form(R, 0), basis_form(R, 2)).scaled(PolyExpr::variable(R, 1));
  CHECK(to_string(w) == "(x2)*dx1^dx3");
  CHECK(to_string(volume_dual(basis_form(R, 1))) == "(-1)*Dx1^Dx3");
}
