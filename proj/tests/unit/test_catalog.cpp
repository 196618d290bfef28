#include "doctest.h"

#include "ppa/errors.hpp"
#include "ppa/exterior.hpp"
#include "ppa/regularity.hpp"
#include "support.hpp"

using namespace ppa;
using namespace ppa::testing;

TEST_CASE("every entry passes its recorded checks at three bindings") {
  CHECK(catalog_entries().size() == 17);
  for (const auto& e : catalog_entries()) {
    REQUIRE(e.alternates.size() == 2);
    for (const auto& b : all_bindings(e.name)) {
      auto spec = model(e.name, b);
      auto rep = run_checks(spec);
      CHECK_MESSAGE(!rep.failed(), e.name << "\n" << report_text(rep));
      auto built = build_structure(spec);
      if (!built.poisson) continue;
      CHECK_MESSAGE(check_jacobi(*built.poisson).holds, e.name);
      for (const auto& q : spec.casimir_values()) CHECK_MESSAGE(is_casimir(*built.poisson, q), e.name);
      const std::size_t l = spec.casimirs.size();
      const bool empty_table = built.poisson->bivector().is_zero();
      if (l > 0 && !empty_table && (spec.dim() - l) % 2 == 0) CHECK_MESSAGE(theorem31_check(*built.poisson, spec.casimir_values()).holds, e.name);
    }
  }
}

TEST_CASE("wedge powers equal m! times pfaffians on every catalog structure") {
  for (const auto& e : catalog_entries()) {
    auto built = build_structure(model(e.name));
    if (!built.poisson || built.poisson->dim() > 6) continue;
    const auto& ps = *built.poisson;
    const std::size_t n = ps.dim();
    for (std::size_t m = 1; 2 * m <= n; ++m) {
      auto w = wedge_power(ps.bivector(), m);
      for (Subset s : subsets_of_size(n, 2 * m)) CHECK_MESSAGE(w.coefficient(s) == pfaffian(ps.matrix(), s).scaled(factorial(m)), e.name);
    }
  }
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(model("q5", {{"k", 0}}), CatalogError);
  CHECK_THROWS_AS(model("sklyanin", {{"J1", 2}}), CatalogError);
  CHECK_THROWS_AS(model("dell", {{"g2", 0}}), CatalogError);
  CHECK_THROWS_AS(model("fairlie", {{"g2", -1}}), CatalogError);
  CHECK_THROWS_AS(model("dell_nambu", {{"g2", 0}}), CatalogError);
  CHECK_THROWS_AS(model("nonexistent"), CatalogError);
  CHECK_THROWS_AS(model("q3", {{"j", 1}}), CatalogError);
  CHECK_NOTHROW(model("q5", {{"k", -1}}));
}

TEST_CASE("q3 and quadrics61 tables") {
  auto q3 = model("q3");
  CHECK(poisson(q3).entry(0, 1) == P("2*x1*x2 + x3^2", q3.ring));

  for (const auto& b : all_bindings("quadrics61")) {
    auto spec = model("quadrics61", b);
    const Rational k = b.contains("k") ? b.at("k") : Rational(2);
    auto ps = poisson(spec);
    const auto& R = spec.ring;
    for (std::size_t i = 0; i < 4; ++i) {
      auto x = [&](std::size_t d) { return var(R, (i + d) % 4); };
      CHECK(ps.entry(i, (i + 1) % 4) == (x(0) * x(1)).scaled(k * k) - x(2) * x(3));
      CHECK(ps.entry(i, (i + 2) % 4) == (x(3) * x(3) - x(1) * x(1)).scaled(k));
    }
    auto jac = jacobian_structure(R, spec.casimir_values(), PolyExpr(-1));
    CHECK(jac.matrix() == ps.matrix());
  }
  auto k2 = poisson(model("quadrics61"));
  CHECK(k2.entry(0, 1) == P("4*x1*x2 - x3*x4", k2.ring()));
  CHECK(k2.entry(0, 2) == P("2*(x4^2 - x2^2)", k2.ring()));
}

TEST_CASE("sklyanin table is its jacobian re-derivation") {
  for (const auto& b : all_bindings("sklyanin")) {
    auto spec = model("sklyanin", b);
    auto ps = poisson(spec);
    auto unit = jacobian_structure(spec.ring, spec.casimir_values(), PolyExpr(1));
    CHECK(unit.scaled(make_rational(1, 4)) == ps);
  }
}

TEST_CASE("catalog emission is stable") {
  for (const auto& e : catalog_entries()) {
    const auto a = render_model(model(e.name));
    const auto b = render_model(model(e.name));
    CHECK(a == b);
    CHECK(render_model(parse_model(a, e.name)) == a);
  }
}
