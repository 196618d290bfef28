#include "doctest.h"

#include <cmath>

#include "ppa/dynamics.hpp"
#include "ppa/errors.hpp"
#include "support.hpp"

using namespace ppa;
using namespace ppa::testing;

namespace {

PolyVectorField field_of(const ModelSpec& spec) { return model_vector_field(spec, build_structure(spec)); }

PolyVectorField field(const RingPtr& R, std::initializer_list<const char*> comps) {
  PolyVectorField f{R, {}};
  for (const char* c : comps) f.components.push_back(P(c, R));
  return f;
}

std::string rat(const Bindings& b, const char* k, const Rational& dflt) { return to_string(b.contains(k) ? b.at(k) : dflt); }

}  // namespace

TEST_CASE("sklyanin rotator") {
  for (const auto& b : all_bindings("sklyanin")) {
    auto spec = model("sklyanin", b);
    const auto& R = spec.ring;
    const std::string J1 = rat(b, "J1", 1), J2 = rat(b, "J2", 2), J3 = rat(b, "J3", 3);
    auto f = field_of(spec);
    CHECK(f.components[0] == P("(" + J3 + " - (" + J2 + "))*x2*x3", R));
    CHECK(f.components[1] == P("(" + J1 + " - (" + J3 + "))*x1*x3", R));
    CHECK(f.components[2] == P("(" + J2 + " - (" + J1 + "))*x1*x2", R));
    CHECK(f.components[3].is_zero());
    for (const auto& r : constants_of_motion_check(f, spec.casimir_values())) CHECK(r.conserved);
    // the sign pattern (J2-J3, J1-J3, J1-J2) does not preserve x1^2+x2^2+x3^2
    auto other = field(R, {"x2*x3", "x1*x3", "x1*x2", "0"});
    other.components[0] = other.components[0].scaled(b.contains("J2") ? b.at("J2") - b.at("J3") : Rational(-1));
    other.components[1] = other.components[1].scaled(b.contains("J1") ? b.at("J1") - b.at("J3") : Rational(-2));
    other.components[2] = other.components[2].scaled(b.contains("J1") ? b.at("J1") - b.at("J2") : Rational(-1));
    CHECK_FALSE(lie_derivative(other, spec.casimirs[0].second).is_zero());
  }
}

TEST_CASE("euler top field") {
  auto spec = model("euler_top");
  const auto& R = spec.ring;
  auto f = field_of(spec);
  CHECK(f == field(R, {"(2-3)*x2*x3", "(3-1)*x1*x3", "(1-2)*x1*x2"}));
  auto hs = std::vector{spec.hamiltonians[0], spec.casimirs[0].second};
  for (const auto& r : constants_of_motion_check(f, hs)) CHECK(r.conserved);
}

TEST_CASE("casimirs and the hamiltonian are conserved by every hamiltonian flow") {
  PolyGen g(4);
  for (const char* name : {"q3", "markov", "sklyanin", "quadrics61", "q5", "dell"}) {
    auto spec = model(name);
    auto ps = poisson(spec);
    for (int t = 0; t < 3; ++t) {
      auto h = g.poly(ps.ring(), 3, 2);
      auto f = hamiltonian_vector_field(ps, h);
      for (std::size_t i = 0; i < ps.dim(); ++i) CHECK(f.components[i] == bracket_of(ps, var(ps.ring(), i), h));
      CHECK(lie_derivative(f, h).is_zero());
      for (const auto& r : constants_of_motion_check(f, spec.casimir_values())) CHECK(r.conserved);
    }
  }
  auto R = numbered_ring("x", 3);
  PolyVectorField zero{R, std::vector<PolyExpr>(3, PolyExpr(R, 0))};
  CHECK(constants_of_motion_check(zero, std::vector{g.poly(R)}).front().conserved);
}

TEST_CASE("dell flow of x5") {
  for (const auto& b : all_bindings("dell")) {
    auto spec = model("dell", b);
    const auto& R = spec.ring;
    auto ps = poisson(spec);
    const std::string g2 = rat(b, "g2", 4);
    CHECK(ps.entry(4, 0) == P("-x2*x3*x4*x6", R));
    CHECK(ps.entry(0, 1).is_zero());
    CHECK(ps.entry(0, 2).is_zero());
    CHECK(ps.entry(1, 2).is_zero());
    CHECK(ps.entry(4, 5).is_zero());
    auto f = field_of(spec);
    CHECK(f == field(R, {"x2*x3*x4*x6", "x1*x3*x4*x6", "x1*x2*x4*x6", ("(" + g2 + ")*x1*x2*x3*x6").c_str(), "0", "0"}));
    std::vector<PolyExpr> inv = spec.casimir_values();
    inv.push_back(var(R, 5));
    for (const auto& r : constants_of_motion_check(f, inv)) CHECK(r.conserved);
  }
}

TEST_CASE("dell, its nambu form and the elegant system") {
  for (const auto& b : all_bindings("dell_nambu")) {
    Bindings full = b;
    full["kt"] = 1;
    auto dell = model("dell", full);
    auto nambu = model("dell_nambu", b);
    const Rational g2 = b.contains("g2") ? b.at("g2") : Rational(4);
    auto df = field_of(dell);
    auto nf = field_of(nambu);
    const auto& R5 = nambu.ring;
    // DELL at x6 = 1, components x1..x4
    PolyVectorField restricted{R5, {}};
    for (std::size_t i = 0; i < 5; ++i) {
      auto c = substitute_variable(df.components[i], 5, PolyExpr(dell.ring, 1));
      restricted.components.push_back(parse_poly(to_string(c), R5));
    }
    auto c = proportionality(nf, restricted);
    REQUIRE(c);
    CHECK(*c == 1);
    CHECK(nf.components[4].is_zero());

    auto fairlie = model("fairlie", {{"g2", g2}});
    auto ff = field_of(fairlie);
    CHECK(ff == fairlie_field(fairlie.ring, g2));
  }
}

TEST_CASE("proportionality") {
  auto R = numbered_ring("x", 2);
  auto a = field(R, {"x1", "2*x2"});
  CHECK(*proportionality(a, field(R, {"3*x1", "6*x2"})) == make_rational(1, 3));
  CHECK_FALSE(proportionality(a, field(R, {"x1", "x2"})));
}

TEST_CASE("nahm decoupling") {
  auto r4 = decoupling_check(4);
  REQUIRE(r4.a);
  CHECK(*r4.a == 2);
  CHECK(r4.consistent);
  CHECK(r4.nahm_match);
  for (const auto& r : r4.residuals) CHECK(r.is_zero());
  CHECK_FALSE(r4.literal_match);
  auto R = r4.literal_residuals[0].ring();
  bool found = false;
  for (const auto& r : r4.literal_residuals) {
    if (r == P("12*x1*x2*x3^2", R) || r == P("-12*x1*x2*x3^2", R)) found = true;
  }
  CHECK(found);
  CHECK(r4.factorization_holds);
  CHECK(r4.factor_conserved);

  auto r1 = decoupling_check(1);
  CHECK(*r1.a == 1);
  CHECK(r1.nahm_match);
  CHECK(r1.literal_match);

  auto r9 = decoupling_check(make_rational(9, 4));
  CHECK(*r9.a == make_rational(3, 2));
  CHECK(r9.nahm_match);

  auto r2 = decoupling_check(2);
  CHECK_FALSE(r2.a);
  CHECK(r2.consistent);
  CHECK(r2.a_float == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("integrate: zero field") {
  auto R = numbered_ring("x", 2);
  PolyVectorField zero{R, std::vector<PolyExpr>(2, PolyExpr(R, 0))};
  std::vector<double> x0{0.3, -2};
  std::vector<MonitoredInvariant> mon{{"f", P("x1^2 + x2", R)}};
  auto tr = integrate<double>(zero, x0, 0.1, 1, mon);
  CHECK(tr.times.size() == 11);
  CHECK(tr.times.back() == doctest::Approx(1.0));
  for (const auto& s : tr.states) {
    CHECK(s[0] == doctest::Approx(0.3));
    CHECK(s[1] == doctest::Approx(-2));
  }
  CHECK(tr.drift[0] == 0);
}

TEST_CASE("integrate: euler top") {
  auto spec = model("euler_top");
  auto f = field_of(spec);
  std::vector<MonitoredInvariant> mon{{"Q1", spec.casimirs[0].second}, {"H", spec.hamiltonians[0]}};
  const auto& req = *spec.integrate;
  auto tr = integrate<double>(f, req.x0, req.step, req.until, mon);
  CHECK(tr.times.size() == 10001);
  CHECK(tr.drift[0] < 1e-8);
  CHECK(tr.drift[1] < 1e-8);
  for (std::size_t i = 1; i < tr.times.size(); ++i) CHECK(tr.times[i] > tr.times[i - 1]);

  // step halving, in extended precision so roundoff stays below the truncation error
  auto coarse = integrate<long double>(f, req.x0, 2 * req.step, req.until, mon, false);
  auto fine = integrate<long double>(f, req.x0, req.step, req.until, mon, false);
  CHECK(coarse.drift[1] / fine.drift[1] >= 8);
}

TEST_CASE("integrate: dell reaches infinity") {
  auto spec = model("dell");
  auto f = field_of(spec);
  std::vector<MonitoredInvariant> mon;
  for (const auto& [n, q] : spec.casimirs) mon.push_back({n, q});
  const auto& req = *spec.integrate;
  auto tr = integrate<double>(f, req.x0, req.step, req.until, mon);
  for (double d : std::vector<double>(tr.drift.begin(), tr.drift.end())) CHECK(d < 1e-8);
  try {
    integrate<double>(f, req.x0, req.step, 10, mon);
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.last_time() > 0.19);
    CHECK(e.last_time() < 0.21);
    CHECK_FALSE(e.partial().times.empty());
  }
}
