#include "doctest.h"

#include "ppa/errors.hpp"
#include "ppa/monomial_map.hpp"
#include "ppa/polynomial.hpp"
#include "support.hpp"

using namespace ppa;
using ppa::testing::P;
using ppa::testing::PolyGen;

namespace {
RingPtr x3() { return numbered_ring("x", 3); }
}

TEST_CASE("rational canonical form") {
  Rational r = parse_rational("6/-4");
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK(*exact_root(make_rational(-8, 27), 3) == make_rational(-2, 3));
  CHECK_FALSE(exact_root(make_rational(2), 2));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("poly_arith") {
  auto R = x3();
  CHECK(P("(x1+x2)*(x1-x2)", R) == P("x1^2-x2^2", R));
  auto markov = P("x1^2+x2^2+x3^2+3*x1*x2*x3", R);
  CHECK(poly_arith(markov, markov, ArithOp::sub).is_zero());
  auto torus = poly_arith(P("1/3*(x1^3+x2^3+x3^3)", R), P("2*x1*x2*x3", R), ArithOp::add);
  CHECK(to_string(torus) == "1/3*x1^3 + 2*x1*x2*x3 + 1/3*x2^3 + 1/3*x3^3");
  CHECK_THROWS_AS(poly_arith(P("x1", R), P("y1", make_ring({"y1", "y2", "y3"})), ArithOp::add), VariableSetError);
  CHECK(poly_arith(PolyExpr(5), P("x1", R), ArithOp::mul) == P("5*x1", R));
}

TEST_CASE("partial_derivative") {
  auto R = x3();
  CHECK(partial_derivative(P("x1^2+x2^2+x3^2+3*x1*x2*x3", R), 2) == P("2*x3+3*x1*x2", R));
  auto X = make_ring({"x"});
  CHECK(partial_derivative(P("x^(3/2)", X), 0) == P("3/2*x^(1/2)", X));
  auto S = make_ring({"X2", "X3", "X4"});
  CHECK(partial_derivative(P("1+X3^3+X4^3-X2^4-X2*X3^3+X2*X4^3", S), "X4") == P("3*X4^2*(1+X2)", S));
}

TEST_CASE("evaluate") {
  auto R = x3();
  std::vector<Rational> ones{1, 1, 1};
  CHECK(evaluate(P("x1^2+x2^2+x3^2+3*x1*x2*x3", R), ones) == 6);
  CHECK(evaluate(P("1/3*(x1^3+x2^3+x3^3)+2*x1*x2*x3", R), ones) == 3);
  std::vector<Rational> zero{0, 0, 0};
  CHECK(evaluate(P("7/2+x1*x2^3+x3", R), zero) == make_rational(7, 2));
  std::vector<double> neg{-1.0, 1.0, 1.0};
  CHECK_THROWS_AS(evaluate(P("x1^(1/2)", R), neg), DomainError);
  std::vector<double> pt{4.0, 1.0, 1.0};
  CHECK(evaluate(P("x1^(1/2)+x2", R), pt) == doctest::Approx(3.0));
}

TEST_CASE("exact_divisibility") {
  auto R = x3();
  auto d = exact_divisibility(P("x1^2*x2+x1*x3", R), P("x1", R));
  CHECK(d.divisible);
  CHECK(*d.quotient == P("x1*x2+x3", R));
  CHECK_FALSE(exact_divisibility(P("x1+1", R), P("x1", R)).divisible);
  auto z = exact_divisibility(PolyExpr(R, 0), P("x1^2+x2", R));
  CHECK(z.divisible);
  CHECK(z.quotient->is_zero());
  CHECK_THROWS_AS(exact_divisibility(P("x1", R), PolyExpr(R, 0)), DivisionByZeroError);
}

TEST_CASE("rendering round trip") {
  auto R = x3();
  PolyGen gen(7);
  for (int i = 0; i < 200; ++i) {
    auto p = i % 2 ? gen.poly(R) : gen.laurent(R);
    CHECK(parse_poly(to_string(p), R) == p);
  }
  CHECK(to_string(PolyExpr(R, 0)) == "0");
  CHECK(to_string(P("-x1^(-1/2)*x2", R)) == "-x1^(-1/2)*x2");
}

TEST_CASE("parse errors carry positions") {
  auto R = x3();
  try {
    parse_poly("x1 + * x2", R);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_poly("", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 + q", R), ParseError);
}

TEST_CASE("ring axioms and Leibniz rule on random inputs") {
  auto R = x3();
  PolyGen gen(11);
  for (int i = 0; i < 150; ++i) {
    auto a = gen.poly(R), b = gen.poly(R), c = gen.poly(R);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    auto la = gen.laurent(R), lb = gen.laurent(R);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(partial_derivative(a * b, v) == a * partial_derivative(b, v) + b * partial_derivative(a, v));
      CHECK(partial_derivative(la * lb, v) == la * partial_derivative(lb, v) + lb * partial_derivative(la, v));
    }
  }
}

TEST_CASE("divisibility of products") {
  auto R = x3();
  PolyGen gen(13);
  for (int i = 0; i < 150; ++i) {
    auto p = gen.poly(R), q = gen.poly(R);
    if (q.is_zero()) continue;
    auto d = exact_divisibility(p * q, q);
    REQUIRE(d.divisible);
    CHECK(*d.quotient == p);
  }
}

TEST_CASE("mirror monomial maps") {
  auto R = x3();
  auto torus = P("1/3*(x1^3+x2^3+x3^3)+2*x1*x2*x3", R);
  auto a = parse_monomial_map("map y1 = x1; map y2 = x2*x3^(-1/2); map y3 = x3^(3/2);", R);
  auto Y = a.target();
  CHECK(substitute(torus, a) == P("1/3*(y1^3+y2^3*y3+y3^2)+2*y1*y2*y3", Y));
  auto b = parse_monomial_map("map z1 = x1^(-3/4)*x2^(3/2); map z2 = x1^(1/4)*x2^(-1/2)*x3; map z3 = x1^(3/2);", R);
  CHECK(substitute(torus, b) == P("1/3*(z3^2+z1^2*z3+z1*z2^3)+2*z1*z2*z3", b.target()));
  CHECK(substitute(torus, MonomialMap::identity(R)) == torus);
  CHECK_THROWS_AS(parse_monomial_map("map y1 = x1*x2; map y2 = x1*x2; map y3 = x3;", R), SingularMapError);
}

TEST_CASE("substitution by a map and its inverse is the identity") {
  auto R = x3();
  PolyGen gen(17);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::vector<Rational>> E(3, std::vector<Rational>(3));
    for (auto& row : E)
      for (auto& e : row) e = make_rational(gen.uniform(-3, 3), gen.uniform(1, 2));
    std::vector<Rational> s;
    for (int k = 0; k < 3; ++k) s.push_back(make_rational(gen.uniform(1, 3)));
    std::unique_ptr<MonomialMap> m;
    try {
      m = std::make_unique<MonomialMap>(R, make_ring({"y1", "y2", "y3"}), E, std::vector<Rational>(3, Rational(1)));
    } catch (const SingularMapError&) {
      continue;
    }
    auto p = gen.laurent(R);
    CHECK(substitute(substitute(p, *m), m->inverse()) == p);
  }
  // scaled map with exact roots
  std::vector<std::vector<Rational>> E{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  MonomialMap scaled(R, make_ring({"y1", "y2", "y3"}), E, {4, make_rational(1, 3), 5});
  auto p = P("x1^3*x2 - x3^2 + 1/2", R);
  CHECK(substitute(substitute(p, scaled), scaled.inverse()) == p);
}
