#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ppa/polynomial.hpp"

namespace ppa {

struct CheckName {
  std::string kind;  // jacobi, casimirs, quasi, theorem31, plucker, rank, extendability, fi, degree_sum, bdu_relation
  std::string arg;   // quasi(ID) / fi(INT)

  std::string to_string() const { return arg.empty() ? kind : kind + "(" + arg + ")"; }
  friend bool operator==(const CheckName&, const CheckName&) = default;
};

struct JacobianDecl {
  PolyExpr lambda;
  friend bool operator==(const JacobianDecl&, const JacobianDecl&) = default;
};

struct TableDecl {
  /// Keys (i,j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>, PolyExpr> entries;
  friend bool operator==(const TableDecl&, const TableDecl&) = default;
};

struct NambuDecl {
  std::size_t arity = 0;
  PolyExpr lambda;
  friend bool operator==(const NambuDecl&, const NambuDecl&) = default;
};

using StructureDecl = std::variant<std::monostate, JacobianDecl, TableDecl, NambuDecl>;

struct IntegrateRequest {
  std::vector<double> x0;
  double step = 0;
  double until = 0;
  std::vector<std::string> monitor;
  friend bool operator==(const IntegrateRequest&, const IntegrateRequest&) = default;
};

struct Expectation {
  CheckName check;
  std::string literal;  // canonical: pass, fail, true, false, or a rational
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct ModelSpec {
  std::string name;
  std::vector<std::string> header;  // leading comment lines, including '#'
  RingPtr ring;
  std::vector<std::int64_t> weights;
  std::vector<std::pair<std::string, Rational>> params;
  std::vector<std::pair<std::string, PolyExpr>> lets;
  std::vector<std::pair<std::string, PolyExpr>> casimirs;
  StructureDecl structure;
  std::vector<PolyExpr> hamiltonians;
  std::vector<CheckName> checks;
  std::vector<Expectation> expects;
  std::optional<IntegrateRequest> integrate;

  std::size_t dim() const { return ring ? ring->size() : 0; }
  std::optional<PolyExpr> named(std::string_view id) const;
  std::vector<PolyExpr> casimir_values() const;
  std::vector<Exponent> weight_exponents() const;

  /// Semantic equality (the name is not part of the text).
  friend bool operator==(const ModelSpec& a, const ModelSpec& b);
};

ModelSpec parse_model(std::string_view text, std::string name = "model");
std::string render_model(const ModelSpec& spec);

/// Shortest round-tripping decimal form.
std::string format_double(double v);

}  // namespace ppa
