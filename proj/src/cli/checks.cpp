#include "ppa/checks.hpp"

#include <chrono>
#include <random>

#include "json.hpp"
#include "ppa/errors.hpp"
#include "ppa/geometry.hpp"
#include "ppa/regularity.hpp"

namespace ppa {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::info: return "info";
  }
  return "?";
}

bool CheckReport::failed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return true;
  }
  return false;
}

BuiltModel build_structure(const ModelSpec& spec) {
  BuiltModel b;
  const auto& R = spec.ring;
  if (const auto* j = std::get_if<JacobianDecl>(&spec.structure)) {
    const auto cs = spec.casimir_values();
    b.poisson = jacobian_structure(R, cs, j->lambda);
  } else if (const auto* t = std::get_if<TableDecl>(&spec.structure)) {
    b.poisson = PoissonStructure::from_upper(R, t->entries);
  } else if (const auto* nb = std::get_if<NambuDecl>(&spec.structure)) {
    b.nambu.emplace(R, spec.casimir_values(), nb->lambda);
  }
  return b;
}

PolyVectorField model_vector_field(const ModelSpec& spec, const BuiltModel& built) {
  if (spec.hamiltonians.empty()) throw ContractViolation("model has no hamiltonian");
  if (built.poisson) return hamiltonian_vector_field(*built.poisson, spec.hamiltonians.front());
  return nambu_vector_field(*built.nambu, spec.hamiltonians);
}

namespace {

// Raw outcome of one check before expectations are applied.
struct Outcome {
  CheckStatus status = CheckStatus::skipped;
  bool verdict = false;        // predicate value
  std::string value;           // pinned by `expect` when numeric
  std::optional<std::string> lambda;
  std::optional<std::string> witness;
  std::optional<std::string> reason;
};

Outcome skipped(std::string why) {
  Outcome o;
  o.reason = std::move(why);
  return o;
}

Outcome predicate(bool ok, std::optional<std::string> witness = std::nullopt) {
  Outcome o;
  o.status = ok ? CheckStatus::pass : CheckStatus::fail;
  o.verdict = ok;
  o.value = ok ? "pass" : "fail";
  if (!ok) o.witness = std::move(witness);
  return o;
}

std::string var_tuple(const RingPtr& R, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + R->name(i);
  return s;
}

class Runner {
 public:
  Runner(const ModelSpec& spec, const RunOptions& opt) : spec_(spec), opt_(opt) {}

  Outcome run(const CheckName& c) {
    try {
      if (!built_) built_ = build_structure(spec_);
    } catch (const Error& e) {
      return skipped(std::string("structure could not be built: ") + e.what());
    }
    try {
      if (c.kind == "jacobi") return jacobi();
      if (c.kind == "casimirs") return casimirs();
      if (c.kind == "quasi") return quasi(c.arg);
      if (c.kind == "theorem31") return theorem31();
      if (c.kind == "plucker") return plucker();
      if (c.kind == "rank") return rank();
      if (c.kind == "extendability") return extendability();
      if (c.kind == "fi") return fi(std::stoul(c.arg));
      if (c.kind == "degree_sum") return degree_sum();
      if (c.kind == "bdu_relation") return bdu_relation();
    } catch (const DegenerateCasimirError& e) {
      Outcome o = predicate(false, e.what());
      return o;
    } catch (const Error& e) {
      return skipped(e.what());
    }
    return skipped("unknown check");
  }

 private:
  const PoissonStructure* poisson() const { return built_->poisson ? &*built_->poisson : nullptr; }

  Outcome jacobi() {
    if (!poisson()) return skipped("Nambu structure: use fi(N)");
    const auto r = check_jacobi(*poisson());
    if (r.holds) return predicate(true);
    const auto& w = r.witnesses.front();
    return predicate(false, "{" + var_tuple(spec_.ring, {w.i, w.j, w.k}) + "}: " + to_string(w.residual));
  }

  Outcome casimirs() {
    if (spec_.casimirs.empty()) return skipped("no casimirs declared");
    const auto& R = spec_.ring;
    for (const auto& [name, q] : spec_.casimirs) {
      for (std::size_t i = 0; i < R->size(); ++i) {
        PolyExpr b = poisson() ? bracket_of(*poisson(), q, PolyExpr::variable(R, i)) : nambu_with(q, i);
        if (!b.is_zero()) return predicate(false, "{" + name + "," + R->name(i) + "} = " + to_string(b));
      }
    }
    return predicate(true);
  }

  // {Q, x_i, x_j, ...} over all coordinate completions containing x_i.
  PolyExpr nambu_with(const PolyExpr& q, std::size_t i) {
    const auto& ns = *built_->nambu;
    const std::size_t r = ns.arity();
    const std::size_t n = ns.dim();
    for (Subset s : subsets_of_size(n, r - 1)) {
      if (!(s & (Subset{1} << i))) continue;
      std::vector<PolyExpr> args{q};
      for (auto k : subset_indices(s)) args.push_back(PolyExpr::variable(ns.ring(), k));
      PolyExpr b = nambu_bracket(ns, args);
      if (!b.is_zero()) return b;
    }
    return PolyExpr(ns.ring(), Rational(0));
  }

  Outcome quasi(const std::string& id) {
    if (!poisson()) return skipped("needs a Poisson structure");
    const auto q = spec_.named(id);
    if (!q) return skipped("unknown polynomial " + id);
    const bool ok = is_quasi_casimir(*poisson(), *q);
    Outcome o = predicate(ok, ok ? std::nullopt : std::optional<std::string>(id + " does not divide all of its brackets"));
    o.value = ok ? "true" : "false";
    return o;
  }

  Outcome theorem31() {
    if (!poisson()) return skipped("needs a Poisson structure");
    const auto cs = spec_.casimir_values();
    if (cs.size() > spec_.dim() || (spec_.dim() - cs.size()) % 2) return skipped("n - l is odd");
    for (const auto& [name, q] : spec_.casimirs) {
      if (!is_casimir(*poisson(), q)) return skipped(name + " is not a verified Casimir");
    }
    const auto rep = theorem31_check(*poisson(), cs);
    Outcome o = predicate(rep.holds);
    if (rep.lambda_prime) o.lambda = to_string(*rep.lambda_prime);
    if (rep.holds) {
      o.value = to_string(*rep.lambda_prime);
    } else {
      o.witness = rep.reason;
      if (rep.nonconstant_ratio) *o.witness += ": " + to_string(*rep.nonconstant_ratio);
    }
    if (!rep.wedge_pfaffian_consistent) {
      o.status = CheckStatus::fail;
      o.verdict = false;
      o.value = "fail";
      o.witness = "wedge power disagrees with m!*Pfaffian";
    }
    return o;
  }

  Outcome plucker() {
    if (!poisson()) return skipped("needs a Poisson structure");
    const auto r = plucker_rank2_test(*poisson());
    Outcome o;
    o.status = CheckStatus::info;
    o.verdict = r.rank_le_2;
    o.value = r.rank_le_2 ? "true" : "false";
    if (r.witness) {
      const auto& w = *r.witness;
      o.witness = "Pf(" + var_tuple(spec_.ring, {w[0], w[1], w[2], w[3]}) + ") = " + to_string(r.value);
    }
    return o;
  }

  Outcome rank() {
    if (!poisson()) return skipped("needs a Poisson structure");
    Outcome o;
    o.status = CheckStatus::info;
    o.value = std::to_string(generic_rank(*poisson(), opt_.rank_samples, opt_.seed));
    return o;
  }

  Outcome extendability() {
    if (!poisson()) return skipped("needs a Poisson structure");
    const auto v = check_projective_extendability(*poisson());
    Outcome o = predicate(v.extendable_necessary_conditions);
    o.value = v.extendable_necessary_conditions ? "pass" : "fail";
    if (!v.degree_ok) {
      o.witness = "bracket degree " + v.max_degree->to_string() + " exceeds 3";
    }
    for (const auto& [ijk, r] : v.cyclic_residuals) {
      if (r.is_zero()) continue;
      const std::string w = "(" + var_tuple(spec_.ring, {ijk[0], ijk[1], ijk[2]}) + "): " + to_string(r);
      o.witness = o.witness ? *o.witness + "; " + w : w;
      break;
    }
    if (v.extendable_necessary_conditions) o.reason = "no obstruction found";
    return o;
  }

  Outcome fi(std::size_t tuples) {
    std::size_t r = 0;
    BracketFn bracket;
    if (poisson()) {
      r = 2;
      bracket = [this](std::span<const PolyExpr> a) { return bracket_of(*poisson(), a[0], a[1]); };
    } else {
      r = built_->nambu->arity();
      bracket = [this](std::span<const PolyExpr> a) { return nambu_bracket(*built_->nambu, a); };
    }
    std::mt19937_64 rng(opt_.seed);
    const auto& R = spec_.ring;
    auto coeff = [&]() { return make_rational(static_cast<std::int64_t>(rng() % 7) - 3); };
    for (std::size_t t = 0; t < tuples; ++t) {
      std::vector<PolyExpr> args;
      for (std::size_t a = 0; a < 2 * r - 1; ++a) {
        // random polynomial of degree <= 2
        PolyExpr p(R, coeff());
        for (std::size_t i = 0; i < R->size(); ++i) {
          p += PolyExpr::variable(R, i).scaled(coeff());
          const std::size_t j = rng() % R->size();
          p += (PolyExpr::variable(R, i) * PolyExpr::variable(R, j)).scaled(coeff());
        }
        args.push_back(std::move(p));
      }
      const auto rep = check_fundamental_identity(bracket, r, args);
      if (!rep.holds) return predicate(false, "tuple " + std::to_string(t) + ": residual " + to_string(rep.residual));
    }
    return predicate(true);
  }

  Outcome degree_sum() {
    if (spec_.casimirs.empty()) return skipped("no casimirs declared");
    const auto cs = spec_.casimir_values();
    const auto w = spec_.weight_exponents();
    DegreeMode mode = DegreeMode::homogeneous;
    for (const auto& q : cs) {
      if (!q.is_homogeneous(w)) mode = DegreeMode::leading_form;
    }
    const auto rep = degree_sum_check(cs, spec_.dim(), w, mode);
    Outcome o = predicate(rep.equals_dimension,
                          "sum of degrees " + rep.sum_of_degrees.to_string() + " != " + rep.weight_total.to_string());
    o.value = rep.sum_of_degrees.to_string();
    if (mode == DegreeMode::leading_form) o.reason = "leading weighted forms";
    return o;
  }

  Outcome bdu_relation() {
    const auto& R = spec_.ring;
    for (const char* v : {"p", "q", "r", "x", "y", "z"}) {
      if (!R->index_of(v)) return skipped("needs variables p q r x y z");
    }
    if (spec_.casimirs.size() < 2) return skipped("needs casimirs P1 and P2");
    if (!poisson()) return skipped("needs a Poisson structure");
    bool empty = true;
    for (const auto& row : poisson()->matrix()) {
      for (const auto& e : row) empty = empty && e.is_zero();
    }
    if (empty) return skipped("no bracket table supplied");
    auto b = [&](const char* u, const char* v) { return poisson()->entry(*R->index_of(u), *R->index_of(v)); };
    const PolyExpr lhs = b("x", "y") * b("p", "z") + b("y", "z") * b("p", "x") + b("z", "x") * b("p", "y");
    const PolyExpr& p1 = spec_.casimirs[0].second;
    const PolyExpr& p2 = spec_.casimirs[1].second;
    const std::size_t q = *R->index_of("q"), r = *R->index_of("r");
    const PolyExpr rhs = partial_derivative(p1, q) * partial_derivative(p2, r) - partial_derivative(p1, r) * partial_derivative(p2, q);
    Outcome o = predicate(lhs == rhs, "lhs = " + to_string(lhs) + ", det = " + to_string(rhs));
    if (!rhs.is_zero()) {
      auto d = exact_divisibility(lhs, rhs);
      if (d.divisible && d.quotient->is_constant()) o.lambda = to_string(d.quotient->constant_term());
    }
    return o;
  }

  const ModelSpec& spec_;
  const RunOptions& opt_;
  std::optional<BuiltModel> built_;
};

bool literal_matches(const Outcome& o, const std::string& lit) {
  if (lit == "pass" || lit == "true") return o.status != CheckStatus::skipped && o.verdict;
  if (lit == "fail" || lit == "false") return o.status != CheckStatus::skipped && !o.verdict;
  return o.value == lit;
}

}  // namespace

CheckReport run_checks(const ModelSpec& spec, const RunOptions& options) {
  CheckReport rep{spec.name, options.seed, {}};
  std::vector<CheckName> order = spec.checks;
  for (const auto& e : spec.expects) {
    if (std::find(order.begin(), order.end(), e.check) == order.end()) order.push_back(e.check);
  }
  Runner runner(spec, options);
  for (const auto& c : order) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = runner.run(c);
    const auto t1 = std::chrono::steady_clock::now();
    if (o.status == CheckStatus::info) o.verdict = o.verdict || o.value == "true";
    for (const auto& e : spec.expects) {
      if (!(e.check == c) || o.status == CheckStatus::skipped) continue;
      const bool ok = literal_matches(o, e.literal);
      if (!ok) {
        o.witness = "expected " + e.literal + ", got " + (o.value.empty() ? to_string(o.status) : o.value) +
                    (o.witness ? "; " + *o.witness : "");
      }
      if (ok && e.literal == "fail" && !o.reason) o.reason = "fails as expected";
      o.status = ok ? CheckStatus::pass : CheckStatus::fail;
    }
    CheckResult r;
    r.name = c.to_string();
    r.status = o.status;
    r.lambda = o.lambda;
    if (!o.value.empty() && o.value != "pass" && o.value != "fail") r.value = o.value;
    r.witness = o.witness;
    r.reason = o.reason;
    if (options.timings) r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.checks.push_back(std::move(r));
  }
  return rep;
}

std::string report_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["seed"] = report.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (c.lambda) e["lambda"] = *c.lambda;
    if (c.value) e["value"] = *c.value;
    if (c.witness) e["witness"] = *c.witness;
    if (c.reason) e["reason"] = *c.reason;
    e["millis"] = c.millis;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_text(const CheckReport& report) {
  std::string out = "model " + report.model + " (seed " + std::to_string(report.seed) + ")\n";
  for (const auto& c : report.checks) {
    out += "  " + c.name + ": " + to_string(c.status);
    if (c.lambda) out += " lambda=" + *c.lambda;
    if (c.value) out += " value=" + *c.value;
    if (c.reason) out += " (" + *c.reason + ")";
    if (c.witness) out += "\n      " + *c.witness;
    out += "\n";
  }
  out += report.failed() ? "FAIL\n" : "OK\n";
  return out;
}

}  // namespace ppa
