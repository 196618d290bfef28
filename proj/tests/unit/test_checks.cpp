#include "doctest.h"

#include <json.hpp>

#include "ppa/checks.hpp"
#include "support.hpp"

using namespace ppa;
using namespace ppa::testing;

namespace {

const CheckResult& find(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  return r.checks.front();
}

ModelSpec without_expectations(ModelSpec s) {
  s.expects.clear();
  return s;
}

}  // namespace

TEST_CASE("q5 report") {
  auto spec = without_expectations(model("q5"));
  auto rep = run_checks(spec);
  CHECK(rep.model == "q5");
  CHECK(find(rep, "jacobi").status == CheckStatus::pass);
  CHECK(find(rep, "casimirs").status == CheckStatus::pass);
  CHECK(find(rep, "theorem31").status == CheckStatus::pass);
  CHECK(*find(rep, "theorem31").lambda == "1/5");
  CHECK(find(rep, "plucker").status == CheckStatus::info);
  CHECK(*find(rep, "plucker").value == "false");
  CHECK(find(rep, "rank").status == CheckStatus::info);
  CHECK(*find(rep, "rank").value == "4");
  CHECK_FALSE(rep.failed());
}

TEST_CASE("extendability reports") {
  auto markov = run_checks(parse_model(render_model(model("markov")) + "", "markov"));
  CHECK(find(markov, "extendability").status == CheckStatus::pass);
  CHECK(*find(markov, "extendability").reason == "no obstruction found");

  auto fermat = run_checks(without_expectations(model("fermat_k3")));
  const auto& ext = find(fermat, "extendability");
  CHECK(ext.status == CheckStatus::fail);
  CHECK(ext.witness->find("-4*x1^4 - 4*x2^4 - 4*x3^4") != std::string::npos);
  CHECK(fermat.failed());

  auto pinned = run_checks(model("fermat_k3"));
  CHECK(find(pinned, "extendability").status == CheckStatus::pass);
  CHECK(*find(pinned, "extendability").reason == "fails as expected");
  CHECK(find(pinned, "extendability").witness == ext.witness);
}

TEST_CASE("skipped checks") {
  auto odd = run_checks(parse_model("vars a b c d; casimir Q = a; structure table { {b,c} = 1; }; check theorem31;"));
  CHECK(odd.checks[0].status == CheckStatus::skipped);
  CHECK_FALSE(odd.failed());

  auto unverified = run_checks(parse_model("vars a b c; casimir Q = a; structure table { {a,b} = 1; }; check theorem31;"));
  CHECK(unverified.checks[0].status == CheckStatus::skipped);
  CHECK(unverified.checks[0].reason.has_value());

  auto nambu = run_checks(parse_model("vars a b c; structure nambu 3; check jacobi, fi(2);"));
  CHECK(nambu.checks[0].status == CheckStatus::skipped);
  CHECK(nambu.checks[1].status == CheckStatus::pass);

  auto bdu = run_checks(model("bdu_casimirs"));
  CHECK(bdu.checks[0].status == CheckStatus::skipped);
}

TEST_CASE("expectations pin values and verdicts") {
  auto spec = model("q3");
  CHECK_FALSE(run_checks(spec).failed());
  spec.expects.push_back({{"plucker", ""}, "false"});
  auto rep = run_checks(spec);
  CHECK(rep.failed());
  CHECK(find(rep, "plucker").witness->find("expected false") == 0);

  auto wrong = parse_model("vars x1 x2 x3; casimir P = x1*x2*x3; structure jacobian lambda 2; expect theorem31 = 1;");
  auto r = run_checks(wrong);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == CheckStatus::fail);
  CHECK(*r.checks[0].witness == "expected 1, got 2");

  auto fails_as_expected =
      parse_model("vars x1 x2 x3; casimir P = 1 + x1^4 + x2^4 + x3^4; structure jacobian lambda -1; expect extendability = fail;");
  CHECK(run_checks(fails_as_expected).checks[0].status == CheckStatus::pass);
}

TEST_CASE("quasi and degree_sum") {
  auto spec = parse_model("vars x1 x2 x3; let Q = x1; structure table { {x1,x2} = x1; }; check quasi(Q), jacobi;");
  auto rep = run_checks(spec);
  CHECK(find(rep, "quasi(Q)").status == CheckStatus::pass);
  auto aw = run_checks(model("askey_wilson"));
  CHECK(*find(aw, "degree_sum").value == "4");
  CHECK(find(aw, "degree_sum").reason.has_value());
}

TEST_CASE("bdu relation on a supplied table") {
  auto base = model("bdu_casimirs");
  const auto& R = base.ring;
  const PolyExpr& p1 = base.casimirs[0].second;
  const PolyExpr& p2 = base.casimirs[1].second;
  const std::size_t q = 1, r = 2;
  PolyExpr det = partial_derivative(p1, q) * partial_derivative(p2, r) - partial_derivative(p1, r) * partial_derivative(p2, q);
  std::string text = render_model(base);
  auto pos = text.find("structure table {");
  REQUIRE(pos != std::string::npos);
  auto with = [&](const std::string& entries) {
    std::string t = text;
    t.replace(pos, std::string("structure table {").size(), "structure table {\n" + entries);
    return run_checks(parse_model(t, "bdu"));
  };
  auto ok = with("  {x,y} = " + to_string(det) + ";\n  {p,z} = 1;\n");
  CHECK(ok.checks[0].status == CheckStatus::pass);
  CHECK(*ok.checks[0].lambda == "1");
  auto bad = with("  {x,y} = " + to_string(det) + ";\n  {p,z} = 2;\n");
  CHECK(bad.checks[0].status == CheckStatus::fail);
  CHECK(*bad.checks[0].lambda == "2");
  CHECK(R->size() == 6);
}

TEST_CASE("json report schema and determinism") {
  auto spec = model("sklyanin");
  RunOptions opt;
  opt.seed = 42;
  const auto a = report_json(run_checks(spec, opt));
  const auto b = report_json(run_checks(spec, opt));
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["model"] == "sklyanin");
  CHECK(j["seed"] == 42);
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c["name"].is_string());
    const std::string st = c["status"];
    CHECK((st == "pass" || st == "fail" || st == "skipped" || st == "info"));
    CHECK(c["millis"] == 0);
    for (const char* k : {"lambda", "value", "witness", "reason"}) {
      if (c.contains(k)) CHECK(c[k].is_string());
    }
  }
  CHECK(j["checks"][2]["lambda"] == "1/4");
  CHECK(report_text(run_checks(spec, opt)).find("theorem31: pass") != std::string::npos);
}

TEST_CASE("fi seeds are reproducible") {
  auto spec = model("dell_nambu");
  RunOptions a, b;
  a.seed = 3;
  b.seed = 3;
  CHECK(report_json(run_checks(spec, a)) == report_json(run_checks(spec, b)));
}
