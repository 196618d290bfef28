#include "ppa/model.hpp"

#include <charconv>
#include <set>

#include "ppa/detail/lexer.hpp"
#include "ppa/errors.hpp"

namespace ppa {

using detail::Token;
using detail::TokenCursor;
using detail::TokenKind;

std::optional<PolyExpr> ModelSpec::named(std::string_view id) const {
  for (const auto& [n, p] : lets) {
    if (n == id) return p;
  }
  for (const auto& [n, p] : casimirs) {
    if (n == id) return p;
  }
  if (ring) {
    if (auto i = ring->index_of(id)) return PolyExpr::variable(ring, *i);
  }
  return std::nullopt;
}

std::vector<PolyExpr> ModelSpec::casimir_values() const {
  std::vector<PolyExpr> out;
  for (const auto& [n, p] : casimirs) out.push_back(p);
  return out;
}

std::vector<Exponent> ModelSpec::weight_exponents() const {
  std::vector<Exponent> w;
  if (weights.empty()) return std::vector<Exponent>(dim(), Exponent(1));
  for (auto x : weights) w.emplace_back(x);
  return w;
}

bool operator==(const ModelSpec& a, const ModelSpec& b) {
  const bool rings = (!a.ring && !b.ring) || (a.ring && b.ring && *a.ring == *b.ring);
  return rings && a.header == b.header && a.weights == b.weights && a.params == b.params && a.lets == b.lets &&
         a.casimirs == b.casimirs && a.structure == b.structure && a.hamiltonians == b.hamiltonians &&
         a.checks == b.checks && a.expects == b.expects && a.integrate == b.integrate;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

const std::set<std::string, std::less<>> kCheckKinds{"jacobi", "casimirs", "quasi", "theorem31", "plucker",
                                                     "rank", "extendability", "fi", "degree_sum", "bdu_relation"};
const std::set<std::string, std::less<>> kKeywords{"vars", "weights", "param", "let", "casimir", "structure",
                                                   "hamiltonian", "check", "expect", "integrate"};

class ModelParser {
 public:
  ModelParser(std::string_view text, std::string name) : cur_(detail::tokenize(text)) {
    spec_.name = std::move(name);
    collect_header(text);
  }

  ModelSpec parse() {
    if (cur_.at_end()) cur_.fail("empty model");
    while (!cur_.at_end()) statement();
    finish();
    return std::move(spec_);
  }

 private:
  void collect_header(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        pos = eol + 1;
        continue;
      }
      if (line[first] != '#') break;
      auto last = line.find_last_not_of(" \t\r");
      spec_.header.emplace_back(line.substr(first, last - first + 1));
      pos = eol + 1;
    }
  }

  void statement() {
    const Token& kw = cur_.peek();
    if (kw.kind != TokenKind::identifier || !kKeywords.contains(kw.text)) cur_.fail("expected a statement keyword");
    cur_.next();
    if (kw.text != "vars" && !spec_.ring) cur_.fail_at(kw, "'vars' must come first");
    if (kw.text == "vars") {
      vars(kw);
    } else if (kw.text == "weights") {
      weights(kw);
    } else if (kw.text == "param") {
      param();
    } else if (kw.text == "let") {
      named(spec_.lets);
    } else if (kw.text == "casimir") {
      named(spec_.casimirs);
    } else if (kw.text == "structure") {
      structure(kw);
    } else if (kw.text == "hamiltonian") {
      hamiltonian(kw);
    } else if (kw.text == "check") {
      do {
        spec_.checks.push_back(check_name());
      } while (cur_.accept(','));
      end();
    } else if (kw.text == "expect") {
      expect();
    } else {
      integrate(kw);
    }
  }

  void end() { cur_.expect(';', "';'"); }

  void declare(const Token& t) {
    if (kKeywords.contains(t.text)) cur_.fail_at(t, "reserved word used as a name");
    if (!names_.insert(t.text).second) cur_.fail_at(t, "name already defined");
  }

  void vars(const Token& kw) {
    if (spec_.ring) cur_.fail_at(kw, "duplicate 'vars'");
    std::vector<std::string> names;
    while (cur_.peek().kind == TokenKind::identifier) {
      const Token& t = cur_.next();
      declare(t);
      names.push_back(t.text);
    }
    if (names.empty()) cur_.fail("expected variable names");
    if (names.size() > 8) cur_.fail_at(kw, "at most 8 variables are supported");
    spec_.ring = make_ring(std::move(names));
    end();
  }

  void weights(const Token& kw) {
    if (!spec_.weights.empty()) cur_.fail_at(kw, "duplicate 'weights'");
    while (cur_.peek().kind == TokenKind::number) {
      const Token& t = cur_.next();
      std::int64_t w = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), w);
      if (ec != std::errc() || p != t.text.data() + t.text.size() || w <= 0) cur_.fail_at(t, "weights must be positive integers");
      spec_.weights.push_back(w);
    }
    if (spec_.weights.size() != spec_.dim()) cur_.fail_at(kw, "one weight per variable expected");
    end();
  }

  void param() {
    const Token& t = cur_.expect_identifier("parameter name");
    declare(t);
    cur_.expect('=', "'='");
    spec_.params.emplace_back(t.text, detail::parse_signed_rational(cur_));
    end();
  }

  PolyExpr poly() {
    const NameResolver resolve = [this](std::string_view id) -> std::optional<PolyExpr> {
      for (const auto& [n, v] : spec_.params) {
        if (n == id) return PolyExpr(v);
      }
      return spec_.named(id);
    };
    try {
      return detail::parse_expression(cur_, spec_.ring, resolve);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      cur_.fail(e.what());
    }
  }

  void named(std::vector<std::pair<std::string, PolyExpr>>& into) {
    const Token& t = cur_.expect_identifier("name");
    declare(t);
    cur_.expect('=', "'='");
    PolyExpr p = poly().over(spec_.ring);
    into.emplace_back(t.text, std::move(p));
    end();
  }

  std::size_t var_index(const Token& t) {
    auto idx = spec_.ring->index_of(t.text);
    if (!idx) cur_.fail_at(t, "unknown variable");
    return *idx;
  }

  void structure(const Token& kw) {
    if (!std::holds_alternative<std::monostate>(spec_.structure)) cur_.fail_at(kw, "structure declared twice");
    structure_tok_ = kw;
    const Token& kind = cur_.expect_identifier("jacobian, table or nambu");
    if (kind.text == "jacobian") {
      JacobianDecl d{PolyExpr(spec_.ring, Rational(1))};
      if (cur_.accept_word("lambda")) d.lambda = poly().over(spec_.ring);
      spec_.structure = std::move(d);
    } else if (kind.text == "table") {
      TableDecl d;
      cur_.expect('{', "'{'");
      while (cur_.accept('{')) {
        const Token& a = cur_.expect_identifier("variable");
        cur_.expect(',', "','");
        const Token& b = cur_.expect_identifier("variable");
        cur_.expect('}', "'}'");
        std::size_t i = var_index(a), j = var_index(b);
        if (i == j) cur_.fail_at(b, "bracket of a variable with itself");
        cur_.expect('=', "'='");
        PolyExpr v = poly().over(spec_.ring);
        if (i > j) {
          std::swap(i, j);
          v = -v;
        }
        if (d.entries.contains({i, j})) cur_.fail_at(a, "bracket entry given twice");
        if (!v.polynomial_grade()) cur_.fail_at(a, "bracket entries must be polynomial");
        if (!v.is_zero()) d.entries.emplace(std::make_pair(i, j), std::move(v));
        end();
      }
      cur_.expect('}', "'}'");
      spec_.structure = std::move(d);
    } else if (kind.text == "nambu") {
      const Token& t = cur_.peek();
      if (t.kind != TokenKind::number) cur_.fail("expected the bracket arity");
      cur_.next();
      NambuDecl d{0, PolyExpr(spec_.ring, Rational(1))};
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), d.arity);
      if (ec != std::errc() || p != t.text.data() + t.text.size() || d.arity < 2) cur_.fail_at(t, "arity must be an integer >= 2");
      if (cur_.accept_word("lambda")) d.lambda = poly().over(spec_.ring);
      spec_.structure = std::move(d);
    } else {
      cur_.fail_at(kind, "unknown structure kind");
    }
    end();
  }

  void hamiltonian(const Token& kw) {
    if (!spec_.hamiltonians.empty()) cur_.fail_at(kw, "duplicate 'hamiltonian'");
    hamiltonian_tok_ = kw;
    do {
      spec_.hamiltonians.push_back(poly().over(spec_.ring));
    } while (cur_.accept(','));
    end();
  }

  CheckName check_name() {
    const Token& t = cur_.expect_identifier("check name");
    if (!kCheckKinds.contains(t.text)) cur_.fail_at(t, "unknown check");
    CheckName c{t.text, {}};
    if (t.text == "quasi") {
      cur_.expect('(', "'('");
      const Token& id = cur_.expect_identifier("polynomial name");
      c.arg = id.text;
      pending_names_.emplace_back(id);
      cur_.expect(')', "')'");
    } else if (t.text == "fi") {
      cur_.expect('(', "'('");
      const Token& n = cur_.peek();
      if (n.kind != TokenKind::number || n.text.find_first_not_of("0123456789") != std::string::npos) {
        cur_.fail("expected a tuple count");
      }
      cur_.next();
      c.arg = std::to_string(std::stoull(n.text));
      cur_.expect(')', "')'");
    }
    return c;
  }

  void expect() {
    Expectation e{check_name(), {}};
    cur_.expect('=', "'='");
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::identifier) {
      if (t.text != "pass" && t.text != "fail" && t.text != "true" && t.text != "false") {
        cur_.fail("expected pass, fail, true, false or a number");
      }
      e.literal = t.text;
      cur_.next();
    } else {
      e.literal = to_string(detail::parse_signed_rational(cur_));
    }
    for (const auto& x : spec_.expects) {
      if (x.check == e.check) cur_.fail_at(t, "check already has an expectation");
    }
    spec_.expects.push_back(std::move(e));
    end();
  }

  void integrate(const Token& kw) {
    if (spec_.integrate) cur_.fail_at(kw, "duplicate 'integrate'");
    integrate_tok_ = kw;
    IntegrateRequest r;
    if (!cur_.accept_word("from")) cur_.fail("expected 'from'");
    cur_.expect('(', "'('");
    do {
      r.x0.push_back(detail::parse_float(cur_));
    } while (cur_.accept(','));
    cur_.expect(')', "')'");
    if (!cur_.accept_word("step")) cur_.fail("expected 'step'");
    r.step = detail::parse_float(cur_);
    if (!cur_.accept_word("until")) cur_.fail("expected 'until'");
    r.until = detail::parse_float(cur_);
    if (cur_.accept_word("monitor")) {
      while (cur_.peek().kind == TokenKind::identifier) {
        const Token& id = cur_.next();
        pending_names_.emplace_back(id);
        r.monitor.push_back(id.text);
      }
      if (r.monitor.empty()) cur_.fail("expected names to monitor");
    }
    if (r.x0.size() != spec_.dim()) cur_.fail_at(kw, "initial point must have one coordinate per variable");
    if (!(r.step > 0) || !(r.until > 0)) cur_.fail_at(kw, "step and end time must be positive");
    spec_.integrate = std::move(r);
    end();
  }

  void finish() {
    if (std::holds_alternative<std::monostate>(spec_.structure)) {
      throw ParseError("missing 'structure' declaration", cur_.peek().line, cur_.peek().column, "end of input");
    }
    for (const auto& t : pending_names_) {
      if (!spec_.named(t.text) && !spec_.ring->index_of(t.text)) cur_.fail_at(t, "unknown identifier");
    }
    const std::size_t n = spec_.dim();
    const std::size_t m = spec_.casimirs.size();
    if (std::holds_alternative<JacobianDecl>(spec_.structure) && m + 2 != n) {
      cur_.fail_at(structure_tok_, "Jacobian structure in " + std::to_string(n) + " variables needs " +
                                       std::to_string(n >= 2 ? n - 2 : 0) + " casimirs, found " + std::to_string(m));
    }
    if (const auto* nd = std::get_if<NambuDecl>(&spec_.structure)) {
      if (nd->arity + m != n) {
        cur_.fail_at(structure_tok_, "Nambu arity " + std::to_string(nd->arity) + " with " + std::to_string(m) +
                                         " casimirs does not match " + std::to_string(n) + " variables");
      }
      if (!spec_.hamiltonians.empty() && spec_.hamiltonians.size() + 1 != nd->arity) {
        cur_.fail_at(hamiltonian_tok_, "a Nambu flow needs " + std::to_string(nd->arity - 1) + " hamiltonians");
      }
    } else if (spec_.hamiltonians.size() > 1) {
      cur_.fail_at(hamiltonian_tok_, "a Poisson flow takes a single hamiltonian");
    }
    if (spec_.integrate && spec_.hamiltonians.empty()) cur_.fail_at(integrate_tok_, "integration needs a hamiltonian");
  }

  TokenCursor cur_;
  ModelSpec spec_;
  std::set<std::string> names_;
  std::vector<Token> pending_names_;
  Token structure_tok_;
  Token hamiltonian_tok_;
  Token integrate_tok_;
};

}  // namespace

ModelSpec parse_model(std::string_view text, std::string name) { return ModelParser(text, std::move(name)).parse(); }

std::string render_model(const ModelSpec& spec) {
  std::string out;
  for (const auto& h : spec.header) out += h + "\n";
  if (!spec.header.empty()) out += "\n";
  out += "vars";
  for (const auto& n : spec.ring->names()) out += " " + n;
  out += ";\n";
  if (!spec.weights.empty()) {
    out += "weights";
    for (auto w : spec.weights) out += " " + std::to_string(w);
    out += ";\n";
  }
  for (const auto& [n, v] : spec.params) out += "param " + n + " = " + to_string(v) + ";\n";
  for (const auto& [n, p] : spec.lets) out += "let " + n + " = " + to_string(p) + ";\n";
  for (const auto& [n, p] : spec.casimirs) out += "casimir " + n + " = " + to_string(p) + ";\n";
  if (const auto* j = std::get_if<JacobianDecl>(&spec.structure)) {
    out += "structure jacobian lambda " + to_string(j->lambda) + ";\n";
  } else if (const auto* t = std::get_if<TableDecl>(&spec.structure)) {
    out += "structure table {\n";
    for (const auto& [ij, p] : t->entries) {
      out += "  {" + spec.ring->name(ij.first) + "," + spec.ring->name(ij.second) + "} = " + to_string(p) + ";\n";
    }
    out += "};\n";
  } else if (const auto* nb = std::get_if<NambuDecl>(&spec.structure)) {
    out += "structure nambu " + std::to_string(nb->arity) + " lambda " + to_string(nb->lambda) + ";\n";
  }
  if (!spec.hamiltonians.empty()) {
    out += "hamiltonian ";
    for (std::size_t i = 0; i < spec.hamiltonians.size(); ++i) {
      out += (i ? ", " : "") + to_string(spec.hamiltonians[i]);
    }
    out += ";\n";
  }
  if (!spec.checks.empty()) {
    out += "check ";
    for (std::size_t i = 0; i < spec.checks.size(); ++i) out += (i ? ", " : "") + spec.checks[i].to_string();
    out += ";\n";
  }
  for (const auto& e : spec.expects) out += "expect " + e.check.to_string() + " = " + e.literal + ";\n";
  if (spec.integrate) {
    const auto& r = *spec.integrate;
    out += "integrate from (";
    for (std::size_t i = 0; i < r.x0.size(); ++i) out += (i ? ", " : "") + format_double(r.x0[i]);
    out += ") step " + format_double(r.step) + " until " + format_double(r.until);
    if (!r.monitor.empty()) {
      out += " monitor";
      for (const auto& m : r.monitor) out += " " + m;
    }
    out += ";\n";
  }
  return out;
}

}  // namespace ppa
