#include "ppa/catalog.hpp"

#include <cmath>
#include <functional>

#include "ppa/errors.hpp"

namespace ppa {

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// Collects DSL text; parameter values are written as `param` lines and
// referenced by name in the polynomials.
class Text {
 public:
  Text& line(const std::string& s) {
    out_ += s + "\n";
    return *this;
  }
  Text& comment(const std::string& s) { return line("# " + s); }
  Text& params(const Bindings& b, const std::vector<ParamSpec>& order) {
    for (const auto& p : order) line("param " + p.name + " = " + to_string(b.at(p.name)) + ";");
    return *this;
  }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

std::string floats(std::initializer_list<double> xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : ", ") + format_double(x);
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw CatalogError("parameter guard violated: " + what);
}

// x_{i mod n} with names prefix + index
std::string xv(int i, int n, int base) { return "x" + std::to_string(((i % n) + n) % n + base); }

using Builder = std::function<std::string(const Bindings&, const std::vector<ParamSpec>&)>;

struct Entry {
  CatalogInfo info;
  Builder build;
};

std::string q3(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Elliptic algebra on C^3: brackets are the partial derivatives of a cubic.");
  t.line("vars x1 x2 x3;").params(b, ps);
  t.line("casimir P = 1/3*(x1^3 + x2^3 + x3^3) + k*x1*x2*x3;");
  t.line("structure jacobian lambda 1;");
  t.line("check jacobi, casimirs, theorem31, plucker, rank, extendability, degree_sum;");
  t.line("expect theorem31 = 1;").line("expect rank = 2;").line("expect degree_sum = 3;");
  return t.str();
}

std::string mirror_y(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Image of q3 under y1 = x1, y2 = x2*x3^(-1/2), y3 = x3^(3/2).");
  t.comment("The transported brackets are 3/2 (the exponent determinant) times dP/dy_k.");
  t.line("vars y1 y2 y3;").line("weights 2 1 3;").params(b, ps);
  t.line("casimir P = 1/3*(y1^3 + y2^3*y3 + y3^2) + k*y1*y2*y3;");
  t.line("structure jacobian lambda 3/2;");
  t.line("check jacobi, casimirs, theorem31, degree_sum;");
  t.line("expect theorem31 = 3/2;").line("expect degree_sum = 6;");
  return t.str();
}

std::string mirror_z(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Image of q3 under z1 = x1^(-3/4)*x2^(3/2), z2 = x1^(1/4)*x2^(-1/2)*x3, z3 = x1^(3/2).");
  t.comment("The transported brackets are 9/4 (the exponent determinant) times dP/dz_k.");
  t.line("vars z1 z2 z3;").line("weights 1 1 2;").params(b, ps);
  t.line("casimir P = 1/3*(z3^2 + z1^2*z3 + z1*z2^3) + k*z1*z2*z3;");
  t.line("structure jacobian lambda 9/4;");
  t.line("check jacobi, casimirs, theorem31, degree_sum;");
  t.line("expect theorem31 = 9/4;").line("expect degree_sum = 4;");
  return t.str();
}

std::string markov(const Bindings&, const std::vector<ParamSpec>&) {
  Text t;
  t.comment("Markov cubic: the Poisson structure on 3x3 unipotent Stokes matrices.");
  t.line("vars x1 x2 x3;");
  t.line("casimir P = x1^2 + x2^2 + x3^2 + 3*x1*x2*x3;");
  t.line("structure jacobian lambda 1;");
  t.line("check jacobi, casimirs, theorem31, extendability, rank;");
  t.line("expect theorem31 = 1;").line("expect rank = 2;");
  return t.str();
}

std::string bdu(const Bindings&, const std::vector<ParamSpec>&) {
  Text t;
  t.comment("Casimirs on 4x4 unipotent Stokes matrices [[1,p,q,r],[0,1,x,y],[0,0,1,z],[0,0,0,1]].");
  t.comment("The bracket table is not shipped: replace the empty table with it to run bdu_relation,");
  t.comment("which tests {x,y}{p,z} + {y,z}{p,x} + {z,x}{p,y} = det d(P1,P2)/d(q,r).");
  t.line("vars p q r x y z;");
  t.line("casimir P1 = p^2 + q^2 + r^2 + x^2 + y^2 + z^2 - p*q*x - p*r*y - q*r*z - x*y*z + p*r*x*z;");
  t.line("casimir P2 = p*z + x*r - q*y;");
  t.line("structure table { };");
  t.line("check bdu_relation;");
  return t.str();
}

std::string askey_wilson(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Classical Askey-Wilson algebra, P = z^2 - F(x,y), on WP(1,1,2).");
  t.line("vars x y z;").line("weights 1 1 2;").params(b, ps);
  t.line("let F = a*x^2*y^2 + a1*x^2*y + a2*x*y^2 + a3*x^2 + a4*y^2 + a5*x*y + a6*x + a7*y;");
  t.line("casimir P = z^2 - F;");
  t.line("structure jacobian lambda 1;");
  t.line("check jacobi, casimirs, theorem31, rank, degree_sum;");
  t.line("expect theorem31 = 1;").line("expect degree_sum = 4;");
  return t.str();
}

std::string sklyanin(const Bindings& b, const std::vector<ParamSpec>& ps) {
  require(b.at("J1") != b.at("J2") && b.at("J2") != b.at("J3") && b.at("J1") != b.at("J3"), "J1, J2, J3 pairwise distinct");
  Text t;
  t.comment("Sklyanin algebra from two quadrics; lambda 1/4 cancels the factor 4 of the 2x2 minors.");
  t.comment("With H = x4 the flow is the elliptic rotator x1' = (J3-J2)*x2*x3 and cyclic.");
  t.line("vars x1 x2 x3 x4;").params(b, ps);
  t.line("casimir Q1 = x1^2 + x2^2 + x3^2;");
  t.line("casimir Q2 = x4^2 + J1*x1^2 + J2*x2^2 + J3*x3^2;");
  t.line("structure jacobian lambda 1/4;");
  t.line("hamiltonian x4;");
  t.line("check jacobi, casimirs, theorem31, plucker, rank, degree_sum, fi(2);");
  t.line("expect theorem31 = 1/4;").line("expect plucker = true;").line("expect rank = 2;").line("expect degree_sum = 4;");
  return t.str();
}

std::string quadrics61(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Quadratic algebra of the pair p1, p2; indices mod 4.");
  t.comment("Against the Jacobian of p1, p2 the table carries lambda = -1.");
  t.line("vars x1 x2 x3 x4;").params(b, ps);
  t.line("casimir p1 = 1/2*(x1^2 + x3^2) + k*x2*x4;");
  t.line("casimir p2 = 1/2*(x2^2 + x4^2) + k*x1*x3;");
  t.line("structure table {");
  for (int i = 0; i < 4; ++i) {
    const auto a = xv(i, 4, 1), a1 = xv(i + 1, 4, 1), a2 = xv(i + 2, 4, 1), a3 = xv(i + 3, 4, 1);
    t.line("  {" + a + "," + a1 + "} = k^2*" + a + "*" + a1 + " - " + a2 + "*" + a3 + ";");
  }
  for (int i = 0; i < 2; ++i) {
    const auto a = xv(i, 4, 1), a1 = xv(i + 1, 4, 1), a2 = xv(i + 2, 4, 1), a3 = xv(i + 3, 4, 1);
    t.line("  {" + a + "," + a2 + "} = k*(" + a3 + "^2 - " + a1 + "^2);");
  }
  t.line("};");
  t.line("check jacobi, casimirs, theorem31, plucker, rank, degree_sum;");
  t.line("expect theorem31 = -1;").line("expect plucker = true;").line("expect rank = 2;").line("expect degree_sum = 4;");
  return t.str();
}

std::string q5(const Bindings& b, const std::vector<ParamSpec>& ps) {
  require(b.at("k") != 0, "k != 0");
  Text t;
  t.comment("Elliptic algebra q5 on x_i, i in Z/5.");
  t.comment("P is the cyclically symmetric Casimir; the x_i^3*x_{i+2}*x_{i+3} orbit carries k^3 + 3/k^2.");
  t.line("vars x0 x1 x2 x3 x4;").params(b, ps);
  auto x = [](int i) { return xv(i, 5, 0); };
  auto orbit = [&](const std::function<std::string(int)>& f) {
    std::string s;
    for (int i = 0; i < 5; ++i) s += (i ? " + " : "") + f(i);
    return "(" + s + ")";
  };
  std::string P = "-1/k*" + orbit([&](int i) { return x(i) + "^5"; });
  P += " + (1/k^5 - 3)*" + orbit([&](int i) { return x(i) + "^3*" + x(i - 1) + "*" + x(i + 1); });
  P += " + (k^3 + 3/k^2)*" + orbit([&](int i) { return x(i) + "^3*" + x(i + 2) + "*" + x(i + 3); });
  P += " - (2*k + 1/k^4)*" + orbit([&](int i) { return x(i) + "*" + x(i + 1) + "^2*" + x(i - 1) + "^2"; });
  P += " + (k^2 - 2/k^3)*" + orbit([&](int i) { return x(i) + "*" + x(i + 2) + "^2*" + x(i + 3) + "^2"; });
  P += " + (k^4 + 16/k - 1/k^6)*x0*x1*x2*x3*x4";
  t.line("casimir P = " + P + ";");
  t.line("structure table {");
  for (int i = 0; i < 5; ++i) {
    t.line("  {" + x(i + 1) + "," + x(i + 4) + "} = -1/5*(k^2 + 3/k^3)*" + x(i + 1) + "*" + x(i + 4) + " + 2*" + x(i + 2) +
           "*" + x(i + 3) + " + k*" + x(i) + "^2;");
  }
  for (int i = 0; i < 5; ++i) {
    t.line("  {" + x(i + 2) + "," + x(i + 3) + "} = 1/5*(3*k^2 - 1/k^3)*" + x(i + 2) + "*" + x(i + 3) + " + 2/k*" + x(i + 1) +
           "*" + x(i + 4) + " - 1/k^2*" + x(i) + "^2;");
  }
  t.line("};");
  t.line("check jacobi, casimirs, theorem31, plucker, rank, degree_sum;");
  t.line("expect theorem31 = 1/5;").line("expect plucker = false;").line("expect rank = 4;").line("expect degree_sum = 5;");
  return t.str();
}

std::string euler_top(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Euler top: so(3) Lie-Poisson structure {x_i,x_j} = eps_ijk x_k.");
  t.comment("x' = {x, H} gives x1' = (J2-J3)*x2*x3 and cyclic.");
  t.line("vars x1 x2 x3;").params(b, ps);
  t.line("let H = 1/2*(J1*x1^2 + J2*x2^2 + J3*x3^2);");
  t.line("casimir Q1 = 1/2*(x1^2 + x2^2 + x3^2);");
  t.line("structure jacobian lambda 1;");
  t.line("hamiltonian H;");
  t.line("check jacobi, casimirs, theorem31, rank;");
  t.line("expect theorem31 = 1;").line("expect rank = 2;");
  t.line("integrate from (1, 0.5, 0.25) step 0.001 until 10 monitor Q1 H;");
  return t.str();
}

std::string dell(const Bindings& b, const std::vector<ParamSpec>& ps) {
  require(b.at("g2") > 0, "g2 > 0");
  require(b.at("kt") != 0, "kt != 0");
  const double k = b.at("k").get_d(), g2 = b.at("g2").get_d(), e = b.at("E").get_d();
  const double x1 = 1.25;
  const double x2 = std::sqrt(x1 * x1 - 1), x3 = std::sqrt(x1 * x1 - k * k), x4 = std::sqrt(1 + g2 * x1 * x1 + e * e);
  Text t;
  t.comment("Two-body double elliptic system on four quadrics in C^6.");
  t.comment("lambda = -kt^2/16 normalizes {x5,x1} to -x2*x3*x4*x6.");
  t.comment("Start: x1 = 1.25, x2 = sqrt(x1^2-1), x3 = sqrt(x1^2-k^2), x5 = E, x4 = sqrt(1+g2*x1^2+x5^2), x6 = 1.");
  t.comment("This flow reaches infinity in finite time (x1 = 1/sn); from this start it blows up near t = 0.2,");
  t.comment("so the run stops at t = 0.15.");
  t.line("vars x1 x2 x3 x4 x5 x6;").params(b, ps);
  t.line("casimir Q1 = x1^2 - x2^2;");
  t.line("casimir Q2 = x1^2 - x3^2;");
  t.line("casimir Q3 = -g2*x1^2 + x4^2 - x5^2;");
  t.line("casimir Q4 = -g2*x1^2 + x4^2 + 1/kt^2*x6^2;");
  t.line("structure jacobian lambda -kt^2/16;");
  t.line("hamiltonian x5;");
  t.line("check jacobi, casimirs, theorem31, plucker, rank, extendability;");
  t.line("expect theorem31 = " + to_string(Rational(-b.at("kt") * b.at("kt") / 16)) + ";");
  t.line("expect plucker = true;").line("expect rank = 2;").line("expect extendability = fail;");
  t.line("integrate from (" + floats({x1, x2, x3, x4, e, 1.0}) + ") step 0.001 until 0.15 monitor Q1 Q2 Q3 Q4 x6;");
  return t.str();
}

std::string fairlie(const Bindings& b, const std::vector<ParamSpec>& ps) {
  require(b.at("g2") > 0, "g2 > 0");
  Text t;
  t.comment("Fairlie's elegant system x1' = x2*x3*x4, ..., x4' = g2*x1*x2*x3 as a Nambu flow");
  t.comment("x' = {Q1, Q2, Q3, x} of the canonical 4-ary bracket.");
  t.line("vars x1 x2 x3 x4;").params(b, ps);
  t.line("let Q1 = x1^2 - x2^2;");
  t.line("let Q2 = x1^2 - x3^2;");
  t.line("let Q3 = -g2*x1^2 + x4^2;");
  t.line("structure nambu 4 lambda -1/8;");
  t.line("hamiltonian Q1, Q2, Q3;");
  t.line("check fi(2);");
  return t.str();
}

std::string fermat_k3(const Bindings&, const std::vector<ParamSpec>&) {
  Text t;
  t.comment("Fermat quartic K3 in the chart X0 = 1; {x1,x2} = -dP4/dx3.");
  t.comment("The cyclic degree-3 condition fails, so there is no extension to CP^3.");
  t.line("vars x1 x2 x3;");
  t.line("casimir P4 = 1 + x1^4 + x2^4 + x3^4;");
  t.line("structure jacobian lambda -1;");
  t.line("check jacobi, casimirs, theorem31, extendability;");
  t.line("expect theorem31 = -1;").line("expect extendability = fail;");
  return t.str();
}

std::string singular_affine(const Bindings&, const std::vector<ParamSpec>&) {
  Text t;
  t.comment("Singular K3 x1(x1^3+x3^3+x4^3) - x2(x2^3+x3^3-x4^3) = 0 in the chart x1 = 1.");
  t.line("vars X2 X3 X4;");
  t.line("casimir P = 1 + X3^3 + X4^3 - X2^4 - X2*X3^3 + X2*X4^3;");
  t.line("structure jacobian lambda -1;");
  t.line("check jacobi, casimirs, theorem31, extendability;");
  t.line("expect theorem31 = -1;").line("expect extendability = fail;");
  return t.str();
}

std::string singular_split(const Bindings&, const std::vector<ParamSpec>&) {
  Text t;
  t.comment("The same singular K3 as an intersection in CP^1 x CP^3, chart z1 = 1, x1 = 1.");
  t.comment("Eliminating Z = -1/X2 recovers the affine chart up to the constant -1.");
  t.line("vars X2 X3 X4 Z;");
  t.line("casimir P1 = 1 + Z*X2;");
  t.line("casimir P2 = X2^3 + X3^3 - X4^3 + Z*(1 + X3^3 + X4^3);");
  t.line("structure jacobian lambda 1;");
  t.line("check jacobi, casimirs, theorem31, plucker, rank;");
  t.line("expect theorem31 = 1;").line("expect plucker = true;").line("expect rank = 2;");
  return t.str();
}

std::string cone4(const Bindings& b, const std::vector<ParamSpec>& ps) {
  Text t;
  t.comment("Cone over a plane quartic: {x_i,x_j} = dp/dx_k for a homogeneous quartic p.");
  t.comment("Coefficients cABC multiply x1^A*x2^B*x3^C.");
  t.line("vars x1 x2 x3;").params(b, ps);
  std::string p;
  for (const auto& prm : ps) {
    const int a = prm.name[1] - '0', bb = prm.name[2] - '0', c = prm.name[3] - '0';
    p += (p.empty() ? "" : " + ") + prm.name + "*x1^" + std::to_string(a) + "*x2^" + std::to_string(bb) + "*x3^" + std::to_string(c);
  }
  t.line("casimir p = " + p + ";");
  t.line("structure jacobian lambda 1;");
  t.line("check jacobi, casimirs, theorem31, extendability;");
  t.line("expect theorem31 = 1;").line("expect extendability = fail;");
  return t.str();
}

std::string dell_nambu(const Bindings& b, const std::vector<ParamSpec>& ps) {
  require(b.at("g2") > 0, "g2 > 0");
  Text t;
  t.comment("DELL as a Nambu-Hamilton system in C^5 with x5 central (the level x5 = E).");
  t.comment("x' = {Q1, Q2, Q3, x} with lambda = -1/8 is the elegant system.");
  t.line("vars x1 x2 x3 x4 x5;").params(b, ps);
  t.line("let Q1 = x1^2 - x2^2;");
  t.line("let Q2 = x1^2 - x3^2;");
  t.line("let Q3 = -g2*x1^2 + x4^2 + x5^2;");
  t.line("casimir C = x5;");
  t.line("structure nambu 4 lambda -1/8;");
  t.line("hamiltonian Q1, Q2, Q3;");
  t.line("check casimirs, fi(2);");
  return t.str();
}

std::vector<ParamSpec> cone4_params() {
  std::vector<ParamSpec> out;
  for (int a = 4; a >= 0; --a) {
    for (int bb = 4 - a; bb >= 0; --bb) {
      const int c = 4 - a - bb;
      const std::string n = "c" + std::to_string(a) + std::to_string(bb) + std::to_string(c);
      Rational v = 0;
      if ((a == 4) || (bb == 4) || (c == 4)) v = 1;
      if (a == 2 && bb == 1 && c == 1) v = R(-3, 2);
      if (a == 0 && bb == 2 && c == 2) v = 2;
      out.push_back({n, v});
    }
  }
  return out;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back({{"q3", "elliptic cubic P = (x1^3+x2^3+x3^3)/3 + k*x1*x2*x3", {{"k", 2}}, {{{"k", 3}}, {{"k", R(-1, 2)}}}}, q3});
    e.push_back({{"mirror_y", "q3 transported by map (a), weights (2,1,3)", {{"k", 2}}, {{{"k", 3}}, {{"k", R(-1, 2)}}}}, mirror_y});
    e.push_back({{"mirror_z", "q3 transported by map (b), weights (1,1,2)", {{"k", 2}}, {{{"k", 3}}, {{"k", R(-1, 2)}}}}, mirror_z});
    e.push_back({{"markov", "Markov cubic x1^2+x2^2+x3^2+3*x1*x2*x3", {}, {{}, {}}}, markov});
    e.push_back({{"bdu_casimirs", "Stokes-matrix Casimirs P1, P2 (table supplied by the user)", {}, {{}, {}}}, bdu});
    e.push_back({{"askey_wilson", "P = z^2 - a*x^2*y^2 - g(x,y)",
                  {{"a", 1}, {"a1", 2}, {"a2", -1}, {"a3", R(1, 2)}, {"a4", 3}, {"a5", -2}, {"a6", 1}, {"a7", -3}},
                  {{{"a", 2}, {"a1", 0}, {"a2", 1}, {"a3", -1}, {"a4", R(2, 3)}, {"a5", 5}, {"a6", 0}, {"a7", 1}},
                   {{"a", R(-1, 3)}, {"a1", 1}, {"a2", 1}, {"a3", 1}, {"a4", 1}, {"a5", 1}, {"a6", 1}, {"a7", 1}}}},
                 askey_wilson});
    e.push_back({{"sklyanin", "Sklyanin quadrics Q1, Q2", {{"J1", 1}, {"J2", 2}, {"J3", 3}},
                  {{{"J1", R(1, 2)}, {"J2", -1}, {"J3", 4}}, {{"J1", -2}, {"J2", R(5, 3)}, {"J3", 7}}}},
                 sklyanin});
    e.push_back({{"quadrics61", "quadratic algebra of p1, p2", {{"k", 2}}, {{{"k", R(3, 2)}}, {{"k", R(-5, 7)}}}}, quadrics61});
    e.push_back({{"q5", "elliptic algebra q5 with its degree-5 Casimir", {{"k", 2}}, {{{"k", R(3, 2)}}, {{"k", R(-5, 7)}}}}, q5});
    e.push_back({{"euler_top", "so(3) Euler top", {{"J1", 1}, {"J2", 2}, {"J3", 3}},
                  {{{"J1", R(1, 2)}, {"J2", -1}, {"J3", 4}}, {{"J1", 2}, {"J2", 5}, {"J3", R(-1, 3)}}}},
                 euler_top});
    e.push_back({{"dell", "double elliptic system on four quadrics in C^6",
                  {{"k", R(1, 2)}, {"kt", 1}, {"g2", 4}, {"E", R(1, 2)}},
                  {{{"k", R(1, 3)}, {"kt", 2}, {"g2", 1}, {"E", R(1, 4)}}, {{"k", R(3, 4)}, {"kt", R(1, 2)}, {"g2", 9}, {"E", R(1, 3)}}}},
                 dell});
    e.push_back({{"fairlie", "Fairlie elegant system as a canonical Nambu flow", {{"g2", 4}}, {{{"g2", 1}}, {{"g2", R(9, 4)}}}}, fairlie});
    e.push_back({{"fermat_k3", "Fermat quartic 1 + x1^4 + x2^4 + x3^4", {}, {{}, {}}}, fermat_k3});
    e.push_back({{"singular_k3_affine", "singular K3, affine quartic chart", {}, {{}, {}}}, singular_affine});
    e.push_back({{"singular_k3_split", "singular K3 as an intersection in CP^1 x CP^3", {}, {{}, {}}}, singular_split});
    {
      auto ps = cone4_params();
      Bindings alt1, alt2;
      for (const auto& p : ps) {
        alt1[p.name] = p.default_value + 1;
        alt2[p.name] = p.name[1] == '4' ? R(-2) : R(1, 3);
      }
      e.push_back({{"canonical_cone4", "cone over a plane quartic p", ps, {alt1, alt2}}, cone4});
    }
    e.push_back({{"dell_nambu", "DELL as a Nambu-Hamilton system in C^5", {{"k", R(1, 2)}, {"g2", 4}, {"E", R(1, 2)}},
                  {{{"k", R(1, 3)}, {"g2", 1}, {"E", R(1, 4)}}, {{"k", R(3, 4)}, {"g2", 9}, {"E", R(1, 3)}}}},
                 dell_nambu});
    return e;
  }();
  return entries;
}

const Entry& find(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace

const std::vector<CatalogInfo>& catalog_entries() {
  static const std::vector<CatalogInfo> infos = [] {
    std::vector<CatalogInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const CatalogInfo& catalog_info(std::string_view name) { return find(name).info; }

ModelSpec build_model(std::string_view name, const Bindings& overrides) {
  const Entry& e = find(name);
  Bindings b;
  for (const auto& p : e.info.params) b[p.name] = p.default_value;
  for (const auto& [k, v] : overrides) {
    if (!b.contains(k)) throw CatalogError("entry '" + e.info.name + "' has no parameter '" + k + "'");
    b[k] = v;
  }
  return parse_model(e.build(b, e.info.params), e.info.name);
}

}  // namespace ppa
