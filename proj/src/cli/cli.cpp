#include "ppa/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ppa/catalog.hpp"
#include "ppa/checks.hpp"
#include "ppa/errors.hpp"
#include "ppa/geometry.hpp"

namespace ppa::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

ModelSpec load_model(const std::string& path) {
  return parse_model(read_file(path), std::filesystem::path(path).stem().string());
}

std::string g17(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

std::string trajectory_csv(const ModelSpec& spec, const TrajectoryReport& tr) {
  std::string s = "t";
  for (const auto& v : spec.ring->names()) s += "," + v;
  for (const auto& m : tr.invariant_names) s += "," + m;
  s += "\n";
  for (std::size_t r = 0; r < tr.times.size(); ++r) {
    s += g17(tr.times[r]);
    for (long double x : tr.states[r]) s += "," + g17(x);
    for (long double v : tr.invariant_values[r]) s += "," + g17(v);
    s += "\n";
  }
  return s;
}

int do_check(const std::string& file, const std::string& json_out, std::uint64_t seed, bool timings, std::ostream& out) {
  const ModelSpec spec = load_model(file);
  RunOptions opt;
  opt.seed = seed;
  opt.timings = timings;
  const CheckReport report = run_checks(spec, opt);
  out << report_text(report);
  if (!json_out.empty()) {
    if (json_out == "-") {
      out << report_json(report);
    } else {
      write_file(json_out, report_json(report));
    }
  }
  return report.failed() ? check_failed : ok;
}

int do_integrate(const std::string& file, const std::string& csv, bool extended, std::ostream& out, std::ostream& err) {
  const ModelSpec spec = load_model(file);
  if (!spec.integrate) throw Error(file + ": no integrate statement");
  const auto& req = *spec.integrate;
  if (req.x0.size() != spec.dim()) {
    throw ArityError("integrate: " + std::to_string(req.x0.size()) + " initial values for " + std::to_string(spec.dim()) +
                     " variables");
  }
  const BuiltModel built = build_structure(spec);
  const PolyVectorField field = model_vector_field(spec, built);
  std::vector<MonitoredInvariant> mon;
  for (const auto& id : req.monitor) {
    auto f = spec.named(id);
    if (!f) throw Error("integrate: unknown monitor '" + id + "'");
    mon.push_back({id, *f});
  }
  try {
    const TrajectoryReport tr = extended ? integrate<long double>(field, req.x0, req.step, req.until, mon)
                                         : integrate<double>(field, req.x0, req.step, req.until, mon);
    write_file(csv, trajectory_csv(spec, tr));
    out << "integrated " << spec.name << " to t = " << g17(tr.times.back()) << " (" << tr.times.size() << " rows)\n";
    for (std::size_t i = 0; i < tr.drift.size(); ++i) {
      out << "  drift " << tr.invariant_names[i] << " = " << g17(tr.drift[i]) << "\n";
    }
    return ok;
  } catch (const DivergenceError& e) {
    write_file(csv, trajectory_csv(spec, e.partial()));
    err << "ppa: " << e.what() << "; partial trajectory written to " << csv << "\n";
    return check_failed;
  }
}

int do_catalog(const std::string& name, const std::vector<std::string>& params, const std::string& emit, bool list,
               std::ostream& out) {
  if (list) {
    for (const auto& e : catalog_entries()) {
      out << e.name;
      if (!e.params.empty()) {
        out << " (";
        for (std::size_t i = 0; i < e.params.size(); ++i) {
          out << (i ? ", " : "") << e.params[i].name << "=" << to_string(e.params[i].default_value);
        }
        out << ")";
      }
      out << "  " << e.summary << "\n";
    }
    return ok;
  }
  if (name.empty()) throw CLI::RequiredError("NAME");
  Bindings b;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw CatalogError("--param expects NAME=RATIONAL, got '" + p + "'");
    b[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
  }
  const std::string text = render_model(build_model(name, b));
  if (emit.empty() || emit == "-") {
    out << text;
  } else {
    write_file(emit, text);
  }
  return ok;
}

int do_transport(const std::string& file, const std::string& map_file, std::ostream& out) {
  const ModelSpec spec = load_model(file);
  const BuiltModel built = build_structure(spec);
  if (!built.poisson) throw Error("transport needs a Poisson structure");
  const MonomialMap map = parse_monomial_map(read_file(map_file), spec.ring);
  const TransportResult tr = transport_bracket(*built.poisson, map);
  out << "# " << spec.name << " transported by " << std::filesystem::path(map_file).filename().string() << "\n";
  if (!tr.polynomial_grade) out << "# fractional exponents remain; the result is not a polynomial table\n";
  out << "vars";
  for (const auto& v : tr.ring->names()) out << " " << v;
  out << ";\nstructure table {\n";
  for (std::size_t i = 0; i < tr.ring->size(); ++i) {
    for (std::size_t j = i + 1; j < tr.ring->size(); ++j) {
      if (tr.matrix[i][j].is_zero()) continue;
      out << "  {" << tr.ring->name(i) << "," << tr.ring->name(j) << "} = " << to_string(tr.matrix[i][j]) << ";\n";
    }
  }
  out << "};\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial Poisson and Nambu structure verifier", "ppa"};
  app.require_subcommand(1);

  std::string file, json_out, csv, name, emit, map_file;
  std::uint64_t seed = 1;
  bool timings = false, extended = false, list = false;
  std::vector<std::string> params;

  auto* check = app.add_subcommand("check", "run the checks a model requests");
  check->add_option("FILE", file, "model file")->required();
  check->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
  check->add_option("--seed", seed, "seed for randomized checks");
  check->add_flag("--timings", timings, "record per-check wall time");

  auto* integ = app.add_subcommand("integrate", "integrate the model's hamiltonian flow");
  integ->add_option("FILE", file, "model file")->required();
  integ->add_option("--out", csv, "trajectory CSV")->required();
  integ->add_flag("--extended", extended, "long double arithmetic");

  auto* cat = app.add_subcommand("catalog", "emit a built-in model");
  cat->add_option("NAME", name, "entry name");
  cat->add_option("--param", params, "override a parameter, NAME=RATIONAL")->allow_extra_args(false);
  cat->add_option("--emit", emit, "write the model here instead of stdout");
  cat->add_flag("--list", list, "list entries");

  auto* tr = app.add_subcommand("transport", "transport a bracket through a monomial map");
  tr->add_option("FILE", file, "model file")->required();
  tr->add_option("--map", map_file, "monomial map file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "ppa: " << e.what() << "\n";
    return usage;
  }

  try {
    if (check->parsed()) return do_check(file, json_out, seed, timings, out);
    if (integ->parsed()) return do_integrate(file, csv, extended, out, err);
    if (cat->parsed()) return do_catalog(name, params, emit, list, out);
    if (tr->parsed()) return do_transport(file, map_file, out);
  } catch (const CLI::Error& e) {
    err << "ppa: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "ppa: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace ppa::cli
