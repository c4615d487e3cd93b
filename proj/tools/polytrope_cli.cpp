#include "polytrope/classify.hpp"
#include "polytrope/constructions.hpp"
#include "polytrope/export.hpp"
#include "polytrope/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace polytrope;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

json vertices_report(const Polytrope& p) {
  json verts = json::array();
  json deh = json::array();
  for (const auto& v : p.vertices()) {
    verts.push_back(point_to_json(v));
    deh.push_back(coords_to_json(v.dehomogenized()));
  }
  return json{{"vertices", std::move(verts)}, {"vertices_dehomogenized", std::move(deh)}};
}

int cmd_hull(const std::string& input) {
  const PointConfig v = points_from_json(read_json_file(input));
  const PointConfig tv = tropical_vertices(v);
  json report;
  report["dim"] = v.dim();
  report["n"] = v.size();
  json tverts = json::array();
  for (const auto& p : tv.points()) tverts.push_back(coords_to_json(p.canonical_coords()));
  report["tropical_vertices"] = std::move(tverts);
  json crs = json::array();
  for (const auto& c : corners(v)) crs.push_back(coords_to_json(c.canonical_coords()));
  report["corners"] = std::move(crs);
  const bool poly = is_polytrope(v);
  report["is_polytrope"] = poly;
  if (poly) {
    const auto status = kleene_closure(cornered_hull(v));
    const Polytrope p(std::get<ClosedWeightMatrix>(status));
    const auto pvs = pseudo_vertices(p);
    report["pseudo_vertex_count"] = pvs.size();
    json pvj = json::array();
    for (const auto& pv : pvs) pvj.push_back(coords_to_json(pv.dehomogenized()));
    report["pseudo_vertices"] = std::move(pvj);
    if (v.dim() <= 3) {
      json fj = json::array();
      for (const long long x : f_vector(p)) fj.push_back(x);
      report["f_vector"] = std::move(fj);
    }
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_from_ineq(const std::string& input) {
  const WeightMatrix m = matrix_from_json(read_json_file(input));
  const ClosureStatus status = kleene_closure(m);
  if (const auto* cycle = std::get_if<NegativeCycle>(&status)) {
    json witness = json::array();
    for (const int v : cycle->nodes) witness.push_back(v);
    witness.push_back(cycle->nodes.front());
    std::cout << json{{"status", "infeasible"},
                      {"cycle", std::move(witness)},
                      {"weight", rational_to_json(cycle->weight)}}
                     .dump(2)
              << "\n";
    return 3;
  }
  if (const auto* entry = std::get_if<UnboundedEntry>(&status)) {
    std::cout << json{{"status", "unbounded"}, {"entry", json::array({entry->from, entry->to})}}.dump(2)
              << "\n";
    return 4;
  }
  const Polytrope p(std::get<ClosedWeightMatrix>(status));
  json report{{"status", "closed"}, {"matrix", matrix_to_json(p.matrix())}};
  report.update(vertices_report(p));
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_construct(const std::string& name, int d, int n, const std::string& eps, int index,
                  const std::string& out) {
  std::optional<Polytrope> p;
  if (name == "simplex") {
    p = small_simplex(d);
  } else if (name == "pyrope") {
    p = pyrope(d);
  } else if (name == "perturbed-pyrope") {
    p = perturbed_pyrope(epsilon_matrix(d, parse_rational(eps)));
  } else if (name == "associahedron") {
    p = associahedron(n);
  } else if (name == "fixture20") {
    const auto fixtures = fixtures_20();
    if (index < 1 || index > static_cast<int>(fixtures.size()))
      throw std::invalid_argument("fixture index must be in 1..5");
    p = Polytrope(fixtures[static_cast<std::size_t>(index - 1)]);
  } else {
    throw std::invalid_argument("unknown construction: " + name);
  }
  write_output(matrix_to_json(p->matrix()).dump(2) + "\n", out);
  return 0;
}

int cmd_classify(int d, long long bound, int jobs, const std::string& out_prefix) {
  EnumerateOptions opts;
  if (bound > 0) opts.bound = bound;
  opts.jobs = jobs;
  const auto catalog = enumerate_classes(d, opts);
  const auto table = class_table(catalog);

  const std::string prefix = out_prefix.empty() ? ("polytropes_d" + std::to_string(d)) : out_prefix;
  {
    std::ofstream jsonl(prefix + ".jsonl");
    if (!jsonl) throw std::invalid_argument("cannot write " + prefix + ".jsonl");
    jsonl << catalog_to_jsonl(catalog);
  }
  {
    std::ofstream csv(prefix + ".csv");
    if (!csv) throw std::invalid_argument("cannot write " + prefix + ".csv");
    csv << table_to_csv(table);
  }

  int o_total = 0;
  {
    std::set<OrdinaryForm> distinct;
    for (const auto& rec : catalog) distinct.insert(rec.ordinary_form);
    o_total = static_cast<int>(distinct.size());
  }
  json trows = json::array();
  for (const auto& row : table) trows.push_back(json::array({row.m, row.t, row.o}));
  std::cout << json{{"d", d},
                    {"classes", catalog.size()},
                    {"ordinary_classes", o_total},
                    {"table", std::move(trows)},
                    {"catalog", prefix + ".jsonl"},
                    {"csv", prefix + ".csv"}}
                   .dump(2)
            << "\n";
  return 0;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out) {
  const json j = read_json_file(input);
  std::optional<Polytrope> p;
  if (j.contains("c")) {
    p = polytrope_from_inequalities(matrix_from_json(j));
  } else {
    const PointConfig v = points_from_json(j);
    if (!is_polytrope(v)) throw std::invalid_argument("input configuration is not a polytrope");
    p = Polytrope(std::get<ClosedWeightMatrix>(kleene_closure(cornered_hull(v))));
  }
  if (format == "svg") {
    write_output(export_svg(*p), out);
  } else if (format == "off") {
    write_output(export_off(*p), out);
  } else {
    throw std::invalid_argument("format must be svg or off");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact min-plus convexity: hulls, covector types, polytropes, classification"};
  app.require_subcommand(1);

  auto* hull = app.add_subcommand("hull", "Analyze the tropical hull of a point configuration");
  std::string hull_input;
  hull->add_option("input", hull_input, "points JSON file")->required();

  auto* from_ineq = app.add_subcommand("from-ineq", "Close an inequality system and extract vertices");
  std::string ineq_input;
  from_ineq->add_option("input", ineq_input, "matrix JSON file")->required();

  auto* construct = app.add_subcommand("construct", "Emit the weight matrix of a named polytrope");
  std::string cons_name;
  int cons_d = 3;
  int cons_n = 5;
  int cons_index = 1;
  std::string cons_eps = "1/3";
  std::string cons_out;
  construct->add_option("name", cons_name, "simplex|pyrope|perturbed-pyrope|associahedron|fixture20")
      ->required();
  construct->add_option("--d", cons_d, "dimension");
  construct->add_option("--n", cons_n, "associahedron parameter");
  construct->add_option("--eps", cons_eps, "perturbation epsilon, rational in (0, 1/2)");
  construct->add_option("--index", cons_index, "fixture index 1..5");
  construct->add_option("--out", cons_out, "output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "Enumerate tropical equivalence classes");
  int cl_d = 2;
  long long cl_bound = 0;
  int cl_jobs = 1;
  std::string cl_out;
  classify->add_option("--d", cl_d, "dimension (1, 2 or 3)")->required();
  classify->add_option("--bound", cl_bound, "lattice scan bound (default: max coordinate + d + 1)");
  classify->add_option("--jobs", cl_jobs, "worker threads");
  classify->add_option("--out", cl_out, "output path prefix");

  auto* exportc = app.add_subcommand("export", "Render a polytrope as SVG (d=2) or OFF (d=3)");
  std::string ex_input, ex_format, ex_out;
  exportc->add_option("input", ex_input, "matrix or points JSON file")->required();
  exportc->add_option("--format", ex_format, "svg|off")->required();
  exportc->add_option("--out", ex_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hull->parsed()) return cmd_hull(hull_input);
    if (from_ineq->parsed()) return cmd_from_ineq(ineq_input);
    if (construct->parsed()) return cmd_construct(cons_name, cons_d, cons_n, cons_eps, cons_index, cons_out);
    if (classify->parsed()) return cmd_classify(cl_d, cl_bound, cl_jobs, cl_out);
    if (exportc->parsed()) return cmd_export(ex_input, ex_format, ex_out);
  } catch (const ClosureError& e) {
    // construct/export inputs must describe an actual polytrope
    std::cerr << "error: " << e.what() << "\n";
    return std::holds_alternative<NegativeCycle>(e.status) ? 3 : 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
