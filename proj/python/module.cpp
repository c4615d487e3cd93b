#include "polytrope/classify.hpp"
#include "polytrope/constructions.hpp"
#include "polytrope/export.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace polytrope;

namespace {

py::object py_fraction() {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction;
}

py::object to_py(const Rational& r) {
  if (is_integer(r)) return py::module_::import("builtins").attr("int")(py::str(numerator(r).str()));
  return py_fraction()(py::str(rational_to_string(r)));
}

Rational from_py(py::handle h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return parse_rational(py::str(h).cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    const std::string num = py::str(h.attr("numerator")).cast<std::string>();
    const std::string den = py::str(h.attr("denominator")).cast<std::string>();
    return parse_rational(num + "/" + den);
  }
  throw py::type_error("expected int, Fraction, or a 'p/q' string");
}

TropScalar scalar_from_py(py::handle h) {
  if (h.is_none()) return TropScalar::infinity();
  if (py::isinstance<py::float_>(h)) {
    const double v = h.cast<double>();
    if (std::isinf(v) && v > 0) return TropScalar::infinity();
    throw py::type_error("floats other than +inf are not exact; pass int, Fraction or 'p/q'");
  }
  if (py::isinstance<py::str>(h) && h.cast<std::string>() == "inf") return TropScalar::infinity();
  return TropScalar(from_py(h));
}

py::object scalar_to_py(const TropScalar& s) {
  if (s.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return to_py(s.value());
}

std::vector<Rational> coords_from_py(py::handle seq) {
  std::vector<Rational> out;
  for (py::handle e : seq.cast<py::sequence>()) out.push_back(from_py(e));
  return out;
}

py::list coords_to_py(const std::vector<Rational>& coords) {
  py::list out;
  for (const auto& c : coords) out.append(to_py(c));
  return out;
}

PointConfig config_from_py(py::handle seq) {
  std::vector<TropPoint> pts;
  for (py::handle row : seq.cast<py::sequence>()) pts.emplace_back(coords_from_py(row));
  if (pts.empty()) throw py::value_error("empty point configuration");
  return PointConfig(pts[0].dim(), std::move(pts));
}

WeightMatrix weight_matrix_from_py(py::handle rows) {
  std::vector<std::vector<TropScalar>> m;
  for (py::handle row : rows.cast<py::sequence>()) {
    m.emplace_back();
    for (py::handle e : row.cast<py::sequence>()) m.back().push_back(scalar_from_py(e));
  }
  const int n = static_cast<int>(m.size());
  if (n < 1) throw py::value_error("empty matrix");
  WeightMatrix w(n - 1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != n)
      throw py::value_error("matrix must be square");
    for (int j = 0; j < n; ++j) w.set(i, j, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return w;
}

py::list closed_matrix_to_py(const ClosedWeightMatrix& m) {
  py::list rows;
  for (int i = 0; i <= m.dim(); ++i) {
    py::list row;
    for (int j = 0; j <= m.dim(); ++j) row.append(to_py(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list point_list_to_py(const std::vector<TropPoint>& pts, bool dehomogenize) {
  py::list out;
  for (const auto& p : pts) out.append(coords_to_py(dehomogenize ? p.dehomogenized() : p.coords()));
  return out;
}

py::list covector_to_py(const Covector& cv) {
  py::list out;
  for (int k = 0; k <= cv.dim(); ++k) {
    py::list entry;
    for (int i = 0; i < cv.generators(); ++i)
      if (cv.contains(k, i)) entry.append(i);
    out.append(entry);
  }
  return out;
}

py::dict record_to_py(const CatalogRecord& rec) {
  py::dict d;
  d["m"] = rec.pseudo_vertex_count;
  py::list f;
  for (const long long x : rec.f) f.append(x);
  d["f"] = f;
  d["tropical_form"] = rec.tropical_form.to_string();
  d["ordinary_form"] = rec.ordinary_form.to_string();
  d["representative"] = closed_matrix_to_py(rec.representative);
  return d;
}

}  // namespace

PYBIND11_MODULE(polytrope, m) {
  m.doc() = "Exact min-plus convexity: hulls, covector types, polytropes, classification";

  py::class_<Polytrope>(m, "Polytrope")
      .def_property_readonly("dim", &Polytrope::dim)
      .def_property_readonly("matrix", [](const Polytrope& p) { return closed_matrix_to_py(p.matrix()); })
      .def_property_readonly("vertices",
                             [](const Polytrope& p) { return point_list_to_py(p.vertices(), false); })
      .def("pseudo_vertices", [](const Polytrope& p) { return point_list_to_py(pseudo_vertices(p), true); })
      .def("ordinary_facets",
           [](const Polytrope& p) {
             py::list out;
             for (const auto& f : ordinary_facets(p))
               out.append(py::make_tuple(f.i, f.j, to_py(f.offset)));
             return out;
           })
      .def("f_vector",
           [](const Polytrope& p) {
             py::list out;
             for (const long long x : f_vector(p)) out.append(x);
             return out;
           })
      .def("is_simple", [](const Polytrope& p) { return is_simple(p); })
      .def("tropical_canonical_form",
           [](const Polytrope& p) { return tropical_canonical_form(p).to_string(); })
      .def("ordinary_canonical_form",
           [](const Polytrope& p) { return ordinary_canonical_form(p).to_string(); })
      .def("svg", [](const Polytrope& p) { return export_svg(p); })
      .def("off", [](const Polytrope& p) { return export_off(p); })
      .def("__repr__", [](const Polytrope& p) {
        return "<Polytrope d=" + std::to_string(p.dim()) + ">";
      });

  m.def("canonical_coords", [](py::handle coords) {
    return coords_to_py(TropPoint(coords_from_py(coords)).canonical_coords());
  });
  m.def("dehomogenize", [](py::handle coords) {
    return coords_to_py(TropPoint(coords_from_py(coords)).dehomogenized());
  });
  m.def("homogenize", [](py::handle coords) {
    return coords_to_py(TropPoint::homogenize(coords_from_py(coords)).coords());
  });
  m.def("trop_segment", [](py::handle x, py::handle y) {
    py::list out;
    for (const auto& b : trop_segment(TropPoint(coords_from_py(x)), TropPoint(coords_from_py(y))))
      out.append(coords_to_py(b.canonical_coords()));
    return out;
  });
  m.def("tdet", [](py::handle rows) {
    std::vector<std::vector<TropScalar>> mm;
    for (py::handle row : rows.cast<py::sequence>()) {
      mm.emplace_back();
      for (py::handle e : row.cast<py::sequence>()) mm.back().push_back(scalar_from_py(e));
    }
    const TropDet r = tdet(mm);
    return py::make_tuple(scalar_to_py(r.value), r.singular);
  });
  m.def("is_general_position", [](py::handle pts) {
    return is_general_position(config_from_py(pts).points());
  });
  m.def("type_of", [](py::handle x, py::handle pts) {
    return covector_to_py(type_of(TropPoint(coords_from_py(x)), config_from_py(pts)));
  });
  m.def("hull_contains", [](py::handle x, py::handle pts) {
    return hull_contains(TropPoint(coords_from_py(x)), config_from_py(pts));
  });
  m.def("tropical_vertices", [](py::handle pts) {
    return point_list_to_py(tropical_vertices(config_from_py(pts)).points(), false);
  });
  m.def("corners", [](py::handle pts) { return point_list_to_py(corners(config_from_py(pts)), false); });
  m.def("is_polytrope", [](py::handle pts) { return is_polytrope(config_from_py(pts)); });

  m.def("kleene_closure", [](py::handle rows) -> py::dict {
    const ClosureStatus status = kleene_closure(weight_matrix_from_py(rows));
    py::dict out;
    if (const auto* closed = std::get_if<ClosedWeightMatrix>(&status)) {
      out["status"] = "closed";
      out["matrix"] = closed_matrix_to_py(*closed);
    } else if (const auto* cycle = std::get_if<NegativeCycle>(&status)) {
      out["status"] = "infeasible";
      py::list nodes;
      for (const int v : cycle->nodes) nodes.append(v);
      out["cycle"] = nodes;
      out["weight"] = to_py(cycle->weight);
    } else {
      const auto& entry = std::get<UnboundedEntry>(status);
      out["status"] = "unbounded";
      out["entry"] = py::make_tuple(entry.from, entry.to);
    }
    return out;
  });
  m.def("from_inequalities", [](py::handle rows) {
    try {
      return polytrope_from_inequalities(weight_matrix_from_py(rows));
    } catch (const ClosureError& e) {
      throw py::value_error(e.what());
    }
  });
  m.def("from_vertices",
        [](py::handle pts) { return Polytrope(matrix_from_vertices(config_from_py(pts))); });

  m.def("small_simplex", &small_simplex, py::arg("d"));
  m.def("pyrope", &pyrope, py::arg("d"));
  m.def("epsilon_matrix", [](int d, py::handle eps) {
    const EpsilonMatrix e = epsilon_matrix(d, from_py(eps));
    py::list rows;
    for (int i = 0; i <= d; ++i) {
      py::list row;
      for (int j = 0; j <= d; ++j) row.append(to_py(e.at(i, j)));
      rows.append(row);
    }
    return rows;
  });
  m.def("perturbed_pyrope", [](int d, py::handle e) {
    std::vector<std::vector<Rational>> rows;
    for (py::handle row : e.cast<py::sequence>()) rows.push_back(coords_from_py(row));
    return perturbed_pyrope(d, rows);
  });
  m.def("associahedron", &associahedron, py::arg("n"));
  m.def("fixture20", [](int index) {
    const auto fixtures = fixtures_20();
    if (index < 1 || index > static_cast<int>(fixtures.size()))
      throw py::value_error("fixture index must be in 1..5");
    return Polytrope(fixtures[static_cast<std::size_t>(index - 1)]);
  });

  m.def(
      "classify",
      [](int d, py::object bound, int jobs) {
        EnumerateOptions opts;
        if (!bound.is_none()) opts.bound = bound.cast<long long>();
        opts.jobs = jobs;
        const auto catalog = enumerate_classes(d, opts);
        py::list records;
        for (const auto& rec : catalog) records.append(record_to_py(rec));
        py::list table;
        for (const auto& row : class_table(catalog))
          table.append(py::make_tuple(row.m, row.t, row.o));
        py::dict out;
        out["records"] = records;
        out["table"] = table;
        return out;
      },
      py::arg("d"), py::arg("bound") = py::none(), py::arg("jobs") = 1);
}
