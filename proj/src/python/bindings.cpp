// Python bindings for the main operations: canvas IO and validation,
// coloring search, criticality, extraction, the quantitative calculus,
// structure detectors and small scans.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "canvaslab/canvas_io.hpp"
#include "canvaslab/draw.hpp"
#include "canvaslab/structure.hpp"
#include "canvaslab/verifier.hpp"

namespace py = pybind11;
using namespace canvaslab;

namespace {

Canvas canvas_from_text(const std::string& text) { return parse_canvas_text(text).canvas; }

py::dict validation_dict(const CanvasValidation& r) {
  py::dict d;
  d["ok"] = r.ok;
  py::list v;
  for (const auto& f : r.violations) {
    py::dict row;
    row["kind"] = to_string(f.kind);
    row["vertex"] = f.vertex;
    row["detail"] = f.detail;
    v.append(row);
  }
  d["violations"] = v;
  return d;
}

py::object coloring_to_py(const std::optional<PartialColoring>& phi) {
  if (!phi) return py::none();
  py::dict d;
  for (int v = 0; v < static_cast<int>(phi->color.size()); ++v)
    if (phi->color[v] >= 0) d[py::int_(v)] = phi->color[v];
  return d;
}

PartialColoring coloring_from_py(const Canvas& t, const py::dict& d) {
  auto phi = PartialColoring::empty(t.graph.slots());
  for (auto item : d) phi.color[item.first.cast<int>()] = item.second.cast<int>();
  return phi;
}

}  // namespace

PYBIND11_MODULE(canvaslab, m) {
  m.doc() = "plane-graph canvases: list-coloring criticality and deficiency checks";

  py::register_exception<PreconditionError>(m, "PreconditionError");

  py::class_<Canvas>(m, "Canvas")
      .def_static("from_text", &canvas_from_text)
      .def_static("from_file",
                  [](const std::string& path) { return load_canvas_file(path).canvas; })
      .def("to_text", [](const Canvas& t) { return serialize_canvas(t); })
      .def_property_readonly("n", [](const Canvas& t) { return t.graph.vertex_count(); })
      .def_property_readonly("edges",
                             [](const Canvas& t) {
                               py::list out;
                               for (Edge e : t.graph.edges())
                                 out.append(py::make_tuple(e.a, e.b));
                               return out;
                             })
      .def_property_readonly("outer", [](const Canvas& t) { return t.outer.vertices; })
      .def_property_readonly("lists", [](const Canvas& t) { return t.lists.lists; })
      .def_property_readonly(
          "internal_vertices",
          [](const Canvas& t) { return t.internal_vertices(); })
      .def("validate",
           [](const Canvas& t) {
             return validation_dict(validate_canvas(t.graph, t.outer, t.lists));
           })
      .def("boundary_colorings",
           [](const Canvas& t) {
             py::list out;
             for (const auto& phi : all_boundary_colorings(t))
               out.append(coloring_to_py(phi));
             return out;
           })
      .def("extend",
           [](const Canvas& t, const py::dict& phi) {
             return coloring_to_py(extend(t.graph, t.lists, coloring_from_py(t, phi)));
           },
           py::arg("phi") = py::dict())
      .def("is_critical",
           [](const Canvas& t) { return is_critical_canvas(t).verdict; })
      .def("criticality_witnesses",
           [](const Canvas& t) {
             py::list out;
             for (const auto& w : is_critical_canvas(t).witnesses) {
               py::dict row;
               if (w.vertex_deletion)
                 row["vertex"] = w.removed_vertex;
               else
                 row["edge"] = py::make_tuple(w.removed_edge.a, w.removed_edge.b);
               py::dict phi;
               for (int v = 0; v < static_cast<int>(w.phi.color.size()); ++v)
                 if (w.phi.color[v] >= 0) phi[py::int_(v)] = w.phi.color[v];
               row["phi"] = phi;
               out.append(row);
             }
             return out;
           })
      .def("extract_minimal_extender",
           [](const Canvas& t) {
             auto res = extract_minimal_extender(t.graph, t.outer, t.lists);
             py::dict d;
             d["equals_cycle"] = res.equals_cycle;
             d["vertices"] = res.h.vertex_count();
             d["edge_count"] = res.h.edge_count();
             d["critical"] = res.equals_cycle ? false : res.certificate.verdict;
             return d;
           })
      .def("deficiency", [](const Canvas& t) { return deficiency(t); })
      .def("deficiency_via_faces", [](const Canvas& t) { return deficiency_via_faces(t); })
      .def("boundary_sets",
           [](const Canvas& t) {
             auto [b, q] = boundary_sets(t);
             return py::make_tuple(std::vector<Vertex>(b.begin(), b.end()),
                                   std::vector<Vertex>(q.begin(), q.end()));
           })
      .def("s_value",
           [](const Canvas& t) { return s_value(t, Params::paper()).str(); })
      .def("d_value",
           [](const Canvas& t) { return d_value(t, Params::paper()).str(); })
      .def("chords",
           [](const Canvas& t) {
             py::list out;
             for (Edge e : chords(t)) out.append(py::make_tuple(e.a, e.b));
             return out;
           })
      .def("svg", [](const Canvas& t) { return svg_drawing(t); })
      .def("dot", [](const Canvas& t) { return dot_drawing(t); });

  m.def("fixture_w5", &fixture_w5);
  m.def("fixture_c4e", &fixture_c4e);
  m.def("fixture_k4", &fixture_k4, py::arg("center"));
  m.def("fixture_double_wheel", &fixture_double_wheel);

  m.def("thomassen_color",
        [](const Canvas& t, const std::set<Vertex>& outer_vs,
           const std::set<Vertex>& precolored) {
          auto phi = thomassen_color(t.graph, outer_vs, precolored, t.lists);
          py::dict d;
          for (int v = 0; v < static_cast<int>(phi.color.size()); ++v)
            if (phi.color[v] >= 0) d[py::int_(v)] = phi.color[v];
          return d;
        });

  m.def(
      "scan",
      [](std::vector<int> ks, int m_internal, const std::string& mode, int universe,
         int jobs) {
        GenSpec spec;
        spec.max_internal = m_internal;
        spec.mode = boundary_mode_from_string(mode);
        spec.universe = universe;
        ScanOptions opts;
        opts.jobs = jobs;
        auto rep = scan(ks, spec, Params::paper(), default_suite(), opts);
        py::dict d;
        d["instances"] = rep.instances;
        d["critical"] = rep.critical_instances;
        d["violations"] = rep.violations.size();
        d["footer"] = rep.footer_line();
        return d;
      },
      py::arg("ks"), py::arg("m") = 1, py::arg("mode") = "singleton",
      py::arg("universe") = 5, py::arg("jobs") = 1);

  m.def("replay_certificate", [](const std::string& text) {
    auto r = replay_certificate(text);
    py::dict d;
    d["well_formed"] = r.well_formed;
    d["matches"] = r.matches;
    d["message"] = r.message;
    return d;
  });
}
