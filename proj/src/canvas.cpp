#include "canvaslab/canvas.hpp"

#include <algorithm>

#include "canvaslab/colorer.hpp"

namespace canvaslab {

bool ListAssignment::covers(const PlaneGraph& g) const {
  for (Vertex v : g.vertices())
    if (v >= static_cast<int>(lists.size()) || lists[v].empty()) return false;
  return true;
}

ListAssignment ListAssignment::normalized() const {
  ListAssignment out = *this;
  for (auto& l : out.lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return out;
}

std::vector<Vertex> Canvas::internal_vertices() const {
  std::vector<Vertex> vs;
  for (Vertex v : graph.vertices())
    if (!outer.contains(v)) vs.push_back(v);
  return vs;
}

std::string to_string(CanvasViolation v) {
  switch (v) {
    case CanvasViolation::NotTwoConnected: return "not-2-connected";
    case CanvasViolation::OuterNotCycle: return "outer-not-cycle";
    case CanvasViolation::ShortInternalList: return "short-internal-list";
    case CanvasViolation::BoundaryUncolorable: return "boundary-uncolorable";
  }
  return "?";
}

CanvasValidation validate_canvas(const PlaneGraph& g, const CycleRef& c,
                                 const ListAssignment& L) {
  auto emb = check_embedding(g);
  if (!emb.ok)
    throw PreconditionError("validate_canvas requires a valid embedding: " +
                            emb.violations.front());

  CanvasValidation r;
  auto flag = [&r](CanvasViolation k, Vertex v, std::string d) {
    r.ok = false;
    r.violations.push_back({k, v, std::move(d)});
  };

  if (!is_two_connected(g))
    flag(CanvasViolation::NotTwoConnected, -1, "graph is not 2-connected");

  auto oc = outer_cycle(g);
  if (!oc)
    flag(CanvasViolation::OuterNotCycle, -1, "outer face boundary is not a cycle");
  else if (!cyclic_equal(oc->vertices, c.vertices))
    flag(CanvasViolation::OuterNotCycle, -1,
         "given outer cycle does not bound the designated outer face");

  ListAssignment norm = L.normalized();
  bool lists_ok = true;
  for (Vertex v : g.vertices()) {
    if (c.contains(v)) continue;
    int size = v < static_cast<int>(norm.lists.size())
                   ? static_cast<int>(norm.lists[v].size())
                   : 0;
    if (size < 5) {
      flag(CanvasViolation::ShortInternalList, v,
           "internal vertex " + std::to_string(v) + " has a list of size " +
               std::to_string(size));
      lists_ok = false;
    }
  }
  for (Vertex v : c.vertices) {
    int size = v < static_cast<int>(norm.lists.size())
                   ? static_cast<int>(norm.lists[v].size())
                   : 0;
    if (size < 1) {
      flag(CanvasViolation::BoundaryUncolorable, v,
           "boundary vertex " + std::to_string(v) + " has an empty list");
      lists_ok = false;
    }
  }

  if (lists_ok) {
    Canvas probe{g, c, norm};
    BoundaryColoringStream stream(probe);
    if (!stream.next())
      flag(CanvasViolation::BoundaryUncolorable, -1,
           "no proper list coloring of the outer cycle exists");
  }
  return r;
}

Canvas make_canvas(PlaneGraph g, ListAssignment L) {
  auto oc = outer_cycle(g);
  if (!oc) throw PreconditionError("make_canvas: outer face boundary is not a cycle");
  auto v = validate_canvas(g, *oc, L);
  if (!v.ok)
    throw PreconditionError("make_canvas: " + to_string(v.violations.front().kind) +
                            ": " + v.violations.front().detail);
  return Canvas{std::move(g), *oc, L.normalized()};
}

Canvas subcanvas_by_cycle(const Canvas& t, const CycleRef& c,
                          const std::set<Edge>& aux_edges) {
  auto disk = disk_subgraph(t.graph, c, aux_edges);
  if (disk.whole_graph) return t;
  ListAssignment L;
  L.lists.assign(t.graph.slots(), {});
  for (Vertex v : disk.graph.vertices())
    if (v < static_cast<int>(t.lists.lists.size())) L.lists[v] = t.lists.lists[v];
  return Canvas{std::move(disk.graph), c, std::move(L)};
}

Canvas subcanvas_by_face(const Canvas& t, const FaceWalk& f) {
  if (f.id == t.graph.outer_face_id)
    throw PreconditionError("subcanvas_by_face: outer face passed in");
  if (!f.is_cycle())
    throw PreconditionError("subcanvas_by_face: face boundary is not a cycle");
  return subcanvas_by_cycle(t, CycleRef{f.walk_vertices()});
}

bool is_sub_embedding(const PlaneGraph& g2, const PlaneGraph& g) {
  if (g2.slots() > g.slots()) return false;
  for (Vertex v : g2.vertices()) {
    if (!g.has_vertex(v)) return false;
    const auto& sub = g2.rotation[v];
    const auto& full = g.rotation[v];
    if (sub.empty()) continue;
    // sub must be a cyclic subsequence of full.
    auto start = std::find(full.begin(), full.end(), sub.front());
    if (start == full.end()) return false;
    int n = static_cast<int>(full.size());
    int at = static_cast<int>(start - full.begin());
    size_t matched = 1;
    for (int step = 1; step < n && matched < sub.size(); ++step) {
      if (full[(at + step) % n] == sub[matched]) ++matched;
    }
    if (matched < sub.size()) return false;
  }
  return true;
}

Canvas induced_subcanvas(const Canvas& t, const PlaneGraph& g2) {
  if (!is_sub_embedding(g2, t.graph))
    throw PreconditionError("induced_subcanvas: g2 is not a sub-embedding of the canvas graph");
  for (Vertex v : t.outer.vertices)
    if (!g2.has_vertex(v))
      throw PreconditionError("induced_subcanvas: g2 misses outer vertex " + std::to_string(v));
  for (Edge e : t.outer.edge_set())
    if (!g2.has_edge(e.a, e.b))
      throw PreconditionError("induced_subcanvas: g2 misses outer edge (" +
                              std::to_string(e.a) + "," + std::to_string(e.b) + ")");
  if (!is_two_connected(g2))
    throw PreconditionError("induced_subcanvas: g2 is not 2-connected");

  PlaneGraph g = g2;
  // Designate the face bounded by the outer cycle as the outer face.
  auto faces = trace_faces(g);
  int match = -1;
  for (const auto& f : faces)
    if (f.is_cycle() && cyclic_equal(f.walk_vertices(), t.outer.vertices)) {
      match = f.id;
      // Prefer the orientation the original outer walk used.
      bool forward = false;
      for (size_t i = 0; i + 1 <= f.boundary.size(); ++i) {
        if (f.boundary[i] == std::make_pair(t.outer.vertices[0],
                                            t.outer.vertices[1 % t.outer.length()]))
          forward = true;
      }
      if (forward) break;
    }
  if (match < 0)
    throw PreconditionError("induced_subcanvas: outer cycle does not bound a face of g2");
  g.outer_face_id = match;

  ListAssignment L;
  L.lists.assign(t.graph.slots(), {});
  for (Vertex v : g.vertices())
    if (v < static_cast<int>(t.lists.lists.size())) L.lists[v] = t.lists.lists[v];
  return Canvas{std::move(g), t.outer, std::move(L)};
}

namespace {

Canvas build(std::vector<std::vector<Vertex>> rot, std::vector<Vertex> outer,
             std::vector<ColorList> lists) {
  PlaneGraph g(std::move(rot));
  designate_outer_face(g, CycleRef{outer});
  return make_canvas(std::move(g), ListAssignment{std::move(lists)});
}

}  // namespace

Canvas fixture_w5() {
  return build({{1, 5, 4}, {2, 5, 0}, {3, 5, 1}, {4, 5, 2}, {0, 5, 3}, {0, 1, 2, 3, 4}},
               {0, 1, 2, 3, 4},
               {{0}, {1}, {2}, {3}, {4}, {0, 1, 2, 3, 4}});
}

Canvas fixture_c4e() {
  return build({{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}}, {0, 1, 2, 3},
               {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
}

Canvas fixture_k4(ColorList center) {
  // Deliberately skips canvas validation: the interesting center lists have
  // fewer than five colors.
  PlaneGraph g({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
  designate_outer_face(g, CycleRef{{0, 1, 2}});
  ListAssignment L{{{1}, {2}, {3}, std::move(center)}};
  return Canvas{std::move(g), CycleRef{{0, 1, 2}}, L.normalized()};
}

Canvas fixture_double_wheel() {
  return build({{1, 5, 6, 4},
                {2, 5, 0},
                {3, 6, 5, 1},
                {4, 6, 2},
                {0, 6, 3},
                {0, 1, 2, 6},
                {2, 3, 4, 0, 5}},
               {0, 1, 2, 3, 4},
               {{0}, {1}, {2}, {3}, {4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}});
}

Canvas fixture_quasi3() {
  return build({{1, 6, 5},
                {2, 7, 6, 0},
                {3, 7, 1},
                {4, 8, 7, 2},
                {5, 8, 3},
                {0, 6, 8, 4},
                {5, 0, 1, 9},
                {1, 2, 3, 9},
                {3, 4, 5, 9},
                {6, 7, 8}},
               {0, 1, 2, 3, 4, 5},
               {{1}, {2}, {1}, {2}, {1}, {2},
                {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}});
}

}  // namespace canvaslab
