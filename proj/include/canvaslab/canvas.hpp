// The central object (G, C, L): a 2-connected plane graph, its outer cycle
// and a list assignment with 5-lists on internal vertices.
#ifndef CANVASLAB_CANVAS_HPP
#define CANVASLAB_CANVAS_HPP

#include <string>
#include <vector>

#include "canvaslab/plane_graph.hpp"

namespace canvaslab {

using Color = int;
using ColorList = std::vector<Color>;  // sorted, distinct

// Per-vertex color lists. Entries may exist for vertices absent from the
// host graph; restriction to a subgraph silently drops them.
struct ListAssignment {
  std::vector<ColorList> lists;  // indexed by vertex slot

  const ColorList& at(Vertex v) const { return lists[v]; }
  bool covers(const PlaneGraph& g) const;
  ListAssignment normalized() const;  // sort + dedupe every list
};

struct Canvas {
  PlaneGraph graph;
  CycleRef outer;
  ListAssignment lists;

  bool is_internal(Vertex v) const { return graph.has_vertex(v) && !outer.contains(v); }
  std::vector<Vertex> internal_vertices() const;
  int internal_count() const { return static_cast<int>(internal_vertices().size()); }
};

enum class CanvasViolation {
  NotTwoConnected,
  OuterNotCycle,
  ShortInternalList,
  BoundaryUncolorable,
};

struct CanvasFinding {
  CanvasViolation kind;
  Vertex vertex = -1;  // the offending vertex for ShortInternalList
  std::string detail;
};

struct CanvasValidation {
  bool ok = true;
  std::vector<CanvasFinding> violations;
};

std::string to_string(CanvasViolation v);

// Checks all canvas invariants; boundary colorability is decided by
// exhaustive search over the outer cycle's lists.
CanvasValidation validate_canvas(const PlaneGraph& g, const CycleRef& c,
                                 const ListAssignment& L);

// Builds a canvas from a graph whose designated outer face is bounded by a
// cycle; throws PreconditionError when validation fails.
Canvas make_canvas(PlaneGraph g, ListAssignment L);

// T<C'>: the disk subgraph bounded by c with c as outer cycle and the lists
// restricted to surviving vertices.
Canvas subcanvas_by_cycle(const Canvas& t, const CycleRef& c,
                          const std::set<Edge>& aux_edges = {});

// T[f] for an internal face whose walk is a cycle.
Canvas subcanvas_by_face(const Canvas& t, const FaceWalk& f);

// T[G'] for a 2-connected subgraph g2 of t.graph containing the outer cycle.
Canvas induced_subcanvas(const Canvas& t, const PlaneGraph& g2);

// True iff g2 is a subgraph of g drawn the same way: every rotation of g2
// is a cyclic subsequence of the corresponding rotation of g.
bool is_sub_embedding(const PlaneGraph& g2, const PlaneGraph& g);

// Canonical fixtures used across tests and docs.
Canvas fixture_w5();                    // C5 + hub with singleton rim lists
Canvas fixture_c4e();                   // C4 + chord, all lists {1,2}
Canvas fixture_k4(ColorList center);    // triangle + center, singleton rim
Canvas fixture_double_wheel();          // C5 + two adjacent hubs
Canvas fixture_quasi3();                // hexagon, three pods, middle vertex in Q\B

}  // namespace canvaslab

#endif
