#include "canvaslab/canvas.hpp"
#include "canvaslab/colorer.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace canvaslab;
using namespace canvaslab::testing;

TEST_CASE("fixtures validate") {
  auto w5 = fixture_w5();
  CHECK(validate_canvas(w5.graph, w5.outer, w5.lists).ok);
  auto c4e = fixture_c4e();
  CHECK(validate_canvas(c4e.graph, c4e.outer, c4e.lists).ok);
  auto dw = fixture_double_wheel();
  CHECK(validate_canvas(dw.graph, dw.outer, dw.lists).ok);
  auto q3 = fixture_quasi3();
  CHECK(validate_canvas(q3.graph, q3.outer, q3.lists).ok);
}

TEST_CASE("short internal list is reported with the vertex") {
  auto t = fixture_w5();
  t.lists.lists[5] = {0, 1, 2, 3};
  auto r = validate_canvas(t.graph, t.outer, t.lists);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == CanvasViolation::ShortInternalList);
  CHECK(r.violations[0].vertex == 5);
}

TEST_CASE("uncolorable boundary is reported") {
  PlaneGraph tri({{1, 2}, {2, 0}, {0, 1}});
  designate_outer_by_edge(tri, 0, 1);
  ListAssignment L{{{1}, {1}, {2}}};
  auto r = validate_canvas(tri, CycleRef{{0, 1, 2}}, L);
  REQUIRE_FALSE(r.ok);
  CHECK(r.violations[0].kind == CanvasViolation::BoundaryUncolorable);
}

TEST_CASE("non-2-connected graphs are flagged") {
  auto g = bowtie();
  ListAssignment L{{{1}, {2}, {3}, {1}, {2}}};
  auto r = validate_canvas(g, CycleRef{{0, 1, 2}}, L);
  CHECK_FALSE(r.ok);
  bool has2conn = false;
  for (const auto& v : r.violations)
    if (v.kind == CanvasViolation::NotTwoConnected) has2conn = true;
  CHECK(has2conn);
}

TEST_CASE("subcanvas by cycle on the wheel") {
  auto t = fixture_w5();
  auto sub = subcanvas_by_cycle(t, CycleRef{{0, 1, 5}});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.outer.length() == 3);
  CHECK(sub.lists.lists[0] == ColorList{0});
  CHECK(sub.lists.lists[5] == ColorList{0, 1, 2, 3, 4});
}

TEST_CASE("subcanvas of the outer cycle is the canvas itself") {
  auto t = fixture_w5();
  auto sub = subcanvas_by_cycle(t, t.outer);
  CHECK(sub.graph.edge_count() == t.graph.edge_count());
  CHECK(sub.graph.vertex_count() == t.graph.vertex_count());
}

TEST_CASE("subcanvas across the double wheel has one internal vertex") {
  auto t = fixture_double_wheel();
  auto sub = subcanvas_by_cycle(t, CycleRef{{0, 5, 2, 3, 4}});
  CHECK(sub.internal_count() == 1);
  CHECK(sub.is_internal(6));
}

TEST_CASE("subcanvas by face") {
  auto t = fixture_w5();
  auto faces = trace_faces(t.graph);
  int tri_id = -1;
  for (const auto& f : faces)
    if (f.length() == 3) {
      tri_id = f.id;
      break;
    }
  REQUIRE(tri_id >= 0);
  auto sub = subcanvas_by_face(t, faces[tri_id]);
  CHECK(sub.graph.vertex_count() == 3);

  CHECK_THROWS_AS(subcanvas_by_face(t, faces[t.graph.outer_face_id]), PreconditionError);
}

TEST_CASE("subcanvas by face on C4 plus chord") {
  auto t = fixture_c4e();
  auto faces = trace_faces(t.graph);
  for (const auto& f : faces) {
    if (f.id == t.graph.outer_face_id) continue;
    auto sub = subcanvas_by_face(t, f);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.outer.length() == 3);
  }
}

TEST_CASE("induced subcanvas") {
  auto t = fixture_w5();

  // C5 plus the hub with only 3 spokes.
  PlaneGraph g2({{1, 5, 4}, {2, 5, 0}, {3, 5, 1}, {4, 2}, {0, 3}, {0, 1, 2}});
  auto sub = induced_subcanvas(t, g2);
  CHECK(sub.graph.edge_count() == 8);
  CHECK(sub.outer.length() == 5);

  // Missing an outer edge is an error.
  PlaneGraph bad = t.graph.without_edge(Edge(0, 1));
  CHECK_THROWS_AS(induced_subcanvas(t, bad), PreconditionError);

  // Identity.
  auto same = induced_subcanvas(t, t.graph);
  CHECK(same.graph.edge_count() == t.graph.edge_count());
}
