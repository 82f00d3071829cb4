#include <map>

#include "canvaslab/deficiency.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace canvaslab;
using namespace canvaslab::testing;

namespace {

// Builds a rotation system from a consistently oriented triangle list.
PlaneGraph from_faces(int n, const std::vector<std::array<int, 3>>& faces) {
  std::vector<std::map<Vertex, Vertex>> succ(n);
  for (const auto& f : faces) {
    succ[f[0]][f[1]] = f[2];
    succ[f[1]][f[2]] = f[0];
    succ[f[2]][f[0]] = f[1];
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    Vertex start = succ[v].begin()->first;
    Vertex cur = start;
    do {
      rot[v].push_back(cur);
      cur = succ[v].at(cur);
    } while (cur != start);
  }
  return PlaneGraph(std::move(rot));
}

// Icosahedron with outer triangle (0,2,1); all twelve degrees are five.
Canvas icosahedron_canvas() {
  std::vector<std::array<int, 3>> faces;
  auto u = [](int i) { return 1 + ((i % 5) + 5) % 5; };
  auto l = [](int i) { return 6 + ((i % 5) + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, u(i + 1), u(i)});
    faces.push_back({u(i), u(i + 1), l(i + 1)});
    faces.push_back({u(i), l(i + 1), l(i)});
    faces.push_back({11, l(i), l(i + 1)});
  }
  PlaneGraph g = from_faces(12, faces);
  designate_outer_face(g, CycleRef{{0, 2, 1}});
  ListAssignment L;
  L.lists.assign(12, {0, 1, 2, 3, 4});
  L.lists[0] = {0};
  L.lists[1] = {1};
  L.lists[2] = {2};
  auto oc = outer_cycle(g);
  REQUIRE(oc);
  REQUIRE(validate_canvas(g, *oc, L).ok);
  return Canvas{g, *oc, L};
}

Canvas plain_cycle_canvas(int k) {
  auto g = cycle_graph(k);
  ListAssignment L;
  for (int i = 0; i < k; ++i) L.lists.push_back({i % 2 == 0 ? 1 : 2});
  if (k % 2 == 1) L.lists[k - 1] = {3};
  auto oc = outer_cycle(g);
  return Canvas{g, *oc, L};
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(1, 18), b(1, 12);
  CHECK((a + b) == Rational(5, 36));
  CHECK((Rational(2) - Rational(2, 9)) == Rational(16, 9));
  CHECK((Rational(3) * Rational(1, 18)) == Rational(1, 6));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("2/3") == Rational(2, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational(16, 9).str() == "16/9");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("parameter inequalities") {
  CHECK_NOTHROW(Params::paper());
  CHECK(Params::violated_inequality(Rational(1, 2), Rational(1, 12), Rational(2, 3)) ==
        "3e <= 2a");
  CHECK(Params::violated_inequality(Rational(1, 18), Rational(1, 2), Rational(2, 3)) ==
        "6a + 3e <= g");
  CHECK(Params::violated_inequality(Rational(1, 18), Rational(1, 12), Rational(1)) ==
        "2a + 3e + g <= 1");
  CHECK(Params::violated_inequality(Rational(1, 18), Rational(1, 12), Rational(2, 3)).empty());
}

TEST_CASE("deficiency by both routes") {
  auto w5 = fixture_w5();
  CHECK(deficiency(w5) == 2);
  CHECK(deficiency_via_faces(w5) == 2);

  auto c4e = fixture_c4e();
  CHECK(deficiency(c4e) == 1);
  CHECK(deficiency_via_faces(c4e) == 1);

  auto cyc = plain_cycle_canvas(5);
  CHECK(deficiency(cyc) == 0);
  CHECK(deficiency_via_faces(cyc) == 0);

  for (const Canvas& t : {fixture_double_wheel(), fixture_quasi3(), icosahedron_canvas()})
    CHECK(deficiency(t) == deficiency_via_faces(t));
}

TEST_CASE("boundary and quasi-boundary") {
  auto w5 = fixture_w5();
  auto [b1, q1] = boundary_sets(w5);
  CHECK(b1 == std::set<Vertex>{5});
  CHECK(q1 == std::set<Vertex>{5});

  auto dw = fixture_double_wheel();
  auto [b2, q2] = boundary_sets(dw);
  CHECK(b2 == std::set<Vertex>({5, 6}));
  CHECK(q2 == std::set<Vertex>({5, 6}));

  // The middle vertex of the three-pod fixture shares faces with C but no edge.
  auto q3 = fixture_quasi3();
  auto [b3, qq3] = boundary_sets(q3);
  CHECK(b3 == std::set<Vertex>({6, 7, 8}));
  CHECK(qq3 == std::set<Vertex>({6, 7, 8, 9}));
}

TEST_CASE("s and d under the paper parameters") {
  auto p = Params::paper();
  auto w5 = fixture_w5();
  CHECK(s_value(w5, p) == Rational(2, 9));
  CHECK(d_value(w5, p) == Rational(16, 9));

  auto c4e = fixture_c4e();
  CHECK(s_value(c4e, p) == Rational(0));
  CHECK(d_value(c4e, p) == Rational(1));
}

TEST_CASE("d on canvases with one internal vertex follows the closed form") {
  auto p = Params::paper();
  auto dw = fixture_double_wheel();
  auto side = subcanvas_by_cycle(dw, CycleRef{{0, 5, 2, 3, 4}});
  REQUIRE(side.internal_count() == 1);
  int extra = side.graph.edge_count() - side.outer.length();
  Rational expected = Rational(extra) - Rational(3) -
                      (Rational(2) * p.alpha + p.epsilon);
  CHECK(d_value(side, p) == expected);
}

TEST_CASE("deficiency decomposition") {
  auto p = Params::paper();
  auto w5 = fixture_w5();

  // C plus three spokes of the hub.
  PlaneGraph g2({{1, 5, 4}, {2, 5, 0}, {3, 5, 1}, {4, 2}, {0, 3}, {0, 1, 2}});
  auto r = decomposition_check(w5, g2, p);
  CHECK(r.all_hold());
  CHECK(r.def_lhs == 2);
  CHECK(r.def_rhs == 2);

  // The identity is trivial on the graph itself.
  auto r2 = decomposition_check(w5, w5.graph, p);
  CHECK(r2.all_hold());

  auto c4e = fixture_c4e();
  auto r3 = decomposition_check(c4e, c4e.graph, p);
  CHECK(r3.all_hold());
  CHECK(r3.def_lhs == 1);
}

TEST_CASE("split bounds at a chord") {
  auto p = Params::paper();
  auto c4e = fixture_c4e();
  auto r = split_bounds_check(c4e, Edge(0, 2), p);
  CHECK(r.chord_case);
  CHECK(r.holds);
  CHECK(r.slack == Rational(0));
  CHECK(r.lhs == Rational(1));
}

TEST_CASE("split bounds through a two-contact vertex") {
  auto p = Params::paper();
  auto dw = fixture_double_wheel();
  auto r = split_bounds_check(dw, 5, 0, 2, p);
  CHECK_FALSE(r.chord_case);
  CHECK_FALSE(r.augmented);
  CHECK(r.holds);
  CHECK(r.slack == Rational(0));
  CHECK(r.lhs == Rational(14, 9));
}

TEST_CASE("split bounds with a degenerate triangle side") {
  auto p = Params::paper();
  auto dw = fixture_double_wheel();
  // u1 = 0, u2 = 1: one side is the triangle face (0,5,1).
  auto r = split_bounds_check(dw, 5, 0, 1, p);
  CHECK(r.holds);
}

TEST_CASE("defbound") {
  auto w5 = fixture_w5();
  auto r = defbound_check(w5);
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(r.equality);
  CHECK(r.every_internal_degree_five);
  CHECK_FALSE(r.readings_diverge);

  auto ico = icosahedron_canvas();
  auto r2 = defbound_check(ico);
  CHECK(r2.applicable);
  CHECK(r2.holds);
  CHECK(r2.equality);
  CHECK(r2.lhs == 0);
  CHECK(r2.rhs == 0);

  // W6: internal degree six gives a strict inequality.
  PlaneGraph w6({{1, 6, 5}, {2, 6, 0}, {3, 6, 1}, {4, 6, 2}, {5, 6, 3}, {0, 6, 4},
                 {0, 1, 2, 3, 4, 5}});
  designate_outer_face(w6, CycleRef{{0, 1, 2, 3, 4, 5}});
  Canvas t6{w6, CycleRef{{0, 1, 2, 3, 4, 5}},
            ListAssignment{{{1}, {2}, {1}, {2}, {1}, {2}, {0, 1, 2, 3, 4}}}};
  auto r3 = defbound_check(t6);
  CHECK(r3.applicable);
  CHECK(r3.holds);
  CHECK_FALSE(r3.equality);
  CHECK_FALSE(r3.every_internal_degree_five);

  // Not applicable when an internal vertex has degree below five.
  auto dw = fixture_double_wheel();
  CHECK_FALSE(defbound_check(dw).applicable);
}

TEST_CASE("deficiency report fields") {
  auto p = Params::paper();
  auto w5 = fixture_w5();
  auto rep = deficiency_report(w5, p);
  CHECK(rep.internal_vertices == 1);
  CHECK(rep.deficiency == 2);
  CHECK(rep.boundary_count == 1);
  CHECK(rep.quasi_boundary_count == 1);
  CHECK(rep.s == Rational(2, 9));
  CHECK(rep.d == Rational(16, 9));
  CHECK(rep.face_terms == std::vector<int>(5, 0));
}
