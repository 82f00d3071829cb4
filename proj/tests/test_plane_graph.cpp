#include <algorithm>

#include "canvaslab/canvas.hpp"
#include "canvaslab/plane_graph.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace canvaslab;
using namespace canvaslab::testing;

TEST_CASE("face tracing on a bare cycle") {
  auto g = cycle_graph(5);
  auto faces = trace_faces(g);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].length() == 5);
  CHECK(faces[1].length() == 5);
}

TEST_CASE("face tracing on K4") {
  auto t = fixture_k4({1, 2, 3});
  auto faces = trace_faces(t.graph);
  REQUIRE(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.length() == 3);
}

TEST_CASE("face tracing on the wheel fixture") {
  auto t = fixture_w5();
  auto faces = trace_faces(t.graph);
  REQUIRE(faces.size() == 6);
  int triangles = 0, pentagons = 0;
  for (const auto& f : faces) {
    if (f.length() == 3) ++triangles;
    if (f.length() == 5) ++pentagons;
  }
  CHECK(triangles == 5);
  CHECK(pentagons == 1);
}

TEST_CASE("face lengths double-count the edges") {
  for (const PlaneGraph& g :
       {fixture_w5().graph, fixture_double_wheel().graph, fixture_quasi3().graph,
        c6_chord03(), bowtie()}) {
    int total = 0;
    for (const auto& f : trace_faces(g)) total += f.length();
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("check_embedding accepts the fixtures") {
  CHECK(check_embedding(cycle_graph(5)).ok);
  CHECK(check_embedding(fixture_w5().graph).ok);
  CHECK(check_embedding(fixture_double_wheel().graph).ok);
  CHECK(check_embedding(fixture_quasi3().graph).ok);
}

TEST_CASE("check_embedding names an asymmetric edge") {
  PlaneGraph g({{1, 2}, {2}, {0, 1}});  // 0 lists 1 but 1 omits 0
  g.outer_face_id = 0;
  auto r = check_embedding(g);
  REQUIRE_FALSE(r.ok);
  bool named = false;
  for (const auto& v : r.violations)
    if (v.find("(0,1)") != std::string::npos || v.find("(1,0)") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("check_embedding rejects K5 under any rotation") {
  std::vector<std::vector<Vertex>> rot(5);
  for (int v = 0; v < 5; ++v)
    for (int w = 0; w < 5; ++w)
      if (w != v) rot[v].push_back(w);
  PlaneGraph g(std::move(rot));
  g.outer_face_id = 0;
  CHECK_FALSE(check_embedding(g).ok);
}

TEST_CASE("two-connectivity") {
  PlaneGraph triangle({{1, 2}, {2, 0}, {0, 1}});
  CHECK(is_two_connected(triangle));
  PlaneGraph path({{1}, {0, 2}, {1}});
  CHECK_FALSE(is_two_connected(path));
  CHECK_FALSE(is_two_connected(bowtie()));
}

TEST_CASE("disk subgraph of a wheel triangle is the triangle") {
  auto t = fixture_w5();
  auto disk = disk_subgraph(t.graph, CycleRef{{0, 1, 5}});
  CHECK_FALSE(disk.whole_graph);
  CHECK(disk.graph.vertex_count() == 3);
  CHECK(disk.graph.edge_count() == 3);
}

TEST_CASE("disk subgraph of C4 plus chord") {
  auto g = c4_chord();
  auto disk = disk_subgraph(g, CycleRef{{0, 1, 2}});
  CHECK(disk.graph.vertex_count() == 3);
  CHECK(disk.graph.edge_count() == 3);
  CHECK(disk.graph.has_edge(0, 2));
  CHECK_FALSE(disk.graph.has_vertex(3));
}

TEST_CASE("disk subgraph across the double wheel") {
  auto t = fixture_double_wheel();
  auto disk = disk_subgraph(t.graph, CycleRef{{0, 5, 2, 3, 4}});
  CHECK(disk.graph.has_vertex(6));
  CHECK(disk.graph.has_edge(6, 2));
  CHECK(disk.graph.has_edge(6, 3));
  CHECK(disk.graph.has_edge(6, 4));
  CHECK(disk.graph.has_edge(6, 0));
  CHECK(disk.graph.has_edge(6, 5));
  CHECK_FALSE(disk.graph.has_vertex(1));
  CHECK(check_embedding(disk.graph).ok);
  auto oc = outer_cycle(disk.graph);
  REQUIRE(oc);
  CHECK(cyclic_equal(oc->vertices, {0, 5, 2, 3, 4}));
}

TEST_CASE("disk of the outer cycle is the whole graph, flagged") {
  auto t = fixture_w5();
  auto disk = disk_subgraph(t.graph, t.outer);
  CHECK(disk.whole_graph);
  CHECK(disk.graph.edge_count() == t.graph.edge_count());
}

TEST_CASE("disk partition property") {
  // Vertices of the disk and of the rest overlap exactly on the cycle.
  auto t = fixture_double_wheel();
  CycleRef c{{0, 5, 2, 3, 4}};
  auto inside = disk_subgraph(t.graph, c).graph;
  std::set<Vertex> in_set;
  for (Vertex v : inside.vertices()) in_set.insert(v);
  for (Vertex v : t.graph.vertices()) {
    bool on_c = c.contains(v);
    if (in_set.count(v) && !on_c) CHECK_FALSE(v == 1);  // 1 is the outside vertex
  }
  CHECK(in_set.count(0));
  CHECK(in_set.count(5));
  CHECK_FALSE(in_set.count(1));
}

TEST_CASE("cofacial") {
  auto t = fixture_w5();
  for (Vertex v = 0; v < 5; ++v) CHECK(cofacial(t.graph, 5, v));
  auto g = c6_chord03();
  CHECK_FALSE(cofacial(g, 1, 4));
  CHECK(cofacial(g, 0, 1));
  CHECK(cofacial(g, 0, 3));
}

TEST_CASE("outer cycle extraction") {
  auto t = fixture_w5();
  auto oc = outer_cycle(t.graph);
  REQUIRE(oc);
  CHECK(cyclic_equal(oc->vertices, {0, 1, 2, 3, 4}));

  CHECK_FALSE(outer_cycle(bowtie()));

  auto g = c4_chord();
  auto oc2 = outer_cycle(g);
  REQUIRE(oc2);
  CHECK(cyclic_equal(oc2->vertices, {0, 1, 2, 3}));
}

TEST_CASE("euler formula holds on accepted embeddings") {
  for (const PlaneGraph& g : {fixture_w5().graph, c4_chord(), c6_chord03()}) {
    int v = g.vertex_count(), e = g.edge_count();
    int f = static_cast<int>(trace_faces(g).size());
    CHECK(v - e + f == 2);
  }
}
