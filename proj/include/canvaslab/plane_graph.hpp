// Combinatorial plane-graph core: rotation systems, face tracing, disk
// subgraphs, connectivity. Vertices are 0-based slot ids; a graph may mark
// slots absent so that subgraph extraction preserves original ids.
#ifndef CANVASLAB_PLANE_GRAPH_HPP
#define CANVASLAB_PLANE_GRAPH_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canvaslab {

using Vertex = int;

// Undirected edge, normalized so first <= second.
struct Edge {
  Vertex a = -1;
  Vertex b = -1;
  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A plane graph given by its rotation system: rotation[v] lists the
// neighbors of v in counterclockwise order. outer_face_id designates the
// unbounded face among the faces produced by trace_faces().
struct PlaneGraph {
  std::vector<std::vector<Vertex>> rotation;
  std::vector<char> present;  // slot v participates iff present[v]
  int outer_face_id = -1;

  PlaneGraph() = default;
  explicit PlaneGraph(std::vector<std::vector<Vertex>> rot, int outer = -1);

  int slots() const { return static_cast<int>(rotation.size()); }
  bool has_vertex(Vertex v) const {
    return v >= 0 && v < slots() && present[v];
  }
  int vertex_count() const;
  int edge_count() const;
  int degree(Vertex v) const { return static_cast<int>(rotation[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return rotation[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Vertex> vertices() const;       // present slots, ascending
  std::vector<Edge> edges() const;            // sorted
  std::vector<Edge> edges_not_in(const std::set<Edge>& excluded) const;

  // Pure structural edits: each returns a modified copy, ids stable.
  PlaneGraph without_edge(Edge e) const;
  PlaneGraph without_vertex(Vertex v) const;
  // Inserts edge u-v with v placed after `after_in_u` in u's rotation and u
  // after `after_in_v` in v's rotation (value -1 appends at the end).
  PlaneGraph with_edge(Vertex u, Vertex v, Vertex after_in_u, Vertex after_in_v) const;
};

// Cyclic sequence of distinct vertices forming a cycle of the host graph.
struct CycleRef {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
  bool has_edge(Edge e) const;        // e is an edge of the cycle
  std::set<Edge> edge_set() const;
  friend bool operator==(const CycleRef&, const CycleRef&) = default;
};

// True if a and b denote the same cyclic sequence up to rotation/reflection.
bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

// One face of the embedding. `boundary` holds the directed edges of the
// face walk, rotated so the lexicographically least directed edge comes
// first; face ids are assigned in sorted order of that least edge.
struct FaceWalk {
  int id = -1;
  std::vector<std::pair<Vertex, Vertex>> boundary;

  int length() const { return static_cast<int>(boundary.size()); }
  std::vector<Vertex> walk_vertices() const;  // tail of each directed edge
  bool is_cycle() const;                      // no vertex repeats
  bool touches(Vertex v) const;
};

struct EmbeddingCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Thrown when an operation is invoked outside its stated precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Traces all faces of the embedding. Convention: arriving at v along (u,v),
// the walk leaves along the neighbor immediately after u in v's
// counterclockwise rotation. Throws PreconditionError naming the offending
// edge if the rotation system is asymmetric.
std::vector<FaceWalk> trace_faces(const PlaneGraph& g);

// Full invariant check: simplicity, symmetry, per-component Euler formula
// V - E + F = 2, and a valid outer_face_id.
EmbeddingCheck check_embedding(const PlaneGraph& g);

// True iff g has >= 3 vertices, is connected and has no cutvertex.
bool is_two_connected(const PlaneGraph& g);

// True iff some internal face is incident with both u and v. The designated
// outer face does not count; it touches every boundary vertex at once.
bool cofacial(const PlaneGraph& g, Vertex u, Vertex v);

// Boundary walk of the designated outer face if it is a cycle.
std::optional<CycleRef> outer_cycle(const PlaneGraph& g);

// Re-points outer_face_id at the face bounded by c, preferring the face
// whose walk contains the directed edge (c[0], c[1]). Throws if no face is
// bounded by c.
void designate_outer_face(PlaneGraph& g, const CycleRef& c);

struct DiskResult {
  PlaneGraph graph;
  bool whole_graph = false;  // set when c was the outer cycle
};

// Subgraph drawn in the closed disk bounded by cycle c (the side not
// containing the outer face), re-embedded with c as its outer cycle.
// aux_edges marks auxiliary edges of an augmented embedding; they are
// stripped from the output unless they lie on c itself.
DiskResult disk_subgraph(const PlaneGraph& g, const CycleRef& c,
                         const std::set<Edge>& aux_edges = {});

}  // namespace canvaslab

#endif
