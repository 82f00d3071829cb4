// Criticality predicates and extraction of critical subcanvases and
// minimal extender subgraphs.
#ifndef CANVASLAB_CRITICAL_HPP
#define CANVASLAB_CRITICAL_HPP

#include <optional>

#include "canvaslab/colorer.hpp"

namespace canvaslab {

// A subgraph given explicitly as vertices plus edges (not necessarily
// induced). Operations validate containment in the host graph.
struct SubgraphSpec {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  static SubgraphSpec of_cycle(const CycleRef& c);
  bool has_vertex(Vertex v) const;
  std::set<Edge> edge_set() const { return {edges.begin(), edges.end()}; }
};

// One maximal proper subgraph of G containing T, together with a coloring
// of T that extends to it but not to G.
struct CriticalityWitness {
  bool vertex_deletion = false;
  Edge removed_edge{-1, -1};   // when an edge was removed
  Vertex removed_vertex = -1;  // when an isolated vertex was removed
  PartialColoring phi;
};

struct CriticalityCertificate {
  bool verdict = false;
  std::vector<CriticalityWitness> witnesses;       // one per maximal subgraph if true
  std::optional<CriticalityWitness> failure;        // the unwitnessed item if false
};

// All proper list-colorings of the subgraph T (proper on T's edges),
// lexicographic by (vertex id, color).
std::vector<PartialColoring> enumerate_subgraph_colorings(const SubgraphSpec& T,
                                                          const ListAssignment& L,
                                                          int slots);

// G is T-critical iff G != T and for every maximal proper subgraph of G
// containing T (G minus one edge off T, or minus one isolated vertex off T)
// some L-coloring of T extends to the subgraph but not to G. Testing the
// maximal subgraphs suffices: extensions restrict to subgraphs, so a
// coloring separating G-e from G separates every subgraph of G-e from G.
CriticalityCertificate is_T_critical(const PlaneGraph& g, const SubgraphSpec& T,
                                     const ListAssignment& L, ColorCache* cache = nullptr);

// phi-criticality: the one fixed coloring separates every maximal proper
// subgraph from G. Implies T-criticality.
bool is_phi_critical(const PlaneGraph& g, const SubgraphSpec& T, const ListAssignment& L,
                     const PartialColoring& phi, ColorCache* cache = nullptr);

CriticalityCertificate is_critical_canvas(const Canvas& t, ColorCache* cache = nullptr);

// Greedily deletes edges (then isolated vertices) outside C while phi still
// fails to extend, then certifies the remainder critical. Precondition:
// phi does not extend to t.graph.
Canvas find_critical_subcanvas(const Canvas& t, const PartialColoring& phi,
                               ColorCache* cache = nullptr);

// Whether every proper boundary coloring of c that extends to h also
// extends to g (the extender property P).
bool extender_property(const PlaneGraph& g, const CycleRef& c, const ListAssignment& L,
                       const PlaneGraph& h, ColorCache* cache = nullptr);

struct ExtractionResult {
  PlaneGraph h;
  bool equals_cycle = false;                 // H is exactly the cycle C
  CriticalityCertificate certificate;        // criticality of H when H != C
};

// Minimal subgraph H containing C such that every boundary coloring that
// extends to H extends to g. Deletion order: edges off C ascending to a
// fixed point, isolated vertices afterwards. The result is verified to
// satisfy the property, to lose it under every single deletion, and to be
// C-critical unless it equals C.
ExtractionResult extract_minimal_extender(const PlaneGraph& g, const CycleRef& c,
                                          const ListAssignment& L,
                                          ColorCache* cache = nullptr);

}  // namespace canvaslab

#endif
