// Detectors for the structural objects that drive the main induction:
// chords, tripods/quadpods, dividing vertices, relaxations.
#ifndef CANVASLAB_STRUCTURE_HPP
#define CANVASLAB_STRUCTURE_HPP

#include <optional>

#include "canvaslab/critical.hpp"

namespace canvaslab {

enum class PodKind { None, Tripod, Quadpod };

struct PodClassification {
  Vertex vertex = -1;
  PodKind kind = PodKind::None;
  bool regular = false;
  // Neighbors on C in standard order when a material face exists (it is
  // then incident with the first and last entry); otherwise the appearance
  // order along C starting at the least neighbor.
  std::vector<Vertex> standard_order;
  std::optional<CycleRef> pod_cycle;  // boundary of the material face if regular
  int material_faces = 0;
};

struct DividingClassification {
  Vertex vertex = -1;
  bool dividing = false;
  bool strong = false;
  bool true_dividing = false;
  // Lexicographically least witnessing pair among those achieving the
  // strongest per-pair flags.
  int face1 = -1, face2 = -1;
  Vertex u1 = -1, u2 = -1;
  CycleRef cycle1, cycle2;
  bool augmented = false;  // witness used virtually inserted contact edges
};

// Edges off C with both ends on C, sorted.
std::vector<Edge> chords(const Canvas& t);

// Internal vertices with at least three neighbors on the outer cycle.
std::set<Vertex> boundary_tripod_candidates(const Canvas& t);

// Classification per the pod definitions; v must be internal with >= 3
// neighbors on C. kind is None when more than one face of G[V(C) + v]
// contains further material of G, or when the material face cannot close
// the neighbor order.
PodClassification classify_pod(const Canvas& t, Vertex v);

// Flags per the dividing-vertex definitions. Contact edges absent from G
// are inserted virtually inside the witnessing faces; true_dividing
// additionally requires them to be real. Throws when no qualifying face
// pair exists.
DividingClassification classify_dividing(const Canvas& t, Vertex v);

struct PodCycleResult {
  bool found = false;
  CycleRef cycle;
  bool multiple = false;  // more than one face qualified; least id reported
};

// Boundary of a face of G[V(C) + X] containing further material of G.
PodCycleResult pod_cycle_for_set(const Canvas& t, const std::set<Vertex>& X);

// One relaxation step: the subcanvas on the pod cycle of a regular tripod.
Canvas relax(const Canvas& t, Vertex v);

struct ChordOrTripodWitness {
  enum class Kind { Chord, PodVertex, TheoremViolation } kind;
  Edge chord{-1, -1};
  Vertex pod_vertex = -1;
};

// On a certified-critical canvas, produces a chord of C or an internal
// vertex with >= 3 neighbors on C and at most one material pod face.
// Absence of both is reported as a theorem violation.
ChordOrTripodWitness chord_or_tripod_witness(const Canvas& t,
                                             const CriticalityCertificate& cert);

}  // namespace canvaslab

#endif
