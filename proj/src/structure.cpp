#include "canvaslab/structure.hpp"

#include <algorithm>

namespace canvaslab {

namespace {

PlaneGraph induced_on(const PlaneGraph& g, const std::set<Vertex>& keep) {
  PlaneGraph out;
  out.rotation.assign(g.slots(), {});
  out.present.assign(g.slots(), 0);
  for (Vertex v : keep) {
    out.present[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (keep.count(w)) out.rotation[v].push_back(w);
  }
  return out;
}

// Whether the closed disk of cycle c in g holds anything beyond c itself.
bool disk_has_material(const PlaneGraph& g, const CycleRef& c) {
  auto disk = disk_subgraph(g, c);
  if (disk.whole_graph)
    return g.vertex_count() > c.length() || g.edge_count() > c.length();
  return disk.graph.vertex_count() > c.length() || disk.graph.edge_count() > c.length();
}

// Neighbors of v on the outer cycle, in the cycle's cyclic order.
std::vector<Vertex> neighbors_on_c(const Canvas& t, Vertex v) {
  std::vector<Vertex> us;
  for (Vertex w : t.outer.vertices)
    if (t.graph.has_edge(v, w)) us.push_back(w);
  return us;
}

}  // namespace

std::vector<Edge> chords(const Canvas& t) {
  std::vector<Edge> out;
  auto ces = t.outer.edge_set();
  for (Edge e : t.graph.edges())
    if (!ces.count(e) && t.outer.contains(e.a) && t.outer.contains(e.b)) out.push_back(e);
  return out;
}

std::set<Vertex> boundary_tripod_candidates(const Canvas& t) {
  std::set<Vertex> out;
  for (Vertex v : t.internal_vertices())
    if (static_cast<int>(neighbors_on_c(t, v).size()) >= 3) out.insert(v);
  return out;
}

PodClassification classify_pod(const Canvas& t, Vertex v) {
  if (!t.is_internal(v))
    throw PreconditionError("classify_pod: vertex must be internal");
  auto us = neighbors_on_c(t, v);
  int k = static_cast<int>(us.size());
  if (k < 3) throw PreconditionError("classify_pod: vertex has fewer than 3 neighbors on C");

  PodClassification r;
  r.vertex = v;

  std::set<Vertex> keep(t.outer.vertices.begin(), t.outer.vertices.end());
  keep.insert(v);
  PlaneGraph j = induced_on(t.graph, keep);
  designate_outer_face(j, t.outer);

  auto faces = trace_faces(j);
  std::vector<int> material_ids;
  std::vector<CycleRef> material_cycles;
  for (const auto& f : faces) {
    if (f.id == j.outer_face_id) continue;
    if (!f.is_cycle()) continue;
    CycleRef fc{f.walk_vertices()};
    if (disk_has_material(t.graph, fc)) {
      material_ids.push_back(f.id);
      material_cycles.push_back(fc);
    }
  }
  r.material_faces = static_cast<int>(material_ids.size());
  if (r.material_faces > 1) {
    r.kind = PodKind::None;
    return r;
  }

  if (r.material_faces == 0) {
    r.kind = k == 3 ? PodKind::Tripod : PodKind::Quadpod;
    r.regular = false;
    // Appearance order starting at the least neighbor, for determinism.
    int at = static_cast<int>(std::min_element(us.begin(), us.end()) - us.begin());
    for (int i = 0; i < k; ++i) r.standard_order.push_back(us[(at + i) % k]);
    return r;
  }

  // The single material face must be incident with two cyclically
  // consecutive neighbors; the standard order then runs between them.
  const CycleRef& mc = material_cycles.front();
  int start = -1;
  for (int i = 0; i < k; ++i) {
    Vertex a = us[i], b = us[(i + 1) % k];
    if (mc.contains(a) && mc.contains(b)) {
      start = (i + 1) % k;
      break;
    }
  }
  if (start < 0) {
    r.kind = PodKind::None;  // material face does not close the neighbor order
    return r;
  }
  r.kind = k == 3 ? PodKind::Tripod : PodKind::Quadpod;
  r.regular = true;
  for (int i = 0; i < k; ++i) r.standard_order.push_back(us[(start + i) % k]);
  r.pod_cycle = mc;
  return r;
}

DividingClassification classify_dividing(const Canvas& t, Vertex v) {
  if (!t.is_internal(v))
    throw PreconditionError("classify_dividing: vertex must be internal");

  auto faces = trace_faces(t.graph);
  // (face id, boundary contact) options.
  std::vector<std::pair<int, Vertex>> contacts;
  for (const auto& f : faces) {
    if (f.id == t.graph.outer_face_id || !f.touches(v)) continue;
    for (Vertex u : t.outer.vertices)
      if (f.touches(u)) contacts.push_back({f.id, u});
  }

  struct PairResult {
    int f1, f2;
    Vertex u1, u2;
    bool dividing, strong, truly, augmented;
    CycleRef c1, c2;
    int strength() const { return (truly ? 4 : 0) + (strong ? 2 : 0) + (dividing ? 1 : 0); }
  };
  std::vector<PairResult> results;

  int k = t.outer.length();
  for (const auto& [f1, u1] : contacts) {
    for (const auto& [f2, u2] : contacts) {
      if (f1 == f2 || u1 == u2) continue;

      PlaneGraph g = t.graph;
      std::set<Edge> aux;
      bool ok = true;
      for (auto [fid, u] : {std::pair{f1, u1}, std::pair{f2, u2}}) {
        if (g.has_edge(v, u)) continue;
        const FaceWalk* fw = nullptr;
        for (const auto& f : faces)
          if (f.id == fid) fw = &f;
        Vertex before_v = -1, before_u = -1;
        for (const auto& de : fw->boundary) {
          if (de.second == v) before_v = de.first;
          if (de.second == u) before_u = de.first;
        }
        if (before_v < 0 || before_u < 0) {
          ok = false;
          break;
        }
        g = g.with_edge(v, u, before_v, before_u);
        aux.insert(Edge(v, u));
      }
      if (!ok) continue;

      int p1 = -1, p2 = -1;
      for (int i = 0; i < k; ++i) {
        if (t.outer.vertices[i] == u1) p1 = i;
        if (t.outer.vertices[i] == u2) p2 = i;
      }
      int lo = std::min(p1, p2), hi = std::max(p1, p2);
      std::vector<Vertex> arc1(t.outer.vertices.begin() + lo, t.outer.vertices.begin() + hi + 1);
      arc1.push_back(v);
      std::vector<Vertex> arc2;
      for (int i = hi; i != lo; i = (i + 1) % k) arc2.push_back(t.outer.vertices[i]);
      arc2.push_back(t.outer.vertices[lo]);
      arc2.push_back(v);

      Canvas host{g, t.outer, t.lists};
      Canvas side1 = subcanvas_by_cycle(host, CycleRef{arc1}, aux);
      Canvas side2 = subcanvas_by_cycle(host, CycleRef{arc2}, aux);
      int extra1 = side1.graph.edge_count() - side1.outer.length();
      int extra2 = side2.graph.edge_count() - side2.outer.length();

      PairResult pr;
      pr.f1 = f1;
      pr.f2 = f2;
      pr.u1 = u1;
      pr.u2 = u2;
      pr.augmented = !aux.empty();
      pr.dividing = extra1 >= 2 && extra2 >= 2;
      pr.strong = pr.dividing && side1.internal_count() >= 1 && side2.internal_count() >= 1;
      pr.truly = pr.dividing && aux.empty();
      pr.c1 = side1.outer;
      pr.c2 = side2.outer;
      results.push_back(std::move(pr));
    }
  }
  if (results.empty())
    throw PreconditionError("classify_dividing: no qualifying face pair");

  DividingClassification r;
  r.vertex = v;
  for (const auto& pr : results) {
    r.dividing = r.dividing || pr.dividing;
    r.strong = r.strong || pr.strong;
    r.true_dividing = r.true_dividing || pr.truly;
  }
  int best = -1;
  auto key = [](const PairResult& pr) {
    return std::tuple(-pr.strength(), pr.f1, pr.u1, pr.f2, pr.u2);
  };
  for (int i = 0; i < static_cast<int>(results.size()); ++i)
    if (best < 0 || key(results[i]) < key(results[best])) best = i;
  const auto& w = results[best];
  r.face1 = w.f1;
  r.face2 = w.f2;
  r.u1 = w.u1;
  r.u2 = w.u2;
  r.cycle1 = w.c1;
  r.cycle2 = w.c2;
  r.augmented = w.augmented;
  return r;
}

PodCycleResult pod_cycle_for_set(const Canvas& t, const std::set<Vertex>& X) {
  for (Vertex v : X) {
    if (!t.is_internal(v))
      throw PreconditionError("pod_cycle_for_set: set member not internal");
    if (static_cast<int>(neighbors_on_c(t, v).size()) < 3)
      throw PreconditionError("pod_cycle_for_set: set member has fewer than 3 neighbors on C");
  }
  std::set<Vertex> keep(t.outer.vertices.begin(), t.outer.vertices.end());
  keep.insert(X.begin(), X.end());
  PlaneGraph j = induced_on(t.graph, keep);
  designate_outer_face(j, t.outer);

  PodCycleResult r;
  for (const auto& f : trace_faces(j)) {
    if (f.id == j.outer_face_id || !f.is_cycle()) continue;
    CycleRef fc{f.walk_vertices()};
    if (!disk_has_material(t.graph, fc)) continue;
    if (!r.found) {
      r.found = true;
      r.cycle = fc;
    } else {
      r.multiple = true;
    }
  }
  return r;
}

Canvas relax(const Canvas& t, Vertex v) {
  auto pod = classify_pod(t, v);
  if (pod.kind != PodKind::Tripod || !pod.regular)
    throw PreconditionError("relax: vertex is not a regular tripod");
  return subcanvas_by_cycle(t, *pod.pod_cycle);
}

ChordOrTripodWitness chord_or_tripod_witness(const Canvas& t,
                                             const CriticalityCertificate& cert) {
  if (!cert.verdict)
    throw PreconditionError("chord_or_tripod_witness: canvas is not certified critical");

  ChordOrTripodWitness w{ChordOrTripodWitness::Kind::TheoremViolation, Edge{-1, -1}, -1};
  auto cs = chords(t);
  if (!cs.empty()) {
    w.kind = ChordOrTripodWitness::Kind::Chord;
    w.chord = cs.front();
    return w;
  }
  for (Vertex v : boundary_tripod_candidates(t)) {
    if (classify_pod(t, v).kind != PodKind::None) {
      w.kind = ChordOrTripodWitness::Kind::PodVertex;
      w.pod_vertex = v;
      return w;
    }
  }
  return w;
}

}  // namespace canvaslab
