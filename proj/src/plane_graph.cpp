#include "canvaslab/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace canvaslab {

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rot, int outer)
    : rotation(std::move(rot)), present(rotation.size(), 1), outer_face_id(outer) {}

int PlaneGraph::vertex_count() const {
  int c = 0;
  for (char p : present) c += p ? 1 : 0;
  return c;
}

int PlaneGraph::edge_count() const {
  int half = 0;
  for (int v = 0; v < slots(); ++v)
    if (present[v]) half += degree(v);
  return half / 2;
}

bool PlaneGraph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& r = rotation[u];
  return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<Vertex> PlaneGraph::vertices() const {
  std::vector<Vertex> vs;
  for (int v = 0; v < slots(); ++v)
    if (present[v]) vs.push_back(v);
  return vs;
}

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> es;
  for (int v = 0; v < slots(); ++v) {
    if (!present[v]) continue;
    for (Vertex w : rotation[v])
      if (v < w) es.emplace_back(v, w);
  }
  std::sort(es.begin(), es.end());
  return es;
}

std::vector<Edge> PlaneGraph::edges_not_in(const std::set<Edge>& excluded) const {
  std::vector<Edge> es;
  for (Edge e : edges())
    if (!excluded.count(e)) es.push_back(e);
  return es;
}

PlaneGraph PlaneGraph::without_edge(Edge e) const {
  PlaneGraph g = *this;
  auto strip = [&g](Vertex v, Vertex w) {
    auto& r = g.rotation[v];
    r.erase(std::remove(r.begin(), r.end(), w), r.end());
  };
  strip(e.a, e.b);
  strip(e.b, e.a);
  return g;
}

PlaneGraph PlaneGraph::without_vertex(Vertex v) const {
  PlaneGraph g = *this;
  for (Vertex w : rotation[v]) {
    auto& r = g.rotation[w];
    r.erase(std::remove(r.begin(), r.end(), v), r.end());
  }
  g.rotation[v].clear();
  g.present[v] = 0;
  return g;
}

PlaneGraph PlaneGraph::with_edge(Vertex u, Vertex v, Vertex after_in_u, Vertex after_in_v) const {
  PlaneGraph g = *this;
  auto place = [&g](Vertex at, Vertex nb, Vertex after) {
    auto& r = g.rotation[at];
    if (after < 0) {
      r.push_back(nb);
      return;
    }
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) throw PreconditionError("with_edge: anchor neighbor missing");
    r.insert(it + 1, nb);
  };
  place(u, v, after_in_u);
  place(v, u, after_in_v);
  return g;
}

bool CycleRef::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool CycleRef::has_edge(Edge e) const { return edge_set().count(e) > 0; }

std::set<Edge> CycleRef::edge_set() const {
  std::set<Edge> es;
  int k = length();
  for (int i = 0; i < k; ++i) es.insert(Edge(vertices[i], vertices[(i + 1) % k]));
  return es;
}

bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  int n = static_cast<int>(a.size());
  if (n == 0) return true;
  for (int dir : {1, -1}) {
    for (int off = 0; off < n; ++off) {
      bool match = true;
      for (int i = 0; i < n && match; ++i) {
        int j = ((off + dir * i) % n + n) % n;
        match = a[i] == b[j];
      }
      if (match) return true;
    }
  }
  return false;
}

std::vector<Vertex> FaceWalk::walk_vertices() const {
  std::vector<Vertex> vs;
  vs.reserve(boundary.size());
  for (const auto& [u, v] : boundary) vs.push_back(u);
  return vs;
}

bool FaceWalk::is_cycle() const {
  auto vs = walk_vertices();
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool FaceWalk::touches(Vertex v) const {
  for (const auto& [a, b] : boundary)
    if (a == v || b == v) return true;
  return false;
}

namespace {

// Successor of u in v's rotation (the next-counterclockwise neighbor).
Vertex rotation_next(const PlaneGraph& g, Vertex v, Vertex u) {
  const auto& r = g.rotation[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end())
    throw PreconditionError("asymmetric rotation at edge (" + std::to_string(u) +
                            "," + std::to_string(v) + ")");
  ++it;
  return it == r.end() ? r.front() : *it;
}

}  // namespace

std::vector<FaceWalk> trace_faces(const PlaneGraph& g) {
  std::map<std::pair<Vertex, Vertex>, char> used;
  for (int v = 0; v < g.slots(); ++v) {
    if (!g.present[v]) continue;
    for (Vertex w : g.rotation[v]) used[{v, w}] = 0;
  }
  // Symmetry must hold before tracing can be meaningful.
  for (const auto& [de, flag] : used) {
    (void)flag;
    if (!used.count({de.second, de.first}))
      throw PreconditionError("asymmetric rotation at edge (" +
                              std::to_string(de.first) + "," +
                              std::to_string(de.second) + ")");
  }

  std::vector<FaceWalk> faces;
  for (auto& [start, visited] : used) {
    if (visited) continue;
    FaceWalk f;
    auto de = start;
    while (true) {
      used[de] = 1;
      f.boundary.push_back(de);
      Vertex next = rotation_next(g, de.second, de.first);
      de = {de.second, next};
      if (de == start) break;
    }
    // Rotate so the least directed edge leads.
    auto least = std::min_element(f.boundary.begin(), f.boundary.end());
    std::rotate(f.boundary.begin(), least, f.boundary.end());
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const FaceWalk& x, const FaceWalk& y) {
    return x.boundary.front() < y.boundary.front();
  });
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) faces[i].id = i;
  return faces;
}

namespace {

std::vector<int> component_labels(const PlaneGraph& g) {
  std::vector<int> comp(g.slots(), -1);
  int c = 0;
  for (int s = 0; s < g.slots(); ++s) {
    if (!g.present[s] || comp[s] >= 0) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.rotation[v])
        if (comp[w] < 0) {
          comp[w] = c;
          q.push(w);
        }
    }
    ++c;
  }
  return comp;
}

}  // namespace

EmbeddingCheck check_embedding(const PlaneGraph& g) {
  EmbeddingCheck r;
  auto fail = [&r](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };

  for (int v = 0; v < g.slots(); ++v) {
    if (!g.present[v]) {
      if (!g.rotation[v].empty()) fail("absent vertex " + std::to_string(v) + " has neighbors");
      continue;
    }
    std::set<Vertex> seen;
    for (Vertex w : g.rotation[v]) {
      if (w == v) fail("self-loop at " + std::to_string(v));
      else if (w < 0 || w >= g.slots() || !g.present[w])
        fail("edge (" + std::to_string(v) + "," + std::to_string(w) + ") leaves the graph");
      else if (!seen.insert(w).second)
        fail("repeated neighbor " + std::to_string(w) + " at " + std::to_string(v));
    }
  }
  if (!r.ok) return r;

  for (int v = 0; v < g.slots(); ++v) {
    if (!g.present[v]) continue;
    for (Vertex w : g.rotation[v])
      if (!g.has_edge(w, v))
        fail("asymmetric edge (" + std::to_string(v) + "," + std::to_string(w) + ")");
  }
  if (!r.ok) return r;

  auto faces = trace_faces(g);
  auto comp = component_labels(g);
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  if (ncomp <= 0 && g.vertex_count() > 0) ncomp = 1;

  std::vector<int> vcount(std::max(ncomp, 1), 0), ecount(std::max(ncomp, 1), 0),
      fcount(std::max(ncomp, 1), 0);
  for (int v = 0; v < g.slots(); ++v) {
    if (!g.present[v]) continue;
    vcount[comp[v]] += 1;
    ecount[comp[v]] += g.degree(v);
  }
  for (const auto& f : faces) fcount[comp[f.boundary.front().first]] += 1;
  for (int c = 0; c < ncomp; ++c) {
    ecount[c] /= 2;
    if (ecount[c] == 0) continue;  // isolated vertex, nothing to trace
    if (vcount[c] - ecount[c] + fcount[c] != 2)
      fail("Euler formula fails on component " + std::to_string(c) + ": V=" +
           std::to_string(vcount[c]) + " E=" + std::to_string(ecount[c]) +
           " F=" + std::to_string(fcount[c]));
  }

  if (faces.empty()) {
    if (g.outer_face_id != -1) fail("edgeless graph cannot designate an outer face");
  } else if (g.outer_face_id < 0 || g.outer_face_id >= static_cast<int>(faces.size())) {
    fail("outer_face_id " + std::to_string(g.outer_face_id) + " names no traced face");
  }
  return r;
}

bool is_two_connected(const PlaneGraph& g) {
  auto vs = g.vertices();
  int n = static_cast<int>(vs.size());
  if (n < 3) return false;

  auto comp = component_labels(g);
  for (Vertex v : vs)
    if (comp[v] != comp[vs.front()]) return false;

  // Articulation points by iterative lowpoint DFS.
  std::vector<int> disc(g.slots(), -1), low(g.slots(), 0), parent(g.slots(), -1);
  int timer = 0;
  Vertex root = vs.front();
  std::vector<std::pair<Vertex, int>> stack;  // (vertex, child index)
  stack.push_back({root, 0});
  disc[root] = low[root] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < g.degree(v)) {
      Vertex w = g.rotation[v][idx++];
      if (disc[w] < 0) {
        parent[w] = v;
        if (v == root) ++root_children;
        disc[w] = low[w] = timer++;
        stack.push_back({w, 0});
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back().first;
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) return false;  // p is a cutvertex
      }
    }
  }
  return root_children <= 1;
}

bool cofacial(const PlaneGraph& g, Vertex u, Vertex v) {
  for (const auto& f : trace_faces(g)) {
    if (f.id == g.outer_face_id) continue;
    if (f.touches(u) && f.touches(v)) return true;
  }
  return false;
}

std::optional<CycleRef> outer_cycle(const PlaneGraph& g) {
  auto faces = trace_faces(g);
  if (g.outer_face_id < 0 || g.outer_face_id >= static_cast<int>(faces.size()))
    return std::nullopt;
  const FaceWalk& f = faces[g.outer_face_id];
  if (!f.is_cycle()) return std::nullopt;
  return CycleRef{f.walk_vertices()};
}

void designate_outer_face(PlaneGraph& g, const CycleRef& c) {
  auto faces = trace_faces(g);
  int fallback = -1;
  for (const auto& f : faces) {
    if (!f.is_cycle() || !cyclic_equal(f.walk_vertices(), c.vertices)) continue;
    for (const auto& de : f.boundary)
      if (de == std::make_pair(c.vertices[0], c.vertices[1 % c.vertices.size()])) {
        g.outer_face_id = f.id;
        return;
      }
    if (fallback < 0) fallback = f.id;
  }
  if (fallback < 0)
    throw PreconditionError("no face is bounded by the requested outer cycle");
  g.outer_face_id = fallback;
}

namespace {

void validate_cycle_in(const PlaneGraph& g, const CycleRef& c) {
  int k = c.length();
  if (k < 3) throw PreconditionError("cycle must have length >= 3");
  std::set<Vertex> seen;
  for (Vertex v : c.vertices) {
    if (!g.has_vertex(v)) throw PreconditionError("cycle vertex " + std::to_string(v) + " not in graph");
    if (!seen.insert(v).second) throw PreconditionError("cycle repeats vertex " + std::to_string(v));
  }
  for (int i = 0; i < k; ++i)
    if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % k]))
      throw PreconditionError("cycle edge (" + std::to_string(c.vertices[i]) + "," +
                              std::to_string(c.vertices[(i + 1) % k]) + ") not in graph");
}

}  // namespace

DiskResult disk_subgraph(const PlaneGraph& g, const CycleRef& c,
                         const std::set<Edge>& aux_edges) {
  validate_cycle_in(g, c);
  auto faces = trace_faces(g);
  if (g.outer_face_id < 0 || g.outer_face_id >= static_cast<int>(faces.size()))
    throw PreconditionError("graph has no designated outer face");

  if (auto oc = outer_cycle(g); oc && cyclic_equal(oc->vertices, c.vertices)) {
    DiskResult r{g, true};
    return r;
  }

  auto cyc_edges = c.edge_set();

  // Face id containing each directed edge.
  std::map<std::pair<Vertex, Vertex>, int> face_of;
  for (const auto& f : faces)
    for (const auto& de : f.boundary) face_of[de] = f.id;

  // Faces reachable from the outer face without crossing c are outside the disk.
  std::vector<char> outside(faces.size(), 0);
  std::queue<int> q;
  q.push(g.outer_face_id);
  outside[g.outer_face_id] = 1;
  while (!q.empty()) {
    int fid = q.front();
    q.pop();
    for (const auto& [u, v] : faces[fid].boundary) {
      if (cyc_edges.count(Edge(u, v))) continue;
      int other = face_of.at({v, u});
      if (!outside[other]) {
        outside[other] = 1;
        q.push(other);
      }
    }
  }

  // Keep c's edges plus edges both of whose sides are inside.
  std::set<Edge> keep = cyc_edges;
  for (Edge e : g.edges()) {
    if (cyc_edges.count(e)) continue;
    if (!outside[face_of.at({e.a, e.b})] && !outside[face_of.at({e.b, e.a})])
      keep.insert(e);
  }
  // Auxiliary edges of an augmented embedding survive only on c itself.
  for (Edge e : aux_edges)
    if (!cyc_edges.count(e)) keep.erase(e);

  PlaneGraph out;
  out.rotation.assign(g.slots(), {});
  out.present.assign(g.slots(), 0);
  for (int v = 0; v < g.slots(); ++v) {
    if (!g.present[v]) continue;
    for (Vertex w : g.rotation[v])
      if (keep.count(Edge(v, w))) out.rotation[v].push_back(w);
    if (!out.rotation[v].empty()) out.present[v] = 1;
  }

  // The new outer face walks c in the direction its edges bounded outside
  // faces of g; locate it by one such directed edge.
  std::pair<Vertex, Vertex> outer_de{-1, -1};
  for (int i = 0; i < c.length(); ++i) {
    Vertex u = c.vertices[i], v = c.vertices[(i + 1) % c.length()];
    if (outside[face_of.at({u, v})]) {
      outer_de = {u, v};
      break;
    }
    if (outside[face_of.at({v, u})]) {
      outer_de = {v, u};
      break;
    }
  }
  if (outer_de.first < 0) throw PreconditionError("cycle does not bound the outer side");

  auto new_faces = trace_faces(out);
  for (const auto& f : new_faces)
    for (const auto& de : f.boundary)
      if (de == outer_de) {
        out.outer_face_id = f.id;
        return DiskResult{out, false};
      }
  throw PreconditionError("internal: disk outer face not found");
}

}  // namespace canvaslab
