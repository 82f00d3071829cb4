#include "canvaslab/critical.hpp"

#include <algorithm>
#include <map>

namespace canvaslab {

SubgraphSpec SubgraphSpec::of_cycle(const CycleRef& c) {
  SubgraphSpec s;
  s.vertices = c.vertices;
  std::sort(s.vertices.begin(), s.vertices.end());
  auto es = c.edge_set();
  s.edges.assign(es.begin(), es.end());
  return s;
}

bool SubgraphSpec::has_vertex(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

void validate_subgraph(const PlaneGraph& g, const SubgraphSpec& T) {
  for (Vertex v : T.vertices)
    if (!g.has_vertex(v))
      throw PreconditionError("T vertex " + std::to_string(v) + " not in G");
  for (Edge e : T.edges) {
    if (!g.has_edge(e.a, e.b))
      throw PreconditionError("T edge (" + std::to_string(e.a) + "," +
                              std::to_string(e.b) + ") not in G");
    if (!T.has_vertex(e.a) || !T.has_vertex(e.b))
      throw PreconditionError("T edge endpoints missing from T's vertex list");
  }
}

// Deletable items defining the maximal proper subgraphs of g containing T.
struct Items {
  std::vector<Edge> edges;       // edges of G not in T
  std::vector<Vertex> isolated;  // isolated vertices of G not in T
};

Items deletable_items(const PlaneGraph& g, const SubgraphSpec& T) {
  Items it;
  it.edges = g.edges_not_in(T.edge_set());
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0 && !T.has_vertex(v)) it.isolated.push_back(v);
  return it;
}

}  // namespace

std::vector<PartialColoring> enumerate_subgraph_colorings(const SubgraphSpec& T,
                                                          const ListAssignment& L,
                                                          int slots) {
  std::vector<Vertex> order = T.vertices;
  std::sort(order.begin(), order.end());
  ListAssignment norm = L.normalized();
  auto tes = T.edge_set();

  std::vector<PartialColoring> out;
  PartialColoring cur = PartialColoring::empty(slots);
  std::vector<size_t> idx(order.size(), 0);
  size_t d = 0;
  while (true) {
    if (d == order.size()) {
      out.push_back(cur);
      if (d == 0) break;
      --d;
      cur.color[order[d]] = -1;
      ++idx[d];
      continue;
    }
    Vertex v = order[d];
    const ColorList& list =
        v < static_cast<int>(norm.lists.size()) ? norm.lists[v] : ColorList{};
    bool placed = false;
    for (size_t i = idx[d]; i < list.size(); ++i) {
      Color c = list[i];
      bool clash = false;
      for (Vertex w : order)
        if (cur.assigned(w) && cur.color[w] == c && tes.count(Edge(v, w))) clash = true;
      if (!clash) {
        idx[d] = i;
        cur.color[v] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++d;
      if (d < order.size()) idx[d] = 0;
    } else {
      idx[d] = 0;
      if (d == 0) break;
      --d;
      cur.color[order[d]] = -1;
      ++idx[d];
    }
  }
  return out;
}

CriticalityCertificate is_T_critical(const PlaneGraph& g, const SubgraphSpec& T,
                                     const ListAssignment& L, ColorCache* cache) {
  validate_subgraph(g, T);
  Items items = deletable_items(g, T);
  if (items.edges.empty() && items.isolated.empty() &&
      static_cast<int>(T.vertices.size()) == g.vertex_count())
    throw PreconditionError("is_T_critical requires G != T");

  auto colorings = enumerate_subgraph_colorings(T, L, g.slots());

  // Only colorings of T that do not extend to G can witness anything.
  std::vector<const PartialColoring*> stuck;
  for (const auto& phi : colorings)
    if (!extend(g, L, phi, cache)) stuck.push_back(&phi);

  CriticalityCertificate cert;
  auto witness_for = [&](const PlaneGraph& sub) -> const PartialColoring* {
    for (const PartialColoring* phi : stuck)
      if (extend(sub, L, *phi, cache)) return phi;
    return nullptr;
  };

  for (Edge e : items.edges) {
    const PartialColoring* phi = witness_for(g.without_edge(e));
    if (!phi) {
      cert.verdict = false;
      cert.failure = CriticalityWitness{false, e, -1, {}};
      return cert;
    }
    cert.witnesses.push_back({false, e, -1, *phi});
  }
  for (Vertex v : items.isolated) {
    const PartialColoring* phi = witness_for(g.without_vertex(v));
    if (!phi) {
      cert.verdict = false;
      cert.failure = CriticalityWitness{true, Edge{-1, -1}, v, {}};
      return cert;
    }
    cert.witnesses.push_back({true, Edge{-1, -1}, v, *phi});
  }
  cert.verdict = true;
  return cert;
}

bool is_phi_critical(const PlaneGraph& g, const SubgraphSpec& T, const ListAssignment& L,
                     const PartialColoring& phi, ColorCache* cache) {
  validate_subgraph(g, T);
  PartialColoring p = phi;
  p.color.resize(g.slots(), -1);
  for (Vertex v : T.vertices)
    if (!p.assigned(v))
      throw PreconditionError("is_phi_critical: phi misses T vertex " + std::to_string(v));
  for (Edge e : T.edges)
    if (p.color[e.a] == p.color[e.b])
      throw PreconditionError("is_phi_critical: phi improper on T");

  if (extend(g, L, p, cache)) return false;
  Items items = deletable_items(g, T);
  for (Edge e : items.edges)
    if (!extend(g.without_edge(e), L, p, cache)) return false;
  for (Vertex v : items.isolated)
    if (!extend(g.without_vertex(v), L, p, cache)) return false;
  return true;
}

CriticalityCertificate is_critical_canvas(const Canvas& t, ColorCache* cache) {
  return is_T_critical(t.graph, SubgraphSpec::of_cycle(t.outer), t.lists, cache);
}

Canvas find_critical_subcanvas(const Canvas& t, const PartialColoring& phi,
                               ColorCache* cache) {
  PartialColoring p = phi;
  p.color.resize(t.graph.slots(), -1);
  if (extend(t.graph, t.lists, p, cache))
    throw PreconditionError("find_critical_subcanvas: phi extends to the whole graph");

  PlaneGraph g = t.graph;
  auto ces = t.outer.edge_set();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Edge e : g.edges_not_in(ces)) {
      PlaneGraph cand = g.without_edge(e);
      if (!extend(cand, t.lists, p, cache)) {
        g = std::move(cand);
        changed = true;
      }
    }
  }
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0 && !t.outer.contains(v)) g = g.without_vertex(v);

  designate_outer_face(g, t.outer);
  auto cert = is_T_critical(g, SubgraphSpec::of_cycle(t.outer), t.lists, cache);
  if (!cert.verdict)
    throw std::logic_error("find_critical_subcanvas: reduction is not critical (defect)");
  if (!is_two_connected(g))
    throw std::logic_error("find_critical_subcanvas: result not 2-connected (defect)");

  ListAssignment L;
  L.lists.assign(t.graph.slots(), {});
  for (Vertex v : g.vertices())
    if (v < static_cast<int>(t.lists.lists.size())) L.lists[v] = t.lists.lists[v];
  return Canvas{std::move(g), t.outer, std::move(L)};
}

bool extender_property(const PlaneGraph& g, const CycleRef& c, const ListAssignment& L,
                       const PlaneGraph& h, ColorCache* cache) {
  Canvas probe{g, c, L.normalized()};
  BoundaryColoringStream stream(probe);
  while (auto phi = stream.next()) {
    if (extend(h, L, *phi, cache) && !extend(g, L, *phi, cache)) return false;
  }
  return true;
}

ExtractionResult extract_minimal_extender(const PlaneGraph& g, const CycleRef& c,
                                          const ListAssignment& L, ColorCache* cache) {
  auto ces = c.edge_set();
  PlaneGraph h = g;

  bool changed = true;
  while (changed) {
    changed = false;
    for (Edge e : h.edges_not_in(ces)) {
      PlaneGraph cand = h.without_edge(e);
      if (extender_property(g, c, L, cand, cache)) {
        h = std::move(cand);
        changed = true;
      }
    }
  }
  for (Vertex v : h.vertices())
    if (h.degree(v) == 0 && !c.contains(v)) h = h.without_vertex(v);

  if (!extender_property(g, c, L, h, cache))
    throw std::logic_error("extract_minimal_extender: property lost (defect)");
  for (Edge e : h.edges_not_in(ces))
    if (extender_property(g, c, L, h.without_edge(e), cache))
      throw std::logic_error("extract_minimal_extender: not minimal (defect)");

  designate_outer_face(h, c);
  ExtractionResult res;
  res.equals_cycle = h.vertex_count() == c.length() && h.edge_count() == c.length();
  if (!res.equals_cycle) {
    res.certificate = is_T_critical(h, SubgraphSpec::of_cycle(c), L, cache);
    if (!res.certificate.verdict)
      throw std::logic_error("extract_minimal_extender: H is neither the cycle nor critical");
  }
  res.h = std::move(h);
  return res;
}

}  // namespace canvaslab
