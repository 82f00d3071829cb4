#include "canvaslab/colorer.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <queue>
#include <sstream>

namespace canvaslab {

std::vector<Vertex> PartialColoring::domain() const {
  std::vector<Vertex> d;
  for (int v = 0; v < static_cast<int>(color.size()); ++v)
    if (color[v] >= 0) d.push_back(v);
  return d;
}

bool proper_on_domain(const PlaneGraph& g, const PartialColoring& phi) {
  for (Vertex v : g.vertices()) {
    if (!phi.assigned(v)) continue;
    for (Vertex w : g.neighbors(v))
      if (phi.assigned(w) && phi.color[v] == phi.color[w]) return false;
  }
  return true;
}

bool respects_lists(const ListAssignment& L, const PartialColoring& phi) {
  for (int v = 0; v < static_cast<int>(phi.color.size()); ++v) {
    if (phi.color[v] < 0) continue;
    if (v >= static_cast<int>(L.lists.size())) return false;
    const auto& l = L.lists[v];
    if (std::find(l.begin(), l.end(), phi.color[v]) == l.end()) return false;
  }
  return true;
}

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

bool ColorCache::known_no_extension(const std::string& key) const {
  if (no_ext_.count(key)) return true;
  if (disk_dir_.empty()) return false;
  std::ifstream in(disk_dir_ + "/" + fnv1a_hex(key) + ".noext", std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str() == key;  // content-addressed: a hash collision is a miss
}

void ColorCache::record_no_extension(const std::string& key) {
  no_ext_.insert(key);
  if (disk_dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(disk_dir_, ec);
  std::string path = disk_dir_ + "/" + fnv1a_hex(key) + ".noext";
  if (std::filesystem::exists(path, ec)) return;
  std::ofstream out(path, std::ios::binary);
  out << key;
}

std::string ColorCache::key_of(const PlaneGraph& g, const ListAssignment& L,
                               const PartialColoring& phi) {
  std::ostringstream os;
  for (Vertex v : g.vertices()) {
    os << v << ':';
    for (Vertex w : g.neighbors(v)) os << w << ',';
    os << '|';
    if (v < static_cast<int>(L.lists.size()))
      for (Color c : L.lists[v]) os << c << ',';
    os << '|' << (phi.assigned(v) ? phi.color[v] : -1) << ';';
  }
  return os.str();
}

namespace {

struct SearchState {
  const PlaneGraph& g;
  std::vector<std::vector<Color>> residual;  // remaining colors per vertex
  std::vector<char> fixed;
  PartialColoring coloring;

  bool assign_and_search();
};

bool SearchState::assign_and_search() {
  // Pick the unassigned vertex with the fewest remaining colors, ties by id.
  Vertex best = -1;
  size_t best_size = SIZE_MAX;
  for (Vertex v : g.vertices()) {
    if (fixed[v]) continue;
    if (residual[v].size() < best_size) {
      best = v;
      best_size = residual[v].size();
    }
  }
  if (best < 0) return true;  // everything colored
  if (best_size == 0) return false;

  fixed[best] = 1;
  for (Color c : residual[best]) {
    coloring.color[best] = c;
    std::vector<Vertex> pruned;
    bool dead = false;
    for (Vertex w : g.neighbors(best)) {
      if (fixed[w]) continue;
      auto& r = residual[w];
      auto it = std::find(r.begin(), r.end(), c);
      if (it != r.end()) {
        r.erase(it);
        pruned.push_back(w);
        if (r.empty()) dead = true;
      }
    }
    if (!dead && assign_and_search()) return true;
    for (Vertex w : pruned) {
      auto& r = residual[w];
      r.insert(std::lower_bound(r.begin(), r.end(), c), c);
    }
  }
  coloring.color[best] = -1;
  fixed[best] = 0;
  return false;
}

}  // namespace

std::optional<PartialColoring> extend(const PlaneGraph& g, const ListAssignment& L,
                                      const PartialColoring& phi, ColorCache* cache) {
  PartialColoring start = phi;
  start.color.resize(g.slots(), -1);
  ListAssignment norm = L.normalized();
  if (!respects_lists(norm, start))
    throw PreconditionError("extend: phi leaves the lists");
  // A domain coloring that clashes on an edge of g has no proper superset;
  // that is a definite NO_EXTENSION, not a usage error. It is how a
  // monochromatic chord witnesses criticality.
  if (!proper_on_domain(g, start)) return std::nullopt;

  std::string key;
  if (cache) {
    key = ColorCache::key_of(g, norm, start);
    if (cache->known_no_extension(key)) return std::nullopt;
  }

  SearchState st{g, {}, {}, start};
  st.residual.assign(g.slots(), {});
  st.fixed.assign(g.slots(), 0);
  bool feasible = true;
  for (Vertex v : g.vertices()) {
    if (start.assigned(v)) {
      st.fixed[v] = 1;
      continue;
    }
    if (v >= static_cast<int>(norm.lists.size())) {
      feasible = false;
      break;
    }
    std::vector<Color> r = norm.lists[v];
    for (Vertex w : g.neighbors(v))
      if (start.assigned(w)) {
        auto it = std::find(r.begin(), r.end(), start.color[w]);
        if (it != r.end()) r.erase(it);
      }
    if (r.empty()) feasible = false;
    st.residual[v] = std::move(r);
  }

  if (feasible && st.assign_and_search()) return st.coloring;
  if (cache) cache->record_no_extension(key);
  return std::nullopt;
}

BoundaryColoringStream::BoundaryColoringStream(const Canvas& t)
    : g_(t.graph), L_(t.lists.normalized()), current_(PartialColoring::empty(t.graph.slots())) {
  order_ = t.outer.vertices;
  std::sort(order_.begin(), order_.end());
  choice_.assign(order_.size(), -1);
  // Cycle adjacency among boundary vertices.
  cycle_nbrs_.assign(g_.slots(), {});
  int k = t.outer.length();
  for (int i = 0; i < k; ++i) {
    Vertex a = t.outer.vertices[i], b = t.outer.vertices[(i + 1) % k];
    cycle_nbrs_[a].push_back(b);
    cycle_nbrs_[b].push_back(a);
  }
  for (Vertex v : order_)
    if (v >= static_cast<int>(L_.lists.size()) || L_.lists[v].empty()) exhausted_ = true;
}

bool BoundaryColoringStream::advance(int depth) {
  int k = static_cast<int>(order_.size());
  int d = depth;
  while (d >= 0 && d < k) {
    Vertex v = order_[d];
    const auto& list = L_.lists[v];
    bool found = false;
    for (int i = choice_[d] + 1; i < static_cast<int>(list.size()); ++i) {
      Color c = list[i];
      bool ok = true;
      for (Vertex w : cycle_nbrs_[v])
        if (current_.assigned(w) && current_.color[w] == c) ok = false;
      if (ok) {
        choice_[d] = i;
        current_.color[v] = c;
        found = true;
        break;
      }
    }
    if (found) {
      ++d;
    } else {
      current_.color[v] = -1;
      choice_[d] = -1;
      --d;
    }
  }
  return d >= k;
}

std::optional<PartialColoring> BoundaryColoringStream::next() {
  if (exhausted_) return std::nullopt;
  int k = static_cast<int>(order_.size());
  int start = first_ ? 0 : k - 1;
  first_ = false;
  if (k == 0) {  // degenerate, no boundary vertices
    exhausted_ = true;
    return std::nullopt;
  }
  if (!advance(start)) {
    exhausted_ = true;
    return std::nullopt;
  }
  return current_;
}

std::vector<PartialColoring> all_boundary_colorings(const Canvas& t) {
  std::vector<PartialColoring> out;
  BoundaryColoringStream s(t);
  while (auto phi = s.next()) out.push_back(*phi);
  return out;
}

ResidualLists residual_lists(const Canvas& t, const PartialColoring& phi) {
  PartialColoring p = phi;
  p.color.resize(t.graph.slots(), -1);
  for (Vertex v : t.outer.vertices)
    if (!p.assigned(v))
      throw PreconditionError("residual_lists: phi misses boundary vertex " + std::to_string(v));
  for (Vertex v : p.domain())
    if (!t.outer.contains(v))
      throw PreconditionError("residual_lists: phi assigns non-boundary vertex " + std::to_string(v));
  // Properness is with respect to the cycle's edges.
  int k = t.outer.length();
  for (int i = 0; i < k; ++i)
    if (p.color[t.outer.vertices[i]] == p.color[t.outer.vertices[(i + 1) % k]])
      throw PreconditionError("residual_lists: phi is improper on the outer cycle");

  ResidualLists out;
  for (Vertex v : t.internal_vertices()) {
    ResidualEntry e;
    e.colors = v < static_cast<int>(t.lists.lists.size()) ? t.lists.lists[v] : ColorList{};
    int on_c = 0;
    for (Vertex w : t.graph.neighbors(v)) {
      if (!t.outer.contains(w)) continue;
      ++on_c;
      auto it = std::find(e.colors.begin(), e.colors.end(), p.color[w]);
      if (it != e.colors.end()) e.colors.erase(it);
    }
    e.expected_size = 5 - on_c;
    e.tight = static_cast<int>(e.colors.size()) == e.expected_size;
    out.entries[v] = std::move(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructive colorer. The recursion follows the classical induction:
// split at a chord of the outer cycle, otherwise delete the outer vertex
// next to the precolored pair and shrink two colors from its inner
// neighbors' lists. Blocks and components are handled beforehand so the
// core only ever sees 2-connected near-triangulations.

namespace {

struct Solver {
  PartialColoring result;

  void solve(PlaneGraph g, ListAssignment L, std::set<Vertex> S);

 private:
  void base_small(const PlaneGraph& g, const ListAssignment& L, const std::set<Vertex>& S);
  void core(PlaneGraph g, ListAssignment L, std::set<Vertex> S);
  void split_at_cutvertex(const PlaneGraph& g, const ListAssignment& L,
                          const std::set<Vertex>& S, Vertex cut);
};

int list_size(const ListAssignment& L, Vertex v) {
  return v < static_cast<int>(L.lists.size()) ? static_cast<int>(L.lists[v].size()) : 0;
}

Color least_color_not_in(const ColorList& from, const std::vector<Color>& avoid) {
  for (Color c : from)
    if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
  throw std::logic_error("thomassen_color: color selection failed (defect)");
}

std::vector<std::vector<Vertex>> components_of(const PlaneGraph& g) {
  std::vector<char> seen(g.slots(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

PlaneGraph restrict_to(const PlaneGraph& g, const std::vector<Vertex>& keep) {
  std::vector<char> in(g.slots(), 0);
  for (Vertex v : keep) in[v] = 1;
  PlaneGraph out;
  out.rotation.assign(g.slots(), {});
  out.present.assign(g.slots(), 0);
  for (Vertex v : keep) {
    out.present[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (in[w]) out.rotation[v].push_back(w);
  }
  return out;
}

std::optional<Vertex> find_cutvertex(const PlaneGraph& g) {
  auto vs = g.vertices();
  if (vs.size() < 3) return std::nullopt;
  std::vector<int> disc(g.slots(), -1), low(g.slots(), 0), parent(g.slots(), -1);
  int timer = 0;
  Vertex root = vs.front();
  std::vector<std::pair<Vertex, int>> stack{{root, 0}};
  disc[root] = low[root] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    Vertex v = stack.back().first;
    int& idx = stack.back().second;
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
        if (p != root && low[v] >= disc[p]) return p;
      }
    }
  }
  if (root_children > 1) return root;
  return std::nullopt;
}

// Face of g covering every vertex whose list is smaller than five plus S;
// designating it as the outer face makes the theorem's hypotheses hold.
int face_covering_small_lists(const PlaneGraph& g, const ListAssignment& L,
                              const std::set<Vertex>& S, const std::vector<FaceWalk>& faces) {
  std::vector<Vertex> must;
  for (Vertex v : g.vertices())
    if (list_size(L, v) < 5 || S.count(v)) must.push_back(v);
  for (const auto& f : faces) {
    bool all = true;
    for (Vertex v : must)
      if (!f.touches(v)) {
        all = false;
        break;
      }
    if (all) return f.id;
  }
  throw std::logic_error("thomassen_color: no face covers all constrained vertices (defect)");
}

// Adds chords until every internal face of the 2-connected graph g is a
// triangle. The outer face is tracked by one of its directed edges, which
// chord insertion never disturbs. Returns g with outer_face_id updated.
PlaneGraph triangulate_internal(PlaneGraph g, std::pair<Vertex, Vertex> outer_de) {
  while (true) {
    auto faces = trace_faces(g);
    int outer_id = -1;
    for (const auto& f : faces)
      for (const auto& de : f.boundary)
        if (de == outer_de) outer_id = f.id;
    if (outer_id < 0) throw std::logic_error("thomassen_color: lost the outer face (defect)");
    int target = -1;
    for (const auto& f : faces)
      if (f.id != outer_id && f.length() > 3) {
        target = f.id;
        break;
      }
    if (target < 0) {
      g.outer_face_id = outer_id;
      return g;
    }
    auto w = faces[target].walk_vertices();
    int m = static_cast<int>(w.size());
    bool added = false;
    for (int i = 0; i < m && !added; ++i) {
      for (int d = 2; d <= m - 2 && !added; ++d) {
        int j = (i + d) % m;
        Vertex a = w[i], b = w[j];
        if (a == b || g.has_edge(a, b)) continue;
        Vertex before_a = w[(i + m - 1) % m], before_b = w[(j + m - 1) % m];
        g = g.with_edge(a, b, before_a, before_b);
        added = true;
      }
    }
    if (!added) throw std::logic_error("thomassen_color: cannot triangulate face (defect)");
  }
}

void Solver::base_small(const PlaneGraph& g, const ListAssignment& L,
                        const std::set<Vertex>& S) {
  // One or two vertices: greedy works under the hypotheses.
  for (Vertex v : g.vertices())
    if (S.count(v)) result.color[v] = L.lists[v].front();
  for (Vertex v : g.vertices()) {
    if (result.color[v] >= 0) continue;
    std::vector<Color> avoid;
    for (Vertex w : g.neighbors(v))
      if (result.color[w] >= 0) avoid.push_back(result.color[w]);
    result.color[v] = least_color_not_in(L.lists[v], avoid);
  }
}

void Solver::split_at_cutvertex(const PlaneGraph& g, const ListAssignment& L,
                                const std::set<Vertex>& S, Vertex cut) {
  PlaneGraph rest = g.without_vertex(cut);
  auto comps = components_of(rest);
  // The part containing S (minus the cutvertex) is colored first.
  std::vector<int> order(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
  int first = 0;
  for (size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i])
      if (S.count(v)) first = static_cast<int>(i);
  std::swap(order[0], order[first]);

  for (size_t oi = 0; oi < order.size(); ++oi) {
    auto part_vs = comps[order[oi]];
    part_vs.push_back(cut);
    PlaneGraph part = restrict_to(g, part_vs);
    ListAssignment Lp = L;
    std::set<Vertex> Sp;
    if (oi == 0) {
      Sp = S;  // S lives entirely in the first part (plus possibly cut)
    } else {
      Lp.lists[cut] = {result.color[cut]};
      Sp = {cut};
    }
    solve(std::move(part), std::move(Lp), std::move(Sp));
  }
}

void Solver::solve(PlaneGraph g, ListAssignment L, std::set<Vertex> S) {
  auto comps = components_of(g);
  if (comps.empty()) return;
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      PlaneGraph part = restrict_to(g, comp);
      std::set<Vertex> Sp;
      for (Vertex v : comp)
        if (S.count(v)) Sp.insert(v);
      solve(std::move(part), L, std::move(Sp));
    }
    return;
  }
  if (g.vertex_count() <= 2) {
    base_small(g, L, S);
    return;
  }
  if (auto cut = find_cutvertex(g)) {
    split_at_cutvertex(g, L, S, *cut);
    return;
  }
  core(std::move(g), std::move(L), std::move(S));
}

void Solver::core(PlaneGraph g, ListAssignment L, std::set<Vertex> S) {
  auto faces = trace_faces(g);
  g.outer_face_id = face_covering_small_lists(g, L, S, faces);
  auto outer_de = faces[g.outer_face_id].boundary.front();
  auto oc = outer_cycle(g);
  if (!oc) throw std::logic_error("thomassen_color: 2-connected outer walk not a cycle (defect)");
  std::vector<Vertex> C = oc->vertices;

  g = triangulate_internal(std::move(g), outer_de);

  // Top the precolored set up to an adjacent pair on the outer cycle.
  if (S.empty()) {
    Vertex v = *std::min_element(C.begin(), C.end());
    L.lists[v] = {L.lists[v].front()};
    S.insert(v);
  }
  if (S.size() == 1) {
    Vertex v = *S.begin();
    int k = static_cast<int>(C.size());
    int pos = static_cast<int>(std::find(C.begin(), C.end(), v) - C.begin());
    Vertex left = C[(pos + k - 1) % k], right = C[(pos + 1) % k];
    Vertex u = std::min(left, right);
    Color c = least_color_not_in(L.lists[u], L.lists[v]);
    L.lists[u] = {c};
    S.insert(u);
  }

  // Recursion on the near-triangulation.
  struct Rec {
    PartialColoring& out;
    void run(PlaneGraph g, std::vector<Vertex> C, ListAssignment L, Vertex s1, Vertex s2) {
      int k = static_cast<int>(C.size());
      if (g.vertex_count() == 3) {
        out.color[s1] = L.lists[s1].front();
        out.color[s2] = L.lists[s2].front();
        for (Vertex v : g.vertices()) {
          if (v == s1 || v == s2) continue;
          std::vector<Color> avoid;
          for (Vertex w : g.neighbors(v))
            if (w == s1 || w == s2) avoid.push_back(L.lists[w].front());
          out.color[v] = least_color_not_in(L.lists[v], avoid);
        }
        return;
      }
      designate_outer_face(g, CycleRef{C});

      // Chord of C?
      std::set<Vertex> on_c(C.begin(), C.end());
      auto cyc_edges = CycleRef{C}.edge_set();
      std::optional<Edge> chord;
      for (Edge e : g.edges())
        if (on_c.count(e.a) && on_c.count(e.b) && !cyc_edges.count(e)) {
          chord = e;
          break;
        }
      if (chord) {
        // Split the disk along the chord; color the side holding s1s2 first.
        int pa = static_cast<int>(std::find(C.begin(), C.end(), chord->a) - C.begin());
        int pb = static_cast<int>(std::find(C.begin(), C.end(), chord->b) - C.begin());
        if (pa > pb) std::swap(pa, pb);
        std::vector<Vertex> arc1(C.begin() + pa, C.begin() + pb + 1);  // a..b
        std::vector<Vertex> arc2;                                       // b..a
        for (int i = pb; i != pa; i = (i + 1) % k) arc2.push_back(C[i]);
        arc2.push_back(C[pa]);
        auto side = [&](const std::vector<Vertex>& arc) {
          auto disk = disk_subgraph(g, CycleRef{arc});
          return disk.graph;
        };
        auto contains_both = [&](const std::vector<Vertex>& arc) {
          int c = 0;
          for (Vertex v : arc) c += (v == s1) + (v == s2);
          return c == 2;
        };
        std::vector<Vertex> first_arc = contains_both(arc1) ? arc1 : arc2;
        std::vector<Vertex> second_arc = contains_both(arc1) ? arc2 : arc1;
        run(side(first_arc), first_arc, L, s1, s2);
        ListAssignment L2 = L;
        L2.lists[chord->a] = {out.color[chord->a]};
        L2.lists[chord->b] = {out.color[chord->b]};
        run(side(second_arc), second_arc, L2, chord->a, chord->b);
        return;
      }

      // No chord: delete the outer neighbor of s1 other than s2.
      int pos1 = static_cast<int>(std::find(C.begin(), C.end(), s1) - C.begin());
      Vertex vp, vprev;
      std::vector<Vertex> newC;
      if (C[(pos1 + 1) % k] == s2) {
        vp = C[(pos1 + k - 1) % k];
        vprev = C[(pos1 + k - 2) % k];
      } else {
        vp = C[(pos1 + 1) % k];
        vprev = C[(pos1 + 2) % k];
      }
      // Inner neighbors of vp in path order from s1 to vprev.
      const auto& rot = g.rotation[vp];
      int n = static_cast<int>(rot.size());
      int at1 = static_cast<int>(std::find(rot.begin(), rot.end(), s1) - rot.begin());
      std::vector<Vertex> inner;
      bool forward_ok = true;
      for (int i = 1; i < n; ++i) {
        Vertex w = rot[(at1 + i) % n];
        if (w == vprev) {
          forward_ok = (static_cast<int>(inner.size()) == n - 2);
          break;
        }
        inner.push_back(w);
      }
      if (!forward_ok || static_cast<int>(inner.size()) == n - 1) {
        inner.clear();
        for (int i = 1; i < n; ++i) {
          Vertex w = rot[(at1 + n - i) % n];
          if (w == vprev) break;
          inner.push_back(w);
        }
      }

      Color c1 = -1, c2 = -1;
      for (Color c : L.lists[vp]) {
        if (c == L.lists[s1].front()) continue;
        if (c1 < 0) c1 = c;
        else if (c2 < 0) {
          c2 = c;
          break;
        }
      }
      if (c2 < 0) throw std::logic_error("thomassen_color: list too small at deletion (defect)");

      ListAssignment L2 = L;
      for (Vertex u : inner) {
        auto& l = L2.lists[u];
        l.erase(std::remove_if(l.begin(), l.end(), [&](Color c) { return c == c1 || c == c2; }),
                l.end());
      }
      // New outer cycle: replace vp by the inner path (ordered s1 -> vprev).
      for (int i = 0; i < k; ++i) {
        Vertex v = C[(pos1 + i) % k];
        if (v == vp) {
          if (C[(pos1 + 1) % k] == s2) {
            // Walking ... vprev, vp, s1: splice the path reversed.
            for (auto it = inner.rbegin(); it != inner.rend(); ++it) newC.push_back(*it);
          } else {
            for (Vertex u : inner) newC.push_back(u);
          }
          continue;
        }
        newC.push_back(v);
      }

      run(g.without_vertex(vp), newC, L2, s1, s2);

      std::vector<Color> avoid;
      for (Vertex w : g.neighbors(vp))
        if (out.color[w] >= 0 && w != vp) avoid.push_back(out.color[w]);
      ColorList pair{c1, c2};
      out.color[vp] = least_color_not_in(pair, avoid);
    }
  };

  Vertex s1 = *S.begin(), s2 = *std::next(S.begin());
  Rec rec{result};
  rec.run(std::move(g), C, std::move(L), s1, s2);
}

}  // namespace

PartialColoring thomassen_color(const PlaneGraph& g, const std::set<Vertex>& outer_vs,
                                const std::set<Vertex>& precolored,
                                const ListAssignment& L) {
  auto emb = check_embedding(g);
  if (!emb.ok) throw PreconditionError("thomassen_color: " + emb.violations.front());

  auto faces = trace_faces(g);
  std::set<Vertex> actual_outer;
  if (g.outer_face_id >= 0 && g.outer_face_id < static_cast<int>(faces.size()))
    for (const auto& de : faces[g.outer_face_id].boundary) actual_outer.insert(de.first);
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) actual_outer.insert(v);  // isolated vertices sit in the outer face
  if (outer_vs != actual_outer)
    throw PreconditionError("thomassen_color: Z does not match the outer face's vertices");

  if (precolored.size() > 2)
    throw PreconditionError("thomassen_color: |S| > 2");
  for (Vertex v : precolored)
    if (!outer_vs.count(v))
      throw PreconditionError("thomassen_color: S not on the outer face");

  ListAssignment norm = L.normalized();
  norm.lists.resize(g.slots());
  for (Vertex v : g.vertices()) {
    int sz = list_size(norm, v);
    if (precolored.count(v)) {
      if (sz != 1)
        throw PreconditionError("thomassen_color: precolored vertex " + std::to_string(v) +
                                " must have a singleton list");
    } else if (outer_vs.count(v)) {
      if (sz < 3)
        throw PreconditionError("thomassen_color: outer vertex " + std::to_string(v) +
                                " needs a list of size >= 3");
    } else if (sz < 5) {
      throw PreconditionError("thomassen_color: internal vertex " + std::to_string(v) +
                              " needs a list of size >= 5");
    }
  }
  if (precolored.size() == 2) {
    Vertex a = *precolored.begin(), b = *std::next(precolored.begin());
    if (!g.has_edge(a, b))
      throw PreconditionError("thomassen_color: the two precolored vertices must be adjacent");
    if (norm.lists[a] == norm.lists[b])
      throw PreconditionError("thomassen_color: precolored pair needs disjoint lists");
  }

  Solver s;
  s.result = PartialColoring::empty(g.slots());
  s.solve(g, norm, precolored);

  if (!proper_on_domain(g, s.result) || !respects_lists(norm, s.result))
    throw std::logic_error("thomassen_color: produced an invalid coloring (defect)");
  for (Vertex v : g.vertices())
    if (!s.result.assigned(v))
      throw std::logic_error("thomassen_color: vertex left uncolored (defect)");
  return s.result;
}

}  // namespace canvaslab
