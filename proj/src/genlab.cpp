#include "canvaslab/genlab.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "canvaslab/colorer.hpp"

namespace canvaslab {

std::string to_string(BoundaryListMode m) {
  switch (m) {
    case BoundaryListMode::Singleton: return "singleton";
    case BoundaryListMode::Pairs: return "pairs";
    case BoundaryListMode::Mixed: return "mixed";
  }
  return "?";
}

BoundaryListMode boundary_mode_from_string(const std::string& s) {
  if (s == "singleton") return BoundaryListMode::Singleton;
  if (s == "pairs") return BoundaryListMode::Pairs;
  if (s == "mixed") return BoundaryListMode::Mixed;
  throw PreconditionError("unknown boundary list mode: " + s);
}

void GenSpec::validate() const {
  if (outer_len < 3) throw PreconditionError("outer cycle length must be at least 3");
  if (max_internal < 0) throw PreconditionError("max_internal must be nonnegative");
  if (max_internal > 0 && universe < 5)
    throw PreconditionError("universe must hold at least 5 colors when internal vertices exist");
  if (universe < 1) throw PreconditionError("universe must be positive");
  if (mode == BoundaryListMode::Mixed)
    for (int s : mixed_sizes)
      if (s < 1 || s > universe)
        throw PreconditionError("mixed boundary sizes must lie in [1, universe]");
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// BFS encoding for one (start, direction) choice. mirrored reverses every
// rotation, matching a reflection of the drawing.
std::string bfs_encoding(const PlaneGraph& g, const std::vector<Vertex>& outer,
                         int start_pos, bool mirrored) {
  int n = g.slots();
  int k = static_cast<int>(outer.size());
  Vertex s = outer[start_pos];
  Vertex t = mirrored ? outer[(start_pos + k - 1) % k] : outer[(start_pos + 1) % k];

  auto rot_at = [&](Vertex v) {
    std::vector<Vertex> r = g.rotation[v];
    if (mirrored) std::reverse(r.begin(), r.end());
    return r;
  };

  std::vector<int> label(n, -1);
  std::vector<Vertex> order;
  std::vector<Vertex> anchor(n, -1);
  label[s] = 0;
  anchor[s] = t;
  order.push_back(s);
  size_t head = 0;
  while (head < order.size()) {
    Vertex v = order[head++];
    auto r = rot_at(v);
    int deg = static_cast<int>(r.size());
    int at = static_cast<int>(std::find(r.begin(), r.end(), anchor[v]) - r.begin());
    for (int i = 0; i < deg; ++i) {
      Vertex w = r[(at + i) % deg];
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        anchor[w] = v;
        order.push_back(w);
      }
    }
  }

  std::ostringstream os;
  for (Vertex v : order) {
    auto r = rot_at(v);
    int deg = static_cast<int>(r.size());
    int at = static_cast<int>(std::find(r.begin(), r.end(), anchor[v]) - r.begin());
    os << deg << ':';
    for (int i = 0; i < deg; ++i) os << label[r[(at + i) % deg]] << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace

CanonicalKey canonical_key(const PlaneGraph& g) {
  auto oc = outer_cycle(g);
  if (!oc) throw PreconditionError("canonical_key: outer face is not a cycle");
  const auto& outer = oc->vertices;
  std::string best;
  for (int pos = 0; pos < static_cast<int>(outer.size()); ++pos) {
    for (bool mirrored : {false, true}) {
      std::string enc = bfs_encoding(g, outer, pos, mirrored);
      if (best.empty() || enc < best) best = std::move(enc);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Graph enumeration

namespace {

PlaneGraph seed_cycle(int k) {
  std::vector<std::vector<Vertex>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + 1) % k, (i + k - 1) % k};
  PlaneGraph g(std::move(rot));
  std::vector<Vertex> cyc(k);
  for (int i = 0; i < k; ++i) cyc[i] = i;
  designate_outer_face(g, CycleRef{cyc});
  return g;
}

void keep_outer(PlaneGraph& g, int k) {
  std::vector<Vertex> cyc(k);
  for (int i = 0; i < k; ++i) cyc[i] = i;
  designate_outer_face(g, CycleRef{cyc});
}

std::vector<PlaneGraph> expansions(const PlaneGraph& g, const GenSpec& spec) {
  std::vector<PlaneGraph> out;
  int internal = g.vertex_count() - spec.outer_len;
  auto faces = trace_faces(g);
  for (const auto& f : faces) {
    if (f.id == g.outer_face_id) continue;
    auto w = f.walk_vertices();
    int m = static_cast<int>(w.size());

    // (a) chord inside the face.
    for (int i = 0; i < m; ++i) {
      for (int j = i + 2; j < m; ++j) {
        if (i == 0 && j == m - 1) continue;  // consecutive around the walk
        Vertex a = w[i], b = w[j];
        if (g.has_edge(a, b)) continue;
        PlaneGraph h = g.with_edge(a, b, w[(i + m - 1) % m], w[(j + m - 1) % m]);
        if (h.edge_count() > spec.max_edges) continue;
        keep_outer(h, spec.outer_len);
        out.push_back(std::move(h));
      }
    }

    // (b) new vertex joined to >= 2 boundary vertices of the face.
    if (internal < spec.max_internal && m < 31) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits < 2) continue;
        PlaneGraph h = g;
        Vertex x = h.slots();
        h.rotation.emplace_back();
        h.present.push_back(1);
        if (h.edge_count() + bits > spec.max_edges) continue;
        // Attach in reverse walk order so the new vertex's rotation agrees
        // with the face interior.
        for (int i = m - 1; i >= 0; --i) {
          if (!(mask & (1u << i))) continue;
          h.rotation[x].push_back(w[i]);
          auto& rw = h.rotation[w[i]];
          Vertex prev = w[(i + m - 1) % m];
          auto it = std::find(rw.begin(), rw.end(), prev);
          rw.insert(it + 1, x);
        }
        keep_outer(h, spec.outer_len);
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PlaneGraph> enumerate_plane_graphs(const GenSpec& spec) {
  spec.validate();
  std::map<CanonicalKey, PlaneGraph> seen;
  PlaneGraph start = seed_cycle(spec.outer_len);
  seen.emplace(canonical_key(start), start);
  std::queue<PlaneGraph> work;
  work.push(std::move(start));
  while (!work.empty()) {
    PlaneGraph g = std::move(work.front());
    work.pop();
    for (PlaneGraph& h : expansions(g, spec)) {
      CanonicalKey key = canonical_key(h);
      if (seen.count(key)) continue;
      seen.emplace(key, h);
      work.push(std::move(h));
    }
  }
  std::vector<PlaneGraph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// List assignments

namespace {

// All size-`size` subsets of 0..universe-1 in lexicographic order.
std::vector<ColorList> subsets_of_size(int universe, int size) {
  std::vector<ColorList> out;
  ColorList cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int c = from; c < universe; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ListAssignment first_occurrence_canonical(const ListAssignment& L, int slots) {
  std::map<Color, Color> relabel;
  Color next = 0;
  ListAssignment out = L;
  for (int v = 0; v < slots && v < static_cast<int>(L.lists.size()); ++v)
    for (Color c : L.lists[v])
      if (!relabel.count(c)) relabel[c] = next++;
  for (auto& list : out.lists) {
    for (Color& c : list) c = relabel.at(c);
    std::sort(list.begin(), list.end());
  }
  return out;
}

}  // namespace

std::vector<ListAssignment> assign_lists(const PlaneGraph& g, const GenSpec& spec) {
  spec.validate();
  auto oc = outer_cycle(g);
  if (!oc) throw PreconditionError("assign_lists: outer face is not a cycle");

  std::vector<Vertex> verts = g.vertices();
  std::vector<std::vector<ColorList>> options(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    Vertex v = verts[i];
    if (oc->contains(v)) {
      switch (spec.mode) {
        case BoundaryListMode::Singleton:
          options[i] = subsets_of_size(spec.universe, 1);
          break;
        case BoundaryListMode::Pairs:
          options[i] = subsets_of_size(spec.universe, 2);
          break;
        case BoundaryListMode::Mixed:
          for (int s : spec.mixed_sizes)
            for (auto& sub : subsets_of_size(spec.universe, s))
              options[i].push_back(sub);
          break;
      }
    } else {
      options[i] = subsets_of_size(spec.universe, 5);
    }
    if (options[i].empty())
      throw PreconditionError("assign_lists: universe too small for the requested lists");
  }

  std::vector<ListAssignment> out;
  std::vector<size_t> idx(verts.size(), 0);
  if (verts.empty()) return out;
  while (true) {
    ListAssignment L;
    L.lists.assign(g.slots(), {});
    for (size_t i = 0; i < verts.size(); ++i) L.lists[verts[i]] = options[i][idx[i]];

    bool emit = true;
    if (spec.symmetry_reduction &&
        !(first_occurrence_canonical(L, g.slots()).lists == L.lists))
      emit = false;
    if (emit) {
      Canvas probe{g, *oc, L};
      BoundaryColoringStream stream(probe);
      if (!stream.next()) emit = false;
    }
    if (emit) out.push_back(std::move(L));

    size_t d = verts.size();
    bool done = true;
    while (d > 0) {
      --d;
      if (++idx[d] < options[d].size()) {
        done = false;
        break;
      }
      idx[d] = 0;
    }
    if (done) return out;
  }
}

InstanceStream::InstanceStream(GenSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  graphs_ = enumerate_plane_graphs(spec_);
  load_lists();
}

void InstanceStream::load_lists() {
  current_lists_.clear();
  list_idx_ = 0;
  if (graph_idx_ < graphs_.size()) current_lists_ = assign_lists(graphs_[graph_idx_], spec_);
}

std::optional<Canvas> InstanceStream::next() {
  while (graph_idx_ < graphs_.size() && list_idx_ >= current_lists_.size()) {
    ++graph_idx_;
    load_lists();
  }
  if (graph_idx_ >= graphs_.size()) return std::nullopt;
  const PlaneGraph& g = graphs_[graph_idx_];
  auto oc = outer_cycle(g);
  Canvas t{g, *oc, current_lists_[list_idx_]};
  ++list_idx_;
  ++ordinal_;
  return t;
}

void InstanceStream::seek(std::uint64_t ordinal) {
  graph_idx_ = 0;
  ordinal_ = 0;
  load_lists();
  while (ordinal_ < ordinal) {
    if (!next()) break;
  }
}

std::uint64_t Rng::next() {
  // splitmix64 step; stable across platforms.
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Rng::below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % n;
}

ColorList Rng::subset(int universe, int size) {
  if (size > universe) throw PreconditionError("Rng::subset: size exceeds universe");
  std::set<Color> s;
  while (static_cast<int>(s.size()) < size) s.insert(static_cast<Color>(below(universe)));
  return ColorList(s.begin(), s.end());
}

}  // namespace canvaslab
