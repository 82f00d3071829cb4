// L-coloring decision and search: extension oracle, boundary-coloring
// enumeration, the constructive outer-face colorer, residual lists.
#ifndef CANVASLAB_COLORER_HPP
#define CANVASLAB_COLORER_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canvaslab/canvas.hpp"

namespace canvaslab {

// Coloring of a subset of the vertices; color[v] < 0 means unassigned.
struct PartialColoring {
  std::vector<Color> color;

  static PartialColoring empty(int slots) { return PartialColoring{std::vector<Color>(slots, -1)}; }
  bool assigned(Vertex v) const { return v < static_cast<int>(color.size()) && color[v] >= 0; }
  std::vector<Vertex> domain() const;
  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;
  friend auto operator<=>(const PartialColoring&, const PartialColoring&) = default;
};

// Proper on its domain and inside the lists wherever assigned.
bool proper_on_domain(const PlaneGraph& g, const PartialColoring& phi);
bool respects_lists(const ListAssignment& L, const PartialColoring& phi);

// Memo for negative extension answers, keyed by the serialized form of
// (graph, lists, phi). Workers may each own one; values are deterministic,
// so replaying a lost entry is only wasted work. With a disk directory set
// the entries persist content-addressed across runs (safe to delete).
class ColorCache {
 public:
  bool known_no_extension(const std::string& key) const;
  void record_no_extension(const std::string& key);
  void set_disk_dir(std::string dir) { disk_dir_ = std::move(dir); }
  static std::string key_of(const PlaneGraph& g, const ListAssignment& L,
                            const PartialColoring& phi);
  size_t size() const { return no_ext_.size(); }

 private:
  std::set<std::string> no_ext_;
  std::string disk_dir_;
};

// Complete backtracking search for a proper list coloring of g agreeing
// with phi. Vertex choice: fewest remaining colors, ties by smallest id;
// colors ascending. Returns the full coloring or nullopt (NO_EXTENSION).
// Throws PreconditionError if phi is improper or escapes the lists.
std::optional<PartialColoring> extend(const PlaneGraph& g, const ListAssignment& L,
                                      const PartialColoring& phi,
                                      ColorCache* cache = nullptr);

// Streams the proper list-respecting colorings of the outer cycle, each
// exactly once, lexicographic by (vertex id, color).
class BoundaryColoringStream {
 public:
  explicit BoundaryColoringStream(const Canvas& t);
  std::optional<PartialColoring> next();

 private:
  const PlaneGraph& g_;
  ListAssignment L_;
  std::vector<Vertex> order_;       // boundary vertices ascending
  std::vector<int> choice_;         // index into each vertex's list, -1 = fresh
  std::vector<std::vector<Vertex>> cycle_nbrs_;
  bool exhausted_ = false;
  bool first_ = true;
  PartialColoring current_;
  bool advance(int depth);
};

std::vector<PartialColoring> all_boundary_colorings(const Canvas& t);

// Constructive five-list colorer for the outer-face precoloring theorem:
// S precolored (|S| <= 2, adjacent when a pair, disjoint singleton lists),
// lists of size >= 3 on the outer face, >= 5 elsewhere. Succeeds by the
// inductive chord-split / boundary-vertex-deletion strategy, never by
// exhaustive search; the result is verified proper before returning.
PartialColoring thomassen_color(const PlaneGraph& g, const std::set<Vertex>& outer_vs,
                                const std::set<Vertex>& precolored,
                                const ListAssignment& L);

struct ResidualEntry {
  ColorList colors;           // S(v) = L(v) minus boundary-neighbor colors
  int expected_size = 0;      // 5 - |N(v) on C|
  bool tight = false;         // |S(v)| == expected_size
};

struct ResidualLists {
  std::map<Vertex, ResidualEntry> entries;
};

// S(v) for every internal vertex under a proper boundary coloring.
ResidualLists residual_lists(const Canvas& t, const PartialColoring& phi);

}  // namespace canvaslab

#endif
