// Instance generation: exhaustive enumeration of small 2-connected plane
// graphs with a fixed outer cycle length, list-assignment enumeration, and
// canonical-form deduplication.
#ifndef CANVASLAB_GENLAB_HPP
#define CANVASLAB_GENLAB_HPP

#include <cstdint>
#include <limits>

#include "canvaslab/canvas.hpp"

namespace canvaslab {

enum class BoundaryListMode { Singleton, Pairs, Mixed };

std::string to_string(BoundaryListMode m);
BoundaryListMode boundary_mode_from_string(const std::string& s);

struct GenSpec {
  int outer_len = 3;      // k >= 3
  int max_internal = 0;   // m >= 0
  int max_edges = std::numeric_limits<int>::max();
  BoundaryListMode mode = BoundaryListMode::Singleton;
  std::vector<int> mixed_sizes = {1, 2};  // allowed boundary list sizes in Mixed
  int universe = 5;       // colors 0..U-1
  std::uint64_t seed = 0;
  bool symmetry_reduction = true;

  void validate() const;  // k >= 3; U >= 5 when internal vertices can exist
};

// Equal keys iff the embeddings are isomorphic as plane graphs with a
// distinguished outer cycle, up to rotation/reflection and relabeling.
using CanonicalKey = std::string;
CanonicalKey canonical_key(const PlaneGraph& g);

// All 2-connected plane graphs with outer cycle length k and at most m
// internal vertices, one per canonical class, generated by closing the
// bare cycle under two face operations: adding a chord inside an internal
// face and adding a new vertex joined to >= 2 vertices of an internal
// face. Deterministic order: (vertex count, edge count, canonical key).
std::vector<PlaneGraph> enumerate_plane_graphs(const GenSpec& spec);

// List assignments for a fixed graph under the spec's boundary mode:
// internal vertices draw 5-subsets of the universe, boundary vertices draw
// per-mode subsets; only assignments whose outer cycle is properly
// colorable are kept; with symmetry_reduction each color-permutation orbit
// is represented by its first-occurrence relabeling.
std::vector<ListAssignment> assign_lists(const PlaneGraph& g, const GenSpec& spec);

// Deterministic instance stream over (graph, assignment) pairs with a
// serializable cursor (the flat ordinal of the next instance).
class InstanceStream {
 public:
  explicit InstanceStream(GenSpec spec);
  std::optional<Canvas> next();
  std::uint64_t cursor() const { return ordinal_; }
  void seek(std::uint64_t ordinal);

 private:
  GenSpec spec_;
  std::vector<PlaneGraph> graphs_;
  size_t graph_idx_ = 0;
  std::vector<ListAssignment> current_lists_;
  size_t list_idx_ = 0;
  std::uint64_t ordinal_ = 0;
  void load_lists();
};

// Deterministic seeded RNG helper. mt19937_64 output is fully specified by
// the standard; bounded draws avoid std::uniform_int_distribution, whose
// mapping is implementation-defined.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next();
  // Uniform value in [0, n) by rejection sampling.
  std::uint64_t below(std::uint64_t n);
  ColorList subset(int universe, int size);  // random size-subset of 0..universe-1
};

}  // namespace canvaslab

#endif
