// The quantitative calculus: def, v, b, q, s, d with exact arithmetic.
// No floating point anywhere in this module.
#ifndef CANVASLAB_DEFICIENCY_HPP
#define CANVASLAB_DEFICIENCY_HPP

#include <cstdint>
#include <string>

#include "canvaslab/canvas.hpp"

namespace canvaslab {

// Exact rational with eager normalization: denominator > 0, gcd = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return Rational(-num, den); }
  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;
  std::string str() const;

  static Rational parse(const std::string& text);  // "n" or "n/d"
};

// epsilon, alpha, gamma. Construction validates the three inequalities
// 3e <= 2a, 6a + 3e <= g, 2a + 3e + g <= 1.
struct Params {
  Rational epsilon;
  Rational alpha;
  Rational gamma;

  Params(Rational e, Rational a, Rational g);
  static Params paper();  // 1/18, 1/12, 2/3
  // Names the violated inequality, empty when all hold.
  static std::string violated_inequality(Rational e, Rational a, Rational g);
};

struct DeficiencyReport {
  int internal_vertices = 0;            // v(G)
  int deficiency = 0;                   // |E(G) \ E(C)| - 3 v(G)
  int boundary_count = 0;               // b(G)
  int quasi_boundary_count = 0;         // q(G)
  Rational s;
  Rational d;
  std::vector<int> face_terms;          // |f| - 3 per internal face, face id order
};

int deficiency(const Canvas& t);
// Lemma-of-faces route: |C| - 3 - sum over internal faces of (|f| - 3).
int deficiency_via_faces(const Canvas& t);

// B = internal vertices adjacent to the outer cycle, Q = internal vertices
// cofacial with it. B is always a subset of Q.
std::pair<std::set<Vertex>, std::set<Vertex>> boundary_sets(const Canvas& t);

Rational s_value(const Canvas& t, const Params& p);
Rational d_value(const Canvas& t, const Params& p);
DeficiencyReport deficiency_report(const Canvas& t, const Params& p);

struct DecompositionReport {
  bool def_identity = false;   // def(G) = def(G') + sum def(G[f])
  bool v_identity = false;
  bool b_inequality = false;   // b(G) <= b(G') + sum
  bool q_inequality = false;
  bool s_inequality = false;   // s(G) <= ...
  bool d_inequality = false;   // d(G) >= ...
  int def_lhs = 0, def_rhs = 0;
  int v_lhs = 0, v_rhs = 0;
  int b_lhs = 0, b_rhs = 0;
  int q_lhs = 0, q_rhs = 0;
  Rational s_lhs, s_rhs, d_lhs, d_rhs;
  bool all_hold() const {
    return def_identity && v_identity && b_inequality && q_inequality &&
           s_inequality && d_inequality;
  }
};

// Splits t along a 2-connected subgraph g2 containing the outer cycle and
// verifies the deficiency identity plus the v/b/q/s/d comparisons.
DecompositionReport decomposition_check(const Canvas& t, const PlaneGraph& g2,
                                        const Params& p);

struct SplitBoundsReport {
  bool chord_case = false;
  bool augmented = false;       // virtual edges were inserted (vertex case)
  Rational lhs;                 // d of the (possibly augmented) graph
  Rational rhs;                 // d(G<C1>) + d(G<C2>) + 1  or  - 1 - (2a+e)
  Rational slack;               // lhs - rhs, expected >= 0
  bool holds = false;
};

// Chord case of the split inequality.
SplitBoundsReport split_bounds_check(const Canvas& t, Edge chord, const Params& p);
// Vertex case: v with contacts u1, u2 on the outer cycle. Missing contact
// edges are inserted virtually inside witnessing faces.
SplitBoundsReport split_bounds_check(const Canvas& t, Vertex v, Vertex u1, Vertex u2,
                                     const Params& p);

struct DefBoundReport {
  bool applicable = false;      // every internal vertex has degree >= 5
  bool holds = false;           // def >= 2 v - |E(G - V(C))|
  bool equality = false;
  bool every_internal_degree_five = false;
  bool readings_diverge = false;  // equality flag vs the degree-five reading
  int lhs = 0, rhs = 0;
};

DefBoundReport defbound_check(const Canvas& t);

}  // namespace canvaslab

#endif
