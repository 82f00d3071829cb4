#include "canvaslab/deficiency.hpp"

#include <algorithm>
#include <numeric>

namespace canvaslab {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  __int128 g = std::gcd(static_cast<std::int64_t>(n < 0 ? -n : n) % INT64_MAX + 1, (std::int64_t)1);
  (void)g;
  return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.num;
  __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(checked(n), checked(d));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num) * o.den;
  __int128 rhs = static_cast<__int128>(o.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string Params::violated_inequality(Rational e, Rational a, Rational g) {
  if (Rational(3) * e > Rational(2) * a) return "3e <= 2a";
  if (Rational(6) * a + Rational(3) * e > g) return "6a + 3e <= g";
  if (Rational(2) * a + Rational(3) * e + g > Rational(1)) return "2a + 3e + g <= 1";
  if (!(e > Rational(0)) || !(a > Rational(0)) || !(g > Rational(0)))
    return "parameters must be positive";
  return "";
}

Params::Params(Rational e, Rational a, Rational g) : epsilon(e), alpha(a), gamma(g) {
  auto bad = violated_inequality(e, a, g);
  if (!bad.empty()) throw PreconditionError("parameter inequality violated: " + bad);
}

Params Params::paper() { return Params(Rational(1, 18), Rational(1, 12), Rational(2, 3)); }

namespace {

int edges_off_cycle(const Canvas& t) {
  return t.graph.edge_count() - t.outer.length();
}

}  // namespace

int deficiency(const Canvas& t) {
  return edges_off_cycle(t) - 3 * t.internal_count();
}

int deficiency_via_faces(const Canvas& t) {
  auto faces = trace_faces(t.graph);
  int sum = 0;
  for (const auto& f : faces) {
    if (f.id == t.graph.outer_face_id) continue;
    if (!f.is_cycle())
      throw PreconditionError("deficiency_via_faces: internal face boundary is not a cycle");
    sum += f.length() - 3;
  }
  return t.outer.length() - 3 - sum;
}

std::pair<std::set<Vertex>, std::set<Vertex>> boundary_sets(const Canvas& t) {
  std::set<Vertex> B, Q;
  for (Vertex v : t.internal_vertices())
    for (Vertex w : t.graph.neighbors(v))
      if (t.outer.contains(w)) {
        B.insert(v);
        break;
      }
  auto faces = trace_faces(t.graph);
  for (const auto& f : faces) {
    if (f.id == t.graph.outer_face_id) continue;
    bool touches_c = false;
    for (Vertex v : t.outer.vertices)
      if (f.touches(v)) {
        touches_c = true;
        break;
      }
    if (!touches_c) continue;
    for (const auto& de : f.boundary)
      if (!t.outer.contains(de.first)) Q.insert(de.first);
  }
  for (Vertex v : B)
    if (!Q.count(v)) throw std::logic_error("boundary_sets: B not contained in Q (defect)");
  return {B, Q};
}

Rational s_value(const Canvas& t, const Params& p) {
  auto [B, Q] = boundary_sets(t);
  return p.epsilon * Rational(t.internal_count()) +
         p.alpha * Rational(static_cast<std::int64_t>(B.size() + Q.size()));
}

Rational d_value(const Canvas& t, const Params& p) {
  return Rational(deficiency(t)) - s_value(t, p);
}

DeficiencyReport deficiency_report(const Canvas& t, const Params& p) {
  DeficiencyReport r;
  r.internal_vertices = t.internal_count();
  r.deficiency = deficiency(t);
  auto [B, Q] = boundary_sets(t);
  r.boundary_count = static_cast<int>(B.size());
  r.quasi_boundary_count = static_cast<int>(Q.size());
  r.s = p.epsilon * Rational(r.internal_vertices) +
        p.alpha * Rational(r.boundary_count + r.quasi_boundary_count);
  r.d = Rational(r.deficiency) - r.s;
  for (const auto& f : trace_faces(t.graph))
    if (f.id != t.graph.outer_face_id) r.face_terms.push_back(f.length() - 3);
  return r;
}

DecompositionReport decomposition_check(const Canvas& t, const PlaneGraph& g2,
                                        const Params& p) {
  Canvas sub = induced_subcanvas(t, g2);

  std::vector<Canvas> pieces;
  auto faces = trace_faces(sub.graph);
  for (const auto& f : faces) {
    if (f.id == sub.graph.outer_face_id) continue;
    if (!f.is_cycle())
      throw PreconditionError("decomposition_check: face boundary of G' is not a cycle");
    pieces.push_back(subcanvas_by_cycle(t, CycleRef{f.walk_vertices()}));
  }

  DecompositionReport r;
  r.def_lhs = deficiency(t);
  r.v_lhs = t.internal_count();
  auto [B, Q] = boundary_sets(t);
  r.b_lhs = static_cast<int>(B.size());
  r.q_lhs = static_cast<int>(Q.size());
  r.s_lhs = s_value(t, p);
  r.d_lhs = d_value(t, p);

  r.def_rhs = deficiency(sub);
  r.v_rhs = sub.internal_count();
  auto [B2, Q2] = boundary_sets(sub);
  r.b_rhs = static_cast<int>(B2.size());
  r.q_rhs = static_cast<int>(Q2.size());
  r.s_rhs = s_value(sub, p);
  r.d_rhs = d_value(sub, p);
  for (const auto& piece : pieces) {
    r.def_rhs += deficiency(piece);
    r.v_rhs += piece.internal_count();
    auto [Bp, Qp] = boundary_sets(piece);
    r.b_rhs += static_cast<int>(Bp.size());
    r.q_rhs += static_cast<int>(Qp.size());
    r.s_rhs = r.s_rhs + s_value(piece, p);
    r.d_rhs = r.d_rhs + d_value(piece, p);
  }

  r.def_identity = r.def_lhs == r.def_rhs;
  r.v_identity = r.v_lhs == r.v_rhs;
  r.b_inequality = r.b_lhs <= r.b_rhs;
  r.q_inequality = r.q_lhs <= r.q_rhs;
  r.s_inequality = r.s_lhs <= r.s_rhs;
  r.d_inequality = r.d_lhs >= r.d_rhs;
  return r;
}

SplitBoundsReport split_bounds_check(const Canvas& t, Edge chord, const Params& p) {
  if (!t.graph.has_edge(chord.a, chord.b) || !t.outer.contains(chord.a) ||
      !t.outer.contains(chord.b) || t.outer.has_edge(chord))
    throw PreconditionError("split_bounds_check: not a chord of the outer cycle");

  int pa = -1, pb = -1, k = t.outer.length();
  for (int i = 0; i < k; ++i) {
    if (t.outer.vertices[i] == chord.a) pa = i;
    if (t.outer.vertices[i] == chord.b) pb = i;
  }
  if (pa > pb) std::swap(pa, pb);
  std::vector<Vertex> arc1(t.outer.vertices.begin() + pa, t.outer.vertices.begin() + pb + 1);
  std::vector<Vertex> arc2;
  for (int i = pb; i != pa; i = (i + 1) % k) arc2.push_back(t.outer.vertices[i]);
  arc2.push_back(t.outer.vertices[pa]);

  Canvas side1 = subcanvas_by_cycle(t, CycleRef{arc1});
  Canvas side2 = subcanvas_by_cycle(t, CycleRef{arc2});

  SplitBoundsReport r;
  r.chord_case = true;
  r.lhs = d_value(t, p);
  r.rhs = d_value(side1, p) + d_value(side2, p) + Rational(1);
  r.slack = r.lhs - r.rhs;
  r.holds = r.slack >= Rational(0);
  return r;
}

SplitBoundsReport split_bounds_check(const Canvas& t, Vertex v, Vertex u1, Vertex u2,
                                     const Params& p) {
  if (!t.is_internal(v)) throw PreconditionError("split vertex must be internal");
  if (u1 == u2 || !t.outer.contains(u1) || !t.outer.contains(u2))
    throw PreconditionError("contacts must be two distinct outer vertices");

  PlaneGraph g = t.graph;
  bool augmented = false;
  std::set<Edge> aux;
  for (Vertex u : {u1, u2}) {
    if (g.has_edge(v, u)) continue;
    // Insert the contact edge inside a face incident with both v and u.
    auto faces = trace_faces(g);
    int fid = -1;
    for (const auto& f : faces) {
      if (f.id == g.outer_face_id) continue;
      if (f.touches(v) && f.touches(u)) {
        fid = f.id;
        break;
      }
    }
    if (fid < 0)
      throw PreconditionError("contact " + std::to_string(u) + " is not cofacial with the vertex");
    // Anchor after the predecessors on the face walk.
    Vertex before_v = -1, before_u = -1;
    const auto& b = faces[fid].boundary;
    for (size_t i = 0; i < b.size(); ++i) {
      if (b[i].second == v) before_v = b[i].first;
      if (b[i].second == u) before_u = b[i].first;
    }
    g = g.with_edge(v, u, before_v == -1 ? -1 : before_v, before_u == -1 ? -1 : before_u);
    aux.insert(Edge(v, u));
    augmented = true;
  }

  // Split C into the two arcs between u1 and u2 and close each through v.
  int p1 = -1, p2 = -1, k = t.outer.length();
  for (int i = 0; i < k; ++i) {
    if (t.outer.vertices[i] == u1) p1 = i;
    if (t.outer.vertices[i] == u2) p2 = i;
  }
  if (p1 > p2) std::swap(p1, p2);
  std::vector<Vertex> arc1(t.outer.vertices.begin() + p1, t.outer.vertices.begin() + p2 + 1);
  arc1.push_back(v);
  std::vector<Vertex> arc2;
  for (int i = p2; i != p1; i = (i + 1) % k) arc2.push_back(t.outer.vertices[i]);
  arc2.push_back(t.outer.vertices[p1]);
  arc2.push_back(v);

  Canvas host{g, t.outer, t.lists};
  Canvas side1 = subcanvas_by_cycle(host, CycleRef{arc1}, aux);
  Canvas side2 = subcanvas_by_cycle(host, CycleRef{arc2}, aux);

  SplitBoundsReport r;
  r.chord_case = false;
  r.augmented = augmented;
  r.lhs = d_value(host, p);
  r.rhs = d_value(side1, p) + d_value(side2, p) - Rational(1) -
          (Rational(2) * p.alpha + p.epsilon);
  r.slack = r.lhs - r.rhs;
  r.holds = r.slack >= Rational(0);
  return r;
}

DefBoundReport defbound_check(const Canvas& t) {
  DefBoundReport r;
  r.applicable = true;
  r.every_internal_degree_five = true;
  for (Vertex v : t.internal_vertices()) {
    if (t.graph.degree(v) < 5) r.applicable = false;
    if (t.graph.degree(v) != 5) r.every_internal_degree_five = false;
  }
  if (!r.applicable) return r;

  int inner_edges = 0;
  for (Edge e : t.graph.edges())
    if (!t.outer.contains(e.a) && !t.outer.contains(e.b)) ++inner_edges;

  r.lhs = deficiency(t);
  r.rhs = 2 * t.internal_count() - inner_edges;
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  r.readings_diverge = r.equality != r.every_internal_degree_five;
  return r;
}

}  // namespace canvaslab
