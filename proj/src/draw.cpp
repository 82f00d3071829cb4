#include "canvaslab/draw.hpp"

#include <cmath>
#include <sstream>

namespace canvaslab {

std::vector<LayoutPoint> tutte_layout(const Canvas& t) {
  if (!is_two_connected(t.graph))
    throw PreconditionError("tutte_layout requires a 2-connected graph");
  int n = t.graph.slots();
  std::vector<LayoutPoint> pos(n);
  std::vector<char> fixed(n, 0);
  int k = t.outer.length();
  for (int i = 0; i < k; ++i) {
    Vertex v = t.outer.vertices[i];
    double a = 2.0 * M_PI * i / k - M_PI / 2.0;
    pos[v] = {std::cos(a), std::sin(a)};
    fixed[v] = 1;
  }

  auto inner = t.internal_vertices();
  int m = static_cast<int>(inner.size());
  if (m == 0) return pos;
  std::vector<int> idx(n, -1);
  for (int i = 0; i < m; ++i) idx[inner[i]] = i;

  // Laplacian system, one per coordinate, dense Gaussian elimination.
  for (int coord = 0; coord < 2; ++coord) {
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (int i = 0; i < m; ++i) {
      Vertex v = inner[i];
      a[i][i] = t.graph.degree(v);
      for (Vertex w : t.graph.neighbors(v)) {
        if (fixed[w])
          a[i][m] += coord == 0 ? pos[w].x : pos[w].y;
        else
          a[i][idx[w]] -= 1.0;
      }
    }
    for (int col = 0; col < m; ++col) {
      int pivot = col;
      for (int r = col + 1; r < m; ++r)
        if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
      std::swap(a[col], a[pivot]);
      for (int r = 0; r < m; ++r) {
        if (r == col || a[r][col] == 0.0) continue;
        double f = a[r][col] / a[col][col];
        for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
      }
    }
    for (int i = 0; i < m; ++i) {
      double val = a[i][m] / a[i][i];
      if (coord == 0)
        pos[inner[i]].x = val;
      else
        pos[inner[i]].y = val;
    }
  }
  return pos;
}

std::string svg_drawing(const Canvas& t, const std::string& name) {
  auto pos = tutte_layout(t);
  const double scale = 220.0, off = 256.0, r = 10.0;
  auto X = [&](Vertex v) { return off + scale * pos[v].x; };
  auto Y = [&](Vertex v) { return off + scale * pos[v].y; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
        "viewBox=\"0 0 512 512\">\n";
  if (!name.empty()) os << "  <title>" << name << "</title>\n";
  for (Edge e : t.graph.edges()) {
    bool on_outer = t.outer.has_edge(e);
    os << "  <line x1=\"" << X(e.a) << "\" y1=\"" << Y(e.a) << "\" x2=\"" << X(e.b)
       << "\" y2=\"" << Y(e.b) << "\" stroke=\"" << (on_outer ? "#1a1a1a" : "#888888")
       << "\" stroke-width=\"" << (on_outer ? 3 : 2) << "\"/>\n";
  }
  for (Vertex v : t.graph.vertices()) {
    bool boundary = t.outer.contains(v);
    os << "  <circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"" << r
       << "\" fill=\"" << (boundary ? "#4477aa" : "#ee6677") << "\"/>\n";
    os << "  <text x=\"" << X(v) << "\" y=\"" << Y(v) + 4
       << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"white\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string dot_drawing(const Canvas& t, const std::string& name) {
  auto pos = tutte_layout(t);
  std::ostringstream os;
  os << "graph " << (name.empty() ? "canvas" : "\"" + name + "\"") << " {\n";
  os << "  layout=neato;\n";
  for (Vertex v : t.graph.vertices()) {
    os << "  " << v << " [pos=\"" << pos[v].x * 3 << ',' << pos[v].y * 3
       << "!\", shape=circle";
    if (t.outer.contains(v)) os << ", style=bold";
    os << "];\n";
  }
  for (Edge e : t.graph.edges()) os << "  " << e.a << " -- " << e.b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace canvaslab
