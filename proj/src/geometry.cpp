#include "xcr/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace xcr {

namespace {

using Wide = __int128;

Wide cross(Point o, Point a, Point b) {
  return static_cast<Wide>(a.x - o.x) * (b.y - o.y) -
         static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

int sign(Wide v) { return (v > 0) - (v < 0); }

bool on_segment(Point p, Point a, Point b) {
  return sign(cross(a, b, p)) == 0 && std::min(a.x, b.x) <= p.x &&
         p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Half-plane then cross-product comparison: counterclockwise angle from +x.
bool ccw_before(Point a, Point b) {
  auto half = [](Point p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sign(static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x) > 0;
}

// Sort directions clockwise (reverse counterclockwise).
template <typename T>
void sort_clockwise(std::vector<std::pair<Point, T>>& dirs) {
  std::sort(dirs.begin(), dirs.end(),
            [](const auto& a, const auto& b) { return ccw_before(b.first, a.first); });
}

struct Fraction {
  Wide num;
  Wide den;  // > 0
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

}  // namespace

Drawing straight_line_drawing(const Graph& g, const std::vector<Point>& at) {
  if (static_cast<int>(at.size()) != g.vertex_count())
    throw std::invalid_argument("straight_line_drawing: one point per vertex");
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (at[a].x == at[b].x && at[a].y == at[b].y)
        throw DegenerateGeometry("two vertices share a point");

  const auto& edges = g.edges();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (edges[e].touches(w)) continue;
      if (on_segment(at[w], at[edges[e].u], at[edges[e].v]))
        throw DegenerateGeometry("vertex on the interior of an edge");
    }
  }

  Drawing d = Drawing::from_rotation(g, std::vector<std::vector<EdgeId>>(g.vertex_count()));
  // Parameters along each edge (from u toward v) of its crossings.
  std::vector<std::vector<std::pair<Fraction, CrossingId>>> along(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Point a = at[edges[e].u], b = at[edges[e].v];
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      const Point c = at[edges[f].u], dd = at[edges[f].v];
      if (edges[e].adjacent_to(edges[f])) {
        // Shared endpoint: only overlap is a problem.
        const VertexId s = edges[e].touches(edges[f].u) ? edges[f].u : edges[f].v;
        const Point o = at[s];
        const Point p = at[edges[e].other(s)], q = at[edges[f].other(s)];
        if (sign(cross(o, p, q)) == 0 &&
            static_cast<Wide>(p.x - o.x) * (q.x - o.x) + static_cast<Wide>(p.y - o.y) * (q.y - o.y) > 0)
          throw DegenerateGeometry("overlapping edges");
        continue;
      }
      const int d1 = sign(cross(a, b, c)), d2 = sign(cross(a, b, dd));
      const int d3 = sign(cross(c, dd, a)), d4 = sign(cross(c, dd, b));
      if (d1 == 0 && d2 == 0) {
        if (on_segment(c, a, b) || on_segment(dd, a, b) || on_segment(a, c, dd))
          throw DegenerateGeometry("overlapping edges");
        continue;
      }
      if (d1 * d2 >= 0 || d3 * d4 >= 0) continue;  // touching is caught above
      // Parameter along e: t = cross(c - a, d - c) / cross(b - a, d - c).
      const Wide rx = b.x - a.x, ry = b.y - a.y, sx = dd.x - c.x, sy = dd.y - c.y;
      const Wide qx = c.x - a.x, qy = c.y - a.y;
      Wide tn = qx * sy - qy * sx, td = rx * sy - ry * sx;
      Wide un = qx * ry - qy * rx, ud = td;
      if (td < 0) {
        tn = -tn;
        td = -td;
        un = -un;
        ud = -ud;
      }
      // Orientation at the crossing point: directions toward each end.
      std::vector<std::pair<Point, int>> dirs = {
          {{a.x - b.x, a.y - b.y}, 0},  // e-
          {{c.x - dd.x, c.y - dd.y}, 1},  // f-
          {{b.x - a.x, b.y - a.y}, 2},  // e+
          {{dd.x - c.x, dd.y - c.y}, 3},  // f+
      };
      sort_clockwise(dirs);
      std::size_t i0 = 0;
      while (dirs[i0].second != 0) ++i0;
      const bool flipped = dirs[(i0 + 1) % 4].second == 3;
      const CrossingId id = static_cast<CrossingId>(d.crossings.size());
      d.crossings.push_back({e, f, flipped});
      along[e].push_back({{tn, td}, id});
      along[f].push_back({{un, ud}, id});
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto& list = along[e];
    std::sort(list.begin(), list.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
      if (list[i].first == list[i + 1].first)
        throw DegenerateGeometry("three edges through one point");
    for (const auto& [t, c] : list) d.sequence[e].push_back(c);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<Point, EdgeId>> dirs;
    for (EdgeId e : g.incident(v)) {
      const Point w = at[edges[e].other(v)];
      dirs.push_back({{w.x - at[v].x, w.y - at[v].y}, e});
    }
    sort_clockwise(dirs);
    for (const auto& [p, e] : dirs) d.rotation[v].push_back(e);
  }
  return d;
}

}  // namespace xcr
