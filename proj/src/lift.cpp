#include "xcr/lift.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "xcr/geometry.hpp"

namespace xcr {

namespace {

// A plane multigraph given by darts. Every vertex is either a vertex of the
// output graph or a pass-through point: degree 4 at a crossing, degree 2 at
// a joint where two gadgets meet.
class Plane {
 public:
  int add_vertex(VertexId real) {
    rot_.emplace_back();
    real_.push_back(real);
    return static_cast<int>(rot_.size()) - 1;
  }
  int add_dart(int v) {
    const int d = static_cast<int>(tail_.size());
    tail_.push_back(v);
    twin_.push_back(-1);
    pos_.push_back(static_cast<int>(rot_[v].size()));
    rot_[v].push_back(d);
    return d;
  }
  void link(int a, int b) {
    if (twin_[a] >= 0 || twin_[b] >= 0) throw std::logic_error("lift: dart linked twice");
    twin_[a] = b;
    twin_[b] = a;
  }

  // Follows every edge of the output graph through the pass-through points.
  Drawing trace(Graph g) const {
    Drawing d;
    d.sequence.assign(g.edge_count(), {});
    d.rotation.assign(g.vertex_count(), {});
    std::vector<EdgeId> dart_edge(tail_.size(), -1);
    // Per crossing point: (edge, slot of its '-' end), twice.
    std::vector<std::vector<std::pair<EdgeId, int>>> pass(rot_.size());
    std::vector<std::vector<int>> points(g.edge_count());
    for (int v = 0; v < static_cast<int>(rot_.size()); ++v) {
      if (real_[v] < 0) continue;
      for (int start : rot_[v]) {
        if (dart_edge[start] >= 0) continue;
        std::vector<std::pair<int, int>> through;  // point, entry slot
        int cur = start;
        int end = -1;
        while (true) {
          const int t = twin_[cur];
          if (t < 0) throw std::logic_error("lift: open dart");
          const int w = tail_[t];
          if (real_[w] >= 0) {
            end = t;
            break;
          }
          const int deg = static_cast<int>(rot_[w].size());
          if (deg == 4) through.push_back({w, pos_[t]});
          cur = rot_[w][(pos_[t] + deg / 2) % deg];
        }
        const VertexId a = real_[v], b = real_[tail_[end]];
        const auto e = g.find_edge(a, b);
        if (!e) throw std::logic_error("lift: traced a non-edge");
        dart_edge[start] = dart_edge[end] = *e;
        if (a > b) std::reverse(through.begin(), through.end());
        for (auto [w, slot] : through) {
          pass[w].push_back({*e, a < b ? slot : (slot + 2) % 4});
          points[*e].push_back(w);
        }
      }
    }
    std::vector<CrossingId> id(rot_.size(), -1);
    for (int w = 0; w < static_cast<int>(rot_.size()); ++w) {
      if (pass[w].empty()) continue;
      if (pass[w].size() != 2) throw std::logic_error("lift: broken crossing point");
      auto [e, em] = pass[w][0];
      auto [f, fm] = pass[w][1];
      if (e > f) {
        std::swap(e, f);
        std::swap(em, fm);
      }
      id[w] = static_cast<CrossingId>(d.crossings.size());
      d.crossings.push_back({e, f, fm != (em + 1) % 4});
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (int w : points[e]) d.sequence[e].push_back(id[w]);
    for (int v = 0; v < static_cast<int>(rot_.size()); ++v)
      if (real_[v] >= 0)
        for (int dart : rot_[v]) d.rotation[real_[v]].push_back(dart_edge[dart]);
    d.graph = std::move(g);
    return d;
  }

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<VertexId> real_;  // output vertex, or -1
  std::vector<int> tail_, twin_, pos_;
};

using Ports = std::vector<std::vector<int>>;  // per slot, outgoing left to right

// z copies of a degree-d representative, stacked: copy j sits at (0, j) and
// reaches target i at height 0, the first floor(d/2) targets on the right and
// the rest on the left, nearer targets for later ones. Copies j < j' cross
// once per pair of same-side targets, Z(d) times in all.
Drawing stack_gadget(int z, int d) {
  const int p = d / 2;
  Graph g(z + z * d);
  for (int j = 0; j < z; ++j)
    for (int i = 0; i < d; ++i) g.add_edge(j, z + i * z + j);
  for (std::int64_t spread = z + 1;; spread = spread * 2 + 1) {
    std::vector<Point> at(g.vertex_count());
    for (int j = 0; j < z; ++j) at[j] = {0, j + 1};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < z; ++j) {
        const std::int64_t x = i < p ? spread * (p - i) + j + 1 : -(spread * (i - p + 1) + j + 1);
        at[z + i * z + j] = {x, 0};
      }
    try {
      return straight_line_drawing(g, at);
    } catch (const DegenerateGeometry&) {
      if (spread > (std::int64_t{1} << 30)) throw;
    }
  }
}

}  // namespace

Count lift_size(const AbstractClustering& c, const std::vector<Count>& z) {
  const Graph& g = c.drawing.graph;
  auto w = [&](EdgeId e) -> Count { return g.edge(e).v >= c.k ? z[g.edge(e).v - c.k] : Count(1); };
  Count s = c.k;
  for (std::size_t i = 0; i < z.size(); ++i)
    s += z[i] + choose2(z[i]) * zee(std::popcount(c.reps.reps[i].mask));
  for (const Crossing& x : c.drawing.crossings) s += w(x.e) * w(x.f);
  return s;
}

Drawing lift(const AbstractClustering& c, const std::vector<Count>& z) {
  const int k = c.k;
  const int reps = static_cast<int>(c.reps.reps.size());
  if (static_cast<int>(z.size()) != reps) throw std::invalid_argument("lift: weight vector size");
  if (lift_size(c, z) > kLiftLimit) throw std::length_error("lift: drawing too large");

  // Output graph and the first copy of every representative.
  Graph out(k);
  for (const Edge& e : c.drawing.graph.edges())
    if (e.v < k) out.add_edge(e.u, e.v);
  std::vector<VertexId> first_copy(reps);
  for (int i = 0; i < reps; ++i) {
    first_copy[i] = out.vertex_count();
    for (int t = 0; t < static_cast<int>(z[i]); ++t) {
      const VertexId v = out.add_vertex();
      for (int b = 0; b < k; ++b)
        if (c.reps.reps[i].mask >> b & 1u) out.add_edge(b, v);
    }
  }

  std::vector<VertexId> keep;
  std::vector<int> rep_of;  // kept representative -> original index
  for (int v = 0; v < k; ++v) keep.push_back(v);
  for (int i = 0; i < reps; ++i)
    if (z[i] > 0) {
      keep.push_back(k + i);
      rep_of.push_back(i);
    }
  const Drawing d = induced_subdrawing(c.drawing, keep);
  const Planarization pl = planarize(d);

  std::map<std::pair<VertexId, VertexId>, int> width;
  for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
    const VertexId v = d.graph.edge(e).v;
    const int w = v < k ? 1 : static_cast<int>(z[rep_of[v - k]]);
    const auto& path = pl.edge_path[e];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      width[{path[i], path[i + 1]}] = w;
      width[{path[i + 1], path[i]}] = w;
    }
  }

  Plane plane;
  std::vector<Ports> ports(pl.vertex_count());
  for (VertexId x = 0; x < pl.vertex_count(); ++x) {
    const auto& rot = pl.rotation[x];
    Ports& pt = ports[x];
    pt.resize(rot.size());
    if (pl.is_dummy(x)) {
      // Grid of a x b crossing points; slots S, W, N, E in clockwise order.
      const int a = width.at({x, rot[0]});
      const int b = width.at({x, rot[1]});
      std::vector<int> cell(static_cast<std::size_t>(a) * b);
      for (auto& v : cell) v = plane.add_vertex(-1);
      auto at = [&](int col, int row) { return cell[static_cast<std::size_t>(row) * a + col]; };
      std::vector<std::array<int, 4>> dart(cell.size());
      for (std::size_t i = 0; i < cell.size(); ++i)
        for (int s = 0; s < 4; ++s) dart[i][s] = plane.add_dart(cell[i]);
      auto dart_at = [&](int col, int row, int s) {
        return dart[static_cast<std::size_t>(row) * a + col][s];
      };
      (void)at;
      for (int row = 0; row < b; ++row)
        for (int col = 0; col < a; ++col) {
          if (row + 1 < b) plane.link(dart_at(col, row, 2), dart_at(col, row + 1, 0));
          if (col + 1 < a) plane.link(dart_at(col, row, 3), dart_at(col + 1, row, 1));
        }
      for (int col = a - 1; col >= 0; --col) pt[0].push_back(dart_at(col, 0, 0));
      for (int row = 0; row < b; ++row) pt[1].push_back(dart_at(0, row, 1));
      for (int col = 0; col < a; ++col) pt[2].push_back(dart_at(col, b - 1, 2));
      for (int row = b - 1; row >= 0; --row) pt[3].push_back(dart_at(a - 1, row, 3));
    } else if (x < k) {
      const int v = plane.add_vertex(x);
      for (std::size_t s = 0; s < rot.size(); ++s)
        for (int j = 0; j < width.at({x, rot[s]}); ++j) pt[s].push_back(plane.add_dart(v));
    } else {
      const int i = rep_of[x - k];
      const int zc = static_cast<int>(z[i]);
      const int deg = static_cast<int>(rot.size());
      if (zc == 1) {
        const int v = plane.add_vertex(first_copy[i]);
        for (int s = 0; s < deg; ++s) pt[s].push_back(plane.add_dart(v));
        continue;
      }
      const Drawing gd = stack_gadget(zc, deg);
      const Planarization gp = planarize(gd);
      std::vector<int> node(gp.vertex_count());
      for (VertexId u = 0; u < gp.vertex_count(); ++u)
        node[u] = plane.add_vertex(u < zc ? first_copy[i] + u : -1);
      std::map<std::pair<VertexId, VertexId>, int> dart_of;
      for (VertexId u = 0; u < gp.vertex_count(); ++u)
        for (VertexId nb : gp.rotation[u]) dart_of[{u, nb}] = plane.add_dart(node[u]);
      for (const auto& [key, dt] : dart_of)
        if (key.first < key.second) plane.link(dt, dart_of.at({key.second, key.first}));
      // Port vertices have degree one; their second dart leads outward.
      auto outward = [&](int s, int j) { return plane.add_dart(node[zc + s * zc + j]); };
      for (int s = 0; s < deg; ++s) {
        if (s < deg / 2) {
          for (int j = zc - 1; j >= 0; --j) pt[s].push_back(outward(s, j));
        } else {
          for (int j = 0; j < zc; ++j) pt[s].push_back(outward(s, j));
        }
      }
    }
  }

  for (VertexId x = 0; x < pl.vertex_count(); ++x) {
    const auto& rot = pl.rotation[x];
    for (std::size_t s = 0; s < rot.size(); ++s) {
      const VertexId y = rot[s];
      if (y < x) continue;
      const auto& other = pl.rotation[y];
      const std::size_t back = std::find(other.begin(), other.end(), x) - other.begin();
      const auto& a = ports[x][s];
      const auto& b = ports[y][back];
      const std::size_t w = a.size();
      for (std::size_t j = 0; j < w; ++j) plane.link(a[j], b[w - 1 - j]);
    }
  }
  return plane.trace(std::move(out));
}

}  // namespace xcr
