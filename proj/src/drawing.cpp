#include "xcr/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace xcr {

namespace {
const Count kOne = 1;
}

const Count& Drawing::edge_weight(EdgeId e) const {
  return weight.empty() ? kOne : weight[e];
}

Drawing Drawing::from_rotation(Graph g, std::vector<std::vector<EdgeId>> rotation) {
  Drawing d;
  d.sequence.assign(g.edge_count(), {});
  d.graph = std::move(g);
  d.rotation = std::move(rotation);
  return d;
}

CrossingId Drawing::add_crossing(EdgeId e, EdgeId f, bool flipped) {
  const CrossingId id = static_cast<CrossingId>(crossings.size());
  crossings.push_back({e, f, flipped});
  sequence[e].push_back(id);
  sequence[f].push_back(id);
  return id;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "ok";
    case Violation::kMalformed: return "malformed";
    case Violation::kAdjacentCrossing: return "adjacent crossing";
    case Violation::kDoubleCrossing: return "double crossing";
    case Violation::kUnrealizable: return "unrealizable rotation/crossing structure";
  }
  return "?";
}

int Planarization::edge_count() const {
  std::size_t darts = 0;
  for (const auto& r : rotation) darts += r.size();
  return static_cast<int>(darts / 2);
}

namespace {

std::string structural_problem(const Drawing& d) {
  const Graph& g = d.graph;
  if (static_cast<int>(d.rotation.size()) != g.vertex_count())
    return "rotation table size";
  if (static_cast<int>(d.sequence.size()) != g.edge_count())
    return "sequence table size";
  if (!d.weight.empty() && static_cast<int>(d.weight.size()) != g.edge_count())
    return "weight table size";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto a = d.rotation[v];
    auto b = g.incident(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return "rotation at vertex " + std::to_string(v);
  }
  std::vector<int> seen(d.crossings.size(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (CrossingId c : d.sequence[e]) {
      if (c < 0 || c >= static_cast<int>(d.crossings.size()))
        return "unknown crossing id on edge " + std::to_string(e);
      const Crossing& x = d.crossings[c];
      if (x.e != e && x.f != e)
        return "crossing " + std::to_string(c) + " listed on a foreign edge";
      ++seen[c];
    }
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    if (x.e < 0 || x.f < 0 || x.e >= g.edge_count() || x.f >= g.edge_count() ||
        x.e == x.f || seen[c] != 2)
      return "crossing " + std::to_string(c) + " is not on two distinct edges";
  }
  return {};
}

// Dart bookkeeping for face tracing on a rotation system.
struct DartIndex {
  std::vector<int> offset;  // first dart of each vertex
  std::vector<int> head;    // dart -> head vertex
  std::vector<int> next;    // dart -> next dart along its face

  explicit DartIndex(const std::vector<std::vector<VertexId>>& rot) {
    const int n = static_cast<int>(rot.size());
    offset.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    head.resize(offset[n]);
    std::unordered_map<std::uint64_t, int> at;
    at.reserve(offset[n] * 2);
    for (int v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rot[v].size(); ++i) {
        head[offset[v] + i] = rot[v][i];
        at[static_cast<std::uint64_t>(v) << 32 | static_cast<std::uint32_t>(rot[v][i])] =
            static_cast<int>(i);
      }
    }
    next.assign(offset[n], -1);
    for (int v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rot[v].size(); ++i) {
        const int w = rot[v][i];
        auto it = at.find(static_cast<std::uint64_t>(w) << 32 | static_cast<std::uint32_t>(v));
        if (it == at.end()) continue;  // asymmetric; caught by the caller
        const int deg = offset[w + 1] - offset[w];
        next[offset[v] + i] = offset[w] + (it->second + 1) % deg;
      }
    }
  }
  int tail(int dart) const {
    return static_cast<int>(std::upper_bound(offset.begin(), offset.end(), dart) -
                            offset.begin()) - 1;
  }
};

struct Traced {
  std::vector<std::vector<VertexId>> faces;
  std::vector<int> component;
  int components = 0;
  bool sphere = true;
  int face_count = 0;
};

Traced trace(const std::vector<std::vector<VertexId>>& rot) {
  Traced t;
  const int n = static_cast<int>(rot.size());
  DartIndex idx(rot);
  for (int d = 0; d < static_cast<int>(idx.next.size()); ++d) {
    if (idx.next[d] < 0) {
      t.sphere = false;
      return t;
    }
  }
  t.component.assign(n, -1);
  std::vector<int> verts, edges2, faces;
  for (int s = 0; s < n; ++s) {
    if (t.component[s] >= 0) continue;
    const int c = t.components++;
    verts.push_back(0);
    edges2.push_back(0);
    faces.push_back(0);
    std::vector<int> stack{s};
    t.component[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++verts[c];
      edges2[c] += static_cast<int>(rot[v].size());
      for (int w : rot[v])
        if (t.component[w] < 0) {
          t.component[w] = c;
          stack.push_back(w);
        }
    }
  }
  std::vector<char> used(idx.next.size(), 0);
  for (int d = 0; d < static_cast<int>(idx.next.size()); ++d) {
    if (used[d]) continue;
    std::vector<VertexId> face;
    for (int x = d; !used[x]; x = idx.next[x]) {
      used[x] = 1;
      face.push_back(idx.tail(x));
    }
    ++faces[t.component[face.front()]];
    t.faces.push_back(std::move(face));
  }
  int total_faces = 0;
  for (int c = 0; c < t.components; ++c) {
    const int f = std::max(faces[c], 1);
    if (verts[c] - edges2[c] / 2 + f != 2) t.sphere = false;
    total_faces += f;
  }
  t.face_count = total_faces - (t.components - 1);
  return t;
}

Planarization build_planarization(const Drawing& d) {
  const Graph& g = d.graph;
  const int n = g.vertex_count();
  Planarization p;
  p.original_count = n;
  p.rotation.assign(n + d.crossings.size(), {});
  p.edge_path.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto& path = p.edge_path[e];
    path.push_back(g.edge(e).u);
    for (CrossingId c : d.sequence[e]) path.push_back(n + c);
    path.push_back(g.edge(e).v);
  }
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : d.rotation[v]) {
      const auto& path = p.edge_path[e];
      p.rotation[v].push_back(g.edge(e).u == v ? path[1] : path[path.size() - 2]);
    }
  }
  auto ends = [&](EdgeId e, CrossingId c) {
    const auto& path = p.edge_path[e];
    auto it = std::find(path.begin(), path.end(), n + c);
    return std::pair{*(it - 1), *(it + 1)};
  };
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    auto [em, ep] = ends(x.e, static_cast<CrossingId>(c));
    auto [fm, fp] = ends(x.f, static_cast<CrossingId>(c));
    p.rotation[n + c] = x.flipped ? std::vector<VertexId>{em, fp, ep, fm}
                                  : std::vector<VertexId>{em, fm, ep, fp};
  }
  Traced t = trace(p.rotation);
  p.faces = std::move(t.faces);
  p.component = std::move(t.component);
  p.component_count = t.components;
  p.face_count = t.face_count;
  if (!t.sphere) p.component_count = -1;
  return p;
}

}  // namespace

Validation validate_good(const Drawing& d) {
  if (auto problem = structural_problem(d); !problem.empty())
    return {Violation::kMalformed, problem};
  const Graph& g = d.graph;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    if (g.edge(x.e).adjacent_to(g.edge(x.f)))
      return {Violation::kAdjacentCrossing,
              "crossing " + std::to_string(c) + " joins adjacent edges"};
  }
  std::set<std::pair<EdgeId, EdgeId>> pairs;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    if (!pairs.insert(std::minmax(x.e, x.f)).second)
      return {Violation::kDoubleCrossing,
              "edges " + std::to_string(x.e) + " and " + std::to_string(x.f) +
                  " cross more than once"};
  }
  Planarization p = build_planarization(d);
  if (p.component_count < 0)
    return {Violation::kUnrealizable, "planarization is not a sphere embedding"};
  return {};
}

Count crossing_count(const Drawing& d) {
  if (d.weight.empty()) return Count(d.crossings.size());
  Count total = 0;
  for (const Crossing& x : d.crossings) total += d.weight[x.e] * d.weight[x.f];
  return total;
}

Planarization planarize(const Drawing& d) {
  if (auto problem = structural_problem(d); !problem.empty())
    throw std::invalid_argument("planarize: " + problem);
  Planarization p = build_planarization(d);
  if (p.component_count < 0)
    throw std::domain_error("planarize: no planar embedding extends the rotations");
  return p;
}

std::vector<int> normalize_cyclic(std::vector<int> seq) {
  if (!seq.empty())
    std::rotate(seq.begin(), std::min_element(seq.begin(), seq.end()), seq.end());
  return seq;
}

std::vector<VertexId> neighbor_rotation(const Drawing& d, VertexId v) {
  std::vector<VertexId> out;
  for (EdgeId e : d.rotation[v]) out.push_back(d.graph.edge(e).other(v));
  return normalize_cyclic(std::move(out));
}

std::string canonical_form(const Drawing& d) {
  const Graph& g = d.graph;
  std::ostringstream out;
  out << "V" << g.vertex_count();
  // Edges are addressed by endpoints so that edge numbering does not matter.
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a) < g.edge(b); });
  auto name = [&](EdgeId e) {
    return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  };
  for (EdgeId e : order) {
    out << "|" << name(e) << ":";
    for (CrossingId c : d.sequence[e]) {
      const Crossing& x = d.crossings[c];
      const EdgeId other = x.e == e ? x.f : x.e;
      // Orientation relative to the lexicographically smaller edge.
      const bool e_first = g.edge(x.e) < g.edge(x.f);
      out << name(other) << (x.flipped != !e_first ? "^" : "_") << ",";
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "|r" << v << ":";
    for (VertexId w : neighbor_rotation(d, v)) out << w << ",";
  }
  return out.str();
}

bool equivalent(const Drawing& a, const Drawing& b) {
  if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
  auto ea = a.graph.edges(), eb = b.graph.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  if (ea != eb) return false;
  return canonical_form(a) == canonical_form(b);
}

Drawing induced_subdrawing(const Drawing& d, const std::vector<VertexId>& keep) {
  const Graph& g = d.graph;
  std::vector<VertexId> id(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<VertexId>(i);

  struct Kept {
    Edge ends;
    EdgeId old;
    bool reversed;
  };
  std::vector<Kept> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId a = id[g.edge(e).u], b = id[g.edge(e).v];
    if (a < 0 || b < 0) continue;
    kept.push_back({{std::min(a, b), std::max(a, b)}, e, a > b});
  }
  std::sort(kept.begin(), kept.end(),
            [](const Kept& x, const Kept& y) { return x.ends < y.ends; });
  std::vector<EdgeId> new_edge(g.edge_count(), -1);
  std::vector<char> reversed(g.edge_count(), 0);
  Graph h(static_cast<int>(keep.size()));
  for (const Kept& k : kept) {
    new_edge[k.old] = h.add_edge(k.ends.u, k.ends.v);
    reversed[k.old] = k.reversed;
  }

  // Keep crossings between surviving edges, ordered by new edge pair.
  std::vector<std::pair<std::pair<EdgeId, EdgeId>, CrossingId>> xs;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    if (new_edge[x.e] < 0 || new_edge[x.f] < 0) continue;
    xs.push_back({std::minmax(new_edge[x.e], new_edge[x.f]), static_cast<CrossingId>(c)});
  }
  std::sort(xs.begin(), xs.end());
  std::vector<CrossingId> new_crossing(d.crossings.size(), -1);
  Drawing out;
  for (const auto& [pair, c] : xs) {
    const Crossing& x = d.crossings[c];
    bool flipped = x.flipped;
    // Reversing one edge's direction mirrors the orientation code, as does
    // swapping the roles of e and f.
    if (reversed[x.e]) flipped = !flipped;
    if (reversed[x.f]) flipped = !flipped;
    if (new_edge[x.e] != pair.first) flipped = !flipped;
    new_crossing[c] = static_cast<CrossingId>(out.crossings.size());
    out.crossings.push_back({pair.first, pair.second, flipped});
  }
  out.sequence.assign(h.edge_count(), {});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (new_edge[e] < 0) continue;
    auto& seq = out.sequence[new_edge[e]];
    for (CrossingId c : d.sequence[e])
      if (new_crossing[c] >= 0) seq.push_back(new_crossing[c]);
    if (reversed[e]) std::reverse(seq.begin(), seq.end());
  }
  out.rotation.assign(keep.size(), {});
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (EdgeId e : d.rotation[keep[i]])
      if (new_edge[e] >= 0) out.rotation[i].push_back(new_edge[e]);
  if (!d.weight.empty()) {
    out.weight.assign(h.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (new_edge[e] >= 0) out.weight[new_edge[e]] = d.weight[e];
  }
  out.graph = std::move(h);
  return out;
}

ClusterPartition clusters(const Drawing& d, const VertexCover& x) {
  const Graph& g = d.graph;
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < x.size(); ++i) index[x.vertices[i]] = i;

  std::map<std::pair<std::uint32_t, std::vector<int>>, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (index[v] >= 0) continue;
    std::uint32_t mask = 0;
    std::vector<int> order;
    for (EdgeId e : d.rotation[v]) {
      const int i = index[g.edge(e).other(v)];
      if (i < 0) throw std::invalid_argument("clusters: not a vertex cover");
      mask |= 1u << i;
      order.push_back(i);
    }
    groups[{mask, normalize_cyclic(std::move(order))}].push_back(v);
  }
  ClusterPartition p;
  p.cluster_of.assign(g.vertex_count(), -1);
  for (auto& [key, members] : groups) {
    for (VertexId v : members) p.cluster_of[v] = static_cast<int>(p.clusters.size());
    p.clusters.push_back({key.first, key.second, members});
  }
  return p;
}

namespace {

int edge_cluster(const Drawing& d, const ClusterPartition& p, EdgeId e) {
  const Edge& ed = d.graph.edge(e);
  if (p.cluster_of[ed.u] >= 0) return p.cluster_of[ed.u];
  return p.cluster_of[ed.v];
}

}  // namespace

Count noncluster_count(const Drawing& d, const VertexCover& x) {
  const ClusterPartition p = clusters(d, x);
  Count total = 0;
  for (const Crossing& c : d.crossings) {
    const int a = edge_cluster(d, p, c.e), b = edge_cluster(d, p, c.f);
    if (a >= 0 && a == b) continue;
    total += d.edge_weight(c.e) * d.edge_weight(c.f);
  }
  return total;
}

Count cluster_crossings(const Drawing& d, const ClusterPartition& p, int cluster) {
  Count total = 0;
  for (const Crossing& c : d.crossings) {
    if (edge_cluster(d, p, c.e) == cluster && edge_cluster(d, p, c.f) == cluster)
      total += d.edge_weight(c.e) * d.edge_weight(c.f);
  }
  return total;
}

Drawing WeightedClustering::weighted_drawing() const {
  Drawing out = drawing;
  const Graph& g = out.graph;
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (VertexId v : cover.vertices) in_cover[v] = 1;
  out.weight.assign(g.edge_count(), 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!in_cover[ed.u]) out.weight[e] = vertex_weight[ed.u];
    else if (!in_cover[ed.v]) out.weight[e] = vertex_weight[ed.v];
  }
  return out;
}

Count cl_value(const WeightedClustering& wc) {
  const Graph& g = wc.drawing.graph;
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (VertexId v : wc.cover.vertices) in_cover[v] = 1;
  Count total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_cover[v]) continue;
    total += choose2(wc.vertex_weight[v]) * zee(g.degree(v));
  }
  return total;
}

}  // namespace xcr
