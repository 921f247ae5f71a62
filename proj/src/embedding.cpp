#include "xcr/embedding.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace xcr {

bool is_cyclic_subsequence(const std::vector<VertexId>& partial,
                           const std::vector<VertexId>& full) {
  if (partial.size() <= 2) return true;
  std::vector<int> pos;
  pos.reserve(partial.size());
  for (VertexId v : partial) {
    auto it = std::find(full.begin(), full.end(), v);
    if (it == full.end()) return false;
    pos.push_back(static_cast<int>(it - full.begin()));
  }
  int descents = 0;
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] > pos[(i + 1) % pos.size()]) ++descents;
  return descents <= 1;
}

EmbeddingEnumerator::EmbeddingEnumerator(const Graph& g,
                                         std::vector<RotationConstraint> constraints)
    : graph_(g), constraints_(std::move(constraints)), rot_(g.vertex_count()) {
  constraints_.resize(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0), used(g.edge_count(), 0);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<VertexId> queue{s};
    bool first = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId v = queue[i];
      for (VertexId w : g.neighbors(v)) {
        const EdgeId e = *g.find_edge(v, w);
        if (used[e]) continue;
        used[e] = 1;
        steps_.push_back({v, w, first});
        first = false;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
}

bool EmbeddingEnumerator::admissible(VertexId v) const {
  const auto& allowed = constraints_[v].allowed;
  if (allowed.empty()) return true;
  return std::any_of(allowed.begin(), allowed.end(), [&](const auto& order) {
    return is_cyclic_subsequence(rot_[v], order);
  });
}

bool EmbeddingEnumerator::tick() {
  ++nodes_;
  if (node_cap_ && nodes_ > node_cap_)
    throw ResourceCapExceeded("embedding search exceeded its node cap");
  return true;
}

bool EmbeddingEnumerator::run(const std::function<bool(const RotationSystem&)>& visit) {
  visit_ = &visit;
  for (auto& r : rot_) r.clear();
  for (VertexId v = 0; v < graph_.vertex_count(); ++v)
    if (!admissible(v)) return true;
  return descend(0);
}

bool EmbeddingEnumerator::descend(std::size_t step) {
  tick();
  if (step == steps_.size()) return (*visit_)(rot_);
  const auto [u, v, first] = steps_[step];

  auto try_insert = [&](std::size_t pos_u, std::size_t pos_v) {
    rot_[u].insert(rot_[u].begin() + static_cast<std::ptrdiff_t>(pos_u), v);
    rot_[v].insert(rot_[v].begin() + static_cast<std::ptrdiff_t>(pos_v), u);
    bool keep_going = true;
    if (admissible(u) && admissible(v)) keep_going = descend(step + 1);
    rot_[u].erase(rot_[u].begin() + static_cast<std::ptrdiff_t>(pos_u));
    rot_[v].erase(rot_[v].begin() + static_cast<std::ptrdiff_t>(pos_v));
    return keep_going;
  };

  if (first || rot_[v].empty()) {
    // v is new: attach it in any corner of u.
    const std::size_t corners = std::max<std::size_t>(rot_[u].size(), 1);
    for (std::size_t i = 0; i < corners; ++i) {
      const std::size_t pos = rot_[u].empty() ? 0 : i + 1;
      if (!try_insert(pos, 0)) return false;
    }
    return true;
  }

  // Both endpoints present: split a face through a corner of u and of v.
  // A corner is identified by the neighbour after which the new edge goes.
  auto index_of = [&](VertexId at, VertexId nb) {
    return static_cast<std::size_t>(std::find(rot_[at].begin(), rot_[at].end(), nb) -
                                    rot_[at].begin());
  };
  // Collect the faces through u first; the rotation is edited while
  // recursing, so candidates are materialised up front.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  std::vector<std::pair<VertexId, std::size_t>> visited;  // (vertex, index)
  auto seen = [&](VertexId a, std::size_t i) {
    return std::find(visited.begin(), visited.end(), std::pair{a, i}) != visited.end();
  };
  for (std::size_t start = 0; start < rot_[u].size(); ++start) {
    if (seen(u, start)) continue;
    std::vector<std::size_t> corners_u, corners_v;
    VertexId at = u;
    std::size_t idx = start;
    do {
      visited.push_back({at, idx});
      const VertexId to = rot_[at][idx];
      const std::size_t back = index_of(to, at);
      // Arriving at `to` from `at`: the corner is right after `at`.
      if (to == u) corners_u.push_back(back + 1);
      if (to == v) corners_v.push_back(back + 1);
      at = to;
      idx = (back + 1) % rot_[to].size();
    } while (!(at == u && idx == start));
    for (std::size_t cu : corners_u)
      for (std::size_t cv : corners_v) candidates.push_back({cu, cv});
  }
  for (auto [cu, cv] : candidates)
    if (!try_insert(cu, cv)) return false;
  return true;
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(g.vertex_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace xcr
