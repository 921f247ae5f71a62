#include "xcr/clustering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace xcr {

std::int64_t rotations(int j) {
  std::int64_t out = 1;
  for (int i = 2; i < j; ++i) out *= i;
  return out;
}

std::vector<std::vector<int>> cyclic_orders(std::uint32_t mask) {
  std::vector<int> members;
  for (int b = 0; b < 32; ++b)
    if (mask >> b & 1u) members.push_back(b);
  if (members.size() <= 2) return {members};
  std::vector<std::vector<int>> out;
  std::vector<int> rest(members.begin() + 1, members.end());
  do {
    std::vector<int> order{members.front()};
    order.insert(order.end(), rest.begin(), rest.end());
    out.push_back(std::move(order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<RepresentativeSet> enumerate_rep_sets(const CompressedGraph& cg) {
  // Per neighbourhood: the admissible rotation-index sets.
  std::vector<std::vector<std::vector<Representative>>> choices;
  for (std::uint32_t mask : cg.present()) {
    if (mask == 0) continue;
    const std::int64_t total = rotations(std::popcount(mask));
    const Count h = cg.count(mask);
    const int cap = static_cast<int>(h < total ? static_cast<std::int64_t>(h) : total);
    std::vector<std::vector<Representative>> sets;
    for (int size = 1; size <= cap; ++size) {
      // Lexicographic combinations of `size` indices out of `total`.
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<Representative> s;
        for (int i : idx) s.push_back({mask, i});
        sets.push_back(std::move(s));
        int p = size - 1;
        while (p >= 0 && idx[p] == total - size + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
    choices.push_back(std::move(sets));
  }
  std::vector<RepresentativeSet> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    RepresentativeSet rs;
    for (std::size_t g = 0; g < choices.size(); ++g)
      rs.reps.insert(rs.reps.end(), choices[g][pick[g]].begin(), choices[g][pick[g]].end());
    out.push_back(std::move(rs));
    // Odometer with the first neighbourhood most significant.
    std::size_t g = choices.size();
    while (g > 0) {
      --g;
      if (++pick[g] < choices[g].size()) break;
      pick[g] = 0;
      if (g == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

Graph clustering_graph(const CompressedGraph& cg, const RepresentativeSet& reps) {
  Graph g(cg.k + static_cast<int>(reps.reps.size()));
  for (const Edge& e : cg.cover_graph.edges()) g.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < reps.reps.size(); ++i)
    for (int b = 0; b < cg.k; ++b)
      if (reps.reps[i].mask >> b & 1u) g.add_edge(b, cg.k + static_cast<int>(i));
  return g;
}

VertexCover AbstractClustering::cover() const {
  VertexCover x;
  for (int i = 0; i < k; ++i) x.vertices.push_back(i);
  return x;
}

std::vector<std::pair<EdgeId, EdgeId>> crossable_pairs(const Graph& g) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = e + 1; f < g.edge_count(); ++f)
      if (!g.edge(e).adjacent_to(g.edge(f))) out.push_back({e, f});
  return out;
}

ClusteringSearch::ClusteringSearch(const CompressedGraph& cg, RepresentativeSet reps)
    : k_(cg.k), reps_(std::move(reps)), graph_(clustering_graph(cg, reps_)),
      pairs_(crossable_pairs(graph_)) {
  for (const Representative& r : reps_.reps) {
    const auto orders = cyclic_orders(r.mask);
    tags_.push_back(orders.at(r.rotation));
  }
}

bool ClusteringSearch::run(int count, bool all_embeddings, const Prune& prune,
                           const Visit& visit) {
  if (count < 0 || count > static_cast<int>(pairs_.size())) return true;
  std::vector<int> chosen;
  bool keep_going = true;
  std::function<void(int)> pick = [&](int from) {
    if (!keep_going) return;
    if (static_cast<int>(chosen.size()) == count) {
      keep_going = realise(chosen, all_embeddings, visit);
      return;
    }
    const int need = count - static_cast<int>(chosen.size());
    for (int i = from; i + need <= static_cast<int>(pairs_.size()) && keep_going; ++i) {
      chosen.push_back(i);
      if (!prune || !prune(chosen)) pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return keep_going;
}

bool ClusteringSearch::realise(const std::vector<int>& chosen, bool all_embeddings,
                               const Visit& visit) {
  const int n = graph_.vertex_count();
  const int m = graph_.edge_count();
  const int c = static_cast<int>(chosen.size());

  std::vector<std::vector<int>> on_edge(m);  // local crossing ids per edge
  for (int i = 0; i < c; ++i) {
    on_edge[pairs_[chosen[i]].first].push_back(i);
    on_edge[pairs_[chosen[i]].second].push_back(i);
  }
  std::vector<EdgeId> multi;
  for (EdgeId e = 0; e < m; ++e)
    if (on_edge[e].size() >= 2) multi.push_back(e);

  bool keep_going = true;
  bool found = false;
  while (true) {
    // Planarization for the current per-edge orders.
    Graph p(n + c);
    std::vector<std::vector<VertexId>> path(m);
    for (EdgeId e = 0; e < m; ++e) {
      path[e].push_back(graph_.edge(e).u);
      for (int x : on_edge[e]) path[e].push_back(n + x);
      path[e].push_back(graph_.edge(e).v);
      for (std::size_t i = 0; i + 1 < path[e].size(); ++i) p.add_edge(path[e][i], path[e][i + 1]);
    }
    if (is_planar(p)) {
      std::vector<RotationConstraint> cons(n + c);
      for (std::size_t i = 0; i < tags_.size(); ++i) {
        const VertexId rv = k_ + static_cast<VertexId>(i);
        std::vector<VertexId> order;
        for (int b : tags_[i]) {
          const auto& pe = path[*graph_.find_edge(b, rv)];
          order.push_back(pe[pe.size() - 2]);
        }
        cons[rv].allowed.push_back(std::move(order));
      }
      auto ends = [&](EdgeId e, int x) {
        const auto& pe = path[e];
        auto it = std::find(pe.begin(), pe.end(), n + x);
        return std::pair{*(it - 1), *(it + 1)};
      };
      for (int x = 0; x < c; ++x) {
        auto [em, ep] = ends(pairs_[chosen[x]].first, x);
        auto [fm, fp] = ends(pairs_[chosen[x]].second, x);
        cons[n + x].allowed = {{em, fm, ep, fp}, {em, fp, ep, fm}};
      }
      EmbeddingEnumerator emb(p, std::move(cons));
      if (node_cap_) emb.set_node_cap(node_cap_ > nodes_ ? node_cap_ - nodes_ : 1);
      emb.run([&](const RotationSystem& rot) {
        AbstractClustering ac;
        ac.reps = reps_;
        ac.k = k_;
        Drawing& d = ac.drawing;
        d = Drawing::from_rotation(graph_, std::vector<std::vector<EdgeId>>(n));
        for (int x = 0; x < c; ++x) {
          const auto [e, f] = pairs_[chosen[x]];
          auto [em, ep] = ends(e, x);
          auto [fm, fp] = ends(f, x);
          const auto& r4 = rot[n + x];
          const std::size_t i0 = std::find(r4.begin(), r4.end(), em) - r4.begin();
          d.crossings.push_back({e, f, r4[(i0 + 1) % 4] == fp});
          if (graph_.edge(e).v < k_ && graph_.edge(f).v < k_) ++ac.r;
          (void)ep;
          (void)fm;
        }
        for (EdgeId e = 0; e < m; ++e) d.sequence[e] = on_edge[e];
        for (VertexId v = 0; v < n; ++v) {
          for (VertexId nb : rot[v]) {
            for (EdgeId e : graph_.incident(v)) {
              const auto& pe = path[e];
              const VertexId first = graph_.edge(e).u == v ? pe[1] : pe[pe.size() - 2];
              if (first == nb) {
                d.rotation[v].push_back(e);
                break;
              }
            }
          }
        }
        found = true;
        keep_going = visit(ac);
        return keep_going && all_embeddings;
      });
      nodes_ += emb.nodes();
    }
    if (!keep_going || (found && !all_embeddings)) break;
    // Next combination of per-edge orders.
    std::size_t i = 0;
    for (; i < multi.size(); ++i) {
      auto& list = on_edge[multi[i]];
      if (std::next_permutation(list.begin(), list.end())) break;
    }
    if (i == multi.size()) break;
  }
  return keep_going;
}

std::vector<AbstractClustering> enumerate_clusterings(const CompressedGraph& cg, int budget,
                                                      std::uint64_t node_cap) {
  std::vector<AbstractClustering> out;
  for (const RepresentativeSet& rs : enumerate_rep_sets(cg)) {
    ClusteringSearch search(cg, rs);
    search.set_node_cap(node_cap);
    std::vector<std::pair<std::string, AbstractClustering>> found;
    for (int count = 0; count <= budget; ++count) {
      search.run(count, true, nullptr, [&](const AbstractClustering& ac) {
        found.push_back({canonical_form(ac.drawing), ac});
        return true;
      });
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (i > 0 && found[i].first == found[i - 1].first) continue;
      out.push_back(std::move(found[i].second));
    }
  }
  return out;
}

}  // namespace xcr
