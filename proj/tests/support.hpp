#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "xcr/graph.hpp"

namespace xcr::testing {

inline Graph complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline Graph complete_bipartite(int m, int n) {
  Graph g(m + n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) g.add_edge(a, m + b);
  return g;
}

inline CompressedGraph compressed_k3n(const Count& n) {
  CompressedGraph cg;
  cg.k = 3;
  cg.cover_graph = Graph(3);
  cg.h[7] = n;
  return cg;
}

/// Adjacency bits of g under every vertex permutation; the least is a
/// canonical label of the isomorphism class.
inline std::uint64_t canonical_label(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const Edge& e : g.edges()) {
      int a = perm[e.u], b = perm[e.v];
      if (a > b) std::swap(a, b);
      code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best | (std::uint64_t{static_cast<unsigned>(n)} << 58);
}

inline bool connected(const Graph& g) { return g.components().size() <= 1; }

/// Connected simple graphs on 1..max_n vertices with a vertex cover of at
/// most three vertices, one per isomorphism class: vertices 0..2 (or fewer)
/// form the cover, every other vertex picks a neighbourhood inside it.
inline std::vector<Graph> small_cover_graphs(int max_n) {
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  for (int n = 1; n <= max_n; ++n) {
    const int s = std::min(3, n);
    std::vector<std::pair<int, int>> xe;
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) xe.push_back({a, b});
    const int masks = 1 << s;
    const int outside = n - s;
    for (int gx = 0; gx < (1 << xe.size()); ++gx) {
      // Non-decreasing mask sequences: multisets of neighbourhoods.
      std::vector<int> pick(outside, 0);
      while (true) {
        Graph g(n);
        for (std::size_t i = 0; i < xe.size(); ++i)
          if (gx >> i & 1) g.add_edge(xe[i].first, xe[i].second);
        for (int t = 0; t < outside; ++t)
          for (int b = 0; b < s; ++b)
            if (pick[t] >> b & 1) g.add_edge(b, s + t);
        if (connected(g) && seen.insert(canonical_label(g)).second) out.push_back(g);
        int p = outside - 1;
        while (p >= 0 && pick[p] == masks - 1) --p;
        if (p < 0) break;
        ++pick[p];
        for (int q = p + 1; q < outside; ++q) pick[q] = pick[p];
      }
    }
  }
  return out;
}

}  // namespace xcr::testing
