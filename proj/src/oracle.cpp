#include "xcr/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace xcr {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// One candidate: which pairs cross and in which order along every edge.
struct Candidate {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<std::vector<int>> order;       // per edge, indices into pairs
  std::vector<std::vector<VertexId>> path;   // per edge, u .. v through n + i
};

// Walks crossing sets of size c in lexicographic order and, for each, every
// combination of per-edge crossing orders whose planarization is planar.
class CandidateWalk {
 public:
  explicit CandidateWalk(const Graph& g) : g_(g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
        const Edge& a = g.edge(e);
        const Edge& b = g.edge(f);
        if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) crossable_.push_back({e, f});
      }
  }

  std::size_t crossable() const { return crossable_.size(); }

  // visit returns false to stop; tick is called once per candidate.
  bool walk(int c, const std::function<bool(const Candidate&)>& visit,
            const std::function<void()>& tick) {
    std::vector<int> idx(c);
    for (int i = 0; i < c; ++i) idx[i] = i;
    const int total = static_cast<int>(crossable_.size());
    if (c > total) return true;
    while (true) {
      if (!orders(idx, visit, tick)) return false;
      int p = c - 1;
      while (p >= 0 && idx[p] == total - c + p) --p;
      if (p < 0) return true;
      ++idx[p];
      for (int q = p + 1; q < c; ++q) idx[q] = idx[q - 1] + 1;
    }
  }

 private:
  bool orders(const std::vector<int>& idx, const std::function<bool(const Candidate&)>& visit,
              const std::function<void()>& tick) {
    const int n = g_.vertex_count();
    const int m = g_.edge_count();
    Candidate cand;
    cand.order.assign(m, {});
    for (std::size_t i = 0; i < idx.size(); ++i) {
      cand.pairs.push_back(crossable_[idx[i]]);
      cand.order[cand.pairs.back().first].push_back(static_cast<int>(i));
      cand.order[cand.pairs.back().second].push_back(static_cast<int>(i));
    }
    std::vector<EdgeId> busy;
    for (EdgeId e = 0; e < m; ++e)
      if (cand.order[e].size() > 1) busy.push_back(e);
    while (true) {
      tick();
      BoostGraph bg(n + idx.size());
      cand.path.assign(m, {});
      for (EdgeId e = 0; e < m; ++e) {
        auto& p = cand.path[e];
        p.push_back(g_.edge(e).u);
        for (int i : cand.order[e]) p.push_back(n + i);
        p.push_back(g_.edge(e).v);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) boost::add_edge(p[j], p[j + 1], bg);
      }
      if (boost::boyer_myrvold_planarity_test(bg) && !visit(cand)) return false;
      std::size_t b = 0;
      for (; b < busy.size(); ++b)
        if (std::next_permutation(cand.order[busy[b]].begin(), cand.order[busy[b]].end())) break;
      if (b == busy.size()) return true;
    }
  }

  const Graph& g_;
  std::vector<std::pair<EdgeId, EdgeId>> crossable_;
};

// Rotation systems of a planarization built one edge at a time: each edge
// end is inserted into every slot of its endpoint's cyclic order, which
// produces every rotation system exactly once. Partial systems whose edges
// violate Euler's formula, or whose crossing points break alternation, are
// dropped.
class RotationSearch {
 public:
  RotationSearch(const Graph& g, const Candidate& cand) : g_(g), cand_(cand) {
    n_ = g.vertex_count();
    total_ = n_ + static_cast<int>(cand.pairs.size());
    adj_.assign(total_, {});
    for (const auto& p : cand.path)
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        adj_[p[j]].push_back(p[j + 1]);
        adj_[p[j + 1]].push_back(p[j]);
      }
    first_.assign(total_ + 1, 0);
    for (VertexId v = 0; v < total_; ++v) {
      std::sort(adj_[v].begin(), adj_[v].end());
      first_[v + 1] = first_[v] + static_cast<int>(adj_[v].size());
    }
    // Dart first_[v] + i runs from v to adj_[v][i].
    twin_.assign(first_[total_], -1);
    for (VertexId v = 0; v < total_; ++v)
      for (std::size_t i = 0; i < adj_[v].size(); ++i) {
        const VertexId w = adj_[v][i];
        const auto j = std::lower_bound(adj_[w].begin(), adj_[w].end(), v) - adj_[w].begin();
        twin_[first_[v] + i] = first_[w] + static_cast<int>(j);
      }
    succ_.assign(first_[total_], -1);
    mark_.assign(first_[total_], 0);
    // Vertices with the most earlier neighbours first, so cycles close
    // early; edges in the order their later endpoint appears.
    std::vector<int> placed_nb(total_, 0), position(total_, -1);
    for (int step = 0; step < total_; ++step) {
      VertexId best = -1;
      for (VertexId v = 0; v < total_; ++v)
        if (position[v] < 0 && (best < 0 || placed_nb[v] > placed_nb[best])) best = v;
      position[best] = step;
      for (VertexId w : adj_[best])
        if (position[w] >= 0) edges_.push_back({w, best});
      for (VertexId w : adj_[best]) ++placed_nb[w];
    }
    for (int i = 0; i < static_cast<int>(cand.pairs.size()); ++i) {
      const VertexId x = n_ + i;
      auto around = [&](EdgeId e) {
        const auto& p = cand_.path[e];
        const auto it = std::find(p.begin(), p.end(), x);
        return std::pair{*(it - 1), *(it + 1)};
      };
      const auto [em, ep] = around(cand.pairs[i].first);
      const auto [fm, fp] = around(cand.pairs[i].second);
      allowed_.push_back({std::array<VertexId, 4>{em, fm, ep, fp}, std::array<VertexId, 4>{em, fp, ep, fm}});
    }
    rot_.assign(total_, {});
    parent_.assign(total_, 0);
  }

  bool run(const std::function<bool(const Drawing&)>& visit) {
    visit_ = &visit;
    return insert(0);
  }

 private:
  // Whether the cyclic sequence `part` occurs in order inside `full`.
  static bool inside(const std::vector<VertexId>& part, const std::array<VertexId, 4>& full) {
    if (part.empty()) return true;
    const auto start = std::find(full.begin(), full.end(), part[0]);
    if (start == full.end()) return false;
    std::size_t at = start - full.begin();
    for (std::size_t i = 1; i < part.size(); ++i) {
      std::size_t step = 1;
      while (step < 4 && full[(at + step) % 4] != part[i]) ++step;
      if (step == 4) return false;
      at += step;
      if (at - (start - full.begin()) >= 4) return false;
    }
    return true;
  }

  bool alternates(VertexId v) const {
    if (v < n_) return true;
    const auto& al = allowed_[v - n_];
    return inside(rot_[v], al[0]) || inside(rot_[v], al[1]);
  }

  int dart(VertexId v, VertexId w) const {
    const auto& a = adj_[v];
    return first_[v] + static_cast<int>(std::lower_bound(a.begin(), a.end(), w) - a.begin());
  }

  VertexId root(VertexId v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  // Euler's formula on the edges inserted so far: faces are the orbits of
  // d -> succ(twin(d)).
  bool genus_zero() {
    int vertices = 0, darts = 0, faces = 0, components = 0;
    for (VertexId v = 0; v < total_; ++v) {
      const auto& r = rot_[v];
      if (r.empty()) continue;
      ++vertices;
      parent_[v] = v;
      darts += static_cast<int>(r.size());
      for (std::size_t i = 0; i < r.size(); ++i)
        succ_[dart(v, r[i])] = dart(v, r[(i + 1) % r.size()]);
    }
    ++stamp_;
    for (VertexId v = 0; v < total_; ++v)
      for (VertexId w : rot_[v]) {
        if (v < w) parent_[root(v)] = root(w);
        int d = dart(v, w);
        if (mark_[d] == stamp_) continue;
        ++faces;
        while (mark_[d] != stamp_) {
          mark_[d] = stamp_;
          d = succ_[twin_[d]];
        }
      }
    for (VertexId v = 0; v < total_; ++v)
      if (!rot_[v].empty() && root(v) == v) ++components;
    return vertices - darts / 2 + faces == 2 * components;
  }

  bool insert(std::size_t k) {
    if (k == edges_.size()) return (*visit_)(build());
    const auto [a, b] = edges_[k];
    auto& ra = rot_[a];
    auto& rb = rot_[b];
    const std::size_t sa = ra.empty() ? 0 : 1, ea = ra.empty() ? 0 : ra.size();
    const std::size_t sb = rb.empty() ? 0 : 1, eb = rb.empty() ? 0 : rb.size();
    for (std::size_t pa = sa; pa <= ea; ++pa) {
      ra.insert(ra.begin() + pa, b);
      if (alternates(a)) {
        for (std::size_t pb = sb; pb <= eb; ++pb) {
          rb.insert(rb.begin() + pb, a);
          const bool go = alternates(b) && genus_zero();
          if (go && !insert(k + 1)) return false;
          rb.erase(rb.begin() + pb);
        }
      }
      ra.erase(ra.begin() + pa);
    }
    return true;
  }

  Drawing build() const {
    Drawing d;
    d.graph = g_;
    const int m = g_.edge_count();
    d.sequence.assign(m, {});
    d.rotation.assign(n_, {});
    for (std::size_t i = 0; i < cand_.pairs.size(); ++i) {
      const auto [e, f] = cand_.pairs[i];
      const VertexId x = n_ + static_cast<VertexId>(i);
      auto around = [&](EdgeId ed) {
        const auto& p = cand_.path[ed];
        const auto it = std::find(p.begin(), p.end(), x);
        return std::pair{*(it - 1), *(it + 1)};
      };
      const VertexId em = around(e).first;
      const VertexId fp = around(f).second;
      const auto& r = rot_[x];
      const std::size_t at = std::find(r.begin(), r.end(), em) - r.begin();
      d.crossings.push_back({e, f, r[(at + 1) % 4] == fp});
    }
    for (EdgeId e = 0; e < m; ++e) d.sequence[e] = cand_.order[e];
    for (VertexId v = 0; v < n_; ++v)
      for (VertexId w : rot_[v])
        for (EdgeId e : g_.incident(v)) {
          const auto& p = cand_.path[e];
          if ((p.front() == v && p[1] == w) || (p.back() == v && p[p.size() - 2] == w)) {
            d.rotation[v].push_back(e);
            break;
          }
        }
    return d;
  }

  const Graph& g_;
  const Candidate& cand_;
  int n_ = 0, total_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<int> first_, twin_, succ_, mark_;
  int stamp_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::array<std::array<VertexId, 4>, 2>> allowed_;
  std::vector<std::vector<VertexId>> rot_;
  std::vector<VertexId> parent_;
  const std::function<bool(const Drawing&)>* visit_ = nullptr;
};

}  // namespace

int oracle_cr(const Graph& g, const OracleConfig& cfg) {
  if (g.edge_count() > cfg.max_edges) throw OracleLimitExceeded("oracle: too many edges");
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t ticks = 0;
  auto tick = [&] {
    if (cfg.time_cap_seconds > 0 && (++ticks & 1023) == 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
      if (spent.count() > cfg.time_cap_seconds) throw OracleLimitExceeded("oracle: time cap");
    }
  };
  CandidateWalk walk(g);
  // A simple plane graph on V >= 3 vertices has at most 3V - 6 edges; the
  // planarization gains one vertex and two edges per crossing.
  const int n = g.vertex_count(), m = g.edge_count();
  const int floor_c = n >= 3 ? std::max(0, m - 3 * n + 6) : 0;
  for (int c = floor_c; c <= cfg.max_crossings; ++c) {
    if (c > static_cast<int>(walk.crossable())) break;
    bool found = false;
    walk.walk(c, [&](const Candidate&) { return !(found = true); }, tick);
    if (found) return c;
  }
  throw OracleLimitExceeded("oracle: crossing ceiling reached");
}

void oracle_drawings(const Graph& g, int max_cr,
                     const std::function<bool(const Drawing&)>& visit) {
  CandidateWalk walk(g);
  std::set<std::string> seen;
  for (int c = 0; c <= max_cr; ++c) {
    const bool go = walk.walk(
        c,
        [&](const Candidate& cand) {
          RotationSearch rs(g, cand);
          return rs.run([&](const Drawing& d) {
            if (!validate_good(d).ok()) throw std::logic_error("oracle: invalid drawing");
            if (!seen.insert(canonical_form(d)).second) return true;
            return visit(d);
          });
        },
        [] {});
    if (!go) return;
  }
}

std::vector<Drawing> oracle_drawings(const Graph& g, int max_cr) {
  std::vector<Drawing> out;
  oracle_drawings(g, max_cr, [&](const Drawing& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

}  // namespace xcr
