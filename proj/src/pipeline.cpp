#include "xcr/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <bit>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "xcr/drawing_io.hpp"
#include "xcr/embedding.hpp"
#include "xcr/geometry.hpp"
#include "xcr/iqp.hpp"
#include "xcr/lift.hpp"
#include "xcr/oracle.hpp"

namespace xcr {

std::vector<std::pair<std::vector<VertexId>, CompressedGraph>> split_components(
    const CompressedGraph& cg) {
  std::vector<int> parent(cg.k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const Edge& e : cg.cover_graph.edges()) unite(e.u, e.v);
  for (std::uint32_t mask : cg.present()) {
    if (mask == 0) continue;
    const int low = std::countr_zero(mask);
    for (int b = low + 1; b < cg.k; ++b)
      if (mask >> b & 1u) unite(low, b);
  }

  std::vector<std::pair<std::vector<VertexId>, CompressedGraph>> out;
  std::vector<int> piece(cg.k, -1), local(cg.k, -1);
  for (int v = 0; v < cg.k; ++v) {
    const int root = find(v);
    if (piece[root] < 0) {
      piece[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    auto& cover = out[piece[root]].first;
    local[v] = static_cast<int>(cover.size());
    cover.push_back(v);
  }
  for (auto& [cover, sub] : out) {
    sub.k = static_cast<int>(cover.size());
    sub.cover_graph = Graph(sub.k);
  }
  for (const Edge& e : cg.cover_graph.edges())
    out[piece[find(e.u)]].second.cover_graph.add_edge(local[e.u], local[e.v]);
  for (const auto& [mask, count] : cg.h) {
    if (mask == 0 || count == 0) continue;
    std::uint32_t m = 0;
    for (int b = 0; b < cg.k; ++b)
      if (mask >> b & 1u) m |= 1u << local[b];
    out[piece[find(std::countr_zero(mask))]].second.h[m] = count;
  }
  return out;
}

namespace {

// One representative per neighbourhood, every vertex on the parabola y = x².
// Points in convex position admit no vertex on a foreign edge; triple
// crossings are avoided by re-spacing.
AbstractClustering canonical_clustering(const CompressedGraph& cg) {
  RepresentativeSet rs;
  for (std::uint32_t mask : cg.present())
    if (mask != 0) rs.reps.push_back({mask, 0});
  const Graph g = clustering_graph(cg, rs);
  for (std::int64_t a = 0;; ++a) {
    std::vector<Point> at;
    for (std::int64_t i = 0; i < g.vertex_count(); ++i) {
      const std::int64_t x = i * (a + 3) + (i * i * (a + 1)) % (a + 3);
      at.push_back({x, x * x});
    }
    Drawing d;
    try {
      d = straight_line_drawing(g, at);
    } catch (const DegenerateGeometry&) {
      if (a > 1000) throw;
      continue;
    }
    AbstractClustering ac;
    ac.k = cg.k;
    for (std::size_t i = 0; i < rs.reps.size(); ++i) {
      const VertexId v = cg.k + static_cast<VertexId>(i);
      std::vector<int> order;
      for (EdgeId e : d.rotation[v]) order.push_back(d.graph.edge(e).other(v));
      order = normalize_cyclic(order);
      const auto orders = cyclic_orders(rs.reps[i].mask);
      rs.reps[i].rotation =
          static_cast<int>(std::find(orders.begin(), orders.end(), order) - orders.begin());
    }
    ac.reps = rs;
    for (const Crossing& x : d.crossings)
      if (d.graph.edge(x.e).v < cg.k && d.graph.edge(x.f).v < cg.k) ++ac.r;
    ac.drawing = std::move(d);
    return ac;
  }
}

// Least Σ C(z,2)·Z over the representatives with every z >= 1: the targets
// split as evenly as possible.
Count least_cluster_term(const CompressedGraph& cg, const RepresentativeSet& rs) {
  Count total = 0;
  for (std::size_t i = 0; i < rs.reps.size();) {
    std::size_t j = i;
    while (j < rs.reps.size() && rs.reps[j].mask == rs.reps[i].mask) ++j;
    const Count h = cg.count(rs.reps[i].mask);
    const Count g = static_cast<int>(j - i);
    const Count q = h / g, rem = h % g;
    total += (rem * choose2(q + 1) + (g - rem) * choose2(q)) * zee(std::popcount(rs.reps[i].mask));
    i = j;
  }
  return total;
}

int worker_count(const SolveOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  if (const char* env = std::getenv("XCR_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

struct Found {
  int rep_set;
  AbstractClustering clustering;
  IqpInstance instance;
  IqpSolution solution;
};

// Everything the search needs about one representative set.
struct RepSetState {
  ClusteringSearch search;
  Count floor;                      // least cluster term
  std::vector<Count> edge_weight;   // least weight of every clustering edge
};

ComponentResult solve_component(const CompressedGraph& cg, int index, const SolveOptions& opts,
                                SolveReport& report) {
  ComponentResult res;
  res.graph = cg;

  const AbstractClustering canon = canonical_clustering(cg);
  const IqpInstance canon_inst = build_iqp(canon, cg);
  std::vector<Count> canon_z;
  for (const Count& h : canon_inst.h) canon_z.push_back(h);
  Count best = true_value(canon_inst, canon_z);
  bool have = false;

  std::vector<RepSetState> states;
  for (const RepresentativeSet& rs : enumerate_rep_sets(cg)) {
    RepSetState st{ClusteringSearch(cg, rs), least_cluster_term(cg, rs), {}};
    st.search.set_node_cap(opts.enum_node_cap);
    std::vector<int> group_size;
    for (const Edge& e : st.search.graph().edges()) {
      if (e.v < cg.k) {
        st.edge_weight.push_back(1);
        continue;
      }
      const auto& rep = rs.reps[e.v - cg.k];
      int same = 0;
      for (const auto& other : rs.reps) same += other.mask == rep.mask;
      st.edge_weight.push_back(same == 1 ? cg.count(rep.mask) : Count(1));
    }
    states.push_back(std::move(st));
  }

  // Each level is processed in batches of representative sets; the bound is
  // refreshed between batches. The batch size is fixed so the outcome does
  // not depend on the number of workers.
  constexpr std::size_t kBatch = 8;
  const int workers = worker_count(opts);
  for (int level = 0;; ++level) {
    // Once a winner exists only strict improvements matter.
    auto open = [&](const RepSetState& st) {
      return have ? st.floor + level < best : st.floor + level <= best;
    };
    std::vector<int> todo;
    bool more = false;
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (!open(states[j])) continue;
      more = true;
      if (level <= static_cast<int>(states[j].search.pairs().size()))
        todo.push_back(static_cast<int>(j));
    }
    if (!more || todo.empty()) break;
    if (opts.budget_cap > 0 && level > opts.budget_cap)
      throw ResourceCapExceeded("clustering budget cap exceeded");

    for (std::size_t from = 0; from < todo.size(); from += kBatch) {
      std::vector<int> active;
      for (std::size_t t = from; t < std::min(todo.size(), from + kBatch); ++t)
        if (open(states[todo[t]])) active.push_back(todo[t]);
      const Count snapshot = best;
      const bool had = have;
      std::vector<std::vector<Found>> found(active.size());
      std::vector<std::exception_ptr> failure(active.size());
      auto work = [&](std::size_t t) {
        try {
          RepSetState& st = states[active[t]];
          Count local = snapshot;
          bool strict = had;
          auto prune = [&](const std::vector<int>& chosen) {
            Count lb = st.floor + (level - static_cast<int>(chosen.size()));
            for (int c : chosen) {
              const auto [e, f] = st.search.pairs()[c];
              lb += st.edge_weight[e] * st.edge_weight[f];
            }
            return strict ? lb >= local : lb > local;
          };
          st.search.run(level, false, prune, [&](const AbstractClustering& ac) {
            IqpInstance inst = build_iqp(ac, cg);
            IqpOptions io;
            io.lower.assign(inst.size(), 1);
            io.node_cap = opts.iqp_node_cap;
            IqpSolution sol = solve_iqp(inst, io);
            if (strict ? sol.value < local : sol.value <= local) {
              local = sol.value;
              strict = true;
            }
            found[t].push_back({active[t], ac, std::move(inst), std::move(sol)});
            // Nothing later in this set can beat the level's floor.
            return !(strict && local <= st.floor + level);
          });
        } catch (...) {
          failure[t] = std::current_exception();
        }
      };
      if (workers <= 1 || active.size() <= 1) {
        for (std::size_t t = 0; t < active.size(); ++t) work(t);
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min<int>(workers, static_cast<int>(active.size())); ++w)
          pool.emplace_back([&] {
            for (std::size_t t; (t = next++) < active.size();) work(t);
          });
        for (auto& th : pool) th.join();
      }
      for (std::size_t t = 0; t < active.size(); ++t) {
        if (failure[t]) std::rethrow_exception(failure[t]);
        for (Found& f : found[t]) {
          ++report.clusterings;
          if (opts.keep_log)
            report.log.push_back({index, level, f.rep_set, f.instance, f.solution.objective,
                                  f.solution.value});
          if ((!have && f.solution.value <= best) || f.solution.value < best) {
            have = true;
            best = f.solution.value;
            res.winner = std::move(f.clustering);
            res.z = f.solution.z;
            res.level = level;
            res.rep_set = f.rep_set;
          }
        }
      }
    }
  }
  if (!have) throw std::logic_error("no clustering reached the canonical bound");
  res.value = best;
  return res;
}

// Appends `part` to `out` with vertex v renamed new_id[v]; out.graph must
// already contain the renamed edges.
void merge_into(Drawing& out, const Drawing& part, const std::vector<VertexId>& new_id) {
  const Graph& g = part.graph;
  std::vector<EdgeId> te(g.edge_count());
  std::vector<char> rev(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId a = new_id[g.edge(e).u], b = new_id[g.edge(e).v];
    const auto found = out.graph.find_edge(a, b);
    if (!found) throw std::invalid_argument("relabel: edge missing from target");
    te[e] = *found;
    rev[e] = a > b;
  }
  const CrossingId base = static_cast<CrossingId>(out.crossings.size());
  for (const Crossing& x : part.crossings) {
    EdgeId e = te[x.e], f = te[x.f];
    bool flipped = x.flipped != (rev[x.e] != rev[x.f]);
    if (e > f) {
      std::swap(e, f);
      flipped = !flipped;
    }
    out.crossings.push_back({e, f, flipped});
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto& seq = out.sequence[te[e]];
    seq.clear();
    for (CrossingId c : part.sequence[e]) seq.push_back(base + c);
    if (rev[e]) std::reverse(seq.begin(), seq.end());
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& rot = out.rotation[new_id[v]];
    rot.clear();
    for (EdgeId e : part.rotation[v]) rot.push_back(te[e]);
  }
}

Drawing empty_over(const Graph& g) {
  Drawing d;
  d.graph = g;
  d.sequence.assign(g.edge_count(), {});
  d.rotation.assign(g.vertex_count(), {});
  return d;
}

std::optional<Drawing> lift_all(const CompressedGraph& cg, const SolveReport& report) {
  Count size = cg.outside_vertices() + cg.k;
  for (const ComponentResult& c : report.components) size += lift_size(c.winner, c.z);
  if (size > kLiftLimit) return std::nullopt;

  Drawing out = empty_over(expand(cg));
  std::map<std::uint32_t, VertexId> block;
  VertexId next = cg.k;
  for (const auto& [mask, count] : cg.h) {
    block[mask] = next;
    next += static_cast<VertexId>(count);
  }
  for (const ComponentResult& c : report.components) {
    const Drawing part = lift(c.winner, c.z);
    std::vector<VertexId> id(c.cover.begin(), c.cover.end());
    std::map<std::uint32_t, VertexId> used;
    for (std::size_t i = 0; i < c.winner.reps.reps.size(); ++i) {
      std::uint32_t global = 0;
      for (int b = 0; b < c.graph.k; ++b)
        if (c.winner.reps.reps[i].mask >> b & 1u) global |= 1u << c.cover[b];
      VertexId& at = used.try_emplace(global, block.at(global)).first->second;
      for (Count t = 0; t < c.z[i]; ++t) id.push_back(at++);
    }
    merge_into(out, part, id);
  }
  return out;
}

}  // namespace

Count initial_budget(const CompressedGraph& cg) {
  Count total = 0;
  for (const auto& [cover, sub] : split_components(cg)) {
    const AbstractClustering ac = canonical_clustering(sub);
    const IqpInstance inst = build_iqp(ac, sub);
    total += true_value(inst, std::vector<Count>(inst.h.begin(), inst.h.end()));
  }
  return total;
}

SolveReport crossing_number(const CompressedGraph& cg, const SolveOptions& opts) {
  SolveReport report;
  report.crossing_number = 0;
  int index = 0;
  for (auto& [cover, sub] : split_components(cg)) {
    ComponentResult res = solve_component(sub, index++, opts, report);
    res.cover = cover;
    report.crossing_number += res.value;
    report.components.push_back(std::move(res));
  }
  if (opts.lift) report.drawing = lift_all(cg, report);
  return report;
}

std::string report_to_json(const SolveReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["crossing_number"] = to_string(r.crossing_number);
  j["clusterings"] = r.clusterings;
  ordered_json comps = ordered_json::array();
  for (const ComponentResult& c : r.components) {
    ordered_json o;
    o["cover"] = c.cover;
    o["value"] = to_string(c.value);
    o["level"] = c.level;
    o["rep_set"] = c.rep_set;
    ordered_json reps = ordered_json::array();
    for (const auto& rep : c.winner.reps.reps)
      reps.push_back({{"mask", rep.mask}, {"rotation", rep.rotation}});
    o["representatives"] = reps;
    ordered_json z = ordered_json::array();
    for (const Count& v : c.z) z.push_back(to_string(v));
    o["z"] = z;
    o["winner"] = drawing_to_string(c.winner.drawing);
    comps.push_back(o);
  }
  j["components"] = comps;
  ordered_json log = ordered_json::array();
  for (const ClusteringRecord& rec : r.log) {
    std::ostringstream inst;
    write_iqp(inst, rec.instance);
    log.push_back({{"component", rec.component},
                   {"level", rec.level},
                   {"rep_set", rec.rep_set},
                   {"f", to_string(rec.objective)},
                   {"value", to_string(rec.value)},
                   {"instance", inst.str()}});
  }
  j["log"] = log;
  if (r.drawing) j["drawing"] = drawing_to_string(*r.drawing);
  return j.dump(2) + "\n";
}

VerifyResult verify(const SolveReport& report, const CompressedGraph& cg) {
  VerifyResult out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.message = std::move(msg);
    return out;
  };
  if (report.drawing) {
    const Validation v = validate_good(*report.drawing);
    if (!v.ok()) return fail("lifted drawing is not good: " + v.detail);
    if (crossing_count(*report.drawing) != report.crossing_number)
      return fail("lift count ≠ reported value");
    if (cg.outside_vertices() + cg.k <= kExpandLimit && !(report.drawing->graph == expand(cg)))
      return fail("lifted drawing is not a drawing of the input graph");
  }
  Count sum = 0;
  for (const ComponentResult& c : report.components) {
    const Count tv = true_value(build_iqp(c.winner, c.graph), c.z);
    if (tv != c.value) return fail("winner re-evaluates to " + to_string(tv));
    sum += tv;
  }
  if (sum != report.crossing_number) return fail("component values do not add up");
  if (cg.outside_vertices() + cg.k <= 64) {
    const Graph g = expand(cg);
    if (g.edge_count() <= kVerifyOracleEdges) {
      const int o = oracle_cr(g);
      out.oracle = o;
      if (o != report.crossing_number) return fail("oracle disagrees: " + std::to_string(o));
    }
  }
  out.message = "ok";
  return out;
}

Drawing relabel(const Drawing& d, const std::vector<VertexId>& new_id, const Graph& target) {
  Drawing out = empty_over(target);
  merge_into(out, d, new_id);
  return out;
}

std::vector<VertexId> expansion_map(const Graph& g, const VertexCover& x) {
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < x.size(); ++i) index[x.vertices[i]] = i;
  std::vector<std::pair<std::uint32_t, VertexId>> outside;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (index[v] >= 0) continue;
    std::uint32_t mask = 0;
    for (VertexId w : g.neighbors(v)) mask |= 1u << index[w];
    outside.push_back({mask, v});
  }
  std::sort(outside.begin(), outside.end());
  std::vector<VertexId> out(x.vertices.begin(), x.vertices.end());
  for (const auto& [mask, v] : outside) out.push_back(v);
  return out;
}

}  // namespace xcr
