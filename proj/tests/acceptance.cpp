// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "xcr/clustering.hpp"
#include "xcr/drawing.hpp"
#include "xcr/iqp.hpp"
#include "xcr/lift.hpp"
#include "xcr/oracle.hpp"
#include "xcr/pipeline.hpp"

using namespace xcr;
using xcr::testing::complete;
using xcr::testing::complete_bipartite;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

SolveReport solve(const Graph& g) {
  const auto x = find_vertex_cover(g, 8);
  if (!x) throw std::runtime_error("no small cover");
  return crossing_number(compress(g, *x));
}

CompressedGraph compressed(const Graph& g) { return compress(g, *find_vertex_cover(g, 8)); }

// Lifted drawing is good, of the right graph, and has the reported count.
bool lift_checks(const SolveReport& r, const CompressedGraph& cg, std::string& why) {
  if (!r.drawing) {
    why = "no lifted drawing";
    return false;
  }
  const Validation v = validate_good(*r.drawing);
  if (!v.ok()) {
    why = "lifted drawing not good: " + v.detail;
    return false;
  }
  if (!(r.drawing->graph == expand(cg))) {
    why = "lifted drawing has the wrong graph";
    return false;
  }
  if (crossing_count(*r.drawing) != r.crossing_number) {
    why = "lift has " + to_string(crossing_count(*r.drawing)) + " crossings, reported " +
          to_string(r.crossing_number);
    return false;
  }
  return true;
}

struct SuiteState {
  int lift_instances = 0;
  int lift_failures = 0;
  std::string lift_first;
  std::string reports;  // concatenated JSON of every suite instance
};

void note_lift(SuiteState& st, const SolveReport& r, const CompressedGraph& cg,
               const std::string& name) {
  ++st.lift_instances;
  std::string why;
  if (!lift_checks(r, cg, why)) {
    if (st.lift_failures++ == 0) st.lift_first = name + ": " + why;
  }
  st.reports += report_to_json(r);
}

void criterion1(SuiteState& st) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto graphs = xcr::testing::small_cover_graphs(7);
  int mismatches = 0;
  std::string first;
  for (const Graph& g : graphs) {
    const CompressedGraph cg = compressed(g);
    const SolveReport r = crossing_number(cg);
    const int o = oracle_cr(g);
    note_lift(st, r, cg, "graph with " + std::to_string(g.edge_count()) + " edges");
    if (r.crossing_number != o && mismatches++ == 0) {
      std::ostringstream s;
      for (const Edge& e : g.edges()) s << e.u << '-' << e.v << ' ';
      first = s.str() + "pipeline " + to_string(r.crossing_number) + " oracle " + std::to_string(o);
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs, " << mismatches << " mismatches";
  if (!first.empty()) d << " (first: " << first << ")";
  d << ", " << static_cast<int>(seconds_since(t0)) << " s";
  report(1, "oracle equivalence on connected graphs, n <= 7, cover <= 3", mismatches == 0 &&
         graphs.size() > 0, d.str());
}

void criterion2(SuiteState& st) {
  struct Named {
    std::string name;
    Graph g;
    int expected;
  };
  const std::vector<Named> named = {
      {"K4", complete(4), 0},           {"K5", complete(5), 1},
      {"K3,3", complete_bipartite(3, 3), 1}, {"K6", complete(6), 3},
      {"K3,4", complete_bipartite(3, 4), 2}, {"K3,5", complete_bipartite(3, 5), 4},
  };
  bool ok = true;
  std::ostringstream d;
  for (const auto& n : named) {
    const CompressedGraph cg = compressed(n.g);
    const SolveReport r = crossing_number(cg);
    note_lift(st, r, cg, n.name);
    const int o = oracle_cr(n.g);
    ok = ok && r.crossing_number == n.expected && o == n.expected;
    d << n.name << " pipeline=" << r.crossing_number << " oracle=" << o << "; ";
  }
  report(2, "named small graphs", ok, d.str());
}

// Orders of the leaves around a vertex of K_{2,m}, clockwise, from leaf 2.
std::vector<VertexId> leaf_order(const Drawing& d, VertexId v) {
  std::vector<VertexId> out;
  for (EdgeId e : d.rotation[v]) out.push_back(d.graph.edge(e).other(v));
  std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

void criterion3() {
  bool ok = true;
  std::ostringstream d;
  for (int m = 3; m <= 5; ++m) {
    const Graph g = complete_bipartite(2, m);
    const int z = static_cast<int>(zee(m));
    int least = -1;
    oracle_drawings(g, z, [&](const Drawing& dr) {
      if (leaf_order(dr, 0) != leaf_order(dr, 1)) return true;
      const int c = static_cast<int>(dr.crossings.size());
      if (least < 0 || c < least) least = c;
      return true;
    });
    ok = ok && least == z;
    d << "m=" << m << " min=" << least << " Z=" << z << "; ";
  }
  // Two stacked copies of a degree-7 star: K_{2,7} with equal rotations.
  CompressedGraph cg;
  cg.k = 7;
  cg.cover_graph = Graph(7);
  cg.h[127] = 2;
  ClusteringSearch search(cg, RepresentativeSet{{{127u, 0}}});
  std::optional<AbstractClustering> c;
  search.run(0, false, nullptr, [&](const AbstractClustering& ac) {
    c = ac;
    return false;
  });
  bool fig = false;
  if (c) {
    const Drawing l = lift(*c, {Count(2)});
    fig = validate_good(l).ok() && crossing_count(l) == 9 && leaf_order(l, 7) == leaf_order(l, 8);
    d << "stacked K2,7 crossings=" << crossing_count(l);
  }
  report(3, "K2,m with equal rotations attains Z(m); stacking gives Z(7)=9", ok && fig, d.str());
}

void criterion4() {
  std::int64_t drawings = 0, clusters_seen = 0, violations = 0;
  for (int n : {3, 4}) {
    const Graph g = complete_bipartite(3, n);
    VertexCover x{{0, 1, 2}};
    oracle_drawings(g, 4, [&](const Drawing& d) {
      ++drawings;
      const ClusterPartition p = clusters(d, x);
      for (std::size_t i = 0; i < p.clusters.size(); ++i) {
        const Cluster& cl = p.clusters[i];
        ++clusters_seen;
        const Count need = choose2(Count(cl.size())) * zee(cl.degree());
        if (cluster_crossings(d, p, static_cast<int>(i)) < need) ++violations;
      }
      return true;
    });
  }
  std::ostringstream d;
  d << drawings << " drawings, " << clusters_seen << " clusters, " << violations << " violations";
  report(4, "cluster crossings >= C(c,2) Z(m) in all drawings of K3,3 and K3,4",
         violations == 0 && drawings > 0, d.str());
}

// Every z >= 0 with the group sums.
void for_each_feasible(const IqpInstance& inst, const std::function<void(const std::vector<Count>&)>& f) {
  std::vector<Count> z(inst.size(), 0);
  std::function<void(int, int, Count)> rec = [&](int g, int at, Count left) {
    if (g == inst.group_count()) {
      f(z);
      return;
    }
    const int start = std::accumulate(inst.group_size.begin(), inst.group_size.begin() + g, 0);
    const int last = start + inst.group_size[g] - 1;
    if (at == last) {
      z[at] = left;
      const int next = g + 1;
      rec(next, next < inst.group_count() ? last + 1 : 0,
          next < inst.group_count() ? inst.h[next] : Count(0));
      z[at] = 0;
      return;
    }
    for (Count v = 0; v <= left; ++v) {
      z[at] = v;
      rec(g, at + 1, left - v);
    }
    z[at] = 0;
  };
  if (inst.group_count() == 0) {
    f(z);
    return;
  }
  rec(0, 0, inst.h[0]);
}

std::vector<CompressedGraph> small_instances() {
  std::vector<CompressedGraph> out;
  const std::vector<std::vector<std::pair<int, int>>> covers = {{}, {{0, 1}}, {{0, 1}, {1, 2}},
                                                                {{0, 1}, {1, 2}, {0, 2}}};
  const std::vector<std::map<std::uint32_t, Count>> hs = {
      {{7, 2}}, {{7, 3}}, {{7, 6}}, {{7, 2}, {3, 2}}, {{7, 3}, {5, 1}, {6, 2}},
      {{7, 4}, {3, 1}}, {{3, 2}, {6, 2}, {5, 2}}};
  for (const auto& xe : covers)
    for (const auto& h : hs) {
      CompressedGraph cg;
      cg.k = 3;
      cg.cover_graph = Graph(3, xe);
      cg.h = h;
      out.push_back(cg);
    }
  return out;
}

void criterion5() {
  std::int64_t instances = 0, points = 0, bad = 0;
  for (const CompressedGraph& cg : small_instances()) {
    for (const AbstractClustering& c : enumerate_clusterings(cg, 2)) {
      const IqpInstance inst = build_iqp(c, cg);
      Count constant = 0;
      for (int a = 0, g = 0; g < inst.group_count(); a += inst.group_size[g++])
        constant += inst.q[a][a] * inst.h[g];
      ++instances;
      for_each_feasible(inst, [&](const std::vector<Count>& z) {
        ++points;
        if (objective(inst, z) - 2 * (true_value(inst, z) - inst.r) != constant) ++bad;
      });
    }
  }
  std::ostringstream d;
  d << instances << " instances, " << points << " feasible points, " << bad << " violations";
  report(5, "f(z) - 2(true_value(z) - r) = sum Z(|Y|) h(Y)", bad == 0 && instances > 0, d.str());
}

void criterion6(SuiteState& st) {
  // Add the large lift on top of the suite instances.
  const CompressedGraph cg = xcr::testing::compressed_k3n(1000);
  const SolveReport r = crossing_number(cg);
  note_lift(st, r, cg, "K3,1000");
  std::ostringstream d;
  d << st.lift_instances << " instances, " << st.lift_failures << " failures";
  if (!st.lift_first.empty()) d << " (first: " << st.lift_first << ")";
  report(6, "lifted drawing is good and has the reported crossings", st.lift_failures == 0,
         d.str());
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const SolveReport r = crossing_number(xcr::testing::compressed_k3n(1'000'000));
  const double s = seconds_since(t0);
  // Clustering counts depend on the support of h only.
  std::size_t small = 0, large = 0;
  for (const auto& c : enumerate_clusterings(xcr::testing::compressed_k3n(2), 2)) small += c.k > 0;
  for (const auto& c : enumerate_clusterings(xcr::testing::compressed_k3n(1'000'000), 2))
    large += c.k > 0;
  std::ostringstream d;
  d << "value " << r.crossing_number << " in " << s << " s; clusterings " << small << " (n=2) vs "
    << large << " (n=10^6)";
  report(7, "K3,n at n = 10^6", r.crossing_number == Count(249999500000LL) && s < 5 && small == large,
         d.str());
}

void criterion8(const SuiteState& first) {
  SuiteState again;
  for (const Graph& g : xcr::testing::small_cover_graphs(7)) {
    const CompressedGraph cg = compressed(g);
    again.reports += report_to_json(crossing_number(cg));
  }
  for (const Graph& g : {complete(4), complete(5), complete_bipartite(3, 3), complete(6),
                         complete_bipartite(3, 4), complete_bipartite(3, 5)})
    again.reports += report_to_json(crossing_number(compressed(g)));
  again.reports += report_to_json(crossing_number(xcr::testing::compressed_k3n(1000)));
  // And once more with several workers.
  SolveOptions par;
  par.workers = 3;
  const std::string a = report_to_json(crossing_number(compressed(complete(6)), par));
  const std::string b = report_to_json(crossing_number(compressed(complete(6))));
  std::ostringstream d;
  d << first.reports.size() << " bytes of reports; repeat " << (again.reports == first.reports ? "identical" : "differs")
    << "; 3 workers " << (a == b ? "identical" : "differs");
  report(8, "deterministic reports", again.reports == first.reports && a == b, d.str());
}

}  // namespace

int main() {
  SuiteState st;
  auto guard = [](int id, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      report(id, "criterion", false, std::string("exception: ") + e.what());
    }
  };
  guard(1, [&] { criterion1(st); });
  guard(2, [&] { criterion2(st); });
  guard(3, [] { criterion3(); });
  guard(4, [] { criterion4(); });
  guard(5, [] { criterion5(); });
  guard(6, [&] { criterion6(st); });
  guard(7, [] { criterion7(); });
  guard(8, [&] { criterion8(st); });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
