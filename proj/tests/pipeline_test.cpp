#include <string>

#include "doctest.h"
#include "support.hpp"
#include "xcr/lift.hpp"
#include "xcr/oracle.hpp"
#include "xcr/pipeline.hpp"
#include "xcr/svg.hpp"

using namespace xcr;

namespace {

CompressedGraph k2n(int n) {
  CompressedGraph cg;
  cg.k = 2;
  cg.cover_graph = Graph(2);
  cg.h[3] = n;
  return cg;
}

CompressedGraph of(const Graph& g) { return compress(g, *find_vertex_cover(g, 8)); }

int count(const std::string& text, const std::string& what) {
  int n = 0;
  for (auto at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("initial budget") {
  CHECK(initial_budget(k2n(9)) == 0);
  CHECK(initial_budget(compress(Graph(5), VertexCover{})) == 0);
  CHECK(initial_budget(testing::compressed_k3n(5)) >= 0);
  CHECK(initial_budget(testing::compressed_k3n(5)) >= zee(5));
}

TEST_CASE("crossing numbers") {
  CHECK(crossing_number(k2n(7)).crossing_number == 0);
  CHECK(crossing_number(testing::compressed_k3n(3)).crossing_number == 1);
  CHECK(crossing_number(testing::compressed_k3n(5)).crossing_number == 4);
  CHECK(crossing_number(of(testing::complete(5))).crossing_number == 1);
  CHECK(crossing_number(testing::compressed_k3n(parse_count("1000000"))).crossing_number ==
        parse_count("249999500000"));
}

TEST_CASE("components are solved separately") {
  Graph g(13);
  for (int base : {0, 6})
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) g.add_edge(base + a, base + b);
  const CompressedGraph cg = of(g);
  CHECK(split_components(cg).size() == 2);
  const SolveReport r = crossing_number(cg);
  CHECK(r.crossing_number == 2);
  CHECK(r.components.size() == 2);
  REQUIRE(r.drawing);
  CHECK(r.drawing->graph.vertex_count() == 13);
  CHECK(crossing_number(compress(Graph(3), VertexCover{})).crossing_number == 0);
}

TEST_CASE("lift") {
  const CompressedGraph cg = testing::compressed_k3n(3);
  const SolveReport r = crossing_number(cg);
  REQUIRE(r.components.size() == 1);
  const ComponentResult& w = r.components[0];
  const Drawing d = lift(w.winner, w.z);
  CHECK(validate_good(d).ok());
  CHECK(crossing_count(d) == 1);
  CHECK(d.graph.edge_count() == 9);

  std::vector<Count> ones(w.z.size(), 1);
  const Drawing same = lift(w.winner, ones);
  CHECK(same.graph.vertex_count() == w.winner.drawing.graph.vertex_count());
  CHECK(crossing_count(same) == crossing_count(w.winner.drawing));

  const SolveReport k27 = crossing_number(k2n(7));
  REQUIRE(k27.drawing);
  CHECK(k27.drawing->crossings.empty());
  CHECK(validate_good(*k27.drawing).ok());
}

TEST_CASE("verify") {
  const CompressedGraph k33 = testing::compressed_k3n(3);
  SolveReport r = crossing_number(k33);
  VerifyResult v = verify(r, k33);
  CHECK(v.ok);
  REQUIRE(v.oracle);
  CHECK(*v.oracle == 1);

  r.crossing_number -= 1;
  r.components[0].value -= 1;
  v = verify(r, k33);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("lift count") != std::string::npos);

  const CompressedGraph big = testing::compressed_k3n(1000);
  SolveOptions opts;
  const SolveReport rb = crossing_number(big, opts);
  v = verify(rb, big);
  CHECK(v.ok);
  CHECK_FALSE(v.oracle);
  CHECK(rb.crossing_number == 249500);
}

TEST_CASE("relabel keeps input vertex ids") {
  // K3,3 with the cover on the odd ids.
  Graph g(6);
  for (int a : {1, 3, 5})
    for (int b : {0, 2, 4}) g.add_edge(a, b);
  const auto x = find_vertex_cover(g, 3);
  REQUIRE(x);
  const CompressedGraph cg = compress(g, *x);
  const SolveReport r = crossing_number(cg);
  REQUIRE(r.drawing);
  const Drawing d = relabel(*r.drawing, expansion_map(g, *x), g);
  CHECK(d.graph == g);
  CHECK(validate_good(d).ok());
  CHECK(crossing_count(d) == 1);
}

TEST_CASE("reports are deterministic") {
  const CompressedGraph cg = testing::compressed_k3n(4);
  CHECK(report_to_json(crossing_number(cg)) == report_to_json(crossing_number(cg)));
  SolveOptions many;
  many.workers = 4;
  CHECK(report_to_json(crossing_number(cg, many)) == report_to_json(crossing_number(cg)));
}

TEST_CASE("oracle") {
  CHECK(oracle_cr(testing::complete(4)) == 0);
  CHECK(oracle_cr(testing::complete(5)) == 1);
  CHECK(oracle_cr(testing::complete(6)) == 3);
  CHECK(oracle_cr(testing::complete_bipartite(2, 7)) == 0);
  CHECK(oracle_cr(testing::complete_bipartite(3, 3)) == 1);

  CHECK(oracle_drawings(testing::complete(3), 0).size() == 1);
  const auto two = oracle_drawings(Graph(4, {{0, 1}, {2, 3}}), 1);
  bool plain = false, crossed = false;
  for (const Drawing& d : two) (d.crossings.empty() ? plain : crossed) = true;
  CHECK(plain);
  CHECK(crossed);

  OracleConfig tight;
  tight.max_crossings = 0;
  CHECK_THROWS_AS(oracle_cr(testing::complete(5), tight), OracleLimitExceeded);
}

TEST_CASE("svg") {
  const auto tri = oracle_drawings(testing::complete(3), 0);
  const std::string t = render_svg(tri.at(0));
  CHECK(count(t, "class=\"vertex\"") == 3);
  CHECK(count(t, "class=\"crossing\"") == 0);

  for (const Drawing& d : oracle_drawings(testing::complete(5), 1)) {
    if (d.crossings.size() != 1) continue;
    CHECK(count(render_svg(d), "class=\"crossing\"") == 1);
    break;
  }

  const SolveReport r = crossing_number(testing::compressed_k3n(3));
  REQUIRE(r.drawing);
  const std::string s = render_svg(*r.drawing);
  CHECK(count(s, "class=\"crossing\"") == 1);
  CHECK(s == render_svg(*r.drawing));
}
