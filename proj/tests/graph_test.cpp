#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "xcr/graph.hpp"

using namespace xcr;

namespace {

// Triangle on 0,1,2; vertices 3..7 see all three, 8..10 see 0 and 2.
Graph triangle_cover() {
  Graph g(11);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  for (int v = 3; v < 8; ++v)
    for (int x = 0; x < 3; ++x) g.add_edge(x, v);
  for (int v = 8; v < 11; ++v) {
    g.add_edge(0, v);
    g.add_edge(2, v);
  }
  return g;
}

}  // namespace

TEST_CASE("vertex cover") {
  Graph path(3, {{0, 1}, {1, 2}});
  auto c = find_vertex_cover(path, 3);
  REQUIRE(c);
  CHECK(c->vertices == std::vector<VertexId>{1});

  c = find_vertex_cover(testing::complete_bipartite(3, 3), 3);
  REQUIRE(c);
  CHECK(c->vertices == std::vector<VertexId>{0, 1, 2});

  c = find_vertex_cover(testing::complete(5), 4);
  REQUIRE(c);
  CHECK(c->size() == 4);
  CHECK(is_vertex_cover(testing::complete(5), c->vertices));
  CHECK_FALSE(find_vertex_cover(testing::complete(5), 3));

  CHECK(find_vertex_cover(Graph(4), 0)->size() == 0);
}

TEST_CASE("cover is the lexicographically least minimum cover") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(find_vertex_cover(c4, 4)->vertices == std::vector<VertexId>{0, 2});
}

TEST_CASE("compress and expand") {
  const Graph g = triangle_cover();
  const auto x = find_vertex_cover(g, 5);
  REQUIRE(x);
  CHECK(x->vertices == std::vector<VertexId>{0, 1, 2});
  const CompressedGraph cg = compress(g, *x);
  CHECK(cg.k == 3);
  CHECK(cg.count(7) == 5);
  CHECK(cg.count(5) == 3);
  CHECK(cg.h.size() == 2);
  CHECK(cg.cover_graph.edge_count() == 3);

  const Graph back = expand(cg);
  CHECK(back.vertex_count() == 11);
  CHECK(back.edge_count() == 24);
  CHECK(testing::canonical_label(back) == testing::canonical_label(g));

  const CompressedGraph k3n = compress(testing::complete_bipartite(3, 4), *x);
  CHECK(k3n.cover_graph.edge_count() == 0);
  CHECK(k3n.count(7) == 4);
  CHECK(k3n.h.size() == 1);

  const CompressedGraph empty = compress(Graph(4), VertexCover{});
  CHECK(empty.k == 0);
  CHECK(empty.count(0) == 4);
}

TEST_CASE("expand special cases") {
  CompressedGraph cg;
  cg.k = 2;
  cg.cover_graph = Graph(2);
  cg.h[3] = 3;
  const Graph k23 = expand(cg);
  CHECK(testing::canonical_label(k23) == testing::canonical_label(testing::complete_bipartite(2, 3)));

  CompressedGraph bare;
  bare.k = 3;
  bare.cover_graph = Graph(3, {{0, 1}, {1, 2}});
  CHECK(expand(bare) == bare.cover_graph);
}

TEST_CASE("round trip through compression keeps the isomorphism class") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::small_cover_graphs(n)) {
      if (g.vertex_count() != n) continue;
      const auto x = find_vertex_cover(g, 3);
      REQUIRE(x);
      CHECK(testing::canonical_label(expand(compress(g, *x))) == testing::canonical_label(g));
    }
  }
}

TEST_CASE("connected graph counts") {
  // Connected graphs up to isomorphism: 1, 1, 2, 6 on 1..4 vertices; on five
  // vertices all 21 have a cover of size at most three except K5.
  const auto all = testing::small_cover_graphs(5);
  int upto4 = 0, five = 0;
  for (const Graph& g : all) (g.vertex_count() <= 4 ? upto4 : five)++;
  CHECK(upto4 == 10);
  CHECK(five == 20);
}

TEST_CASE("edge list io") {
  std::istringstream in("# comment\nn 4\n0 1\n1 2\n2 3\n");
  const Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream again(out.str());
  CHECK(read_edge_list(again) == g);

  std::istringstream bad("n 3\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
  std::istringstream loop("n 3\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), ParseError);
}

TEST_CASE("compressed io") {
  const CompressedGraph cg = compress(triangle_cover(), *find_vertex_cover(triangle_cover(), 5));
  std::ostringstream out;
  write_compressed(out, cg);
  std::istringstream in(out.str());
  CHECK(read_compressed(in) == cg);

  std::istringstream big("3\nh 7 1000000000000000000000\n");
  const CompressedGraph huge = read_compressed(big);
  CHECK(huge.count(7) == parse_count("1000000000000000000000"));
}
