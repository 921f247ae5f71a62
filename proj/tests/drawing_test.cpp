#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "xcr/drawing.hpp"
#include "xcr/drawing_io.hpp"
#include "xcr/geometry.hpp"
#include "xcr/oracle.hpp"

using namespace xcr;

namespace {

Drawing with_crossings(const Graph& g, int cap, int want) {
  for (Drawing& d : oracle_drawings(g, cap))
    if (d.crossing_count_unweighted() == want) return d;
  FAIL("no drawing with the requested crossings");
  return {};
}

Drawing k5_one_crossing() { return with_crossings(testing::complete(5), 1, 1); }

// Cover a, b, c around two vertices inside the triangle whose edges to a
// and b cross once.
Drawing two_stars() {
  Graph g(5);
  for (VertexId r : {3, 4})
    for (VertexId x : {0, 1, 2}) g.add_edge(x, r);
  return straight_line_drawing(g, {{0, 0}, {20, 0}, {10, 20}, {8, 5}, {12, 5}});
}

}  // namespace

TEST_CASE("zee") {
  CHECK(zee(7) == 9);
  CHECK(zee(2) == 0);
  CHECK(zee(5) == 4);
  CHECK(zee(0) == 0);
  CHECK(zee(6) == 6);
}

TEST_CASE("validate_good") {
  const Drawing k4 = straight_line_drawing(testing::complete(4), {{0, 0}, {10, 0}, {5, 10}, {5, 3}});
  CHECK(k4.crossings.empty());
  CHECK(validate_good(k4).ok());

  Drawing path = straight_line_drawing(Graph(3, {{0, 1}, {1, 2}}), {{0, 0}, {5, 0}, {5, 5}});
  path.add_crossing(0, 1);
  const Validation v = validate_good(path);
  CHECK(v.kind == Violation::kAdjacentCrossing);
  CHECK(to_string(v.kind) == "adjacent crossing");

  const Drawing k5 = k5_one_crossing();
  CHECK(validate_good(k5).ok());

  Drawing twice = straight_line_drawing(Graph(4, {{0, 1}, {2, 3}}), {{0, 0}, {10, 10}, {0, 10}, {10, 0}});
  REQUIRE(twice.crossings.size() == 1);
  twice.add_crossing(0, 1);
  CHECK(validate_good(twice).kind == Violation::kDoubleCrossing);
}

TEST_CASE("crossing_count with weights") {
  CHECK(crossing_count(straight_line_drawing(testing::complete(3), {{0, 0}, {4, 0}, {0, 4}})) == 0);

  Drawing one = straight_line_drawing(Graph(4, {{0, 1}, {2, 3}}), {{0, 0}, {10, 10}, {0, 10}, {10, 0}});
  one.weight = {3, 2};
  CHECK(crossing_count(one) == 6);

  Graph g(12);
  for (int i = 0; i < 6; ++i) g.add_edge(2 * i, 2 * i + 1);
  Drawing d = Drawing::from_rotation(g, std::vector<std::vector<EdgeId>>(12));
  for (int i = 0; i < 12; ++i) d.rotation[i] = {i / 2};
  d.add_crossing(0, 1);
  d.add_crossing(2, 3);
  d.add_crossing(4, 5);
  d.weight = {1, 1, 1, 1, 4, 5};
  CHECK(crossing_count(d) == 22);
}

TEST_CASE("planarize") {
  const Drawing k4 = straight_line_drawing(testing::complete(4), {{0, 0}, {10, 0}, {5, 10}, {5, 3}});
  const Planarization flat = planarize(k4);
  CHECK(flat.vertex_count() == 4);
  CHECK(flat.edge_count() == 6);
  CHECK(flat.face_count == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(normalize_cyclic(flat.rotation[v]) == normalize_cyclic(neighbor_rotation(k4, v)));

  const Planarization p = planarize(k5_one_crossing());
  CHECK(p.vertex_count() == 6);
  CHECK(p.edge_count() == 12);
  CHECK(p.face_count == 8);
  CHECK(p.is_dummy(5));

  const Drawing square = with_crossings(Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), 1, 1);
  REQUIRE(square.crossings.size() == 1);
  const Planarization q = planarize(square);
  CHECK(q.vertex_count() == 5);
  CHECK(q.edge_count() == 6);
  CHECK(q.face_count == 3);
  CHECK(q.component_count == 1);
}

TEST_CASE("equivalence") {
  const Drawing k5 = k5_one_crossing();
  CHECK(equivalent(k5, k5));

  const auto k23 = oracle_drawings(testing::complete_bipartite(2, 3), 0);
  CHECK(k23.size() > 1);
  for (std::size_t i = 0; i < k23.size(); ++i)
    for (std::size_t j = i + 1; j < k23.size(); ++j) CHECK_FALSE(equivalent(k23[i], k23[j]));

  for (const Drawing& d : oracle_drawings(testing::complete_bipartite(3, 4), 3)) {
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
      if (d.sequence[e].size() < 2) continue;
      Drawing swapped = d;
      std::swap(swapped.sequence[e][0], swapped.sequence[e][1]);
      CHECK_FALSE(equivalent(d, swapped));
      return;
    }
  }
  FAIL("no edge with two crossings");
}

TEST_CASE("clusters") {
  const Drawing stars = two_stars();
  REQUIRE(stars.crossings.size() == 1);
  const VertexCover x{{0, 1, 2}};
  const ClusterPartition p = clusters(stars, x);
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters[0].size() == 2);
  CHECK(p.clusters[0].degree() == 3);
  CHECK(p.cluster_of[0] == -1);
  CHECK(noncluster_count(stars, x) == 0);
  CHECK(cluster_crossings(stars, p, 0) == 1);

  // Past c on the line through a and c the rotation is reversed.
  Graph g = stars.graph;
  const Drawing apart = straight_line_drawing(g, {{0, 0}, {20, 0}, {10, 20}, {8, 5}, {14, 30}});
  CHECK(clusters(apart, x).clusters.size() == 2);

  const Drawing k25 = with_crossings(testing::complete_bipartite(2, 5), 0, 0);
  const ClusterPartition one = clusters(k25, VertexCover{{0, 1}});
  REQUIRE(one.clusters.size() == 1);
  CHECK(one.clusters[0].size() == 5);
}

TEST_CASE("noncluster crossings") {
  const Drawing square = straight_line_drawing(testing::complete(4), {{0, 0}, {10, 0}, {10, 10}, {0, 10}});
  REQUIRE(square.crossings.size() == 1);
  CHECK(noncluster_count(square, VertexCover{{0, 1, 2, 3}}) == 1);
  CHECK(noncluster_count(straight_line_drawing(testing::complete(3), {{0, 0}, {4, 0}, {0, 4}}),
                         VertexCover{{0, 1}}) == 0);
}

TEST_CASE("cl_value") {
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
  WeightedClustering wc;
  wc.drawing = Drawing::from_rotation(g, std::vector<std::vector<EdgeId>>(6));
  wc.cover = VertexCover{{0, 1, 2}};
  wc.vertex_weight = {0, 0, 0, 3, 2, 3};
  CHECK(cl_value(wc) == 4);
  wc.vertex_weight = {0, 0, 0, 1, 1, 1};
  CHECK(cl_value(wc) == 0);

  Graph star(4, {{0, 3}, {1, 3}, {2, 3}});
  WeightedClustering single;
  single.drawing = Drawing::from_rotation(star, std::vector<std::vector<EdgeId>>(4));
  single.cover = VertexCover{{0, 1, 2}};
  single.vertex_weight = {0, 0, 0, 10};
  CHECK(cl_value(single) == 45);
}

TEST_CASE("drawing io round trip") {
  const Drawing d = k5_one_crossing();
  const Drawing back = drawing_from_string(drawing_to_string(d));
  CHECK(equivalent(d, back));
  CHECK(drawing_to_string(back) == drawing_to_string(d));
}
