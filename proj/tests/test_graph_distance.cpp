#include <doctest.h>

#include <cmath>
#include <limits>

#include "linfeig/error.hpp"
#include "linfeig/graph_distance.hpp"
#include "linfeig/graph_io.hpp"
#include "oracles.hpp"

using namespace linfeig;

TEST_CASE("distance on P4 and a single edge") {
  auto field = graph_distance(path_graph(4));
  CHECK(field.d == VertexFunction{0, 1, 1, 0});
  CHECK(field.predecessors[1] == std::vector<std::size_t>{0});
  CHECK(field.predecessors[2] == std::vector<std::size_t>{3});
  CHECK(field.predecessors[0].empty());

  std::vector<WeightedEdge> single{{0, 1, 4.0}};
  std::vector<std::size_t> b0{0};
  auto one = build_graph(2, single, b0);
  CHECK(graph_distance(one).d[1] == 0.5);
  CHECK(j_w(one, graph_distance(one).d) == 1.0);
}

TEST_CASE("distance matches Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_connected_graph(10, 10 + seed % 20, seed);
    auto d = graph_distance(g).d;
    auto ref = oracle::boundary_distance(g);
    for (std::size_t x = 0; x < g.num_vertices(); ++x) {
      CHECK(d[x] == doctest::Approx(ref[x]).epsilon(1e-14));
      CHECK((d[x] == 0.0) == g.is_boundary(x));
    }
    if (!g.interior().empty()) CHECK(j_w(g, d) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("distance is 1-Lipschitz and maximal") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_connected_graph(12, 24, 900 + seed);
    auto d = graph_distance(g).d;
    auto grad = weighted_gradient(g, d);
    for (double v : grad.values()) CHECK(std::abs(v) <= 1.0 + 1e-12);
    for (std::uint64_t k = 0; k < 5; ++k) {
      auto u = oracle::random_admissible(g, seed * 100 + k);
      CHECK(j_w(g, VertexFunction(u)) <= 1.0 + 1e-12);
      for (std::size_t x = 0; x < u.size(); ++x) CHECK(u[x] <= d[x] + 1e-12);
    }
  }
}

TEST_CASE("ground state") {
  auto p4 = ground_state(path_graph(4));
  CHECK(p4 == VertexFunction{0, 1, 1, 0});
  CHECK(j_w(path_graph(4), p4) / norm_p(p4, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  auto p3 = ground_state(path_graph(3), 1.0);
  CHECK(p3 == VertexFunction{0, 1, 0});
  CHECK(ground_state(path_graph(3), std::numeric_limits<double>::infinity()) == p3);
  CHECK_THROWS_AS(ground_state(path_graph(3), 0.5), Error);

  // one interior vertex: the spike height is the shortest incident length
  std::vector<WeightedEdge> star{{0, 3, 4.0}, {1, 3, 0.25}, {2, 3, 1.0}};
  std::vector<std::size_t> b{0, 1, 2};
  auto g = build_graph(4, star, b);
  CHECK(ground_state(g)[3] == 0.5);
}

TEST_CASE("saturation") {
  auto g = path_graph(4);
  auto field = graph_distance(g);
  auto sat = gradient_saturation(g, field);
  CHECK(sat.edges == std::vector<EdgeSaturation>{EdgeSaturation::Saturated, EdgeSaturation::Strict,
                                                 EdgeSaturation::Saturated});
  CHECK(sat.inconsistent.empty());

  std::vector<WeightedEdge> single{{0, 1, 4.0}};
  std::vector<std::size_t> b0{0};
  auto one = build_graph(2, single, b0);
  CHECK(gradient_saturation(one, graph_distance(one)).edges.front() == EdgeSaturation::Saturated);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto rg = random_connected_graph(11, 20, 40 + seed);
    CHECK(gradient_saturation(rg, graph_distance(rg)).inconsistent.empty());
  }
}

TEST_CASE("unit weights give integer distances and gradients in {0, 1}") {
  for (auto g : {grid_graph(7, 5, GridBoundary::Ring), grid_graph(6, 6, GridBoundary::Corners), path_graph(9)}) {
    auto field = graph_distance(g);
    for (double v : field.d.values()) CHECK(v == std::round(v));
    auto grad = weighted_gradient(g, field.d);
    auto sat = gradient_saturation(g, field);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      double m = std::abs(grad[2 * e]);
      CHECK((m == 0.0 || m == 1.0));
      CHECK((sat.edges[e] == EdgeSaturation::Strict) == (m == 0.0));
    }
  }
}

TEST_CASE("shortest path counts") {
  auto p4 = path_graph(4);
  CHECK(shortest_path_count(p4, graph_distance(p4), 1) == 1);

  auto grid = grid_graph(3, 3, GridBoundary::Corners);
  auto field = graph_distance(grid);
  CHECK(field.d[4] == 2.0);
  CHECK(shortest_path_count(grid, field, 4) == 4);
  CHECK(shortest_path_count(grid, field, 1) == 2);

  auto ring = grid_graph(5, 5, GridBoundary::Ring);
  CHECK(shortest_path_count(ring, graph_distance(ring), 6) == 2);   // corner-adjacent interior
  CHECK(shortest_path_count(ring, graph_distance(ring), 7) == 1);

  std::vector<WeightedEdge> edges{{0, 1, 2.0}, {1, 2, 1.0}};
  std::vector<std::size_t> b0{0};
  auto weighted = build_graph(3, edges, b0);
  CHECK_THROWS_AS(shortest_path_count(weighted, graph_distance(weighted), 1), Error);
}
