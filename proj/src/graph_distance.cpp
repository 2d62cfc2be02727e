#include "linfeig/graph_distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

constexpr double kTieTol = 1e-12;

bool same_length(double a, double b) {
  return std::abs(a - b) <= kTieTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

DistanceField graph_distance(const WeightedGraph& g) {
  const auto n = g.num_vertices();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, inf);
  std::vector<char> done(n, 0);

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (auto b : g.boundary()) {
    dist[b] = 0.0;
    heap.push({0.0, b});
  }
  while (!heap.empty()) {
    auto [dx, x] = heap.top();
    heap.pop();
    if (done[x]) continue;
    done[x] = 1;
    for (auto a : g.out_arcs(x)) {
      auto arc = g.arc(a);
      double candidate = dx + 1.0 / std::sqrt(arc.weight);
      if (candidate < dist[arc.to]) {
        dist[arc.to] = candidate;
        heap.push({candidate, arc.to});
      }
    }
  }

  DistanceField field{VertexFunction(std::move(dist)), std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    if (g.is_boundary(x)) continue;
    for (auto a : g.out_arcs(x)) {
      auto arc = g.arc(a);
      if (same_length(field.d[x], field.d[arc.to] + 1.0 / std::sqrt(arc.weight))) {
        field.predecessors[x].push_back(arc.to);
      }
    }
  }
  return field;
}

VertexFunction ground_state(const WeightedGraph& g, double p_norm) {
  if (!(p_norm >= 1.0)) throw Error(Errc::InvalidP, "p = " + std::to_string(p_norm));
  return graph_distance(g).d;
}

SaturationReport gradient_saturation(const WeightedGraph& g, const DistanceField& field) {
  SaturationReport report;
  report.edges.reserve(g.num_edges());
  auto contains = [&](std::size_t x, std::size_t y) {
    const auto& p = field.predecessors[x];
    return std::find(p.begin(), p.end(), y) != p.end();
  };
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    double grad = std::sqrt(ed.w) * (field.d[ed.j] - field.d[ed.i]);
    bool saturated = std::abs(std::abs(grad) - 1.0) <= kTieTol;
    report.edges.push_back(saturated ? EdgeSaturation::Saturated : EdgeSaturation::Strict);
    bool on_path = contains(ed.i, ed.j) || contains(ed.j, ed.i);
    if (on_path != saturated) report.inconsistent.push_back(e);
  }
  return report;
}

std::size_t shortest_path_count(const WeightedGraph& g, const DistanceField& field, std::size_t x) {
  if (!g.has_unit_weights()) {
    throw Error(Errc::NonUnitWeights, "shortest-path counting needs unit weights");
  }
  if (x >= g.num_vertices()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(x));
  double total = 0.0;
  for (auto a : g.out_arcs(x)) {
    total += std::max(field.d[x] - field.d[g.arc(a).to], 0.0);
  }
  return static_cast<std::size_t>(std::llround(total));
}

}  // namespace linfeig
