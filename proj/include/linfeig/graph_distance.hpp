#pragma once

#include <cstddef>
#include <vector>

#include "linfeig/graph.hpp"

namespace linfeig {

/// Distance to the boundary set with edge lengths w^{-1/2}.
struct DistanceField {
  VertexFunction d;
  /// predecessors[x]: neighbours y that start a shortest path from x to the
  /// boundary, i.e. d(x) = d(y) + w(x,y)^{-1/2}. Empty on the boundary.
  std::vector<std::vector<std::size_t>> predecessors;
};

/// Multi-source Dijkstra from the boundary. Path-length ties within a
/// relative 1e-12 are all kept as predecessors.
DistanceField graph_distance(const WeightedGraph& g);

/// Maximiser of ||u||_p over {u = 0 on the boundary, |grad_w u| <= 1}. The
/// distance function dominates every admissible u >= 0 pointwise, so the
/// result does not depend on `p_norm` (which must still be >= 1).
VertexFunction ground_state(const WeightedGraph& g, double p_norm = 2.0);

enum class EdgeSaturation { Saturated, Strict };

struct SaturationReport {
  /// One entry per undirected edge, in graph edge order.
  std::vector<EdgeSaturation> edges;
  /// Edges whose gradient test and shortest-path membership disagree.
  std::vector<std::size_t> inconsistent;
};

/// Marks edge (x,y) saturated iff |(grad_w d)(x,y)| = 1 within 1e-12 and
/// cross-checks against y in SP(x) or x in SP(y).
SaturationReport gradient_saturation(const WeightedGraph& g, const DistanceField& field);

/// Number of first steps of shortest paths from x, computed as the sum of
/// the one-sided gradient of d over the arcs leaving x. Requires unit weights
/// (throws NonUnitWeights).
std::size_t shortest_path_count(const WeightedGraph& g, const DistanceField& field, std::size_t x);

}  // namespace linfeig
