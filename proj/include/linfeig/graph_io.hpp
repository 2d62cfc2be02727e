#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "linfeig/graph.hpp"

namespace linfeig {

/// Graph JSON: {"vertices": n, "edges": [[i, j, w], ...], "boundary": [ids]}.
/// Weights default to 1 when an edge is given as [i, j]. Throws
/// Error(MalformedInput) on schema violations, plus every build error.
WeightedGraph graph_from_json(const nlohmann::json& doc);
WeightedGraph load_graph(const std::string& path);
nlohmann::json graph_to_json(const WeightedGraph& g);

/// Whitespace-separated edge list "label_a label_b [weight]" with arbitrary
/// string labels, '#' comments. Labels are mapped to dense ids in order of
/// first appearance; boundary labels must occur in the list.
struct LabeledGraph {
  WeightedGraph graph;
  std::vector<std::string> labels;
};
LabeledGraph read_edge_list(std::istream& in, const std::vector<std::string>& boundary_labels);

/// Path x0 ~ x1 ~ ... ~ x_{n-1} with unit weights and boundary {x0, x_{n-1}}.
WeightedGraph path_graph(std::size_t n);

enum class GridBoundary { Ring, Corners };

/// width x height 4-neighbour grid with unit weights; vertex (i, j) has id
/// j * width + i.
WeightedGraph grid_graph(std::size_t width, std::size_t height, GridBoundary boundary);

/// Random connected graph: a random spanning tree plus extra edges up to
/// `edge_count` total, weights uniform in [w_min, w_max], a random nonempty
/// strict subset of vertices as boundary. Deterministic in `seed`.
WeightedGraph random_connected_graph(std::size_t n, std::size_t edge_count, std::uint64_t seed,
                                     double w_min = 0.25, double w_max = 4.0);

}  // namespace linfeig
