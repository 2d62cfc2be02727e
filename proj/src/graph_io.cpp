#include "linfeig/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

std::size_t as_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(Errc::MalformedInput, std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

WeightedGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc.contains("boundary")) {
    throw Error(Errc::MalformedInput, "graph JSON needs keys vertices, edges, boundary");
  }
  const auto n = as_index(doc["vertices"], "vertices");
  if (!doc["edges"].is_array() || !doc["boundary"].is_array()) {
    throw Error(Errc::MalformedInput, "edges and boundary must be arrays");
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw Error(Errc::MalformedInput, "edge entries are [i, j] or [i, j, w]");
    }
    double w = 1.0;
    if (e.size() == 3) {
      if (!e[2].is_number()) throw Error(Errc::MalformedInput, "edge weight must be a number");
      w = e[2].get<double>();
    }
    edges.push_back({as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"), w});
  }
  std::vector<std::size_t> boundary;
  for (const auto& b : doc["boundary"]) boundary.push_back(as_index(b, "boundary id"));
  return WeightedGraph::build(n, edges, boundary);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedInput, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::MalformedInput, path + ": " + ex.what());
  }
  return graph_from_json(doc);
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.i, e.j, e.w});
  return {{"vertices", g.num_vertices()},
          {"edges", edges},
          {"boundary", std::vector<std::size_t>(g.boundary().begin(), g.boundary().end())}};
}

LabeledGraph read_edge_list(std::istream& in, const std::vector<std::string>& boundary_labels) {
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::string> labels;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<WeightedEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a)) continue;
    if (!(fields >> b)) {
      throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": missing endpoint");
    }
    double w = 1.0;
    if (std::string token; fields >> token) {
      try {
        w = std::stod(token);
      } catch (const std::exception&) {
        throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": bad weight");
      }
    }
    edges.push_back({id_of(a), id_of(b), w});
  }
  std::vector<std::size_t> boundary;
  for (const auto& label : boundary_labels) {
    auto it = ids.find(label);
    if (it == ids.end()) throw Error(Errc::MalformedInput, "unknown boundary label " + label);
    boundary.push_back(it->second);
  }
  return {WeightedGraph::build(labels.size(), edges, boundary), std::move(labels)};
}

WeightedGraph path_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidIndex, "path graph needs at least 3 vertices");
  std::vector<WeightedEdge> edges;
  for (std::size_t x = 0; x + 1 < n; ++x) edges.push_back({x, x + 1, 1.0});
  const std::size_t boundary[] = {0, n - 1};
  return WeightedGraph::build(n, edges, boundary);
}

WeightedGraph grid_graph(std::size_t width, std::size_t height, GridBoundary boundary) {
  if (width < 2 || height < 2) throw Error(Errc::InvalidIndex, "grid needs width, height >= 2");
  auto id = [width](std::size_t i, std::size_t j) { return j * width + i; };
  std::vector<WeightedEdge> edges;
  for (std::size_t j = 0; j < height; ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      if (i + 1 < width) edges.push_back({id(i, j), id(i + 1, j), 1.0});
      if (j + 1 < height) edges.push_back({id(i, j), id(i, j + 1), 1.0});
    }
  }
  std::vector<std::size_t> gamma;
  if (boundary == GridBoundary::Ring) {
    for (std::size_t j = 0; j < height; ++j) {
      for (std::size_t i = 0; i < width; ++i) {
        if (i == 0 || j == 0 || i + 1 == width || j + 1 == height) gamma.push_back(id(i, j));
      }
    }
  } else {
    gamma = {id(0, 0), id(width - 1, 0), id(0, height - 1), id(width - 1, height - 1)};
  }
  return WeightedGraph::build(width * height, edges, gamma);
}

WeightedGraph random_connected_graph(std::size_t n, std::size_t edge_count, std::uint64_t seed,
                                     double w_min, double w_max) {
  if (n < 2) throw Error(Errc::InvalidIndex, "random graph needs at least 2 vertices");
  const std::size_t max_edges = n * (n - 1) / 2;
  edge_count = std::clamp(edge_count, n - 1, max_edges);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(w_min, w_max);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<WeightedEdge> edges;
  for (std::size_t k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    auto a = order[k], b = order[pick(rng)];
    used.insert(std::minmax(a, b));
    edges.push_back({a, b, weight(rng)});
  }
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  while (edges.size() < edge_count) {
    auto a = vertex(rng), b = vertex(rng);
    if (a == b || !used.insert(std::minmax(a, b)).second) continue;
    edges.push_back({a, b, weight(rng)});
  }

  std::uniform_int_distribution<std::size_t> boundary_size(1, n - 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  perm.resize(boundary_size(rng));
  std::sort(perm.begin(), perm.end());
  return WeightedGraph::build(n, edges, perm);
}

}  // namespace linfeig
