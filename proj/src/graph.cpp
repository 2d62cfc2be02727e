#include "linfeig/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

void check_size(const WeightedGraph& g, std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw Error(Errc::DomainMismatch, std::string(what) + " has " + std::to_string(got) +
                                          " entries, graph needs " + std::to_string(expected) +
                                          " (" + std::to_string(g.num_vertices()) + " vertices)");
  }
}

}  // namespace

WeightedGraph WeightedGraph::build(std::size_t vertex_count, std::span<const WeightedEdge> edges,
                                   std::span<const std::size_t> boundary) {
  WeightedGraph g;
  g.n_ = vertex_count;

  std::map<std::pair<std::size_t, std::size_t>, double> unique;
  for (const auto& e : edges) {
    if (e.i >= vertex_count || e.j >= vertex_count) {
      throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(e.i) + ", " +
                                             std::to_string(e.j) + ") on " +
                                             std::to_string(vertex_count) + " vertices");
    }
    if (e.i == e.j) throw Error(Errc::SelfLoop, "vertex " + std::to_string(e.i));
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw Error(Errc::NonpositiveWeight, "edge (" + std::to_string(e.i) + ", " +
                                               std::to_string(e.j) + ") has weight " +
                                               std::to_string(e.w));
    }
    auto key = std::minmax(e.i, e.j);
    auto [it, inserted] = unique.emplace(key, e.w);
    if (!inserted && it->second != e.w) {
      throw Error(Errc::ConflictingEdge, "edge (" + std::to_string(key.first) + ", " +
                                             std::to_string(key.second) +
                                             ") given with weights " + std::to_string(it->second) +
                                             " and " + std::to_string(e.w));
    }
  }
  g.edges_.reserve(unique.size());
  for (const auto& [key, w] : unique) g.edges_.push_back({key.first, key.second, w});

  g.offsets_.assign(vertex_count + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.i + 1];
    ++g.offsets_[e.j + 1];
  }
  for (std::size_t x = 0; x < vertex_count; ++x) g.offsets_[x + 1] += g.offsets_[x];
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) g.adjacency_[fill[g.arc(a).from]++] = a;

  g.boundary_mask_.assign(vertex_count, 0);
  for (auto b : boundary) {
    if (b >= vertex_count) {
      throw Error(Errc::IndexOutOfRange, "boundary vertex " + std::to_string(b));
    }
    g.boundary_mask_[b] = 1;
  }
  for (std::size_t x = 0; x < vertex_count; ++x) {
    (g.boundary_mask_[x] ? g.boundary_ : g.interior_).push_back(x);
  }
  if (g.boundary_.empty()) throw Error(Errc::EmptyBoundary, "boundary set is empty");
  if (g.interior_.empty()) {
    throw Error(Errc::BoundaryIsEverything, "boundary contains every vertex");
  }

  // connectivity by DFS from vertex 0
  std::vector<char> seen(vertex_count, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto a : g.out_arcs(x)) {
      auto y = g.arc(a).to;
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != vertex_count) {
    throw Error(Errc::DisconnectedGraph, std::to_string(vertex_count - reached) + " of " +
                                             std::to_string(vertex_count) +
                                             " vertices unreachable from vertex 0");
  }
  return g;
}

double WeightedGraph::weighted_degree(std::size_t x) const {
  double s = 0.0;
  for (auto a : out_arcs(x)) s += arc(a).weight;
  return s;
}

double WeightedGraph::max_weighted_degree() const {
  double m = 0.0;
  for (std::size_t x = 0; x < n_; ++x) m = std::max(m, weighted_degree(x));
  return m;
}

bool WeightedGraph::has_unit_weights() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.w == 1.0; });
}

EdgeFunction weighted_gradient(const WeightedGraph& g, const VertexFunction& u) {
  check_size(g, u.size(), g.num_vertices(), "vertex function");
  EdgeFunction q(g.num_arcs(), true);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    q.set(2 * e, std::sqrt(ed.w) * (u[ed.j] - u[ed.i]));
  }
  return q;
}

VertexFunction weighted_divergence(const WeightedGraph& g, const EdgeFunction& q) {
  check_size(g, q.size(), g.num_arcs(), "edge function");
  VertexFunction div(g.num_vertices());
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    double s = 0.0;
    for (auto a : g.out_arcs(x)) {
      s += std::sqrt(g.arc(a).weight) * (q[a] - q[WeightedGraph::reverse(a)]);
    }
    div[x] = s;
  }
  return div;
}

EdgeFunction one_sided_gradient(const WeightedGraph& g, const VertexFunction& u) {
  check_size(g, u.size(), g.num_vertices(), "vertex function");
  EdgeFunction q(g.num_arcs(), false);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    auto arc = g.arc(a);
    q[a] = std::sqrt(arc.weight) * std::max(u[arc.from] - u[arc.to], 0.0);
  }
  return q;
}

double norm_p(std::span<const double> values, double p) {
  if (!(p >= 1.0)) throw Error(Errc::InvalidP, "p = " + std::to_string(p));
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double v : values) s += std::abs(v);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double v : values) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

double inner(const VertexFunction& u, const VertexFunction& v) {
  if (u.size() != v.size()) throw Error(Errc::DomainMismatch, "inner product size mismatch");
  double s = 0.0;
  for (std::size_t x = 0; x < u.size(); ++x) s += u[x] * v[x];
  return s;
}

double inner(const EdgeFunction& q, const EdgeFunction& p) {
  if (q.size() != p.size()) throw Error(Errc::DomainMismatch, "inner product size mismatch");
  double s = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a) s += q[a] * p[a];
  return s;
}

bool vanishes_on_boundary(const WeightedGraph& g, const VertexFunction& u) {
  check_size(g, u.size(), g.num_vertices(), "vertex function");
  return std::all_of(g.boundary().begin(), g.boundary().end(),
                     [&](std::size_t b) { return u[b] == 0.0; });
}

double j_w(const WeightedGraph& g, const VertexFunction& u) {
  if (!vanishes_on_boundary(g, u)) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (const auto& e : g.edges()) m = std::max(m, std::sqrt(e.w) * std::abs(u[e.j] - u[e.i]));
  return m;
}

}  // namespace linfeig
