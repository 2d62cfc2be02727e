#pragma once

// Finite weighted graphs with a Dirichlet boundary set and the discrete
// calculus on them: weighted gradient, divergence, one-sided gradient,
// p-norms and the L-infinity gradient functional J_w.
//
// Vertices are dense indices 0..n-1. Every undirected edge {i, j} is stored
// once (i < j) and exposed as two arcs: arc 2e is (i -> j), arc 2e+1 is
// (j -> i), so the reverse of arc a is a ^ 1. Edge functions live on arcs.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace linfeig {

struct WeightedEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 1.0;
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 1.0;
};

class WeightedGraph {
 public:
  /// Validates and builds the symmetric closure of `edges`.
  /// Throws Error with IndexOutOfRange, NonpositiveWeight, SelfLoop,
  /// ConflictingEdge, EmptyBoundary, BoundaryIsEverything or DisconnectedGraph.
  static WeightedGraph build(std::size_t vertex_count, std::span<const WeightedEdge> edges,
                             std::span<const std::size_t> boundary);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_arcs() const noexcept { return 2 * edges_.size(); }

  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  const WeightedEdge& edge(std::size_t e) const { return edges_[e]; }

  Arc arc(std::size_t a) const {
    const auto& e = edges_[a / 2];
    return (a % 2 == 0) ? Arc{e.i, e.j, e.w} : Arc{e.j, e.i, e.w};
  }
  static constexpr std::size_t reverse(std::size_t a) noexcept { return a ^ 1U; }

  /// Arcs leaving vertex x, in increasing arc order.
  std::span<const std::size_t> out_arcs(std::size_t x) const {
    return {adjacency_.data() + offsets_[x], adjacency_.data() + offsets_[x + 1]};
  }
  std::size_t degree(std::size_t x) const { return offsets_[x + 1] - offsets_[x]; }
  /// Sum of incident weights at x.
  double weighted_degree(std::size_t x) const;
  double max_weighted_degree() const;

  bool is_boundary(std::size_t x) const { return boundary_mask_[x] != 0; }
  std::span<const std::size_t> boundary() const noexcept { return boundary_; }
  std::span<const std::size_t> interior() const noexcept { return interior_; }

  bool has_unit_weights() const noexcept;

 private:
  WeightedGraph() = default;

  std::size_t n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> adjacency_;
  std::vector<char> boundary_mask_;
  std::vector<std::size_t> boundary_;
  std::vector<std::size_t> interior_;
};

/// Real values on the vertices of a graph.
class VertexFunction {
 public:
  VertexFunction() = default;
  explicit VertexFunction(std::size_t n, double value = 0.0) : values_(n, value) {}
  explicit VertexFunction(std::vector<double> values) : values_(std::move(values)) {}
  VertexFunction(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  double& operator[](std::size_t x) { return values_[x]; }
  double operator[](std::size_t x) const { return values_[x]; }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const VertexFunction&) const = default;

 private:
  std::vector<double> values_;
};

/// Real values on the arcs (ordered edge pairs) of a graph.
class EdgeFunction {
 public:
  EdgeFunction() = default;
  explicit EdgeFunction(std::size_t arcs, bool antisymmetric = false)
      : values_(arcs, 0.0), antisymmetric_(antisymmetric) {}
  EdgeFunction(std::vector<double> values, bool antisymmetric)
      : values_(std::move(values)), antisymmetric_(antisymmetric) {}

  /// Sets q(a) and, for antisymmetric functions, q(reverse a) = -value.
  void set(std::size_t a, double value) {
    values_[a] = value;
    if (antisymmetric_) values_[WeightedGraph::reverse(a)] = -value;
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t a) const { return values_[a]; }
  double& operator[](std::size_t a) { return values_[a]; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  bool antisymmetric() const noexcept { return antisymmetric_; }

 private:
  std::vector<double> values_;
  bool antisymmetric_ = false;
};

inline WeightedGraph build_graph(std::size_t vertex_count, std::span<const WeightedEdge> edges,
                                 std::span<const std::size_t> boundary) {
  return WeightedGraph::build(vertex_count, edges, boundary);
}

EdgeFunction weighted_gradient(const WeightedGraph& g, const VertexFunction& u);

/// div_w q(x) = sum_{y ~ x} w(x,y)^{1/2} (q(x,y) - q(y,x)); the negative
/// adjoint of weighted_gradient.
VertexFunction weighted_divergence(const WeightedGraph& g, const EdgeFunction& q);

/// (grad^- u)(x,y) = w(x,y)^{1/2} max(u(x) - u(y), 0).
EdgeFunction one_sided_gradient(const WeightedGraph& g, const VertexFunction& u);

/// p-norm for p >= 1; pass std::numeric_limits<double>::infinity() for the
/// max-norm. Edge norms sum over ordered pairs. Throws InvalidP for p < 1.
double norm_p(std::span<const double> values, double p);
inline double norm_p(const VertexFunction& u, double p) { return norm_p(u.values(), p); }
inline double norm_p(const EdgeFunction& q, double p) { return norm_p(q.values(), p); }

double inner(const VertexFunction& u, const VertexFunction& v);
double inner(const EdgeFunction& q, const EdgeFunction& p);

bool vanishes_on_boundary(const WeightedGraph& g, const VertexFunction& u);

/// ||grad_w u||_inf if u vanishes on the boundary, +infinity otherwise.
double j_w(const WeightedGraph& g, const VertexFunction& u);

}  // namespace linfeig
