#pragma once

#include <cstddef>
#include <vector>

#include "linfeig/graph.hpp"

namespace linfeig {

struct ProxOptions {
  double tol = 1e-10;  // absolute primal-dual gap
  std::size_t max_iters = 2'000'000;
  std::size_t check_every = 10;
};

struct ProxResult {
  VertexFunction u;
  /// Dual variable on undirected edges; y_e = 2 q(i -> j) for the
  /// antisymmetric calibration q with ||q||_1 <= tau.
  std::vector<double> dual;
  double gap = 0.0;
  std::size_t iterations = 0;
};

/// Minimiser of 1/2 ||u - f||^2 + tau J_w(u) over u vanishing on the
/// boundary (f is zeroed there first). Chambolle-Pock iteration accelerated
/// by the strong convexity of the data term; `warm_dual` seeds the dual.
/// Throws NonconvergedAfterMaxIters with the last gap.
ProxResult prox_jw_solve(const WeightedGraph& g, const VertexFunction& f, double tau,
                         const ProxOptions& options = {},
                         const std::vector<double>* warm_dual = nullptr);

inline VertexFunction prox_jw(const WeightedGraph& g, const VertexFunction& f, double tau,
                              double tol) {
  ProxOptions options;
  options.tol = tol;
  return prox_jw_solve(g, f, tau, options).u;
}

}  // namespace linfeig
