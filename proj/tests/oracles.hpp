#pragma once

// Brute-force reference implementations used only by the tests. None of
// them shares code with the library solvers.

#include <cstdint>
#include <optional>
#include <vector>

#include "linfeig/graph.hpp"

namespace oracle {

/// All-pairs Floyd-Warshall over edge lengths w^{-1/2}, then the minimum
/// over boundary vertices.
std::vector<double> boundary_distance(const linfeig::WeightedGraph& g);

/// Minimiser of 1/2 ||u - f||^2 + tau max_e |sqrt(w_e)(u_j - u_i)| with
/// u = 0 on the boundary, written as the epigraph QP in (u, s) and solved by
/// enumerating the 3^m active patterns (edge inactive, K_e u = s, or
/// K_e u = -s) and checking the KKT conditions of each linear system.
/// Returns nullopt when no pattern satisfies KKT, in which case the
/// minimiser is u = 0 (every minimiser with s > 0 has such a pattern).
std::optional<std::vector<double>> prox_qp(const linfeig::WeightedGraph& g,
                                           const std::vector<double>& f, double tau);

/// 1/2 ||u - f||^2 + tau J_w(u), u zeroed on the boundary first.
double prox_objective(const linfeig::WeightedGraph& g, const std::vector<double>& f,
                      const std::vector<double>& u, double tau);

/// Midpoint-rule raster of [0, L]^2 minus [0, L - delta]^2 on an N x N
/// cell grid: area and the integral of dist(x, boundary)^2.
struct RasterIntegrals {
  double area = 0.0;
  double d_squared = 0.0;
};
RasterIntegrals lshape_raster(double side, double delta, int cells);

/// Admissible random u: u = 0 on the boundary, |grad_w u| <= 1, u >= 0,
/// obtained from random values by Lipschitz sweeps
/// u(x) <- min(u(x), u(y) + w^{-1/2}) until nothing changes.
std::vector<double> random_admissible(const linfeig::WeightedGraph& g, std::uint64_t seed);

}  // namespace oracle
