#include "linfeig/lp.hpp"

#include <cmath>
#include <limits>

namespace linfeig {

FeasibilityResult solve_feasibility(const DenseMatrix& a, std::span<const double> b, double tol) {
  const std::size_t m = a.rows, n = a.cols;
  const std::size_t width = n + m + 1;  // originals, artificials, rhs
  std::vector<double> t(m * width, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * width + j]; };

  std::vector<double> flip(m, 1.0);
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0.0) flip[i] = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      at(i, j) = flip[i] * a(i, j);
      scale = std::max(scale, std::abs(a(i, j)));
    }
    at(i, n + i) = 1.0;
    at(i, n + m) = flip[i] * b[i];
  }
  const double eps = 1e-12 * scale;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs of the phase-one objective sum(artificials)
  std::vector<double> cost(width, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j < n || j == n + m) cost[j] -= at(i, j);
    }
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      double pivot = at(i, enter);
      if (pivot <= eps) continue;
      double ratio = at(i, n + m) / pivot;
      if (leave == m || ratio < best - eps ||
          (std::abs(ratio - best) <= eps && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction; impossible for phase one

    double pivot = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double factor = at(i, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= factor * at(leave, j);
    }
    double factor = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= factor * at(leave, j);
    basis[leave] = enter;
  }

  FeasibilityResult result;
  result.x.assign(n, 0.0);
  result.infeasibility = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double value = std::max(at(i, n + m), 0.0);
    if (basis[i] < n) result.x[basis[i]] = value;
    else result.infeasibility += value;
  }
  result.feasible = result.infeasibility <= tol;
  if (!result.feasible) {
    // artificial i has unit cost, so its reduced cost is 1 - y_i
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) result.farkas[i] = flip[i] * (1.0 - cost[n + i]);
  }
  return result;
}

}  // namespace linfeig
