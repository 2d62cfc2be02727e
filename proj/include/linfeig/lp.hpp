#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace linfeig {

/// Row-major dense matrix, just enough for small LPs.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct FeasibilityResult {
  bool feasible = false;
  /// A point with A x = b, x >= 0 when feasible.
  std::vector<double> x;
  /// Phase-one optimum: sum of artificial variables, 0 when feasible.
  double infeasibility = 0.0;
  /// Farkas ray y with y^T A <= 0 and y^T b = infeasibility > 0 when
  /// infeasible (up to the pivot tolerance).
  std::vector<double> farkas;
};

/// Phase-one simplex with Bland's rule for {x >= 0 : A x = b}. Declares
/// feasibility when the phase-one optimum is at most `tol`.
FeasibilityResult solve_feasibility(const DenseMatrix& a, std::span<const double> b, double tol);

}  // namespace linfeig
