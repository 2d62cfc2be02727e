#pragma once

namespace linfeig {

/// Radial calibration of the distance function d(x) = 1 - |x| on the unit
/// ball in R^n: q = -f(rho) x/|x| with f(rho) = lambda (rho/n - rho^2/(n+1)),
/// lambda = 1 / ||d||_2^2.
struct SphereCalibration {
  int n = 1;
  double sphere_area = 0.0;  // |S^{n-1}|
  double d_norm2_sq = 0.0;   // by radial quadrature
  double lambda = 0.0;
  /// max over rho in (0, 1) of |rho^{1-n} (rho^{n-1} f)' - lambda (1 - rho)|,
  /// derivative by a five-point stencil.
  double residual = 0.0;
  /// | int_Ball f dx - 1 |.
  double norm_gap = 0.0;
  /// Root of f' on [0, (n+1)/n].
  double argmax = 0.0;

  double f(double rho) const { return lambda * (rho / n - rho * rho / (n + 1)); }
};

/// Throws OutOfRange for n < 1.
SphereCalibration sphere_calibration(int n);

}  // namespace linfeig
